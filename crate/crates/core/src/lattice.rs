//! Divisor classes on `V = C×C` and `V′ = C₂` and their intersection pairings.
//!
//! Cartesian classes are stored as `D_{a,a′,k} = (a+k)E + (a′+k)F − kΔ`
//! (bidegree `(a, a′)`, valence `k`); symmetric classes as
//! `D′_{a,k} = (a+k)E′ − (k/2)Δ′`. With these coordinates
//!
//! ```text
//! D_{a,a′,k} · D_{c,c′,l} = ac′ + a′c − 2gkl
//! D′_{a,k}  · D′_{c,l}   = ac − gkl
//! π* D′_{a,k} = D_{a,a,k}
//! ```

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{require_genus, Error, Result};
use crate::rational::{frac, q, serde_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TriState {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "yes" | "true" | "y" => Ok(TriState::Yes),
            "no" | "false" | "n" => Ok(TriState::No),
            "unknown" | "?" => Ok(TriState::Unknown),
            other => Err(format!("expected yes/no/unknown, got {other:?}")),
        }
    }
}

/// The curve `C`: its genus plus what is known about its moduli.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProfile {
    genus: u32,
    generic_moduli: bool,
    hyperelliptic: TriState,
    bielliptic: TriState,
    delta_override: Option<u32>,
}

impl CurveProfile {
    /// Builds a profile, applying the forced flags: every genus-2 curve is
    /// hyperelliptic, and a curve with general moduli of genus ≥ 3 is neither
    /// hyperelliptic nor bielliptic. Contradicting flags are rejected.
    pub fn new(
        genus: u32,
        generic_moduli: bool,
        hyperelliptic: TriState,
        bielliptic: TriState,
        delta_override: Option<u32>,
    ) -> Result<Self> {
        require_genus(genus, 2)?;
        let mut hyperelliptic = hyperelliptic;
        let mut bielliptic = bielliptic;
        if genus == 2 {
            if hyperelliptic == TriState::No {
                return Err(Error::InvalidProfile("every genus-2 curve is hyperelliptic".into()));
            }
            hyperelliptic = TriState::Yes;
        }
        if generic_moduli && genus >= 3 {
            if hyperelliptic == TriState::Yes || bielliptic == TriState::Yes {
                return Err(Error::InvalidProfile(format!(
                    "a genus-{genus} curve with general moduli is neither hyperelliptic nor bielliptic"
                )));
            }
            hyperelliptic = TriState::No;
            bielliptic = TriState::No;
        }
        if delta_override == Some(0) {
            return Err(Error::InvalidProfile("delta override must be at least 1".into()));
        }
        Ok(Self { genus, generic_moduli, hyperelliptic, bielliptic, delta_override })
    }

    /// A curve with general moduli.
    pub fn generic(genus: u32) -> Result<Self> {
        Self::new(genus, true, TriState::Unknown, TriState::Unknown, None)
    }

    /// A curve about which nothing beyond the genus is known.
    pub fn arbitrary(genus: u32) -> Result<Self> {
        Self::new(genus, false, TriState::Unknown, TriState::Unknown, None)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn generic_moduli(&self) -> bool {
        self.generic_moduli
    }

    pub fn hyperelliptic(&self) -> TriState {
        self.hyperelliptic
    }

    pub fn bielliptic(&self) -> TriState {
        self.bielliptic
    }

    pub fn delta_override(&self) -> Option<u32> {
        self.delta_override
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Cartesian,
    Symmetric,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::Cartesian => "cartesian",
            SurfaceKind::Symmetric => "symmetric",
        })
    }
}

impl FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cartesian" | "product" | "CxC" => Ok(SurfaceKind::Cartesian),
            "symmetric" | "C2" => Ok(SurfaceKind::Symmetric),
            other => Err(format!("unknown surface kind {other:?}")),
        }
    }
}

/// The class `D_{a,a′,k}` on `C×C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartesianClass {
    pub genus: u32,
    #[serde(with = "serde_q")]
    pub a: Q,
    #[serde(with = "serde_q")]
    pub a_prime: Q,
    #[serde(with = "serde_q")]
    pub k: Q,
}

impl CartesianClass {
    pub fn new(genus: u32, a: Q, a_prime: Q, k: Q) -> Self {
        Self { genus, a, a_prime, k }
    }

    pub fn int(genus: u32, a: i64, a_prime: i64, k: i64) -> Self {
        Self::new(genus, q(a), q(a_prime), q(k))
    }

    /// `D_{a,k} = D_{a,a,k}`.
    pub fn symmetric(genus: u32, a: i64, k: i64) -> Self {
        Self::int(genus, a, a, k)
    }

    /// Horizontal fibre `E = C×{p}`, i.e. `D_{1,0,0}`.
    pub fn e(genus: u32) -> Self {
        Self::int(genus, 1, 0, 0)
    }

    /// Vertical fibre `F = {p}×C`, i.e. `D_{0,1,0}`.
    pub fn f(genus: u32) -> Self {
        Self::int(genus, 0, 1, 0)
    }

    /// The diagonal `Δ ≡ D_{1,1,−1}`.
    pub fn diagonal(genus: u32) -> Self {
        Self::int(genus, 1, 1, -1)
    }

    /// `K_V ≡ (2g−2)E + (2g−2)F = D_{2g−2,2g−2,0}`.
    pub fn canonical(genus: u32) -> Self {
        let m = 2 * genus as i64 - 2;
        Self::int(genus, m, m, 0)
    }

    /// Graph of the hyperelliptic involution on a genus-2 curve, `D(i) ≡ D_{1,1,1}`.
    pub fn hyperelliptic_graph(genus: u32) -> Result<Self> {
        if genus != 2 {
            return Err(Error::Unsupported(format!("D(i) is only tracked for genus 2, got genus {genus}")));
        }
        Ok(Self::int(2, 1, 1, 1))
    }

    /// Builds the class `eE + fF + δΔ`.
    pub fn from_basis(genus: u32, e: Q, f: Q, delta: Q) -> Self {
        let k = -delta;
        Self::new(genus, e - k, f - k, k)
    }

    /// Coefficients `(e, f, δ)` with `D = eE + fF + δΔ`.
    pub fn to_basis(&self) -> (Q, Q, Q) {
        (self.a + self.k, self.a_prime + self.k, -self.k)
    }

    pub fn dot(&self, other: &Self) -> Result<Q> {
        intersect_cartesian(self, other)
    }

    /// `D · E = a′`.
    pub fn dot_e(&self) -> Q {
        self.a_prime
    }

    /// `D · F = a`.
    pub fn dot_f(&self) -> Q {
        self.a
    }

    /// `D² = 2(aa′ − gk²)`.
    pub fn self_intersection(&self) -> Q {
        let g = Q::from_integer(self.genus as i128);
        (self.a * self.a_prime - g * self.k * self.k) * Q::from_integer(2)
    }

    /// Membership in `Σ`: all three coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.a_prime.is_integer() && self.k.is_integer()
    }

    /// Integer bidegree and `4k ∈ ℤ`.
    pub fn in_quarter_lattice(&self) -> bool {
        self.a.is_integer() && self.a_prime.is_integer() && (self.k * Q::from_integer(4)).is_integer()
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.a_prime
    }

    pub fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegralClass(self.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_genus(self.genus, other.genus)?;
        Ok(Self::new(self.genus, self.a + other.a, self.a_prime + other.a_prime, self.k + other.k))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scaled(-Q::one()))
    }

    pub fn scaled(&self, c: Q) -> Self {
        Self::new(self.genus, self.a * c, self.a_prime * c, self.k * c)
    }
}

impl fmt::Display for CartesianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{{{},{},{}}}", self.a, self.a_prime, self.k)
    }
}

/// The class `D′_{a,k}` on `C₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricClass {
    pub genus: u32,
    #[serde(with = "serde_q")]
    pub a: Q,
    #[serde(with = "serde_q")]
    pub k: Q,
}

impl SymmetricClass {
    pub fn new(genus: u32, a: Q, k: Q) -> Self {
        Self { genus, a, k }
    }

    pub fn int(genus: u32, a: i64, k: i64) -> Self {
        Self::new(genus, q(a), q(k))
    }

    /// `E′ ≡ D′_{1,0}`, the image of `C×{p}`.
    pub fn e_prime(genus: u32) -> Self {
        Self::int(genus, 1, 0)
    }

    /// The branch divisor `Δ′ ≡ 2·D′_{1,−1}`.
    pub fn diagonal_prime(genus: u32) -> Self {
        Self::int(genus, 2, -2)
    }

    /// `½Δ′ ≡ D′_{1,−1}`.
    pub fn half_diagonal_prime(genus: u32) -> Self {
        Self::int(genus, 1, -1)
    }

    /// Pull-back of the theta divisor, `Θ′ ≡ D′_{g,1}`.
    pub fn theta_prime(genus: u32) -> Self {
        Self::int(genus, genus as i64, 1)
    }

    /// `K_{V′} ≡ D′_{2g−3,1}`.
    pub fn canonical(genus: u32) -> Self {
        Self::int(genus, 2 * genus as i64 - 3, 1)
    }

    /// `K_C^{(2)} ≡ D′_{2g−2,0}`.
    pub fn canonical_square(genus: u32) -> Self {
        Self::int(genus, 2 * genus as i64 - 2, 0)
    }

    /// Builds `x·E′ + y·(½Δ′)`.
    pub fn from_half_diagonal_basis(genus: u32, x: Q, y: Q) -> Self {
        Self::new(genus, x + y, -y)
    }

    /// Coefficients `(x, y)` with `D′ = x·E′ + y·(½Δ′)`.
    pub fn to_half_diagonal_basis(&self) -> (Q, Q) {
        (self.a + self.k, -self.k)
    }

    /// Coefficients `(x, y)` with `D′ = x·E′ + y·Θ′`.
    pub fn to_theta_basis(&self) -> (Q, Q) {
        let g = Q::from_integer(self.genus as i128);
        (self.a - g * self.k, self.k)
    }

    pub fn dot(&self, other: &Self) -> Result<Q> {
        intersect_symmetric(self, other)
    }

    /// `D′² = a² − gk²`.
    pub fn self_intersection(&self) -> Q {
        let g = Q::from_integer(self.genus as i128);
        self.a * self.a - g * self.k * self.k
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.k.is_integer()
    }

    pub fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegralClass(self.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_genus(self.genus, other.genus)?;
        Ok(Self::new(self.genus, self.a + other.a, self.k + other.k))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scaled(-Q::one()))
    }

    pub fn scaled(&self, c: Q) -> Self {
        Self::new(self.genus, self.a * c, self.k * c)
    }
}

impl fmt::Display for SymmetricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D'_{{{},{}}}", self.a, self.k)
    }
}

/// A class on either surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "surface", rename_all = "snake_case")]
pub enum SurfaceClass {
    Cartesian(CartesianClass),
    Symmetric(SymmetricClass),
}

impl SurfaceClass {
    pub fn kind(&self) -> SurfaceKind {
        match self {
            SurfaceClass::Cartesian(_) => SurfaceKind::Cartesian,
            SurfaceClass::Symmetric(_) => SurfaceKind::Symmetric,
        }
    }

    pub fn genus(&self) -> u32 {
        match self {
            SurfaceClass::Cartesian(c) => c.genus,
            SurfaceClass::Symmetric(c) => c.genus,
        }
    }

    pub fn self_intersection(&self) -> Q {
        match self {
            SurfaceClass::Cartesian(c) => c.self_intersection(),
            SurfaceClass::Symmetric(c) => c.self_intersection(),
        }
    }

    pub fn dot(&self, other: &SurfaceClass) -> Result<Q> {
        match (self, other) {
            (SurfaceClass::Cartesian(x), SurfaceClass::Cartesian(y)) => intersect_cartesian(x, y),
            (SurfaceClass::Symmetric(x), SurfaceClass::Symmetric(y)) => intersect_symmetric(x, y),
            _ => Err(Error::Unsupported("cannot pair classes on different surfaces".into())),
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            SurfaceClass::Cartesian(c) => c.is_integral(),
            SurfaceClass::Symmetric(c) => c.is_integral(),
        }
    }

    pub fn checked_sub(&self, other: &SurfaceClass) -> Result<SurfaceClass> {
        match (self, other) {
            (SurfaceClass::Cartesian(x), SurfaceClass::Cartesian(y)) => x.checked_sub(y).map(SurfaceClass::Cartesian),
            (SurfaceClass::Symmetric(x), SurfaceClass::Symmetric(y)) => x.checked_sub(y).map(SurfaceClass::Symmetric),
            _ => Err(Error::Unsupported("cannot subtract classes on different surfaces".into())),
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Cartesian(c) => c.fmt(f),
            SurfaceClass::Symmetric(c) => c.fmt(f),
        }
    }
}

fn same_genus(left: u32, right: u32) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GenusMismatch { left, right })
    }
}

/// `D_{a,a′,k} · D_{c,c′,l} = ac′ + a′c − 2gkl`.
pub fn intersect_cartesian(d1: &CartesianClass, d2: &CartesianClass) -> Result<Q> {
    same_genus(d1.genus, d2.genus)?;
    let g = Q::from_integer(d1.genus as i128);
    Ok(d1.a * d2.a_prime + d1.a_prime * d2.a - Q::from_integer(2) * g * d1.k * d2.k)
}

/// `D′_{a,k} · D′_{c,l} = ac − gkl`.
pub fn intersect_symmetric(d1: &SymmetricClass, d2: &SymmetricClass) -> Result<Q> {
    same_genus(d1.genus, d2.genus)?;
    let g = Q::from_integer(d1.genus as i128);
    Ok(d1.a * d2.a - g * d1.k * d2.k)
}

/// `π* D′_{a,k} = D_{a,a,k}` for the quotient map `π: C×C → C₂`.
pub fn pullback(d: &SymmetricClass) -> CartesianClass {
    CartesianClass::new(d.genus, d.a, d.a, d.k)
}

/// Inverse of [`pullback`] on symmetric classes.
pub fn pushforward_sym_part(d: &CartesianClass) -> Result<SymmetricClass> {
    if !d.is_symmetric() {
        return Err(Error::NonSymmetricClass { a: d.a.to_string(), a_prime: d.a_prime.to_string() });
    }
    Ok(SymmetricClass::new(d.genus, d.a, d.k))
}

pub fn canonical_class(surface: SurfaceKind, genus: u32) -> Result<SurfaceClass> {
    require_genus(genus, 2)?;
    Ok(match surface {
        SurfaceKind::Cartesian => SurfaceClass::Cartesian(CartesianClass::canonical(genus)),
        SurfaceKind::Symmetric => SurfaceClass::Symmetric(SymmetricClass::canonical(genus)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub c1_sq: i64,
    pub c2: i64,
    #[serde(with = "serde_q")]
    pub chi: Q,
}

impl ChernData {
    /// `12χ = c₁² + c₂`.
    pub fn noether_holds(&self) -> bool {
        self.chi * Q::from_integer(12) == Q::from_integer((self.c1_sq + self.c2) as i128)
    }
}

pub fn chern_data(surface: SurfaceKind, genus: u32) -> Result<ChernData> {
    require_genus(genus, 2)?;
    let g = genus as i64;
    Ok(match surface {
        SurfaceKind::Cartesian => {
            let e = 2 * g - 2;
            ChernData { c1_sq: 2 * e * e, c2: e * e, chi: q((g - 1) * (g - 1)) }
        }
        SurfaceKind::Symmetric => ChernData {
            c1_sq: 4 * g * g - 13 * g + 9,
            c2: 2 * g * g - 5 * g + 3,
            chi: frac((g - 1) * (g - 2), 2),
        },
    })
}

/// A named correspondence, possibly a multiple `coefficient · core` of a
/// primitive class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCorrespondence {
    pub name: String,
    pub class: CartesianClass,
    #[serde(with = "serde_q")]
    pub self_intersection: Q,
    pub coefficient: i64,
    pub core: CartesianClass,
    #[serde(with = "serde_q")]
    pub core_self_intersection: Q,
}

impl NamedCorrespondence {
    fn simple(name: &str, class: CartesianClass) -> Self {
        Self::multiple(name, 1, class)
    }

    fn multiple(name: &str, coefficient: i64, core: CartesianClass) -> Self {
        let class = core.scaled(q(coefficient));
        Self {
            name: name.to_string(),
            self_intersection: class.self_intersection(),
            core_self_intersection: core.self_intersection(),
            class,
            coefficient,
            core,
        }
    }
}

/// Tangent-secant correspondence `B ≡ D_{10,10,6}` on a smooth plane quartic.
pub fn tangent_secant_b() -> CartesianClass {
    CartesianClass::int(3, 10, 10, 6)
}

/// Tangent correspondence `T ≡ D_{2,10,2}` on a plane quartic.
pub fn tangent_correspondence() -> CartesianClass {
    CartesianClass::int(3, 2, 10, 2)
}

/// `G ≡ D_{3,3,1}`: pairs in a common fibre of a projection `C → P¹`.
pub fn projection_fibre_correspondence() -> CartesianClass {
    CartesianClass::int(3, 3, 3, 1)
}

/// `B ≡ 2·D_{a,k}` with `a = (d−3)(d+g−2)`, `k = d+g−4` for a generic plane
/// nodal curve of degree `d` and geometric genus `g`.
pub fn plane_nodal_b(genus: u32, degree: u32) -> Result<NamedCorrespondence> {
    require_genus(genus, 2)?;
    let (g, d) = (genus as i64, degree as i64);
    if d < 4 || g > (d - 1) * (d - 2) / 2 {
        return Err(Error::Unsupported(format!("no plane nodal curve of degree {d} and genus {g}")));
    }
    let core = CartesianClass::symmetric(genus, (d - 3) * (d + g - 2), d + g - 4);
    Ok(NamedCorrespondence::multiple(&format!("B[plane-nodal d={d}]"), 2, core))
}

/// `B ≡ (g−1)(g−2)·D_{a,k}` with `a = g²−g−1`, `k = g`: pairs cut out with a
/// third point by a highest osculating hyperplane of the canonical model.
pub fn osculating_b(genus: u32) -> Result<NamedCorrespondence> {
    require_genus(genus, 3)?;
    let g = genus as i64;
    let core = CartesianClass::symmetric(genus, g * g - g - 1, g);
    Ok(NamedCorrespondence::multiple("B[osculating]", (g - 1) * (g - 2), core))
}

pub fn named_correspondences(genus: u32, degree: Option<u32>) -> Result<Vec<NamedCorrespondence>> {
    require_genus(genus, 2)?;
    let mut out = vec![NamedCorrespondence::simple("Delta", CartesianClass::diagonal(genus))];
    if genus == 2 {
        out.push(NamedCorrespondence::simple("D(i)", CartesianClass::hyperelliptic_graph(2)?));
    }
    if genus == 3 {
        let t = tangent_correspondence();
        let t_inv = CartesianClass::int(3, 10, 2, 2);
        let g_corr = projection_fibre_correspondence();
        let quarter_sum = t.checked_add(&t_inv)?.scaled(frac(1, 4));
        if quarter_sum != g_corr {
            return Err(Error::Inconsistent(format!("G = {g_corr} but (T + T^-1)/4 = {quarter_sum}")));
        }
        out.push(NamedCorrespondence::simple("B", tangent_secant_b()));
        out.push(NamedCorrespondence::simple("T", t));
        out.push(NamedCorrespondence::simple("T^-1", t_inv));
        out.push(NamedCorrespondence::simple("G", g_corr));
    }
    if genus >= 3 {
        out.push(osculating_b(genus)?);
    }
    if let Some(d) = degree {
        out.push(plane_nodal_b(genus, d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let delta = CartesianClass::diagonal(2);
        assert_eq!(delta.dot(&delta).unwrap(), q(-2));
        let k3 = CartesianClass::canonical(3);
        assert_eq!(k3.dot(&k3).unwrap(), q(32));
        let t = CartesianClass::symmetric(2, 2, 1);
        let di = CartesianClass::hyperelliptic_graph(2).unwrap();
        assert_eq!(t.dot(&di).unwrap(), q(0));
    }

    #[test]
    fn fibre_pairings_match_both_representations() {
        let d = CartesianClass::int(4, 7, -3, 2);
        assert_eq!(d.dot(&CartesianClass::e(4)).unwrap(), d.dot_e());
        assert_eq!(d.dot(&CartesianClass::f(4)).unwrap(), d.dot_f());
        assert_eq!(d.dot_e(), q(-3));
        assert_eq!(d.dot_f(), q(7));
        let (e, f, delta) = d.to_basis();
        assert_eq!(CartesianClass::from_basis(4, e, f, delta), d);
    }

    #[test]
    fn genus_mismatch_is_rejected() {
        let err = intersect_cartesian(&CartesianClass::e(2), &CartesianClass::e(3)).unwrap_err();
        assert!(matches!(err, Error::GenusMismatch { left: 2, right: 3 }));
        assert!(intersect_symmetric(&SymmetricClass::e_prime(2), &SymmetricClass::e_prime(4)).is_err());
    }

    #[test]
    fn symmetric_pairing_examples() {
        let k = SymmetricClass::canonical(3);
        assert_eq!(k.dot(&k).unwrap(), q(6));
        let theta = SymmetricClass::theta_prime(3);
        assert_eq!(theta.dot(&theta).unwrap(), q(6));
        for g in 2..8 {
            let e = SymmetricClass::e_prime(g);
            assert_eq!(e.dot(&e).unwrap(), q(1));
        }
    }

    #[test]
    fn symmetric_bases_are_consistent() {
        let g = 5;
        let theta = SymmetricClass::theta_prime(g);
        assert_eq!(theta.to_theta_basis(), (q(0), q(1)));
        // ½Δ′ ≡ (g+1)E′ − Θ′
        assert_eq!(SymmetricClass::half_diagonal_prime(g).to_theta_basis(), (q(g as i64 + 1), q(-1)));
        let d = SymmetricClass::int(g, 9, -2);
        let (x, y) = d.to_half_diagonal_basis();
        assert_eq!(SymmetricClass::from_half_diagonal_basis(g, x, y), d);
        assert_eq!(SymmetricClass::diagonal_prime(g), SymmetricClass::half_diagonal_prime(g).scaled(q(2)));
    }

    #[test]
    fn pullback_doubles_pairings() {
        let x = SymmetricClass::int(3, 2, 1);
        let px = pullback(&x);
        assert_eq!(px, CartesianClass::symmetric(3, 2, 1));
        assert_eq!(px.dot(&px).unwrap(), q(2));
        assert_eq!(x.dot(&x).unwrap(), q(1));
        assert_eq!(pullback(&SymmetricClass::int(3, 4, 0)), CartesianClass::canonical(3));
        assert_eq!(pullback(&SymmetricClass::theta_prime(6)), CartesianClass::symmetric(6, 6, 1));
    }

    #[test]
    fn pushforward_inverts_pullback() {
        assert_eq!(pushforward_sym_part(&CartesianClass::canonical(3)).unwrap(), SymmetricClass::int(3, 4, 0));
        for g in 2..10 {
            let ramified = CartesianClass::symmetric(g, 2 * g as i64 - 3, 1);
            assert_eq!(pushforward_sym_part(&ramified).unwrap(), SymmetricClass::canonical(g));
            // π*K′ = K_V − Δ
            let expected = CartesianClass::canonical(g).checked_sub(&CartesianClass::diagonal(g)).unwrap();
            assert_eq!(ramified, expected);
        }
        assert!(matches!(
            pushforward_sym_part(&CartesianClass::int(3, 1, 2, 0)),
            Err(Error::NonSymmetricClass { .. })
        ));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(canonical_class(SurfaceKind::Cartesian, 3).unwrap(), SurfaceClass::Cartesian(CartesianClass::int(3, 4, 4, 0)));
        assert_eq!(canonical_class(SurfaceKind::Symmetric, 3).unwrap(), SurfaceClass::Symmetric(SymmetricClass::int(3, 3, 1)));
        assert_eq!(canonical_class(SurfaceKind::Symmetric, 2).unwrap(), SurfaceClass::Symmetric(SymmetricClass::int(2, 1, 1)));
        assert!(matches!(canonical_class(SurfaceKind::Cartesian, 1), Err(Error::GenusTooSmall { .. })));
    }

    #[test]
    fn chern_examples() {
        let c = chern_data(SurfaceKind::Cartesian, 3).unwrap();
        assert_eq!((c.c1_sq, c.c2, c.chi), (32, 16, q(4)));
        let s = chern_data(SurfaceKind::Symmetric, 3).unwrap();
        assert_eq!((s.c1_sq, s.c2, s.chi), (6, 6, q(1)));
        let s4 = chern_data(SurfaceKind::Symmetric, 4).unwrap();
        assert_eq!((s4.c1_sq, s4.c2, s4.chi), (21, 15, q(3)));
        assert!(s4.noether_holds());
        assert!(chern_data(SurfaceKind::Symmetric, 0).is_err());
    }

    #[test]
    fn canonical_self_intersections_match_chern_numbers() {
        for g in 2..=20 {
            let c = chern_data(SurfaceKind::Cartesian, g).unwrap();
            assert_eq!(CartesianClass::canonical(g).self_intersection(), q(c.c1_sq));
            let s = chern_data(SurfaceKind::Symmetric, g).unwrap();
            assert_eq!(SymmetricClass::canonical(g).self_intersection(), q(s.c1_sq));
        }
    }

    #[test]
    fn named_correspondences_genus_three() {
        let list = named_correspondences(3, Some(4)).unwrap();
        let find = |name: &str| list.iter().find(|c| c.name == name).unwrap().clone();
        let b = find("B");
        assert_eq!(b.class, CartesianClass::int(3, 10, 10, 6));
        assert_eq!(b.self_intersection, q(-16));
        assert_eq!(find("T").self_intersection, q(16));
        assert_eq!(find("G").class, CartesianClass::int(3, 3, 3, 1));
        let nodal = find("B[plane-nodal d=4]");
        assert_eq!(nodal.coefficient, 2);
        assert_eq!(nodal.core, CartesianClass::symmetric(3, 5, 3));
        assert_eq!(nodal.class, b.class);
        // the osculating construction also recovers B in genus 3
        assert_eq!(find("B[osculating]").class, b.class);
    }

    #[test]
    fn osculating_b_genus_four() {
        let b = osculating_b(4).unwrap();
        assert_eq!(b.coefficient, 6);
        assert_eq!(b.core, CartesianClass::symmetric(4, 11, 4));
        assert_eq!(b.core_self_intersection, q(114));
    }

    #[test]
    fn named_correspondences_genus_two() {
        let list = named_correspondences(2, None).unwrap();
        let names: Vec<_> = list.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["Delta", "D(i)"]);
        assert!(list.iter().all(|c| c.self_intersection == q(-2)));
    }

    #[test]
    fn unsupported_plane_nodal_combinations() {
        assert!(plane_nodal_b(4, 4).is_err());
        assert!(plane_nodal_b(3, 3).is_err());
        assert!(named_correspondences(10, Some(5)).is_err());
        assert!(osculating_b(2).is_err());
    }

    #[test]
    fn profile_forcing() {
        let p = CurveProfile::arbitrary(2).unwrap();
        assert_eq!(p.hyperelliptic(), TriState::Yes);
        assert!(CurveProfile::new(2, false, TriState::No, TriState::Unknown, None).is_err());
        let g = CurveProfile::generic(3).unwrap();
        assert_eq!((g.hyperelliptic(), g.bielliptic()), (TriState::No, TriState::No));
        assert!(CurveProfile::new(3, true, TriState::Yes, TriState::Unknown, None).is_err());
        assert!(CurveProfile::new(5, false, TriState::Unknown, TriState::Unknown, Some(0)).is_err());
        assert!(CurveProfile::generic(1).is_err());
    }

    #[test]
    fn quarter_lattice_membership() {
        let x = CartesianClass::new(2, q(1), q(0), frac(1, 4));
        assert!(x.in_quarter_lattice());
        assert!(!x.is_integral());
        assert!(x.require_integral().is_err());
        assert!(!CartesianClass::new(2, q(1), q(0), frac(1, 3)).in_quarter_lattice());
    }
}
