//! Numerical invariants of a generic projection `V̄ ⊂ P³` of a surface `V`
//! embedded by a very ample `H`.
//!
//! `V̄` has degree `n`, an ordinary double curve of degree `d` and geometric
//! genus `g_S`, `t` triple points and `p` pinch points; `b` counts the
//! improper double points of a generic projection into P⁴. With `c₁², c₂` the
//! Chern numbers of `V` these satisfy
//!
//! ```text
//! c₁²       = n(n−4)² − (3n−16)d + 3t − p
//! c₂        = n(n²−4n+6) − (3n−8)d + 3t − 2p
//! c₁² + c₂  = 12[C(n−1,3) − (n−4)d + g_S + 2t]
//! p         = 2(n−4)d − 6t − 4(g_S − 1)
//! 2b        = n(n−5) − 10(g_H − 1) − c₁² + c₂
//! d         = C(n−1,2) − g_H
//! ```
//!
//! Everything here is a total function of its inputs: nothing checks that
//! the class is actually very ample.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{chern_data, CartesianClass, ChernData, SurfaceKind, SymmetricClass};
use crate::rational::{as_integer, exact_div};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectionInvariants {
    pub n: i64,
    pub g_h: i64,
    pub d_dcurve: i64,
    pub g_dcurve: i64,
    pub pinch: i64,
    pub triple: i64,
    pub double_pts_p4: i64,
}

impl ProjectionInvariants {
    /// Names of the counts that came out negative. A genuine embedding never
    /// produces any; hypothetical inputs can.
    pub fn negative_counts(&self) -> Vec<&'static str> {
        [("p", self.pinch), ("t", self.triple), ("b", self.double_pts_p4)]
            .into_iter()
            .filter(|(_, v)| *v < 0)
            .map(|(name, _)| name)
            .collect()
    }

    /// `H·K = 2g_H − 2 − n`.
    pub fn h_dot_k(&self) -> i64 {
        2 * self.g_h - 2 - self.n
    }

    pub fn as_tuple(&self) -> (i64, i64, i64, i64, i64, i64, i64) {
        (self.n, self.g_h, self.d_dcurve, self.g_dcurve, self.pinch, self.triple, self.double_pts_p4)
    }
}

/// One of the relations between the projection invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `c₁² = n(n−4)² − (3n−16)d + 3t − p`
    C1Squared,
    /// `c₂ = n(n²−4n+6) − (3n−8)d + 3t − 2p`
    C2,
    /// `c₁² + c₂ = 12[C(n−1,3) − (n−4)d + g_S + 2t]`
    Noether,
    /// `p = 2(n−4)d − 6t − 4(g_S−1)`
    Pinch,
    /// `2b = n(n−5) − 10(g_H−1) − c₁² + c₂`
    DoublePoints,
}

impl Relation {
    pub const ALL: [Relation; 5] =
        [Relation::C1Squared, Relation::C2, Relation::Noether, Relation::Pinch, Relation::DoublePoints];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::C1Squared => "c1_squared",
            Relation::C2 => "c2",
            Relation::Noether => "noether",
            Relation::Pinch => "pinch",
            Relation::DoublePoints => "double_points",
        }
    }

    fn holds(self, pi: &ProjectionInvariants, chern: &ChernData) -> bool {
        let (n, d, t, p, gs) = (pi.n as i128, pi.d_dcurve as i128, pi.triple as i128, pi.pinch as i128, pi.g_dcurve as i128);
        let (c1, c2) = (chern.c1_sq as i128, chern.c2 as i128);
        match self {
            Relation::C1Squared => c1 == n * (n - 4) * (n - 4) - (3 * n - 16) * d + 3 * t - p,
            Relation::C2 => c2 == n * (n * n - 4 * n + 6) - (3 * n - 8) * d + 3 * t - 2 * p,
            Relation::Noether => c1 + c2 == 12 * (binom3(n - 1) - (n - 4) * d + gs + 2 * t),
            Relation::Pinch => p == 2 * (n - 4) * d - 6 * t - 4 * (gs - 1),
            Relation::DoublePoints => {
                let hk = pi.h_dot_k() as i128;
                let by_genus = n * (n - 5) - 10 * (pi.g_h as i128 - 1) - c1 + c2;
                let by_hk = n * (n - 10) - 5 * hk - c1 + c2;
                2 * pi.double_pts_p4 as i128 == by_genus && by_genus == by_hk
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub holds: bool,
    pub violations: Vec<Relation>,
}

fn binom2(m: i128) -> i128 {
    m * (m - 1) / 2
}

fn binom3(m: i128) -> i128 {
    m * (m - 1) * (m - 2) / 6
}

fn narrow(x: i128, what: &str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Inconsistent(format!("{what} = {x} overflows")))
}

fn divide(num: i128, den: i128, what: &str) -> Result<i64> {
    let v = exact_div(num, den).ok_or_else(|| Error::Inconsistent(format!("{what} = {num}/{den} is not an integer")))?;
    narrow(v, what)
}

fn check_chern(chern: &ChernData) -> Result<()> {
    if chern.noether_holds() && chern.chi.is_integer() {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!(
            "Chern data c1² = {}, c2 = {}, χ = {} violate Noether's formula",
            chern.c1_sq, chern.c2, chern.chi
        )))
    }
}

/// The three equivalent expressions for the pinch-point count:
/// `c₁²−c₂+2n(2n−5)−8d`, `c₁²−c₂+2n+8(g_H−1)` and `c₁²−c₂+6n+4H·K`.
pub fn pinch_expressions(n: i64, g_h: i64, d: i64, chern: &ChernData) -> [i64; 3] {
    let base = chern.c1_sq - chern.c2;
    let hk = 2 * g_h - 2 - n;
    [base + 2 * n * (2 * n - 5) - 8 * d, base + 2 * n + 8 * (g_h - 1), base + 6 * n + 4 * hk]
}

/// Same as [`severi_profile`] without the `n ≥ 5` precondition; the lattice
/// profiles evaluate the formulas for every class with `n > 0`.
fn severi_core(n: i64, g_h: i64, chern: &ChernData) -> Result<ProjectionInvariants> {
    if n <= 0 {
        return Err(Error::DegenerateClass { n });
    }
    check_chern(chern)?;
    let (n_, gh, c1, c2) = (n as i128, g_h as i128, chern.c1_sq as i128, chern.c2 as i128);

    let d = narrow(binom2(n_ - 1) - gh, "d")?;
    let pinches = pinch_expressions(n, g_h, d, chern);
    if pinches.iter().any(|p| *p != pinches[0]) {
        return Err(Error::Inconsistent(format!("pinch expressions disagree: {pinches:?}")));
    }
    let g_s = divide(2 * (n_ * n_ - 7 * n_ + 26) + 4 * (n_ - 12) * gh - (5 * c1 - 3 * c2), 4, "g_S")?;
    let t = divide((n_ * n_ - 3 * n_ + 8) * (n_ - 6) - 6 * (n_ - 8) * gh + 2 * (2 * c1 - c2), 6, "t")?;
    let b = divide(n_ * (n_ - 5) - 10 * (gh - 1) - c1 + c2, 2, "b")?;

    let pi = ProjectionInvariants {
        n,
        g_h,
        d_dcurve: d,
        g_dcurve: g_s,
        pinch: pinches[0],
        triple: t,
        double_pts_p4: b,
    };
    let audit = consistency_audit(&pi, chern);
    if !audit.holds {
        return Err(Error::Inconsistent(format!("relations {:?} fail on {pi:?}", audit.violations)));
    }
    Ok(pi)
}

/// Solves the projection relations for `(d, g_S, p, t, b)` given the degree,
/// sectional genus and Chern numbers.
pub fn severi_profile(n: i64, g_h: i64, chern: &ChernData) -> Result<ProjectionInvariants> {
    if n < 5 {
        return Err(Error::DegenerateClass { n });
    }
    severi_core(n, g_h, chern)
}

/// Checks every relation exactly and lists the violated ones.
pub fn consistency_audit(pi: &ProjectionInvariants, chern: &ChernData) -> Audit {
    let violations: Vec<Relation> = Relation::ALL.into_iter().filter(|r| !r.holds(pi, chern)).collect();
    Audit { holds: violations.is_empty(), violations }
}

fn integral_coords(values: &[&crate::Q], shown: String) -> Result<Vec<i64>> {
    values.iter().map(|v| as_integer(v).ok_or_else(|| Error::NonIntegralClass(shown.clone()))).collect()
}

/// Invariants of the projection of `C×C` embedded by `D_{a,a′,k}`.
pub fn cartesian_profile(genus: u32, cls: &CartesianClass) -> Result<ProjectionInvariants> {
    if cls.genus != genus {
        return Err(Error::GenusMismatch { left: genus, right: cls.genus });
    }
    let chern = chern_data(SurfaceKind::Cartesian, genus)?;
    let coords = integral_coords(&[&cls.a, &cls.a_prime, &cls.k], cls.to_string())?;
    let (a, a2, k, g) = (coords[0] as i128, coords[1] as i128, coords[2] as i128, genus as i128);

    let n = 2 * (a * a2 - g * k * k);
    if n <= 0 {
        return Err(Error::DegenerateClass { n: narrow(n, "n")? });
    }
    // X = H·K/2 = (g−1)(a+a′)
    let x = (g - 1) * (a + a2);
    let gm = (g - 1) * (g - 1);
    let g_h = n / 2 + 1 + x;
    let d = n * (n - 4) / 2 - x;
    let g_s = divide(2 * n * n - 17 * n + 2, 2, "g_S")? as i128 + (n - 12) * x - 7 * gm;
    let p = 2 * (3 * n + 4 * x + 2 * gm);
    let t = divide(n * (n * n - 12 * n + 44), 6, "t")? as i128 - (n - 8) * x + 4 * gm;
    let b = divide(n * (n - 10), 2, "b")? as i128 - 5 * x - 2 * gm;

    let closed = ProjectionInvariants {
        n: narrow(n, "n")?,
        g_h: narrow(g_h, "g_H")?,
        d_dcurve: narrow(d, "d")?,
        g_dcurve: narrow(g_s, "g_S")?,
        pinch: narrow(p, "p")?,
        triple: narrow(t, "t")?,
        double_pts_p4: narrow(b, "b")?,
    };
    let general = severi_core(closed.n, closed.g_h, &chern)?;
    if general != closed {
        return Err(Error::Inconsistent(format!("closed forms {closed:?} disagree with {general:?}")));
    }
    Ok(closed)
}

/// Invariants of the projection of `C₂` embedded by `D′_{a,k}`.
pub fn symmetric_profile(genus: u32, cls: &SymmetricClass) -> Result<ProjectionInvariants> {
    if cls.genus != genus {
        return Err(Error::GenusMismatch { left: genus, right: cls.genus });
    }
    let chern = chern_data(SurfaceKind::Symmetric, genus)?;
    let coords = integral_coords(&[&cls.a, &cls.k], cls.to_string())?;
    let (a, k, g) = (coords[0] as i128, coords[1] as i128, genus as i128);

    let n = a * a - g * k * k;
    if n <= 0 {
        return Err(Error::DegenerateClass { n: narrow(n, "n")? });
    }
    let g_h = divide(n + 2 + (2 * g - 3) * a - g * k, 2, "g_H")? as i128;
    let g_s = divide(n * n - 7 * n - 7 * g * g + 25 * g + 8, 2, "g_S")? as i128 + (n - 12) * g_h;
    let b = divide(n * (n - 5), 2, "b")? as i128 - 5 * (g_h - 1) - (g - 1) * (g - 3);

    let general = severi_core(narrow(n, "n")?, narrow(g_h, "g_H")?, &chern)?;
    if general.g_dcurve as i128 != g_s || general.double_pts_p4 as i128 != b {
        return Err(Error::Inconsistent(format!(
            "closed forms g_S = {g_s}, b = {b} disagree with {general:?}"
        )));
    }
    Ok(general)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(pi: &ProjectionInvariants) -> (i64, i64, i64, i64, i64, i64, i64) {
        pi.as_tuple()
    }

    #[test]
    fn severi_reproduces_table_rows() {
        let c2 = chern_data(SurfaceKind::Cartesian, 2).unwrap();
        assert_eq!(tuple(&severi_profile(50, 36, &c2).unwrap()), (50, 36, 1140, 2449, 384, 15784, 948));
        let c3 = chern_data(SurfaceKind::Cartesian, 3).unwrap();
        assert_eq!(tuple(&severi_profile(32, 33, &c3).unwrap()), (32, 33, 432, 1045, 336, 3280, 264));
        let s3 = chern_data(SurfaceKind::Symmetric, 3).unwrap();
        assert_eq!(tuple(&severi_profile(16, 15, &s3).unwrap()), (16, 15, 90, 142, 144, 242, 18));
    }

    #[test]
    fn severi_rejects_small_degree_and_bad_chern() {
        let c3 = chern_data(SurfaceKind::Cartesian, 3).unwrap();
        assert!(matches!(severi_profile(4, 3, &c3), Err(Error::DegenerateClass { n: 4 })));
        let bogus = ChernData { c1_sq: 5, c2: 6, chi: crate::rational::q(1) };
        assert!(matches!(severi_profile(16, 15, &bogus), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn noether_forces_integral_intermediates() {
        // the divisions by 4 and 6 never fail once c1² + c2 ≡ 0 mod 12
        for n in 5..30 {
            for g_h in 0..40 {
                for chi in -3..4 {
                    for c1_sq in -10..10 {
                        let chern = ChernData { c1_sq, c2: 12 * chi - c1_sq, chi: crate::rational::q(chi) };
                        if let Err(Error::Inconsistent(msg)) = severi_profile(n, g_h, &chern) {
                            assert!(!msg.contains("not an integer"), "{msg}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cartesian_examples() {
        let p = cartesian_profile(2, &CartesianClass::symmetric(2, 5, 0)).unwrap();
        assert_eq!(tuple(&p), (50, 36, 1140, 2449, 384, 15784, 948));
        let p = cartesian_profile(3, &CartesianClass::canonical(3)).unwrap();
        assert_eq!(tuple(&p), (32, 33, 432, 1045, 336, 3280, 264));
        let p = cartesian_profile(2, &CartesianClass::symmetric(2, 5, 1)).unwrap();
        assert_eq!(p.n, 46);
        assert_eq!(p.g_h, 34);
    }

    #[test]
    fn cartesian_errors() {
        assert!(matches!(
            cartesian_profile(2, &CartesianClass::symmetric(2, 1, 1)),
            Err(Error::DegenerateClass { n: -2 })
        ));
        assert!(matches!(cartesian_profile(3, &CartesianClass::e(2)), Err(Error::GenusMismatch { .. })));
        let quarter = CartesianClass::new(2, crate::rational::q(5), crate::rational::q(5), crate::rational::frac(1, 4));
        assert!(matches!(cartesian_profile(2, &quarter), Err(Error::NonIntegralClass(_))));
    }

    #[test]
    fn symmetric_examples() {
        let p = symmetric_profile(3, &SymmetricClass::int(3, 4, 0)).unwrap();
        assert_eq!((p.n, p.g_h, p.g_dcurve), (16, 15, 142));
        assert_eq!(symmetric_profile(3, &SymmetricClass::canonical(3)).unwrap().n, 6);
        let p = symmetric_profile(4, &SymmetricClass::int(4, 5, 0)).unwrap();
        assert_eq!((p.n, p.g_h), (25, 26));
        assert!(symmetric_profile(3, &SymmetricClass::int(3, 1, 1)).is_err());
    }

    #[test]
    fn audit_flags_perturbed_triple_count() {
        let chern = chern_data(SurfaceKind::Cartesian, 3).unwrap();
        let pi = cartesian_profile(3, &CartesianClass::canonical(3)).unwrap();
        assert!(consistency_audit(&pi, &chern).holds);
        let bumped = ProjectionInvariants { triple: pi.triple + 1, ..pi };
        let audit = consistency_audit(&bumped, &chern);
        assert!(!audit.holds);
        // t enters every relation except the one for b
        assert_eq!(audit.violations, [Relation::C1Squared, Relation::C2, Relation::Noether, Relation::Pinch]);
    }

    #[test]
    fn pinch_counts_on_examples_are_positive() {
        for (g, a) in [(2, 5), (3, 4)] {
            let p = cartesian_profile(g, &CartesianClass::symmetric(g, a, 0)).unwrap();
            assert!(p.pinch > 0);
            assert!(p.negative_counts().is_empty());
        }
    }
}
