//! Bounded search for Reider obstructions.
//!
//! For nef `L` with `L² ≥ 5` (resp. `≥ 10`), `K + L` is globally generated
//! (resp. very ample) unless some effective `Γ` satisfies
//!
//! ```text
//! gg: (i)   L·Γ = 0, Γ² = −1        va: (i′)   L·Γ = 0, Γ² ∈ {−1, −2}
//!     (ii)  L·Γ = 1, Γ² = 0             (ii′)  L·Γ = 1, Γ² ∈ {−1, 0}
//!                                       (iii′) L·Γ = 2, Γ² = 0
//! ```
//!
//! Only the projection `Γ^Σ` of `Γ` to the lattice spanned by the standard
//! classes is visible here. Since `Γ² ≤ (Γ^Σ)²` by the Hodge index theorem,
//! a candidate is reported whenever `L·Γ^Σ` hits the required value exactly
//! and `(Γ^Σ)²` is at least the smallest admissible `Γ²`. An empty result
//! therefore certifies the absence of obstructions with `c + c′ ≤ cap`.
//!
//! The search region contains every effective class:
//! * `C×C`, `g = 2`: `c, c′, 4l ∈ ℤ`, and writing `m = min(c, c′)`,
//!   `|l| ≤ m/2 + (c+c′)/4`. Irreducible curves other than `Δ`, `D(i)`
//!   satisfy `4|l| ≤ c+c′`; adding copies of `Δ = D_{1,1,−1}` and
//!   `D(i) = D_{1,1,1}` stays inside the bound.
//! * `C×C`, `g = 3`: `l ∈ ℤ` and
//!   `−m − (s−2m)/6 ≤ l ≤ 3m/5 + 5(s−2m)/18` with `s = c+c′`, which contains
//!   every sum of `Δ`, `B = D_{10,10,6}` and curves with `−s/6 ≤ l ≤ 5s/18`.
//! * `C₂`: `D′_{c,l}` with `1 ≤ c ≤ cap` inside the outer effective window.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::kouvidakis_cones;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lattice::{canonical_class, CartesianClass, SurfaceClass, SymmetricClass};
use crate::rational::{as_integer, frac, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReiderMode {
    GloballyGenerated,
    VeryAmple,
}

impl ReiderMode {
    fn min_l_squared(self) -> i64 {
        match self {
            ReiderMode::GloballyGenerated => 5,
            ReiderMode::VeryAmple => 10,
        }
    }

    /// `(L·Γ, smallest admissible Γ², condition)`.
    fn targets(self) -> &'static [(i64, i64, ReiderCondition)] {
        match self {
            ReiderMode::GloballyGenerated => &[(0, -1, ReiderCondition::I), (1, 0, ReiderCondition::Ii)],
            ReiderMode::VeryAmple => &[
                (0, -2, ReiderCondition::IPrime),
                (1, -1, ReiderCondition::IiPrime),
                (2, 0, ReiderCondition::IiiPrime),
            ],
        }
    }
}

impl std::str::FromStr for ReiderMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gg" | "globally_generated" | "globally-generated" => Ok(ReiderMode::GloballyGenerated),
            "va" | "very_ample" | "very-ample" => Ok(ReiderMode::VeryAmple),
            other => Err(format!("unknown Reider mode {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReiderCondition {
    I,
    Ii,
    IPrime,
    IiPrime,
    IiiPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionCandidate {
    pub gamma: SurfaceClass,
    pub condition: ReiderCondition,
    #[serde(with = "crate::rational::serde_q")]
    pub l_dot_gamma: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub gamma_sq: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReiderReport {
    pub l: SurfaceClass,
    pub adjoint_of: Option<SurfaceClass>,
    pub mode: ReiderMode,
    pub cap: u32,
    #[serde(with = "crate::rational::serde_q")]
    pub l_squared: Q,
    pub region: String,
    pub certified_within_cap: bool,
    pub obstructions: Vec<ObstructionCandidate>,
}

/// Runs the search for `L = H − K` and records `H`.
pub fn reider_certify_adjoint(h: &SurfaceClass, mode: ReiderMode, cap: u32, exec: Exec) -> Result<ReiderReport> {
    let k = canonical_class(h.kind(), h.genus())?;
    let l = h.checked_sub(&k)?;
    let mut report = reider_certify(&l, mode, cap, exec)?;
    report.adjoint_of = Some(h.clone());
    Ok(report)
}

pub fn reider_certify(l: &SurfaceClass, mode: ReiderMode, cap: u32, exec: Exec) -> Result<ReiderReport> {
    let l_squared = l.self_intersection();
    match super::is_nef(l)? {
        Some(true) => {}
        Some(false) => return Err(Error::NotApplicable(format!("L = {l} is not nef"))),
        None => return Err(Error::NotApplicable(format!("nefness of L = {l} is undecided"))),
    }
    if l_squared < q(mode.min_l_squared()) {
        return Err(Error::NotApplicable(format!(
            "L² = {l_squared} is below {} required for {mode:?}",
            mode.min_l_squared()
        )));
    }
    let (region, mut obstructions) = match l {
        SurfaceClass::Cartesian(c) => cartesian_search(c, mode, cap, exec)?,
        SurfaceClass::Symmetric(c) => symmetric_search(c, mode, cap, exec)?,
    };
    obstructions.sort_by_key(canonical_key);
    Ok(ReiderReport {
        l: l.clone(),
        adjoint_of: None,
        mode,
        cap,
        l_squared,
        region,
        certified_within_cap: obstructions.is_empty(),
        obstructions,
    })
}

fn canonical_key(o: &ObstructionCandidate) -> (Vec<Q>, ReiderCondition) {
    let coords = match &o.gamma {
        SurfaceClass::Cartesian(c) => vec![c.a + c.a_prime, c.a, c.k],
        SurfaceClass::Symmetric(c) => vec![c.a, c.k],
    };
    (coords, o.condition)
}

fn ceil_to(x: Q, den: i64) -> i64 {
    let scaled = x * q(den);
    as_integer(&scaled.ceil()).expect("search bounds fit in i64")
}

fn floor_to(x: Q, den: i64) -> i64 {
    let scaled = x * q(den);
    as_integer(&scaled.floor()).expect("search bounds fit in i64")
}

fn cartesian_search(
    l: &CartesianClass,
    mode: ReiderMode,
    cap: u32,
    exec: Exec,
) -> Result<(String, Vec<ObstructionCandidate>)> {
    let g = l.genus;
    // the nef test above already restricts to symmetric classes in genus 2 or 3
    let (den, region) = match g {
        2 => (4, format!("1 ≤ c+c′ ≤ {cap}, c,c′ ≥ 0, 4l ∈ ℤ, |l| ≤ min(c,c′)/2 + (c+c′)/4")),
        3 => (
            1,
            format!("1 ≤ c+c′ ≤ {cap}, c,c′ ≥ 0, l ∈ ℤ, −m − (s−2m)/6 ≤ l ≤ 3m/5 + 5(s−2m)/18 with s = c+c′, m = min(c,c′)"),
        ),
        _ => return Err(Error::Unsupported(format!("Reider search on C×C is not set up for genus {g}"))),
    };
    let window = move |c: i64, c2: i64| -> (Q, Q) {
        let m = q(c.min(c2));
        let s = q(c + c2);
        if g == 2 {
            let hi = m / q(2) + s / q(4);
            (-hi, hi)
        } else {
            let rest = s - m * q(2);
            (-m - rest / q(6), m * frac(3, 5) + rest * frac(5, 18))
        }
    };
    let cap = cap as i64;
    let two_g_k = q(2 * g as i64) * l.k;
    let found = exec.flat_map(0..=cap, |c| {
        let mut out = Vec::new();
        for c2 in 0..=(cap - c) {
            if c + c2 == 0 {
                continue;
            }
            let (lo, hi) = window(c, c2);
            // L·Γ = a_L c′ + a′_L c − 2g k_L l
            let fixed = l.a * q(c2) + l.a_prime * q(c);
            for &(m, min_sq, condition) in mode.targets() {
                let mut push = |lambda: Q| {
                    let gamma = CartesianClass::new(g, q(c), q(c2), lambda);
                    let gamma_sq = gamma.self_intersection();
                    if gamma_sq >= q(min_sq) {
                        out.push(ObstructionCandidate {
                            gamma: SurfaceClass::Cartesian(gamma),
                            condition,
                            l_dot_gamma: q(m),
                            gamma_sq,
                        });
                    }
                };
                if two_g_k.is_zero() {
                    if fixed == q(m) {
                        for j in ceil_to(lo, den)..=floor_to(hi, den) {
                            push(frac(j, den));
                        }
                    }
                } else {
                    let lambda = (fixed - q(m)) / two_g_k;
                    if (lambda * q(den)).is_integer() && lo <= lambda && lambda <= hi {
                        push(lambda);
                    }
                }
            }
        }
        out
    });
    Ok((region, found))
}

/// Largest integer `l` with `l ≤ slope·c` for `c ≥ 0`.
fn floor_scaled(slope: &crate::rational::Surd, c: i64, lo: i64, hi: i64) -> i64 {
    let c_q = q(c);
    let (mut lo, mut hi) = (lo, hi);
    // invariant: lo satisfies the bound, hi + 1 does not (or is out of range)
    while lo < hi {
        let mid = Integer::div_floor(&(lo + hi + 1), &2);
        if slope.cmp_scaled(&q(mid), &c_q) != Ordering::Greater {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

fn symmetric_search(
    l: &SymmetricClass,
    mode: ReiderMode,
    cap: u32,
    exec: Exec,
) -> Result<(String, Vec<ObstructionCandidate>)> {
    let g = l.genus;
    let cones = kouvidakis_cones(g)?;
    let upper = cones.eff_outer.upper.clone();
    let region = format!("1 ≤ c ≤ {cap}, l ∈ ℤ, −c ≤ l ≤ ({upper})·c");
    let g_k = q(g as i64) * l.k;
    let found = exec.flat_map(1..=cap as i64, |c| {
        let mut out = Vec::new();
        let lo = -c;
        // every outer slope is at most 1
        let hi = floor_scaled(&upper, c, lo, c);
        // L·Γ = a_L c − g k_L l
        let fixed = l.a * q(c);
        for &(m, min_sq, condition) in mode.targets() {
            let mut push = |lambda: i64| {
                let gamma = SymmetricClass::int(g, c, lambda);
                let gamma_sq = gamma.self_intersection();
                if gamma_sq >= q(min_sq) {
                    out.push(ObstructionCandidate {
                        gamma: SurfaceClass::Symmetric(gamma),
                        condition,
                        l_dot_gamma: q(m),
                        gamma_sq,
                    });
                }
            };
            if g_k.is_zero() {
                if fixed == q(m) {
                    (lo..=hi).for_each(&mut push);
                }
            } else {
                let lambda = (fixed - q(m)) / g_k;
                if let Some(lambda) = as_integer(&lambda) {
                    if lo <= lambda && lambda <= hi {
                        push(lambda);
                    }
                }
            }
        }
        out
    });
    Ok((region, found))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cart(g: u32, a: i64, k: i64) -> SurfaceClass {
        SurfaceClass::Cartesian(CartesianClass::symmetric(g, a, k))
    }

    #[test]
    fn genus_two_very_ample_class_is_certified() {
        let r = reider_certify_adjoint(&cart(2, 7, 1), ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert_eq!(r.l, cart(2, 5, 1));
        assert!(r.certified_within_cap, "{:?}", r.obstructions);
    }

    #[test]
    fn genus_two_even_gap_yields_hyperelliptic_graph() {
        let r = reider_certify_adjoint(&cart(2, 8, 3), ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert_eq!(r.l, cart(2, 6, 3));
        assert_eq!(r.obstructions.len(), 1);
        let o = &r.obstructions[0];
        assert_eq!(o.gamma, cart(2, 1, 1));
        assert_eq!(o.condition, ReiderCondition::IPrime);
        assert_eq!((o.l_dot_gamma, o.gamma_sq), (q(0), q(-2)));

        let r = reider_certify_adjoint(&cart(2, 8, -3), ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert_eq!(r.obstructions.len(), 1);
        assert_eq!(r.obstructions[0].gamma, cart(2, 1, -1));
    }

    #[test]
    fn genus_three_seven_one_is_certified() {
        let r = reider_certify_adjoint(&cart(3, 7, 1), ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert_eq!(r.l, cart(3, 3, 1));
        assert!(r.certified_within_cap);
    }

    #[test]
    fn preconditions() {
        // L = D_{2,2,2} is not nef in genus 2
        assert!(matches!(
            reider_certify(&cart(2, 2, 2), ReiderMode::GloballyGenerated, 8, Exec::Sequential),
            Err(Error::NotApplicable(_))
        ));
        // L = D_{1,1,0}: L² = 2 < 5
        assert!(matches!(
            reider_certify(&cart(2, 1, 0), ReiderMode::GloballyGenerated, 8, Exec::Sequential),
            Err(Error::NotApplicable(_))
        ));
        // L² = 8 is enough for gg but not va
        assert!(reider_certify(&cart(2, 2, 0), ReiderMode::GloballyGenerated, 8, Exec::Sequential).is_ok());
        assert!(reider_certify(&cart(2, 2, 0), ReiderMode::VeryAmple, 8, Exec::Sequential).is_err());
    }

    #[test]
    fn symmetric_square_examples() {
        // H = D′_{5,1} in genus 2: L = D′_{4,0}, L² = 16
        let h = SurfaceClass::Symmetric(SymmetricClass::int(2, 5, 1));
        let r = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert_eq!(r.l, SurfaceClass::Symmetric(SymmetricClass::int(2, 4, 0)));
        assert!(r.certified_within_cap, "{:?}", r.obstructions);
        // H = D′_{9,0} in genus 4: L = D′_{4,−1}
        let h = SurfaceClass::Symmetric(SymmetricClass::int(4, 9, 0));
        let r = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
        assert!(r.certified_within_cap, "{:?}", r.obstructions);
    }

    #[test]
    fn strategies_agree() {
        let h = cart(2, 10, 4);
        let seq = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 40, Exec::Sequential).unwrap();
        let par = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 40, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn floor_of_irrational_slope() {
        let cones = kouvidakis_cones(5).unwrap();
        // 1/(√5−1) ≈ 0.809
        assert_eq!(floor_scaled(&cones.eff_outer.upper, 10, -10, 10), 8);
        assert_eq!(floor_scaled(&cones.eff_outer.upper, 1, -1, 1), 0);
    }
}
