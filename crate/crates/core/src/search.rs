//! Diophantine searches for minimal embedding degrees of `C×C` and `C₂`,
//! embeddings into P⁴, and lower bounds for the double-curve genus.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{require_genus, Error, Result};
use crate::exec::Exec;
use crate::lattice::{CurveProfile, TriState};
use crate::rational::{cmp_with_surd, exact_div, exact_sqrt, q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaMode {
    Conservative,
    Sharp,
}

impl std::str::FromStr for DeltaMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "conservative" => Ok(DeltaMode::Conservative),
            "sharp" => Ok(DeltaMode::Sharp),
            other => Err(format!("unknown delta mode {other:?}")),
        }
    }
}

/// A candidate ruled out, with the inequality that did it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Elimination {
    pub candidate: i64,
    pub reason: String,
    /// Representations `n = a² − gk²` checked for this candidate (symmetric
    /// search only), each with its sectional genus.
    pub solutions: Vec<Representation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Representation {
    pub a: i64,
    pub k: i64,
    pub g_h: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport<Qy, R> {
    pub query: Qy,
    pub result: R,
    pub eliminated: Vec<Elimination>,
    pub bounds_used: BTreeMap<String, String>,
    pub exhaustive_within: String,
}

/// Raised when a search cannot settle a candidate within its caps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InconclusiveSearch {
    pub reason: String,
    pub partial: SearchReport<SymmetricQuery, Option<i64>>,
}

/// Lower bound for the minimal degree `δ(C)` of an embedding of `C`.
///
/// Conservative: `δ = 5` for `g = 2`; otherwise the smallest `δ` with
/// `g ≤ (δ−1)(δ−2)/2`, i.e. `δ ≥ 3/2 + √(2g + 1/4)`. Sharp mode adds
/// `δ = 6` for non-hyperelliptic genus 4 and `δ = 8` for general genus 6.
/// A larger user-supplied override always wins.
pub fn delta_lower_bound(profile: &CurveProfile, mode: DeltaMode) -> u32 {
    let g = profile.genus();
    let mut delta = if g == 2 {
        5
    } else {
        // smallest δ with 2δ − 3 ≥ √(8g + 1)
        let radicand = 8 * g as i128 + 1;
        let mut d = 2u32;
        while {
            let lhs = 2 * d as i128 - 3;
            lhs < 0 || lhs * lhs < radicand
        } {
            d += 1;
        }
        d
    };
    if mode == DeltaMode::Sharp {
        if g == 4 && profile.hyperelliptic() == TriState::No {
            delta = delta.max(6);
        }
        if g == 6 && profile.generic_moduli() {
            delta = delta.max(8);
        }
    }
    profile.delta_override().map_or(delta, |o| delta.max(o))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CartesianQuery {
    pub genus: u32,
    pub delta: u32,
}

/// Smallest even `n > 10` with `n(n−10) ≥ 4(g−1)(g−1+5δ)`.
pub fn min_degree_cartesian(genus: u32, delta: u32) -> Result<SearchReport<CartesianQuery, i64>> {
    require_genus(genus, 2)?;
    if delta == 0 {
        return Err(Error::InvalidProfile("delta must be at least 1".into()));
    }
    let (g, d) = (genus as i64, delta as i64);
    let rhs = 4 * (g - 1) * (g - 1 + 5 * d);
    let mut eliminated = Vec::new();
    let mut n = 12;
    while n * (n - 10) < rhs {
        eliminated.push(Elimination {
            candidate: n,
            reason: format!("n(n−10) = {} < 4(g−1)(g−1+5δ) = {rhs}", n * (n - 10)),
            solutions: Vec::new(),
        });
        n += 2;
    }
    let mut bounds = BTreeMap::new();
    bounds.insert("delta".into(), delta.to_string());
    bounds.insert("parity".into(), "n = 2(aa′ − gk²) is even".into());
    bounds.insert("rhs".into(), rhs.to_string());
    Ok(SearchReport {
        query: CartesianQuery { genus, delta },
        result: n,
        eliminated,
        bounds_used: bounds,
        exhaustive_within: format!("even n with 10 < n ≤ {n}"),
    })
}

/// Lower bounds for `n` on `C×C` as tabulated in the literature for
/// `g = 2..13`: `(g, δ(C), n)`.
pub const REFERENCE_CARTESIAN_TABLE: [(u32, u32, i64); 12] = [
    (2, 5, 18),
    (3, 4, 20),
    (4, 5, 24),
    (5, 5, 28),
    (6, 5, 30),
    (7, 6, 36),
    (8, 6, 38),
    (9, 6, 40),
    (10, 6, 44),
    (11, 7, 48),
    (12, 7, 50),
    (13, 7, 54),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricQuery {
    pub genus: u32,
    pub delta: u32,
    pub a_cap: u32,
}

/// Sectional genus `g_H = ½[n + 2 + (2g−3)a − gk]` of `D′_{a,k}` with `n = a² − gk²`.
pub fn symmetric_sectional_genus(genus: u32, a: i64, k: i64) -> i64 {
    let g = genus as i64;
    let n = a * a - g * k * k;
    (n + 2 + (2 * g - 3) * a - g * k) / 2
}

/// `⌊(n² − 5n + 10 − 2(g−1)(g−3))/10⌋`: the largest `g_H` with `b ≥ 0`.
pub fn symmetric_genus_ceiling(genus: u32, n: i64) -> i64 {
    let g = genus as i64;
    num_integer::Integer::div_floor(&(n * n - 5 * n + 10 - 2 * (g - 1) * (g - 3)), &10)
}

/// All `(a, k)` with `a² − gk² = n`, `0 < a ≤ a_cap`, sorted by `(a, k)`.
pub fn representations(genus: u32, n: i64, a_cap: u32) -> Vec<(i64, i64)> {
    let g = genus as i128;
    let mut out = Vec::new();
    for a in 1..=a_cap as i64 {
        let diff = (a as i128) * (a as i128) - n as i128;
        if diff < 0 {
            continue;
        }
        let Some(k2) = exact_div(diff, g) else { continue };
        if let Some(k) = exact_sqrt(k2) {
            let k = k as i64;
            if k == 0 {
                out.push((a, 0));
            } else {
                out.push((a, -k));
                out.push((a, k));
            }
        }
    }
    out
}

/// Base bound: smallest `n ≥ 5` with `(n−5)² > 2g² − 8g + 31 + 5δ(2g − √g − 3)`.
pub fn symmetric_base_bound(genus: u32, delta: u32) -> i64 {
    let (g, d) = (genus as i64, delta as i64);
    let rational_part = 2 * g * g - 8 * g + 31 + 5 * d * (2 * g - 3);
    let mut n = 5;
    // (n−5)² − rational_part > −5δ·√g
    while cmp_with_surd(&q((n - 5) * (n - 5) - rational_part), &q(-5 * d), genus) != Ordering::Greater {
        n += 1;
    }
    n
}

/// Smallest `a ≥ 1` beyond which every representation of `n` has
/// `g_H` above the ceiling: `n + 2 + (2g−3)a − 2·ceiling ≥ a√g` (using
/// `gk < a√g`).
fn certification_threshold(genus: u32, n: i64, ceiling: i64, limit: i64) -> Option<i64> {
    let g = genus as i64;
    (1..=limit).find(|&a| {
        let lhs = n + 2 + (2 * g - 3) * a - 2 * ceiling;
        cmp_with_surd(&q(lhs), &q(a), genus) != Ordering::Less
    })
}

const SYMMETRIC_WINDOW: i64 = 32;

/// Lower bound for the degree of an embedding of `C₂`.
///
/// Starting from [`symmetric_base_bound`], each candidate `n` is eliminated
/// when every representation `n = a² − gk²` gives a sectional genus above
/// [`symmetric_genus_ceiling`] (which would force `b < 0`). Representations
/// with `a ≤ a_cap` are checked directly; larger `a` are covered by
/// [`certification_threshold`].
pub fn min_degree_symmetric(
    profile: &CurveProfile,
    delta: u32,
    a_cap: u32,
) -> Result<SearchReport<SymmetricQuery, i64>> {
    let genus = profile.genus();
    require_genus(genus, 3)?;
    let base = symmetric_base_bound(genus, delta);
    let query = SymmetricQuery { genus, delta, a_cap };
    let mut bounds = BTreeMap::new();
    bounds.insert("delta".into(), delta.to_string());
    bounds.insert("base_bound".into(), base.to_string());
    bounds.insert("a_cap".into(), a_cap.to_string());
    bounds.insert("candidate_window".into(), format!("{base}..={}", base + SYMMETRIC_WINDOW));
    if genus == 3 {
        bounds.insert("upper_bound".into(), "16, attained by the very ample D'_{4,0}".into());
    }

    let mut eliminated = Vec::new();
    let partial = |eliminated: &Vec<Elimination>, bounds: &BTreeMap<String, String>| SearchReport {
        query,
        result: None,
        eliminated: eliminated.clone(),
        bounds_used: bounds.clone(),
        exhaustive_within: format!("{base} ≤ n ≤ {}, 0 < a ≤ {a_cap}", base + SYMMETRIC_WINDOW),
    };

    for n in base..=base + SYMMETRIC_WINDOW {
        let ceiling = symmetric_genus_ceiling(genus, n);
        let solutions: Vec<Representation> = representations(genus, n, a_cap)
            .into_iter()
            .map(|(a, k)| Representation { a, k, g_h: symmetric_sectional_genus(genus, a, k) })
            .collect();
        if solutions.iter().any(|s| s.g_h <= ceiling) {
            if genus == 3 && n > 16 {
                return Err(Error::Inconsistent(format!("genus-3 search ended at {n}, above the attained degree 16")));
            }
            bounds.insert("ceiling_at_result".into(), ceiling.to_string());
            return Ok(SearchReport {
                query,
                result: n,
                eliminated,
                bounds_used: bounds,
                exhaustive_within: format!("{base} ≤ n ≤ {n}, 0 < a ≤ {a_cap}"),
            });
        }
        match certification_threshold(genus, n, ceiling, a_cap as i64 + 1) {
            Some(a_star) => {
                let reason = if solutions.is_empty() {
                    format!("no solution of a² − {genus}k² = {n} with 0 < a ≤ {a_cap}; every a ≥ {a_star} forces g_H > {ceiling}")
                } else {
                    format!("every solution has g_H > {ceiling} (b < 0); every a ≥ {a_star} forces g_H > {ceiling}")
                };
                eliminated.push(Elimination { candidate: n, reason, solutions });
            }
            None => {
                return Err(Error::Inconclusive(Box::new(InconclusiveSearch {
                    reason: format!("n = {n}: representations with a > {a_cap} are not covered; raise the cap"),
                    partial: partial(&eliminated, &bounds),
                })));
            }
        }
    }
    Err(Error::Inconclusive(Box::new(InconclusiveSearch {
        reason: format!("every candidate up to {} was eliminated", base + SYMMETRIC_WINDOW),
        partial: partial(&eliminated, &bounds),
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct P4Witness {
    pub a: i64,
    pub a_prime: i64,
    pub k: i64,
    pub n: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct P4Query {
    pub genus: u32,
    pub a_max: u32,
    pub diagonal_only: bool,
}

/// Classes `D_{a,a′,k}` on `C×C` whose projection to P⁴ would have no
/// improper double points, i.e. `n(n−10) = 10(g−1)(a+a′) + 4(g−1)²` with
/// `n = 2(aa′ − gk²)`, that also pass the genus-2 necessary conditions
/// `2k² < aa′`, `4k ≤ a+a′−5`. Canonical form `a ≥ a′ ≥ 5`, `k ≥ 0`.
pub fn p4_search(genus: u32, a_max: u32, diagonal_only: bool, exec: Exec) -> Result<SearchReport<P4Query, Vec<P4Witness>>> {
    require_genus(genus, 2)?;
    let g = genus as i128;
    let witnesses = exec.flat_map(5..=a_max as i64, |a| {
        let lower = if diagonal_only { a } else { 5 };
        (lower..=a)
            .filter_map(|a2| {
                let (a_, a2_) = (a as i128, a2 as i128);
                let rhs = 10 * (g - 1) * (a_ + a2_) + 4 * (g - 1) * (g - 1);
                let n = 5 + exact_sqrt(25 + rhs)?;
                if n % 2 != 0 {
                    return None;
                }
                let k = exact_sqrt(exact_div(a_ * a2_ - n / 2, g)?)?;
                let ok = 2 * k * k < a_ * a2_ && 4 * k <= a_ + a2_ - 5;
                ok.then_some(P4Witness { a, a_prime: a2, k: k as i64, n: n as i64 })
            })
            .collect::<Vec<_>>()
    });
    let mut witnesses = witnesses;
    witnesses.sort();
    let mut bounds = BTreeMap::new();
    bounds.insert("a_max".into(), a_max.to_string());
    bounds.insert("filters".into(), "2k² < aa′, 4k ≤ a+a′−5".into());
    bounds.insert("parity".into(), "n even".into());
    Ok(SearchReport {
        query: P4Query { genus, a_max, diagonal_only },
        result: witnesses,
        eliminated: Vec::new(),
        bounds_used: bounds,
        exhaustive_within: if diagonal_only {
            format!("5 ≤ a = a′ ≤ {a_max}, k ≥ 0")
        } else {
            format!("5 ≤ a′ ≤ a ≤ {a_max}, k ≥ 0")
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsBound {
    pub surface: crate::lattice::SurfaceKind,
    pub genus: u32,
    pub value: i64,
    pub n: i64,
    pub delta: u32,
    /// Sectional-genus bound used on `C₂`.
    pub g_h: Option<i64>,
    /// `17g² + 81g + 74`, the closed form on `C×C` for `g ≥ 4`.
    pub closed_form: Option<i64>,
}

/// `½(2n² − 17n + 2) + 2δ(n−12)(g−1) − 7(g−1)²` on `C×C`.
pub fn cartesian_gs_bound_at(genus: u32, n: i64, delta: u32) -> i64 {
    let (g, d) = (genus as i64, delta as i64);
    (2 * n * n - 17 * n + 2) / 2 + 2 * d * (n - 12) * (g - 1) - 7 * (g - 1) * (g - 1)
}

/// Smallest integer `g_H` with `g_H > ½[n + 2 + (2g − √g − 3)δ]`.
pub fn symmetric_gh_lower_bound(genus: u32, n: i64, delta: u32) -> i64 {
    let (g, d) = (genus as i64, delta as i64);
    let mut gh = 0;
    // 2g_H − n − 2 − (2g−3)δ > −δ√g
    while cmp_with_surd(&q(2 * gh - n - 2 - (2 * g - 3) * d), &q(-d), genus) != Ordering::Greater {
        gh += 1;
    }
    gh
}

/// `g_S = ½(n² − 7n − 7g² + 25g + 8) + (n−12)g_H` on `C₂`.
pub fn symmetric_gs_at(genus: u32, n: i64, g_h: i64) -> i64 {
    let g = genus as i64;
    (n * n - 7 * n - 7 * g * g + 25 * g + 8) / 2 + (n - 12) * g_h
}

/// Lower bound for the geometric genus of the double curve of any generic
/// projection of `C×C` (any `g ≥ 2`) or `C₂` (`g = 3, 4`).
pub fn gs_lower_bound(surface: crate::lattice::SurfaceKind, genus: u32) -> Result<GsBound> {
    use crate::lattice::SurfaceKind;
    let profile = CurveProfile::generic(genus)?;
    let delta = delta_lower_bound(&profile, DeltaMode::Conservative);
    match surface {
        SurfaceKind::Cartesian => {
            let n = min_degree_cartesian(genus, delta)?.result;
            let g = genus as i64;
            Ok(GsBound {
                surface,
                genus,
                value: cartesian_gs_bound_at(genus, n, delta),
                n,
                delta,
                g_h: None,
                closed_form: (genus >= 4).then_some(17 * g * g + 81 * g + 74),
            })
        }
        SurfaceKind::Symmetric => {
            if !(3..=4).contains(&genus) {
                return Err(Error::Unsupported(format!(
                    "double-curve genus bound on C₂ is only evaluated for genus 3 and 4, got {genus}"
                )));
            }
            let n = min_degree_symmetric(&profile, delta, 80 * genus)?.result;
            let g_h = symmetric_gh_lower_bound(genus, n, delta);
            Ok(GsBound {
                surface,
                genus,
                value: symmetric_gs_at(genus, n, g_h),
                n,
                delta,
                g_h: Some(g_h),
                closed_form: None,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P4Exclusion {
    pub genus: u32,
    pub delta: u32,
    pub table_n: i64,
    pub computed_n: i64,
    /// `14(g−1)²`, the largest value of `(n−5)(n−10)` for a non-special
    /// linearly normal surface in P⁴.
    pub ceiling: i64,
    pub table_lhs: i64,
    pub computed_lhs: i64,
    pub excluded_at_table: bool,
    pub excluded_at_computed: bool,
    pub large_bidegree: LargeBidegreeCheck,
}

/// For non-special `H` with `a + a′ ≥ g + 1` the P⁴ condition forces
/// `n − 10 ≥ 4(g−1)`, hence `(n−10)² ≥ 16(g−1)² > 14(g−1)²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeBidegreeCheck {
    pub n_boundary: i64,
    pub lower: i64,
    pub upper: i64,
    pub contradiction: bool,
}

/// Verifies that a non-special embedding `C×C ↪ P⁴` is impossible for
/// `2 ≤ g ≤ 13`: at the minimal degree, `(n−5)(n−10) > 14(g−1)²`.
pub fn nonspecial_p4_exclusion(genus: u32) -> Result<SearchReport<u32, P4Exclusion>> {
    let Some(&(_, table_delta, table_n)) = REFERENCE_CARTESIAN_TABLE.iter().find(|row| row.0 == genus) else {
        return Err(Error::Unsupported(format!("P⁴ exclusion is tabulated for 2 ≤ g ≤ 13, got {genus}")));
    };
    let delta = delta_lower_bound(&CurveProfile::generic(genus)?, DeltaMode::Conservative);
    let computed = min_degree_cartesian(genus, delta)?;
    let g = genus as i64;
    let ceiling = 14 * (g - 1) * (g - 1);
    let lhs = |n: i64| (n - 5) * (n - 10);
    let n0 = 4 * (g - 1) + 10;
    let large_bidegree = LargeBidegreeCheck {
        n_boundary: n0,
        lower: (n0 - 10) * (n0 - 10),
        upper: ceiling,
        contradiction: (n0 - 10) * (n0 - 10) > ceiling && lhs(n0) > ceiling,
    };
    let mut bounds = computed.bounds_used.clone();
    bounds.insert("tabulated_delta".into(), table_delta.to_string());
    let result = P4Exclusion {
        genus,
        delta,
        table_n,
        computed_n: computed.result,
        ceiling,
        table_lhs: lhs(table_n),
        computed_lhs: lhs(computed.result),
        excluded_at_table: lhs(table_n) > ceiling,
        excluded_at_computed: lhs(computed.result) > ceiling,
        large_bidegree,
    };
    Ok(SearchReport {
        query: genus,
        result,
        eliminated: computed.eliminated,
        bounds_used: bounds,
        exhaustive_within: computed.exhaustive_within,
    })
}
