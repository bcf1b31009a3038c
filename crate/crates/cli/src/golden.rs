//! Reference values replayed by `verify-paper`.
//!
//! Expected values are literal strings. They are never recomputed, so a
//! regression in a formula shows up as a mismatch instead of silently moving
//! the expectation.

use serde::Serialize;

use squarefold::cones::{
    cone_status, cone_status_cartesian_g2, cone_status_cartesian_g3, cone_status_symmetric, reider_certify_adjoint,
    transfer_agrees, Property, ReiderMode,
};
use squarefold::hyperbolicity::{projection_hyperbolic, symmetric_square_hyperbolic};
use squarefold::invariants::{cartesian_profile, symmetric_profile, ProjectionInvariants};
use squarefold::rational::{frac, q};
use squarefold::search::{
    delta_lower_bound, gs_lower_bound, min_degree_cartesian, min_degree_symmetric, nonspecial_p4_exclusion,
    p4_search, DeltaMode, REFERENCE_CARTESIAN_TABLE,
};
use squarefold::{CartesianClass, CurveProfile, Exec, Result, SurfaceClass, SurfaceKind, SymmetricClass, TriState};

use crate::envelope::Mismatch;

pub struct GoldenCase {
    pub id: &'static str,
    pub citation: &'static str,
    pub expected: &'static str,
    pub compute: fn() -> Result<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

impl CaseOutcome {
    pub fn mismatch(&self) -> Option<Mismatch> {
        (!self.matches).then(|| Mismatch {
            id: self.id.clone(),
            citation: self.citation.clone(),
            expected: self.expected.clone(),
            actual: self.actual.clone(),
        })
    }
}

pub fn run_cases(cases: &[GoldenCase]) -> Vec<CaseOutcome> {
    cases
        .iter()
        .map(|c| {
            let actual = match (c.compute)() {
                Ok(s) => s,
                Err(e) => format!("error: {e}"),
            };
            CaseOutcome {
                id: c.id.to_string(),
                citation: c.citation.to_string(),
                expected: c.expected.to_string(),
                matches: actual == c.expected,
                actual,
            }
        })
        .collect()
}

pub fn tuple(pi: &ProjectionInvariants) -> String {
    let (n, gh, d, gs, p, t, b) = pi.as_tuple();
    format!("({n}, {gh}, {d}, {gs}, {p}, {t}, {b})")
}

fn v(verdicts: &squarefold::cones::Verdicts, p: Property) -> TriState {
    verdicts.get(p)
}

fn table_row(g: u32) -> Result<String> {
    let delta = delta_lower_bound(&CurveProfile::generic(g)?, DeltaMode::Conservative);
    Ok(format!("delta={delta} n>={}", min_degree_cartesian(g, delta)?.result))
}

macro_rules! table_case {
    ($id:literal, $g:literal, $expected:literal) => {
        GoldenCase {
            id: $id,
            citation: "minimal degree of C×C from n(n−10) ≥ 4(g−1)(g−1+5δ), tabulated for g = 2..13",
            expected: $expected,
            compute: || table_row($g),
        }
    };
}

pub fn cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            id: "projection-row-g2-D5",
            citation: "projection invariants (n, g_H, d, g_S, p, t, b) of C×C, genus 2, H = D_{5,5,0}",
            expected: "(50, 36, 1140, 2449, 384, 15784, 948)",
            compute: || Ok(tuple(&cartesian_profile(2, &CartesianClass::int(2, 5, 5, 0))?)),
        },
        GoldenCase {
            id: "projection-row-g3-D4",
            citation: "projection invariants (n, g_H, d, g_S, p, t, b) of C×C, genus 3, H = D_{4,4,0}",
            expected: "(32, 33, 432, 1045, 336, 3280, 264)",
            compute: || Ok(tuple(&cartesian_profile(3, &CartesianClass::int(3, 4, 4, 0))?)),
        },
        GoldenCase {
            id: "symmetric-degree-16",
            citation: "projection of C₂ embedded by D'_{4,0}, genus 3: degree, sectional genus, double-curve genus, hyperbolicity",
            expected: "n=16 g_H=15 g_S=142 hyperbolic=yes",
            compute: || {
                let pi = symmetric_profile(3, &SymmetricClass::int(3, 4, 0))?;
                let source = symmetric_square_hyperbolic(&CurveProfile::generic(3)?).verdict == TriState::Yes;
                let h = projection_hyperbolic(&pi, source).verdict;
                Ok(format!("n={} g_H={} g_S={} hyperbolic={h}", pi.n, pi.g_h, pi.g_dcurve))
            },
        },
        GoldenCase {
            id: "symmetric-degree-16-very-ample",
            citation: "D'_{2g−2,0} is very ample on C₂ for non-hyperelliptic C of genus ≥ 3",
            expected: "very_ample=yes",
            compute: || Ok(format!("very_ample={}", v(&cone_status_symmetric(3, 4, 0)?, Property::VeryAmple))),
        },
        GoldenCase {
            id: "g2-cone-edges",
            citation: "genus-2 cartesian cone theorem: nef iff 2|k| ≤ a, ample iff 2|k| < a, very ample iff a ≥ 5 and 2|k| ≤ a−3",
            expected: "violations=0 over 5<=a<=40",
            compute: || {
                let mut bad = 0;
                for a in 5..=40i64 {
                    for two_k in -2 * a..=2 * a {
                        let vs = cone_status_cartesian_g2(a, frac(two_k, 2))?;
                        let t = two_k.abs();
                        bad += (v(&vs, Property::Nef) != TriState::from_bool(t <= a)) as u32;
                        bad += (v(&vs, Property::Ample) != TriState::from_bool(t < a)) as u32;
                        if two_k % 2 == 0 {
                            bad += (v(&vs, Property::VeryAmple) != TriState::from_bool(t <= a - 3)) as u32;
                        }
                    }
                }
                Ok(format!("violations={bad} over 5<=a<=40"))
            },
        },
        GoldenCase {
            id: "g2-D2-nef-big-not-ample",
            citation: "genus-2 cartesian cone theorem: D_{2,2,1} lies on the nef boundary",
            expected: "nef=yes big=yes ample=no",
            compute: || {
                let vs = cone_status_cartesian_g2(2, q(1))?;
                Ok(format!(
                    "nef={} big={} ample={}",
                    v(&vs, Property::Nef),
                    v(&vs, Property::Big),
                    v(&vs, Property::Ample)
                ))
            },
        },
        GoldenCase {
            id: "g3-tangent-secant-B",
            citation: "tangent-secant correspondence B ≡ D_{10,10,6} on a plane quartic",
            expected: "quasi_effective=yes nef=no B^2=-16",
            compute: || {
                let b = CartesianClass::int(3, 10, 10, 6);
                let vs = cone_status(&SurfaceClass::Cartesian(b.clone()))?;
                Ok(format!(
                    "quasi_effective={} nef={} B^2={}",
                    v(&vs, Property::QuasiEffective),
                    v(&vs, Property::Nef),
                    b.self_intersection()
                ))
            },
        },
        GoldenCase {
            id: "gs-bound-cartesian-g2",
            citation: "double-curve genus bound on C×C at the minimal degree",
            expected: "225",
            compute: || Ok(gs_lower_bound(SurfaceKind::Cartesian, 2)?.value.to_string()),
        },
        GoldenCase {
            id: "gs-bound-cartesian-g3",
            citation: "double-curve genus bound on C×C at the minimal degree",
            expected: "331",
            compute: || Ok(gs_lower_bound(SurfaceKind::Cartesian, 3)?.value.to_string()),
        },
        GoldenCase {
            id: "gs-bound-cartesian-g4",
            citation: "double-curve genus bound on C×C: 17g² + 81g + 74 for g ≥ 4",
            expected: "670 closed_form=670",
            compute: || {
                let b = gs_lower_bound(SurfaceKind::Cartesian, 4)?;
                Ok(format!("{} closed_form={}", b.value, b.closed_form.unwrap_or_default()))
            },
        },
        GoldenCase {
            id: "gs-bound-symmetric-g3",
            citation: "double-curve genus bound on C₂, genus 3 (g_H ≥ 12)",
            expected: "130",
            compute: || Ok(gs_lower_bound(SurfaceKind::Symmetric, 3)?.value.to_string()),
        },
        GoldenCase {
            id: "gs-bound-symmetric-g4",
            citation: "double-curve genus bound on C₂, genus 4 (g_H ≥ 19)",
            expected: "280",
            compute: || Ok(gs_lower_bound(SurfaceKind::Symmetric, 4)?.value.to_string()),
        },
        table_case!("min-degree-cartesian-g2", 2, "delta=5 n>=18"),
        table_case!("min-degree-cartesian-g3", 3, "delta=4 n>=20"),
        table_case!("min-degree-cartesian-g4", 4, "delta=5 n>=24"),
        table_case!("min-degree-cartesian-g5", 5, "delta=5 n>=28"),
        table_case!("min-degree-cartesian-g6", 6, "delta=5 n>=30"),
        table_case!("min-degree-cartesian-g7", 7, "delta=6 n>=36"),
        table_case!("min-degree-cartesian-g8", 8, "delta=6 n>=38"),
        table_case!("min-degree-cartesian-g9", 9, "delta=6 n>=40"),
        table_case!("min-degree-cartesian-g10", 10, "delta=6 n>=44"),
        table_case!("min-degree-cartesian-g11", 11, "delta=7 n>=48"),
        table_case!("min-degree-cartesian-g12", 12, "delta=7 n>=50"),
        table_case!("min-degree-cartesian-g13", 13, "delta=7 n>=54"),
        GoldenCase {
            id: "nonspecial-p4-exclusion",
            citation: "no non-special embedding of C×C in P⁴ for g ≤ 13: (n−5)(n−10) > 14(g−1)²",
            expected: "excluded for g=2..13",
            compute: || {
                let mut failing = Vec::new();
                for &(g, _, _) in REFERENCE_CARTESIAN_TABLE.iter() {
                    let r = nonspecial_p4_exclusion(g)?.result;
                    if !(r.excluded_at_table && r.excluded_at_computed && r.large_bidegree.contradiction) {
                        failing.push(g.to_string());
                    }
                }
                Ok(if failing.is_empty() {
                    "excluded for g=2..13".to_string()
                } else {
                    format!("not excluded for g={}", failing.join(","))
                })
            },
        },
        GoldenCase {
            id: "p4-witness-g2",
            citation: "genus 2: the first class satisfying the P⁴ double-point condition and the necessary conditions",
            expected: "first=(511, 79, 142) n=82 n(n-10)=5904 diagonal=none",
            compute: || {
                let all = p4_search(2, 600, false, Exec::default())?.result;
                let diag = p4_search(2, 600, true, Exec::default())?.result;
                let first = all
                    .first()
                    .map_or("none".to_string(), |w| format!("({}, {}, {}) n={} n(n-10)={}", w.a, w.a_prime, w.k, w.n, w.n * (w.n - 10)));
                Ok(format!("first={first} diagonal={}", if diag.is_empty() { "none" } else { "some" }))
            },
        },
        GoldenCase {
            id: "min-degree-symmetric-g3",
            citation: "degree of an embedding of C₂, genus 3: n = 13, 14, 15 eliminated",
            expected: "16 eliminated=13,14,15 n13=(4,1),(5,2),(11,6)",
            compute: || {
                let r = min_degree_symmetric(&CurveProfile::generic(3)?, 4, 240)?;
                let elim: Vec<String> = r.eliminated.iter().map(|e| e.candidate.to_string()).collect();
                let n13: Vec<String> = r
                    .eliminated
                    .iter()
                    .filter(|e| e.candidate == 13)
                    .flat_map(|e| e.solutions.iter())
                    .filter(|s| s.k > 0 && s.a <= 11)
                    .map(|s| format!("({},{})", s.a, s.k))
                    .collect();
                Ok(format!("{} eliminated={} n13={}", r.result, elim.join(","), n13.join(",")))
            },
        },
        GoldenCase {
            id: "min-degree-symmetric-g4",
            citation: "degree of an embedding of C₂, genus 4: n = 16..19 eliminated",
            expected: "20 eliminated=16,17,18,19",
            compute: || {
                let r = min_degree_symmetric(&CurveProfile::generic(4)?, 5, 320)?;
                let elim: Vec<String> = r.eliminated.iter().map(|e| e.candidate.to_string()).collect();
                Ok(format!("{} eliminated={}", r.result, elim.join(",")))
            },
        },
        GoldenCase {
            id: "g2-cartesian-spot",
            citation: "genus-2 cartesian cone theorem, spot checks",
            expected: "D5,1 va=yes; D6,2 gg=yes va=no; D4,0 gg=yes va=no",
            compute: || {
                let s = |a, k| cone_status_cartesian_g2(a, q(k));
                let (x, y, z) = (s(5, 1)?, s(6, 2)?, s(4, 0)?);
                Ok(format!(
                    "D5,1 va={}; D6,2 gg={} va={}; D4,0 gg={} va={}",
                    v(&x, Property::VeryAmple),
                    v(&y, Property::GloballyGenerated),
                    v(&y, Property::VeryAmple),
                    v(&z, Property::GloballyGenerated),
                    v(&z, Property::VeryAmple)
                ))
            },
        },
        GoldenCase {
            id: "g3-cartesian-spot",
            citation: "genus-3 cartesian very-ampleness theorem, spot checks",
            expected: "D7,1 va=yes; D8,2 gg=yes va=unknown; D6,0 gg=yes; D4,0 va=yes",
            compute: || {
                let s = cone_status_cartesian_g3;
                let (x, y, z, w) = (s(7, 1)?, s(8, 2)?, s(6, 0)?, s(4, 0)?);
                Ok(format!(
                    "D7,1 va={}; D8,2 gg={} va={}; D6,0 gg={}; D4,0 va={}",
                    v(&x, Property::VeryAmple),
                    v(&y, Property::GloballyGenerated),
                    v(&y, Property::VeryAmple),
                    v(&z, Property::GloballyGenerated),
                    v(&w, Property::VeryAmple)
                ))
            },
        },
        GoldenCase {
            id: "symmetric-spot",
            citation: "symmetric squares of genus 2, 3, 4: very-ampleness windows",
            expected: "g2 D'5,1 va=yes; g4 D'9,0 va=yes; g3 D'7,3 va=unknown ample=yes",
            compute: || {
                let (x, y, z) = (cone_status_symmetric(2, 5, 1)?, cone_status_symmetric(4, 9, 0)?, cone_status_symmetric(3, 7, 3)?);
                Ok(format!(
                    "g2 D'5,1 va={}; g4 D'9,0 va={}; g3 D'7,3 va={} ample={}",
                    v(&x, Property::VeryAmple),
                    v(&y, Property::VeryAmple),
                    v(&z, Property::VeryAmple),
                    v(&z, Property::Ample)
                ))
            },
        },
        GoldenCase {
            id: "transfer-grid",
            citation: "D'_{a,k} on C₂ and D_{a,a,k} on C×C are quasi-effective, nef, ample together",
            expected: "disagreements=0 over |a|,|k|<=20, g=2,3",
            compute: || {
                let mut bad = 0;
                for g in [2, 3] {
                    for a in -20..=20 {
                        for k in -20..=20 {
                            bad += (!transfer_agrees(g, a, k)?) as u32;
                        }
                    }
                }
                Ok(format!("disagreements={bad} over |a|,|k|<=20, g=2,3"))
            },
        },
        GoldenCase {
            id: "reider-g3-D7",
            citation: "Reider: K + L very ample for H = D_{7,7,1}, genus 3",
            expected: "obstructions=0 cap=64",
            compute: || {
                let h = SurfaceClass::Cartesian(CartesianClass::int(3, 7, 7, 1));
                let r = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 64, Exec::default())?;
                Ok(format!("obstructions={} cap={}", r.obstructions.len(), r.cap))
            },
        },
        GoldenCase {
            id: "delta-bounds",
            citation: "minimal degree of a plane model: δ = 5 for g = 2, else (δ−1)(δ−2)/2 ≥ g",
            expected: "g2=5 g3=4 g7=6",
            compute: || {
                let d = |g| CurveProfile::generic(g).map(|p| delta_lower_bound(&p, DeltaMode::Conservative));
                Ok(format!("g2={} g3={} g7={}", d(2)?, d(3)?, d(7)?))
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let cs = cases();
        let mut ids: Vec<_> = cs.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), cs.len());
    }
}
