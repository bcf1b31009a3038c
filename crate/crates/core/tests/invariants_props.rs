use squarefold::invariants::{
    cartesian_profile, consistency_audit, pinch_expressions, symmetric_profile, Relation,
};
use squarefold::lattice::chern_data;
use squarefold::{CartesianClass, Error, SurfaceKind, SymmetricClass};

fn degree(g: i64, a: i64, a2: i64, k: i64) -> i64 {
    2 * (a * a2 - g * k * k)
}

#[test]
fn cartesian_profiles_pass_the_audit() {
    let mut checked = 0;
    for g in 2..=6u32 {
        let chern = chern_data(SurfaceKind::Cartesian, g).unwrap();
        for a in -12..=12 {
            for a2 in -12..=12 {
                for k in -4..=4 {
                    if degree(g as i64, a, a2, k) < 5 {
                        continue;
                    }
                    let pi = cartesian_profile(g, &CartesianClass::int(g, a, a2, k)).unwrap();
                    let audit = consistency_audit(&pi, &chern);
                    assert!(audit.holds, "g={g} D_{{{a},{a2},{k}}}: {:?}", audit.violations);
                    let ps = pinch_expressions(pi.n, pi.g_h, pi.d_dcurve, &chern);
                    assert!(ps.iter().all(|p| *p == pi.pinch));
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 8062);
}

#[test]
fn symmetric_profiles_pass_the_audit() {
    for g in 2..=6u32 {
        let chern = chern_data(SurfaceKind::Symmetric, g).unwrap();
        for a in -12..=12i64 {
            for k in -4..=4i64 {
                if a * a - g as i64 * k * k < 5 {
                    continue;
                }
                let pi = symmetric_profile(g, &SymmetricClass::int(g, a, k)).unwrap();
                let audit = consistency_audit(&pi, &chern);
                assert!(audit.holds, "g={g} D'_{{{a},{k}}}: {:?}", audit.violations);
            }
        }
    }
}

#[test]
fn worked_examples_have_positive_pinch_counts() {
    let p = |g, a, k| cartesian_profile(g, &CartesianClass::int(g, a, a, k)).unwrap().pinch;
    let sym = symmetric_profile(3, &SymmetricClass::int(3, 4, 0)).unwrap().pinch;
    assert_eq!([p(2, 5, 0), p(3, 4, 0), sym], [384, 336, 144]);
}

#[test]
fn perturbing_triple_points_breaks_exactly_the_point_relations() {
    let chern = chern_data(SurfaceKind::Cartesian, 3).unwrap();
    let mut pi = cartesian_profile(3, &CartesianClass::int(3, 4, 4, 0)).unwrap();
    pi.triple += 1;
    let audit = consistency_audit(&pi, &chern);
    assert_eq!(audit.violations, [Relation::C1Squared, Relation::C2, Relation::Noether, Relation::Pinch]);
}

#[test]
fn non_positive_degrees_are_rejected() {
    let err = cartesian_profile(2, &CartesianClass::int(2, 1, 1, 1)).unwrap_err();
    assert!(matches!(err, Error::DegenerateClass { n: -2 }));
}
