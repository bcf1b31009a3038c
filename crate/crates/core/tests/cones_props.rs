use squarefold::cones::{
    cone_status, cone_status_cartesian_g2, cone_status_cartesian_g3, cone_status_symmetric, reider_certify_adjoint,
    transfer_agrees, Property, ReiderMode, Verdicts,
};
use squarefold::lattice::{intersect_cartesian, CartesianClass as C};
use squarefold::rational::q;
use squarefold::{Exec, SurfaceClass, TriState};

fn nested(v: &Verdicts, self_int: i64, what: &str) {
    let yes = |p| v.get(p) == TriState::Yes;
    if yes(Property::VeryAmple) {
        assert!(yes(Property::Ample), "{what}");
    }
    if yes(Property::Ample) {
        assert!(yes(Property::Nef), "{what}");
    }
    if yes(Property::Nef) {
        assert!(yes(Property::QuasiEffective), "{what}");
        if self_int > 0 {
            assert!(yes(Property::Big), "{what}");
        }
    }
}

#[test]
fn verdicts_respect_cone_nesting() {
    for a in -20..=20i64 {
        for k in -20..=20i64 {
            let v2 = cone_status_cartesian_g2(a, q(k)).unwrap();
            nested(&v2, 2 * a * a - 4 * k * k, &format!("g=2 D_{{{a},{a},{k}}}"));
            let v3 = cone_status_cartesian_g3(a, k).unwrap();
            nested(&v3, 2 * a * a - 6 * k * k, &format!("g=3 D_{{{a},{a},{k}}}"));
            for g in 2..=6u32 {
                let v = cone_status_symmetric(g, a, k).unwrap();
                nested(&v, a * a - g as i64 * k * k, &format!("g={g} D'_{{{a},{k}}}"));
            }
        }
    }
}

#[test]
fn symmetric_and_cartesian_verdicts_transfer() {
    for g in [2, 3] {
        for a in -20..=20 {
            for k in -20..=20 {
                assert!(transfer_agrees(g, a, k).unwrap(), "g={g} (a,k)=({a},{k})");
            }
        }
    }
}

#[test]
fn genus_two_boundaries_are_sharp() {
    for a in 1..=40i64 {
        for sign in [-1, 1] {
            let at = |two_k: i64| {
                let k = sign * two_k;
                cone_status_cartesian_g2(a, squarefold::rational::frac(k, 2)).unwrap()
            };
            let edge = at(a);
            assert_eq!((edge.get(Property::Nef), edge.get(Property::Ample)), (TriState::Yes, TriState::No), "a={a}");
            let inside = at(a - 1);
            assert_eq!(inside.get(Property::Ample), TriState::Yes, "a={a}");
            if a >= 5 && (a - 3) % 2 == 0 {
                assert_eq!(at(a - 3).get(Property::VeryAmple), TriState::Yes, "a={a}");
            }
        }
    }
}

#[test]
fn reider_is_empty_inside_the_very_ample_window() {
    for a in 5..=40i64 {
        let kmax = (a - 3) / 2;
        for k in -kmax..=kmax {
            let h = SurfaceClass::Cartesian(C::int(2, a, a, k));
            let r = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
            assert!(r.obstructions.is_empty(), "D_{{{a},{a},{k}}}: {:?}", r.obstructions);
        }
    }
}

#[test]
fn reider_finds_the_single_curve_on_the_even_gap() {
    let d_i = SurfaceClass::Cartesian(C::int(2, 1, 1, 1));
    let delta = SurfaceClass::Cartesian(C::int(2, 1, 1, -1));
    for a in (6..=40i64).step_by(2) {
        for k in [(a - 2) / 2, -(a - 2) / 2] {
            let h = SurfaceClass::Cartesian(C::int(2, a, a, k));
            let r = reider_certify_adjoint(&h, ReiderMode::VeryAmple, 64, Exec::default()).unwrap();
            let expected = if k > 0 { &d_i } else { &delta };
            assert_eq!(r.obstructions.len(), 1, "D_{{{a},{a},{k}}}: {:?}", r.obstructions);
            assert_eq!(&r.obstructions[0].gamma, expected);
        }
    }
}

#[test]
fn exclusions_behind_the_symmetric_windows() {
    // c² − 3l² = −1 is impossible mod 3, c² − 4l² ∈ {−1, −2} mod 4
    let is_square = |x: i64| squarefold::rational::exact_sqrt(x as i128).is_some();
    for l in 0..=10_000i64 {
        let v = 3 * l * l - 1;
        assert!(!(is_square(v) && v <= 100_000_000), "c² = 3·{l}² − 1");
        for m in [1, 2] {
            let v = 4 * l * l - m;
            assert!(!(is_square(v) && v <= 100_000_000), "c² = 4·{l}² − {m}");
        }
    }
}

#[test]
fn dispatcher_agrees_with_direct_calls() {
    for a in 0..=12 {
        for k in -6..=6 {
            let direct = cone_status_cartesian_g3(a, k).unwrap();
            let routed = cone_status(&SurfaceClass::Cartesian(C::int(3, a, a, k))).unwrap();
            assert_eq!(direct, routed);
        }
    }
    let b = C::int(3, 10, 10, 6);
    assert_eq!(intersect_cartesian(&b, &b).unwrap(), q(-16));
}
