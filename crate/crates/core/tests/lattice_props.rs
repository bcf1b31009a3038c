use proptest::prelude::*;
use squarefold::lattice::{
    chern_data, intersect_cartesian, intersect_symmetric, named_correspondences, plane_nodal_b, pullback,
    pushforward_sym_part,
};
use squarefold::rational::{frac, q};
use squarefold::{CartesianClass, SurfaceKind, SymmetricClass, Q};

fn rat() -> impl Strategy<Value = Q> {
    (-60i64..60, 1i64..9).prop_map(|(n, d)| frac(n, d))
}

fn cart(g: u32) -> impl Strategy<Value = CartesianClass> {
    (rat(), rat(), rat()).prop_map(move |(a, b, k)| CartesianClass::new(g, a, b, k))
}

fn sym(g: u32) -> impl Strategy<Value = SymmetricClass> {
    (rat(), rat()).prop_map(move |(a, k)| SymmetricClass::new(g, a, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cartesian_pairing_is_symmetric_and_bilinear(
        g in 2u32..21,
        (x, y, z) in (2u32..21).prop_flat_map(|g| (cart(g), cart(g), cart(g))),
        c1 in rat(),
        c2 in rat(),
    ) {
        let _ = g;
        prop_assert_eq!(x.dot(&y).unwrap(), y.dot(&x).unwrap());
        let combo = x.scaled(c1).checked_add(&y.scaled(c2)).unwrap();
        prop_assert_eq!(
            intersect_cartesian(&combo, &z).unwrap(),
            c1 * intersect_cartesian(&x, &z).unwrap() + c2 * intersect_cartesian(&y, &z).unwrap()
        );
    }

    #[test]
    fn symmetric_pairing_is_symmetric_and_bilinear(
        (x, y, z) in (2u32..21).prop_flat_map(|g| (sym(g), sym(g), sym(g))),
        c1 in rat(),
        c2 in rat(),
    ) {
        prop_assert_eq!(x.dot(&y).unwrap(), y.dot(&x).unwrap());
        let combo = x.scaled(c1).checked_add(&y.scaled(c2)).unwrap();
        prop_assert_eq!(
            intersect_symmetric(&combo, &z).unwrap(),
            c1 * intersect_symmetric(&x, &z).unwrap() + c2 * intersect_symmetric(&y, &z).unwrap()
        );
    }

    #[test]
    fn pullback_doubles_intersections((x, y) in (2u32..21).prop_flat_map(|g| (sym(g), sym(g)))) {
        let (px, py) = (pullback(&x), pullback(&y));
        prop_assert_eq!(intersect_cartesian(&px, &py).unwrap(), q(2) * intersect_symmetric(&x, &y).unwrap());
        prop_assert_eq!(pushforward_sym_part(&px).unwrap(), x);
    }

    #[test]
    fn basis_round_trip(x in (2u32..21).prop_flat_map(cart)) {
        let (e, f, d) = x.to_basis();
        prop_assert_eq!(CartesianClass::from_basis(x.genus, e, f, d), x.clone());
        // pairing with E and F reads off a′ and a
        prop_assert_eq!(x.dot(&CartesianClass::e(x.genus)).unwrap(), x.dot_e());
        prop_assert_eq!(x.dot(&CartesianClass::f(x.genus)).unwrap(), x.dot_f());
    }
}

#[test]
fn diagonal_and_canonical_squares() {
    for g in 2..=20u32 {
        let gi = g as i64;
        assert_eq!(CartesianClass::diagonal(g).self_intersection(), q(2 - 2 * gi));
        assert_eq!(CartesianClass::canonical(g).self_intersection(), q(2 * (2 * gi - 2) * (2 * gi - 2)));
    }
}

#[test]
fn noether_on_both_surfaces() {
    for g in 2..=20u32 {
        for kind in [SurfaceKind::Cartesian, SurfaceKind::Symmetric] {
            let c = chern_data(kind, g).unwrap();
            assert_eq!(q(12) * c.chi, q(c.c1_sq + c.c2), "{kind} g={g}");
        }
    }
}

#[test]
fn projection_fibre_is_quarter_of_tangent_pair() {
    let named = named_correspondences(3, None).unwrap();
    let get = |n: &str| named.iter().find(|c| c.name == n).unwrap().class.clone();
    let sum = get("T").checked_add(&get("T^-1")).unwrap().scaled(frac(1, 4));
    assert_eq!(sum, get("G"));
}

#[test]
fn plane_nodal_core_is_negative_only_for_quartics_of_genus_three() {
    let mut negative = Vec::new();
    for g in 3..=10u32 {
        for d in 4..=12u32 {
            if let Ok(b) = plane_nodal_b(g, d) {
                if b.core_self_intersection < q(0) {
                    negative.push((g, d));
                }
            }
        }
    }
    assert_eq!(negative, [(3, 4)]);
}
