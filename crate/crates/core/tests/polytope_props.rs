use std::collections::BTreeSet;

use proptest::prelude::*;
use symvar::polytope::{contains, f_vector, hull, weight_polytope};
use symvar::{Family, InvolutionSpec, Weight};

fn euler(f: &[usize]) -> i64 {
    f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

fn expected_euler(d: usize) -> i64 {
    if d % 2 == 0 { 0 } else { 2 }
}

/// Weight polytopes of every semigroup generator at rank at most 4: vertices
/// form one Weyl orbit, Euler's relation holds, and every weight lies inside.
#[test]
fn generator_polytopes_contain_their_weights() {
    for inv in InvolutionSpec::catalog(4) {
        let rs = inv.root_system();
        for c in inv.generator_coefficients() {
            let lambda = rs.weight_from_fundamental(&c).unwrap();
            let p = weight_polytope(rs, &lambda, Some(&inv)).unwrap();
            let shift = if rs.family() == Family::A { rs.chi().unwrap() } else { Weight::zero(rs.ambient_dim()) };
            let orbit: BTreeSet<Weight> = rs.weyl_orbit(&lambda).unwrap().iter().map(|w| &shift + w).collect();
            let verts: BTreeSet<Weight> = p.vertices().iter().cloned().collect();
            assert_eq!(verts, orbit, "{} {c:?}", inv.label());
            for mu in rs.weight_set(&lambda).unwrap() {
                assert!(contains(&p, &(&shift + &mu)).unwrap(), "{} {c:?}: {mu}", inv.label());
            }
            if let Ok(f) = f_vector(&p) {
                assert_eq!(euler(&f), expected_euler(p.affine_dim()), "{} {c:?}: {f:?}", inv.label());
            }
        }
    }
}

fn points() -> impl Strategy<Value = Vec<Weight>> {
    (2usize..=4).prop_flat_map(|d| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, d), 1..14)
            .prop_map(|pts| pts.iter().map(|p| Weight::from_ints(p)).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_is_idempotent(pts in points()) {
        let p = hull(&pts).unwrap();
        let again = hull(p.vertices()).unwrap();
        prop_assert_eq!(again.vertices(), p.vertices());
        prop_assert_eq!(again.facets(), p.facets());
    }

    #[test]
    fn hull_contains_inputs_and_satisfies_euler(pts in points()) {
        let p = hull(&pts).unwrap();
        for x in &pts {
            prop_assert!(contains(&p, x).unwrap());
        }
        let f = f_vector(&p).unwrap();
        prop_assert_eq!(euler(&f), expected_euler(p.affine_dim()));
        for (facet, on) in p.facets().iter().zip(p.incidence()) {
            prop_assert!(on.len() >= p.affine_dim());
            for v in p.vertices() {
                prop_assert!(facet.admits(v.coords()));
            }
        }
    }

    #[test]
    fn vertices_are_not_redundant(pts in points()) {
        let p = hull(&pts).unwrap();
        for (i, v) in p.vertices().iter().enumerate() {
            let others: Vec<Weight> = p.vertices().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, w)| w.clone()).collect();
            if others.is_empty() {
                continue;
            }
            let q = hull(&others).unwrap();
            prop_assert!(!contains(&q, v).unwrap());
        }
    }
}
