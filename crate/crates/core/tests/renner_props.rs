mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use symvar::finite_field::{enumerate_matrices, FqMatrix};
use symvar::renner::{
    bruhat_leq, cross_section, enumerate_rook, green_relation, idempotent_order, multiply, rook_count,
    w_e_w_decomposition, GreenRelation, IdempotentSet,
};
use symvar::RookElement;

#[test]
fn cardinality_matches_formula() {
    for n in 0..=5 {
        assert_eq!(enumerate_rook(n).unwrap().len() as u128, rook_count(n), "n = {n}");
    }
}

#[test]
fn bruhat_is_a_partial_order() {
    for n in 1..=3 {
        let all = enumerate_rook(n).unwrap();
        for a in &all {
            assert!(bruhat_leq(a, a));
            for b in &all {
                if a != b && bruhat_leq(a, b) {
                    assert!(!bruhat_leq(b, a), "antisymmetry fails for {a} and {b}");
                }
                for c in &all {
                    if bruhat_leq(a, b) && bruhat_leq(b, c) {
                        assert!(bruhat_leq(a, c), "transitivity fails for {a} <= {b} <= {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn bruhat_on_permutations_is_classical() {
    for n in 1..=4 {
        let oracle = common::classical_bruhat(n);
        for (v, above) in &oracle {
            for w in oracle.keys() {
                let rv = RookElement::new(v.clone()).unwrap();
                let rw = RookElement::new(w.clone()).unwrap();
                assert_eq!(bruhat_leq(&rv, &rw), above.contains(w), "{rv} vs {rw}");
            }
        }
    }
}

#[test]
fn bruhat_respects_rank_and_idempotent_order() {
    for n in 1..=3 {
        let all = enumerate_rook(n).unwrap();
        for a in &all {
            for b in &all {
                if bruhat_leq(a, b) {
                    assert!(a.rank() <= b.rank());
                }
            }
        }
        let idem: Vec<RookElement> = IdempotentSet::all(n).iter().map(IdempotentSet::to_rook).collect();
        for e in &idem {
            for f in &idem {
                if idempotent_order(e, f).unwrap() {
                    assert!(bruhat_leq(e, f), "{e} <= {f} as idempotents but not in Bruhat order");
                }
            }
        }
    }
}

#[test]
fn inverse_semigroup_identity() {
    for n in 1..=4 {
        for r in enumerate_rook(n).unwrap() {
            let rt = r.transpose();
            assert_eq!(multiply(&multiply(&r, &rt).unwrap(), &r).unwrap(), r);
        }
    }
}

#[test]
fn j_classes_are_w_e_w_classes() {
    for n in 1..=4 {
        let classes = w_e_w_decomposition(n).unwrap();
        let all = enumerate_rook(n).unwrap();
        let cross = cross_section(n).unwrap();
        for (k, class) in classes.iter().enumerate() {
            let expected: Vec<RookElement> = all
                .iter()
                .filter(|r| green_relation(r, &cross.chain[k], GreenRelation::J))
                .cloned()
                .collect();
            assert_eq!(*class, expected, "n = {n}, k = {k}");
        }
    }
}

fn left_ideal(a: &FqMatrix, space: &[FqMatrix]) -> BTreeSet<FqMatrix> {
    space.iter().map(|x| x.mul(a)).collect()
}

fn right_ideal(a: &FqMatrix, space: &[FqMatrix]) -> BTreeSet<FqMatrix> {
    space.iter().map(|x| a.mul(x)).collect()
}

#[test]
fn green_relations_match_ideals_over_f3() {
    let space = enumerate_matrices(2, 3).unwrap();
    let all = enumerate_rook(2).unwrap();
    let gl: Vec<FqMatrix> = space.iter().filter(|m| m.is_invertible()).cloned().collect();
    for r in &all {
        let mr = FqMatrix::from_rook(3, r);
        for s in &all {
            let ms = FqMatrix::from_rook(3, s);
            let l = left_ideal(&mr, &space) == left_ideal(&ms, &space);
            let rr = right_ideal(&mr, &space) == right_ideal(&ms, &space);
            assert_eq!(green_relation(r, s, GreenRelation::L), l, "L: {r} vs {s}");
            assert_eq!(green_relation(r, s, GreenRelation::R), rr, "R: {r} vs {s}");
            assert_eq!(green_relation(r, s, GreenRelation::H), l && rr, "H: {r} vs {s}");
            // two-sided GL x GL orbits are the J-classes
            let same_orbit = gl.iter().any(|g| gl.iter().any(|h| g.mul(&mr).mul(h) == ms));
            assert_eq!(green_relation(r, s, GreenRelation::J), same_orbit, "J: {r} vs {s}");
        }
    }
}

fn rook_strategy(n: usize) -> impl Strategy<Value = RookElement> {
    (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(perm, keep)| {
            RookElement::new(perm.into_iter().zip(keep).map(|(j, k)| if k { j } else { 0 }).collect()).unwrap()
        })
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (rook_strategy(n), rook_strategy(n), rook_strategy(n)))
    ) {
        let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
        let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_matches_matrix_product(a in rook_strategy(5), b in rook_strategy(5)) {
        let ab = multiply(&a, &b).unwrap();
        let m = FqMatrix::from_rook(5, &a).mul(&FqMatrix::from_rook(5, &b));
        prop_assert_eq!(FqMatrix::from_rook(5, &ab), m);
    }

    #[test]
    fn diagram_roundtrip(r in rook_strategy(6)) {
        prop_assert_eq!(r.diagram().parse::<RookElement>().unwrap(), r);
    }

    #[test]
    fn bruhat_below_identity_implies_upper_triangular(r in rook_strategy(5)) {
        // B (id) B is the Borel group itself, whose closure is upper triangular
        let upper = r.map().iter().enumerate().all(|(i, &j)| j == 0 || j > i);
        prop_assert_eq!(bruhat_leq(&r, &RookElement::identity(5)), upper);
    }
}
