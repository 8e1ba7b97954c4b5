use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use symvar::finite_field::{
    borel_order, borel_pair_generators, bruhat_factor, echelon_patterns, enumerate_borel, enumerate_matrices,
    orbit_enumerate, theta_an, twisted_action, two_sided_action, FqMatrix,
};
use symvar::orbits::{tau, theta};
use symvar::renner::enumerate_rook;
use symvar::InvolutionSpec;

/// Factorization is exact, respects the echelon patterns, and its rook
/// component separates the two-sided Borel orbits.
#[test]
fn factorization_is_a_complete_orbit_invariant() {
    for (n, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let space = enumerate_matrices(n, q).unwrap();
        let orbits = orbit_enumerate(&space, &borel_pair_generators(n, q), two_sided_action, None).unwrap();
        let index = orbits.orbit_index();
        let mut component_of_orbit: HashMap<usize, symvar::RookElement> = HashMap::new();
        let mut orbit_of_component = HashMap::new();
        for m in &space {
            let f = bruhat_factor(m);
            assert_eq!(f.product(), *m, "n={n} q={q}");
            assert!(f.satisfies_patterns(), "pattern failure for {m}");
            let k = index[m];
            assert_eq!(component_of_orbit.entry(k).or_insert_with(|| f.r.clone()), &f.r, "orbit {k} splits");
            assert_eq!(*orbit_of_component.entry(f.r.clone()).or_insert(k), k, "{} shared by two orbits", f.r);
        }
        assert_eq!(orbits.count(), enumerate_rook(n).unwrap().len(), "n={n} q={q}");
    }
}

/// The cells `U_1 T r U_2` counted from the echelon patterns exhaust `Mat_n(F_q)`.
#[test]
fn cell_sizes_sum_to_the_whole_space() {
    for (n, q) in [(2u32, 2u64), (2, 3), (3, 2), (3, 3), (4, 5)] {
        let total: u64 = enumerate_rook(n as usize)
            .unwrap()
            .iter()
            .map(|r| {
                let (u, v) = echelon_patterns(r);
                let free = u.iter().flatten().filter(|&&b| b).count() + v.iter().flatten().filter(|&&b| b).count();
                q.pow(free as u32) * (q - 1).pow(r.rank() as u32)
            })
            .sum();
        assert_eq!(total, q.pow(n * n), "n={n} q={q}");
    }
}

#[test]
fn borel_enumeration_is_exact() {
    for (n, q) in [(1, 2), (2, 3), (3, 2), (3, 3), (2, 5)] {
        let all: Vec<FqMatrix> = enumerate_borel(n, q).unwrap().collect();
        let distinct: BTreeSet<&FqMatrix> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert_eq!(all.len(), borel_order(n, q).unwrap());
        let brute = enumerate_matrices(n, q).unwrap().into_iter().filter(|m| m.is_upper_triangular() && m.is_invertible()).count();
        assert_eq!(all.len(), brute);
    }
}

#[test]
fn twisted_action_is_an_action() {
    let ai = InvolutionSpec::ai(2).unwrap();
    let gl: Vec<FqMatrix> = enumerate_matrices(2, 3).unwrap().into_iter().filter(FqMatrix::is_invertible).collect();
    let space = enumerate_matrices(2, 3).unwrap();
    let borel: Vec<FqMatrix> = enumerate_borel(2, 3).unwrap().collect();
    for b1 in &borel {
        for b2 in &gl {
            let b12 = b1.mul(b2);
            for m in &space {
                let lhs = twisted_action(&b12, m, &ai).unwrap();
                let rhs = twisted_action(b1, &twisted_action(b2, m, &ai).unwrap(), &ai).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn symplectic_twisted_action_is_an_action_on_samples() {
    let aii = InvolutionSpec::aii(2).unwrap();
    let gl: Vec<FqMatrix> = (0..3000u64)
        .map(|i| FqMatrix::from_index(3, 4, i.wrapping_mul(2_654_435_761) % 43_046_721))
        .filter(FqMatrix::is_invertible)
        .take(40)
        .collect();
    for (k, b1) in gl.iter().enumerate() {
        let b2 = &gl[(k * 7 + 3) % gl.len()];
        let m = &gl[(k * 13 + 5) % gl.len()];
        let lhs = twisted_action(&b1.mul(b2), m, &aii).unwrap();
        let rhs = twisted_action(b1, &twisted_action(b2, m, &aii).unwrap(), &aii).unwrap();
        assert_eq!(lhs, rhs);
        // theta_an reverses products
        assert_eq!(theta_an(&aii, &b1.mul(b2)).unwrap(), theta_an(&aii, b2).unwrap().mul(&theta_an(&aii, b1).unwrap()));
    }
}

#[test]
fn tau_is_compatible_with_the_fixed_subgroup() {
    let ai = InvolutionSpec::ai(2).unwrap();
    let gl: Vec<FqMatrix> = enumerate_matrices(2, 3).unwrap().into_iter().filter(FqMatrix::is_invertible).collect();
    let fixed: Vec<&FqMatrix> = gl.iter().filter(|h| theta(h, &ai).unwrap() == **h).collect();
    assert!(!fixed.is_empty());
    let borel: Vec<FqMatrix> = enumerate_borel(2, 3).unwrap().collect();
    for b in &borel {
        for a in enumerate_matrices(2, 3).unwrap().iter().step_by(7) {
            for h in &fixed {
                let h_inv = h.inverse().unwrap();
                let lhs = tau(&b.mul(a).mul(&h_inv), &ai).unwrap();
                let rhs = twisted_action(b, &tau(a, &ai).unwrap(), &ai).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

fn matrix_strategy(n: usize, q: u8) -> impl Strategy<Value = FqMatrix> {
    proptest::collection::vec(proptest::collection::vec(0..i64::from(q), n), n)
        .prop_map(move |rows| FqMatrix::new(q, &rows).unwrap())
}

proptest! {
    #[test]
    fn factorization_roundtrip_over_f5(m in matrix_strategy(4, 5)) {
        let f = bruhat_factor(&m);
        prop_assert_eq!(f.product(), m.clone());
        prop_assert!(f.satisfies_patterns());
        prop_assert_eq!(f.r.rank(), m.rank());
    }

    #[test]
    fn factorization_is_invariant_under_borel(m in matrix_strategy(3, 7), a in 1u8..7, b in 0u8..7, c in 1u8..7) {
        let mut b1 = FqMatrix::diagonal(7, &[a, c, 1]);
        b1.set(0, 2, b);
        let mut b2 = FqMatrix::diagonal(7, &[1, a, c]);
        b2.set(1, 2, b);
        let moved = two_sided_action(&(b1, b2), &m);
        prop_assert_eq!(bruhat_factor(&moved).r, bruhat_factor(&m).r);
    }

    #[test]
    fn transpose_is_involutive(m in matrix_strategy(4, 7)) {
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        prop_assert!(m.rank() <= 4);
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }
}
