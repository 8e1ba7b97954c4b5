use std::collections::BTreeSet;

use symvar::finite_field::{
    borel_generators, congruence_action, enumerate_borel, enumerate_matrices, enumerate_skew, enumerate_symmetric,
    orbit_enumerate, twisted_action, FqMatrix,
};
use symvar::orbits::{
    invariant_to_partial_fpf, invariant_to_partial_involution, is_in_mq, is_in_symmetric_submonoid, rank_control,
    symmetric_submonoid, tau, theta, twisted_orbit_census, SymForm,
};
use symvar::renner::symmetric_rook_elements;
use symvar::InvolutionSpec;

#[test]
fn rank_control_is_constant_on_congruence_orbits() {
    for n in 1..=3 {
        for (space, form) in [(enumerate_symmetric(n, 3).unwrap(), "sym"), (enumerate_skew(n, 3).unwrap(), "skew")] {
            let orbits = orbit_enumerate(&space, &borel_generators(n, 3), congruence_action, None).unwrap();
            for o in &orbits.orbits {
                let rho = rank_control(&o[0]);
                assert!(rho.is_well_formed());
                assert!(o.iter().all(|m| rank_control(m) == rho), "{form} n={n}: orbit of {}", o[0]);
            }
        }
    }
}

#[test]
fn parametrization_is_total_on_symmetric_inputs() {
    for q in [3, 5] {
        for n in 1..=3 {
            for a in enumerate_symmetric(n, q).unwrap() {
                let pi = invariant_to_partial_involution(&rank_control(&a))
                    .unwrap_or_else(|e| panic!("{a} over F_{q}: {e}"));
                assert!(pi.is_symmetric());
            }
            for a in enumerate_skew(n, q).unwrap() {
                assert!(invariant_to_partial_fpf(&rank_control(&a)).unwrap().is_fpf_symmetric());
            }
        }
    }
}

#[test]
fn partial_involutions_are_fixed_and_separated() {
    for n in 1..=4 {
        let pis = symmetric_rook_elements(n, false).unwrap();
        let mut seen = BTreeSet::new();
        for pi in &pis {
            let rho = rank_control(&FqMatrix::from_rook(3, pi));
            assert_eq!(invariant_to_partial_involution(&rho).unwrap(), *pi);
            assert!(seen.insert(rho), "rank control of {pi} repeats");
        }
    }
}

#[test]
fn tau_lands_in_mq() {
    let ai = InvolutionSpec::ai(2).unwrap();
    for m in enumerate_matrices(2, 3).unwrap() {
        let t = tau(&m, &ai).unwrap();
        assert!(is_in_mq(&t, &ai).unwrap());
        assert_eq!(is_in_mq(&m, &ai).unwrap(), m.is_symmetric());
    }
}

#[test]
fn tau_is_equivariant_at_the_invariant_level() {
    let ai = InvolutionSpec::ai(2).unwrap();
    let borel: Vec<FqMatrix> = enumerate_borel(2, 3).unwrap().collect();
    for b in &borel {
        for a in enumerate_matrices(2, 3).unwrap() {
            let lhs = rank_control(&tau(&b.mul(&a), &ai).unwrap());
            let rhs = rank_control(&twisted_action(b, &tau(&a, &ai).unwrap(), &ai).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn symmetric_submonoid_is_a_monoid() {
    let ai = InvolutionSpec::ai(2).unwrap();
    let m_an = symmetric_submonoid(&ai, 2, 3).unwrap();
    let id = FqMatrix::identity(3, 2);
    assert!(m_an.contains(&id));
    for a in &m_an {
        for b in &m_an {
            assert!(is_in_symmetric_submonoid(&a.mul(b), &ai).unwrap());
        }
    }
    let fixed: Vec<FqMatrix> = enumerate_matrices(2, 3)
        .unwrap()
        .into_iter()
        .filter(|g| g.is_invertible() && theta(g, &ai).unwrap() == *g)
        .collect();
    let units: Vec<FqMatrix> = m_an.iter().filter(|m| m.is_invertible()).cloned().collect();
    assert_eq!(units, fixed);
}

#[test]
fn census_against_parametrizer_counts() {
    for (n, form, expected) in [(1, SymForm::Sym, 2), (2, SymForm::Sym, 5), (3, SymForm::Sym, 14), (2, SymForm::Skew, 2), (3, SymForm::Skew, 4), (4, SymForm::Skew, 10)] {
        let report = twisted_orbit_census(n, 3, form).unwrap();
        assert_eq!(report.expected_parametrizer_count, expected);
        assert!(report.matches(), "{form} n={n}: {report:?}");
        assert!(report.invariant_values <= report.orbit_count);
    }
}
