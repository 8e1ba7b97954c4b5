mod common;

use proptest::prelude::*;
use symvar::linalg::int;
use symvar::{Family, RootSystem, Weight};

fn systems() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for rank in 1..=4 {
        out.push(RootSystem::new(Family::A, rank).unwrap());
        out.push(RootSystem::new(Family::B, rank).unwrap());
        out.push(RootSystem::new(Family::C, rank).unwrap());
        if rank >= 2 {
            out.push(RootSystem::new(Family::D, rank).unwrap());
        }
    }
    out
}

#[test]
fn weight_sets_match_the_lattice_oracle() {
    for rs in systems().iter().filter(|rs| rs.rank() <= 3) {
        let rank = rs.rank();
        for mask in 0..(1 << rank) {
            let coeffs: Vec<i64> = (0..rank).map(|i| ((mask >> i) & 1) as i64 + i64::from(i == 0)).collect();
            let lambda = rs.weight_from_fundamental(&coeffs).unwrap();
            let got = rs.weight_set(&lambda).unwrap();
            let expected = common::lattice_weight_set(rs, &lambda);
            assert_eq!(got, expected, "{}{} lambda = {coeffs:?}", rs.family(), rank);
        }
    }
}

#[test]
fn root_counts_by_formula() {
    for rs in systems() {
        let l = rs.rank();
        let expected = match rs.family() {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
        };
        assert_eq!(rs.roots().len(), expected, "{}{l}", rs.family());
        assert_eq!(rs.positive_roots().len() * 2, expected);
    }
}

#[test]
fn fundamental_weights_are_dual_to_coroots() {
    for rs in systems() {
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            for (j, a) in rs.simple_roots().iter().enumerate() {
                assert_eq!(rs.coroot_pairing(w, a), int(i64::from(i == j)));
            }
        }
    }
}

fn system_and_weight() -> impl Strategy<Value = (RootSystem, Vec<i64>)> {
    (0usize..4, 1usize..=4).prop_flat_map(|(f, rank)| {
        let family = [Family::A, Family::B, Family::C, Family::D][f];
        let rank = if family == Family::D { rank.max(2) } else { rank };
        let rs = RootSystem::new(family, rank).unwrap();
        (Just(rs), proptest::collection::vec(-3i64..=3, rank))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions((rs, c) in system_and_weight(), k in 0usize..4) {
        let mu = rs.weight_from_fundamental(&c).unwrap();
        let alpha = &rs.roots()[k % rs.roots().len()];
        let once = rs.reflect(alpha, &mu).unwrap();
        prop_assert_eq!(rs.reflect(alpha, &once).unwrap(), mu.clone());
        prop_assert_eq!(rs.inner(&once, &once), rs.inner(&mu, &mu));
    }

    #[test]
    fn dominant_representative_is_dominant_and_conjugate((rs, c) in system_and_weight()) {
        let mu = rs.weight_from_fundamental(&c).unwrap();
        let (dom, w) = rs.dominant_representative(&mu).unwrap();
        prop_assert!(rs.is_dominant(&dom));
        prop_assert_eq!(w.apply(&mu), dom.clone());
        prop_assert_eq!(w.apply_word(&rs, &mu), dom.clone());
        prop_assert!(rs.weyl_orbit(&dom).unwrap().contains(&mu));
    }

    #[test]
    fn weight_sets_are_weyl_stable((rs, c) in system_and_weight()) {
        prop_assume!(rs.rank() <= 3);
        let coeffs: Vec<i64> = c.iter().map(|x| x.abs().min(2)).collect();
        let lambda = rs.weight_from_fundamental(&coeffs).unwrap();
        let set = rs.weight_set(&lambda).unwrap();
        for a in rs.simple_roots() {
            for mu in &set {
                prop_assert!(set.contains(&rs.reflect(a, mu).unwrap()));
            }
        }
        for mu in &set {
            prop_assert!(rs.dominance_leq(mu, &lambda));
        }
    }

    #[test]
    fn weight_serde_roundtrip(c in proptest::collection::vec(-50i64..50, 1..6), d in 1i64..7) {
        let w = Weight::from_ints(&c).scale(&symvar::linalg::frac(1, d));
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&json).unwrap(), w);
    }
}
