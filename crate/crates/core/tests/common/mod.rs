//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! code paths it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use symvar::linalg::Rational;
use symvar::{RootSystem, Weight};

/// All permutations of `1..=n` in one-line notation, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

/// Classical Bruhat order on `S_n`: the reflexive-transitive closure of
/// `w < w t` for transpositions `t` that increase the inversion count.
pub fn classical_bruhat(n: usize) -> BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> {
    let perms = permutations(n);
    let mut up: BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for w in &perms {
        let mut covers = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut wt = w.clone();
                wt.swap(a, b);
                if inversions(&wt) > inversions(w) {
                    covers.insert(wt);
                }
            }
        }
        up.insert(w.clone(), covers);
    }
    // transitive closure by search from each element
    let mut above = BTreeMap::new();
    for w in &perms {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(x) = stack.pop() {
            for y in &up[&x] {
                if seen.insert(y.clone()) {
                    stack.push(y.clone());
                }
            }
        }
        above.insert(w.clone(), seen);
    }
    above
}

/// Weights of the irreducible module of highest weight `lambda` as lattice
/// points: `mu = lambda - sum n_i alpha_i` with `n_i >= 0` such that every
/// Weyl conjugate of `mu` stays below `lambda` in the dominance order. The
/// conjugates are generated by repeated simple reflections.
pub fn lattice_weight_set(rs: &RootSystem, lambda: &Weight) -> BTreeSet<Weight> {
    let simples = rs.simple_roots().to_vec();
    let nonneg = |v: &Weight| {
        rs.simple_coordinates(v)
            .map(|c| c.iter().all(|x| *x >= Rational::from_integer(0.into())))
            .unwrap_or(false)
    };
    // lowest weight: reflect while some simple pairing is positive
    let mut lowest = lambda.clone();
    while let Some(a) = simples.iter().find(|a| rs.inner(&lowest, a) > Rational::from_integer(0.into())) {
        lowest = rs.reflect(a, &lowest).unwrap();
    }
    let below = |mu: &Weight| nonneg(&(lambda - mu));
    let bounded = |mu: &Weight| below(mu) && nonneg(&(mu - &lowest));
    let orbit_below = |mu: &Weight| {
        let mut seen = BTreeSet::from([mu.clone()]);
        let mut stack = vec![mu.clone()];
        while let Some(x) = stack.pop() {
            if !below(&x) {
                return false;
            }
            for a in &simples {
                let y = rs.reflect(a, &x).unwrap();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        true
    };
    // search downward from lambda through the root lattice
    let mut found = BTreeSet::new();
    let mut frontier = vec![lambda.clone()];
    let mut visited = BTreeSet::from([lambda.clone()]);
    while let Some(mu) = frontier.pop() {
        if orbit_below(&mu) {
            found.insert(mu.clone());
        }
        for a in &simples {
            let next = &mu - a;
            if bounded(&next) && visited.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    found
}
