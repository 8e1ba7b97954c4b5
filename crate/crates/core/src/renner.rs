//! The Renner monoid of `Mat_n`, realized as the rook monoid of partial
//! permutation matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_rook`] and [`cross_section`].
pub const MAX_ROOK_N: usize = 6;
/// Largest `n` accepted by [`w_e_w_decomposition`].
pub const MAX_WEW_N: usize = 5;
/// Largest `n` accepted by [`symmetric_rook_elements`].
pub const MAX_SYMMETRIC_N: usize = 8;

/// A partial permutation matrix stored as a row map: `map[i] = j > 0` puts a
/// 1 at row `i`, column `j` (1-based); `map[i] = 0` leaves row `i` empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RookRecord", into = "RookRecord")]
pub struct RookElement {
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RookRecord {
    map: Vec<usize>,
}

impl TryFrom<RookRecord> for RookElement {
    type Error = Error;
    fn try_from(r: RookRecord) -> Result<Self> {
        RookElement::new(r.map)
    }
}

impl From<RookElement> for RookRecord {
    fn from(r: RookElement) -> Self {
        RookRecord { map: r.map }
    }
}

impl RookElement {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n + 1];
        for &j in &map {
            if j > n {
                return Err(Error::InvalidParams(format!("column {j} out of range for n = {n}")));
            }
            if j > 0 {
                if seen[j] {
                    return Err(Error::InvalidParams(format!("column {j} used twice")));
                }
                seen[j] = true;
            }
        }
        Ok(Self { map })
    }

    pub fn zero(n: usize) -> Self {
        Self { map: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (1..=n).collect() }
    }

    /// The diagonal idempotent with ones at the given 1-based positions.
    pub fn idempotent(n: usize, support: &[usize]) -> Result<Self> {
        let mut map = vec![0; n];
        for &i in support {
            if i == 0 || i > n {
                return Err(Error::InvalidParams(format!("support index {i} out of range")));
            }
            map[i - 1] = i;
        }
        Ok(Self { map })
    }

    /// `e_k = diag(1^k, 0^(n-k))`.
    pub fn leading_idempotent(n: usize, k: usize) -> Self {
        Self { map: (1..=n).map(|i| if i <= k { i } else { 0 }).collect() }
    }

    /// The matrix unit `E_ij` (1-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut map = vec![0; n];
        if i == 0 || i > n || j == 0 || j > n {
            return Err(Error::InvalidParams(format!("E_{i}{j} out of range for n = {n}")));
        }
        map[i - 1] = j;
        Ok(Self { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Matrix entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.map[i] == j + 1
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|&&j| j > 0).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn transpose(&self) -> Self {
        let mut map = vec![0; self.n()];
        for (i, &j) in self.map.iter().enumerate() {
            if j > 0 {
                map[j - 1] = i + 1;
            }
        }
        Self { map }
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| j == 0 || j == i + 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose() == *self
    }

    /// Symmetric with empty diagonal.
    pub fn is_fpf_symmetric(&self) -> bool {
        self.is_symmetric() && self.map.iter().enumerate().all(|(i, &j)| j != i + 1)
    }

    /// 1-based indices of nonzero rows.
    pub fn domain(&self) -> BTreeSet<usize> {
        self.map.iter().enumerate().filter(|(_, &j)| j > 0).map(|(i, _)| i + 1).collect()
    }

    /// 1-based indices of nonzero columns.
    pub fn image(&self) -> BTreeSet<usize> {
        self.map.iter().copied().filter(|&j| j > 0).collect()
    }

    /// One-line rook diagram `j_1 j_2 ... j_n`.
    pub fn diagram(&self) -> String {
        self.map.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }

    /// `sw[i][j-1] = #{k >= i : 1 <= map[k] <= j}` for 0-based `i` and `j = 1..=n`.
    pub fn southwest_ranks(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut sw = vec![vec![0; n]; n];
        for i in (0..n).rev() {
            for j in 1..=n {
                let below = if i + 1 < n { sw[i + 1][j - 1] } else { 0 };
                sw[i][j - 1] = below + usize::from(self.map[i] > 0 && self.map[i] <= j);
            }
        }
        sw
    }
}

impl fmt::Display for RookElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.diagram())
    }
}

impl FromStr for RookElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let map = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("rook diagram entry {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(map)
    }
}

/// All partial permutation matrices of size `n`, in lexicographic order of their row maps.
pub fn enumerate_rook(n: usize) -> Result<Vec<RookElement>> {
    if n > MAX_ROOK_N {
        return Err(Error::ResourceGuard { what: "rook monoid size n".into(), limit: MAX_ROOK_N });
    }
    let mut out = Vec::new();
    let mut map = vec![0; n];
    let mut used = vec![false; n + 1];
    fill_rows(0, &mut map, &mut used, &mut out);
    Ok(out)
}

fn fill_rows(row: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<RookElement>) {
    let n = map.len();
    if row == n {
        out.push(RookElement { map: map.clone() });
        return;
    }
    for j in 0..=n {
        if j > 0 && used[j] {
            continue;
        }
        map[row] = j;
        used[j] = j > 0;
        fill_rows(row + 1, map, used, out);
        used[j] = false;
    }
    map[row] = 0;
}

/// `|R_n| = sum_k C(n,k)^2 k!`.
pub fn rook_count(n: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    let mut fact = 1u128;
    for k in 0..=n as u128 {
        if k > 0 {
            binom = binom * (n as u128 + 1 - k) / k;
            fact *= k;
        }
        total += binom * binom * fact;
    }
    total
}

/// Matrix product `r s`.
pub fn multiply(r: &RookElement, s: &RookElement) -> Result<RookElement> {
    if r.n() != s.n() {
        return Err(Error::SizeMismatch(r.n(), s.n()));
    }
    let map = r.map.iter().map(|&j| if j == 0 { 0 } else { s.map[j - 1] }).collect();
    Ok(RookElement { map })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GreenRelation {
    L,
    R,
    J,
    H,
}

impl FromStr for GreenRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L" => Ok(Self::L),
            "R" => Ok(Self::R),
            "J" => Ok(Self::J),
            "H" => Ok(Self::H),
            other => Err(Error::Parse(format!("unknown Green relation {other:?}"))),
        }
    }
}

/// `L`: equal row spaces; `R`: equal column spaces; `J`: equal rank; `H`: `L` and `R`.
/// Elements of different sizes are never related.
pub fn green_relation(r: &RookElement, s: &RookElement, rel: GreenRelation) -> bool {
    if r.n() != s.n() {
        return false;
    }
    match rel {
        GreenRelation::L => r.image() == s.image(),
        GreenRelation::R => r.domain() == s.domain(),
        GreenRelation::J => r.rank() == s.rank(),
        GreenRelation::H => r.image() == s.image() && r.domain() == s.domain(),
    }
}

/// A diagonal idempotent `e_I`, stored by its 1-based support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdempotentSet {
    pub n: usize,
    pub support: BTreeSet<usize>,
}

impl IdempotentSet {
    pub fn to_rook(&self) -> RookElement {
        let support: Vec<usize> = self.support.iter().copied().collect();
        RookElement::idempotent(self.n, &support).expect("support validated on construction")
    }

    pub fn from_rook(e: &RookElement) -> Result<Self> {
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent(e.diagram()));
        }
        Ok(Self { n: e.n(), support: e.domain() })
    }

    /// All `2^n` diagonal idempotents, ordered by support.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0u32..1 << n)
            .map(|mask| Self { n, support: (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect() })
            .collect();
        out.sort();
        out
    }
}

/// `e <= f` iff `ef = e = fe`.
pub fn idempotent_order(e: &RookElement, f: &RookElement) -> Result<bool> {
    for x in [e, f] {
        if !x.is_idempotent() {
            return Err(Error::NotIdempotent(x.diagram()));
        }
    }
    Ok(multiply(e, f)? == *e && multiply(f, e)? == *e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossSection {
    pub chain: Vec<RookElement>,
}

impl CrossSection {
    /// True iff consecutive members are strictly increasing in the idempotent order.
    pub fn is_chain(&self) -> bool {
        self.chain.windows(2).all(|w| {
            w[0] != w[1] && idempotent_order(&w[0], &w[1]).unwrap_or(false)
        })
    }

    /// Checks that the conjugates `w e w^-1` of the chain cover every diagonal idempotent.
    pub fn conjugates_cover_idempotents(&self) -> Result<bool> {
        let n = self.chain.first().map_or(0, RookElement::n);
        let perms: Vec<RookElement> = enumerate_rook(n)?.into_iter().filter(RookElement::is_permutation).collect();
        let mut found = BTreeSet::new();
        for w in &perms {
            let w_inv = w.transpose();
            for e in &self.chain {
                found.insert(multiply(&multiply(w, e)?, &w_inv)?);
            }
        }
        let all: BTreeSet<RookElement> = IdempotentSet::all(n).iter().map(IdempotentSet::to_rook).collect();
        Ok(found == all)
    }
}

/// The chain `e_0 < e_1 < ... < e_n`.
pub fn cross_section(n: usize) -> Result<CrossSection> {
    if n > MAX_ROOK_N {
        return Err(Error::ResourceGuard { what: "cross-section size n".into(), limit: MAX_ROOK_N });
    }
    Ok(CrossSection { chain: (0..=n).map(|k| RookElement::leading_idempotent(n, k)).collect() })
}

/// The classes `W e_k W` for `k = 0..=n`, each sorted, computed by multiplying
/// out all `w e_k w'` with `w, w'` permutations.
pub fn w_e_w_decomposition(n: usize) -> Result<Vec<Vec<RookElement>>> {
    if n > MAX_WEW_N {
        return Err(Error::ResourceGuard { what: "W e W decomposition size n".into(), limit: MAX_WEW_N });
    }
    let perms: Vec<RookElement> = enumerate_rook(n)?.into_iter().filter(RookElement::is_permutation).collect();
    (0..=n)
        .map(|k| {
            let e = RookElement::leading_idempotent(n, k);
            let mut class = BTreeSet::new();
            for w in &perms {
                let we = multiply(w, &e)?;
                for v in &perms {
                    class.insert(multiply(&we, v)?);
                }
            }
            Ok(class.into_iter().collect())
        })
        .collect()
}

/// Bruhat-Chevalley order by southwest-rank dominance; elements of different
/// sizes are incomparable.
pub fn bruhat_leq(r: &RookElement, s: &RookElement) -> bool {
    if r.n() != s.n() {
        return false;
    }
    let (a, b) = (r.southwest_ranks(), s.southwest_ranks());
    a.iter().zip(&b).all(|(x, y)| x.iter().zip(y).all(|(p, q)| p <= q))
}

/// All symmetric rook elements (partial involutions), or only those with
/// empty diagonal when `fpf` is set. Lexicographic order.
pub fn symmetric_rook_elements(n: usize, fpf: bool) -> Result<Vec<RookElement>> {
    if n > MAX_SYMMETRIC_N {
        return Err(Error::ResourceGuard { what: "symmetric rook element size n".into(), limit: MAX_SYMMETRIC_N });
    }
    let mut out = Vec::new();
    fill_involution(0, &mut vec![0; n], &mut vec![false; n], fpf, &mut out);
    out.sort();
    Ok(out)
}

fn fill_involution(start: usize, map: &mut [usize], decided: &mut [bool], fpf: bool, out: &mut Vec<RookElement>) {
    let n = map.len();
    let Some(i) = (start..n).find(|&i| !decided[i]) else {
        out.push(RookElement { map: map.to_vec() });
        return;
    };
    decided[i] = true;
    fill_involution(i + 1, map, decided, fpf, out);
    if !fpf {
        map[i] = i + 1;
        fill_involution(i + 1, map, decided, fpf, out);
    }
    for j in i + 1..n {
        if !decided[j] {
            map[i] = j + 1;
            map[j] = i + 1;
            decided[j] = true;
            fill_involution(i + 1, map, decided, fpf, out);
            decided[j] = false;
            map[j] = 0;
        }
    }
    map[i] = 0;
    decided[i] = false;
}

/// Cover relations of a partial order on `elements`, as index pairs `(lower, upper)`.
pub fn hasse_covers<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Vec<(usize, usize)> {
    let n = elements.len();
    let less: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && leq(&elements[a], &elements[b])).collect())
        .collect();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// Hasse diagram in Graphviz DOT syntax, nodes labeled by rook diagrams.
pub fn hasse_dot(elements: &[RookElement], covers: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph bruhat {\n  rankdir=BT;\n");
    for (i, e) in elements.iter().enumerate() {
        s.push_str(&format!("  n{i} [label=\"{}\"];\n", e.diagram()));
    }
    for (a, b) in covers {
        s.push_str(&format!("  n{a} -> n{b};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rook(s: &str) -> RookElement {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        let sizes: Vec<usize> = (1..=3).map(|n| enumerate_rook(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 7, 34]);
        assert_eq!(enumerate_rook(1).unwrap(), vec![rook("0"), rook("1")]);
        assert!(matches!(enumerate_rook(7), Err(Error::ResourceGuard { .. })));
        assert_eq!((0..=4).map(rook_count).collect::<Vec<_>>(), vec![1, 2, 7, 34, 209]);
    }

    #[test]
    fn canonical_order_is_sorted() {
        let all = enumerate_rook(3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn multiplication_examples() {
        let r = rook("2 0 1");
        assert_eq!(multiply(&r, &RookElement::identity(3)).unwrap(), r);
        let e12 = RookElement::unit(2, 1, 2).unwrap();
        let e21 = RookElement::unit(2, 2, 1).unwrap();
        assert_eq!(multiply(&e12, &e21).unwrap(), RookElement::unit(2, 1, 1).unwrap());
        assert_eq!(multiply(&e12, &rook("1 2 3")), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn idempotent_products_intersect() {
        for i in IdempotentSet::all(3) {
            for j in IdempotentSet::all(3) {
                let meet = IdempotentSet { n: 3, support: i.support.intersection(&j.support).copied().collect() };
                assert_eq!(multiply(&i.to_rook(), &j.to_rook()).unwrap(), meet.to_rook());
            }
        }
    }

    #[test]
    fn green_examples() {
        let e11 = RookElement::unit(2, 1, 1).unwrap();
        let e21 = RookElement::unit(2, 2, 1).unwrap();
        assert!(green_relation(&e11, &e21, GreenRelation::L));
        assert!(!green_relation(&e11, &e21, GreenRelation::R));
        assert!(green_relation(&e11, &e21, GreenRelation::J));
        assert!(green_relation(&e21, &e21, GreenRelation::H));
    }

    #[test]
    fn idempotent_order_examples() {
        let e = |s: &[usize]| RookElement::idempotent(2, s).unwrap();
        assert!(idempotent_order(&e(&[]), &e(&[1])).unwrap());
        assert!(!idempotent_order(&e(&[1]), &e(&[2])).unwrap());
        assert!(!idempotent_order(&e(&[2]), &e(&[1])).unwrap());
        assert!(idempotent_order(&e(&[1]), &e(&[1, 2])).unwrap());
        assert!(matches!(idempotent_order(&rook("2 1"), &e(&[1])), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn cross_section_examples() {
        let c = cross_section(2).unwrap();
        assert_eq!(c.chain.len(), 3);
        assert!(c.is_chain());
        assert_eq!(IdempotentSet::all(2).len(), 4);
        assert_eq!(cross_section(1).unwrap().chain, vec![rook("0"), rook("1")]);
        assert!(cross_section(3).unwrap().conjugates_cover_idempotents().unwrap());
    }

    #[test]
    fn w_e_w_class_sizes() {
        let sizes = |n| w_e_w_decomposition(n).unwrap().iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(sizes(1), vec![1, 1]);
        assert_eq!(sizes(2), vec![1, 4, 2]);
        assert_eq!(sizes(3), vec![1, 9, 18, 6]);
    }

    #[test]
    fn bruhat_examples() {
        for r in enumerate_rook(2).unwrap() {
            assert!(bruhat_leq(&RookElement::zero(2), &r));
        }
        assert!(bruhat_leq(&rook("1 2"), &rook("2 1")));
        assert!(!bruhat_leq(&rook("2 1"), &rook("1 2")));
        // the generic rank-one orbit does not lie in the closure of the upper triangular group
        assert!(!bruhat_leq(&rook("0 1"), &rook("1 2")));
    }

    #[test]
    fn symmetric_counts() {
        assert_eq!(symmetric_rook_elements(2, false).unwrap(), vec![rook("0 0"), rook("0 2"), rook("1 0"), rook("1 2"), rook("2 1")]);
        assert_eq!(symmetric_rook_elements(3, false).unwrap().len(), 14);
        assert_eq!(symmetric_rook_elements(3, true).unwrap().len(), 4);
        assert!(symmetric_rook_elements(4, true).unwrap().iter().all(RookElement::is_fpf_symmetric));
    }

    #[test]
    fn parsing_and_validation() {
        assert!("1 1".parse::<RookElement>().is_err());
        assert!("3 0".parse::<RookElement>().is_err());
        assert_eq!(rook("2 0 1").to_string(), "2 0 1");
        let json = serde_json::to_string(&rook("2 0 1")).unwrap();
        assert_eq!(json, r#"{"map":[2,0,1]}"#);
        assert!(serde_json::from_str::<RookElement>(r#"{"map":[1,1]}"#).is_err());
    }

    #[test]
    fn hasse_of_chain() {
        let chain = cross_section(2).unwrap().chain;
        let covers = hasse_covers(&chain, |a, b| idempotent_order(a, b).unwrap());
        assert_eq!(covers, vec![(0, 1), (1, 2)]);
        assert!(hasse_dot(&chain, &covers).contains("n0 -> n1"));
    }
}
