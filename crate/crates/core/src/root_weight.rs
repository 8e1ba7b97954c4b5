//! Root systems of classical type, exact weights, and Weyl group arithmetic.
//!
//! Type `A_l` lives in `R^(l+1)` with the usual `e_i - e_(i+1)` simple roots,
//! so weights of `SL_n` are the traceless vectors and the extended character
//! `chi = (1/n)(e_1 + ... + e_n)` sits alongside them. Types `B`, `C`, `D`
//! use orthonormal coordinates in `R^l`. The bilinear form is always the
//! standard dot product.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, format_rational, int, parse_rational, QMatrix, Rational};

/// Default cap on the number of states visited by orbit and weight-set enumeration.
pub const ORBIT_GUARD: usize = 1_000_000;

/// Largest rank accepted by Weyl orbit enumeration.
pub const MAX_ORBIT_RANK: usize = 6;

/// An exact vector in the ambient coordinate space of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    /// The coordinate vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.coords[i] = Rational::one();
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coords.iter().map(|x| x * c).collect())
    }

    /// Applies an integer matrix acting on coordinate columns.
    pub fn transform_int(&self, m: &[Vec<i64>]) -> Self {
        Self::new(
            m.iter()
                .map(|row| {
                    row.iter()
                        .zip(&self.coords)
                        .fold(Rational::zero(), |acc, (&a, x)| acc + int(a) * x)
                })
                .collect(),
        )
    }

    pub fn transform(&self, m: &QMatrix) -> Self {
        Self::new(linalg::mat_vec(m, &self.coords))
    }

    /// Coordinates as `p/q` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDescriptor {
    pub family: Family,
    pub rank: usize,
}

/// A classical root system with its simple roots, Cartan matrix and form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RootSystemDescriptor", into = "RootSystemDescriptor")]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Weight>,
    cartan: Vec<Vec<i64>>,
    form: QMatrix,
    roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
}

impl From<RootSystem> for RootSystemDescriptor {
    fn from(rs: RootSystem) -> Self {
        rs.descriptor()
    }
}

impl TryFrom<RootSystemDescriptor> for RootSystem {
    type Error = Error;
    fn try_from(d: RootSystemDescriptor) -> Result<Self> {
        RootSystem::new(d.family, d.rank)
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min_rank = if family == Family::D { 2 } else { 1 };
        if rank < min_rank || rank > 12 {
            return Err(Error::InvalidParams(format!("rank {rank} out of range for type {family}")));
        }
        let ambient_dim = if family == Family::A { rank + 1 } else { rank };
        let e = |i: usize| Weight::unit(ambient_dim, i);
        let mut simple_roots: Vec<Weight> = (0..rank.min(ambient_dim - 1)).map(|i| &e(i) - &e(i + 1)).collect();
        match family {
            Family::A => {}
            Family::B => simple_roots.push(e(rank - 1)),
            Family::C => simple_roots.push(e(rank - 1).scale(&int(2))),
            Family::D => simple_roots.push(&e(rank - 2) + &e(rank - 1)),
        }
        let form = linalg::identity(ambient_dim);
        let mut rs = Self {
            family,
            rank,
            ambient_dim,
            simple_roots,
            cartan: Vec::new(),
            form,
            roots: Vec::new(),
            positive_roots: Vec::new(),
        };
        rs.cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let c = rs.coroot_pairing(&rs.simple_roots[i], &rs.simple_roots[j]);
                        debug_assert!(c.is_integer());
                        c.to_integer().try_into().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        let mut roots = BTreeSet::new();
        for alpha in &rs.simple_roots {
            roots.extend(rs.orbit_unchecked(alpha, ORBIT_GUARD)?);
        }
        rs.roots = roots.into_iter().collect();
        rs.positive_roots = rs
            .roots
            .iter()
            .filter(|r| {
                rs.simple_coordinates(r)
                    .map(|c| c.iter().all(|x| !x.is_negative()))
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        Ok(rs)
    }

    pub fn descriptor(&self) -> RootSystemDescriptor {
        RootSystemDescriptor { family: self.family, rank: self.rank }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &QMatrix {
        &self.form
    }

    /// All roots, in canonical (lexicographic) order.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.binary_search(w).is_ok()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w)
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        linalg::dot(a.coords(), &linalg::mat_vec(&self.form, b.coords()))
    }

    /// `2 (mu, alpha) / (alpha, alpha)`.
    pub fn coroot_pairing(&self, mu: &Weight, alpha: &Weight) -> Rational {
        let two = int(2);
        two * self.inner(mu, alpha) / self.inner(alpha, alpha)
    }

    fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: w.dim() });
        }
        Ok(())
    }

    /// Reflection of `mu` in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Weight, mu: &Weight) -> Result<Weight> {
        self.check_dim(alpha)?;
        self.check_dim(mu)?;
        if self.inner(alpha, alpha).is_zero() {
            return Err(Error::DegenerateRoot);
        }
        Ok(self.reflect_unchecked(alpha, mu))
    }

    fn reflect_unchecked(&self, alpha: &Weight, mu: &Weight) -> Weight {
        mu - &alpha.scale(&self.coroot_pairing(mu, alpha))
    }

    pub fn simple_reflect(&self, i: usize, mu: &Weight) -> Weight {
        self.reflect_unchecked(&self.simple_roots[i], mu)
    }

    /// Matrix of the reflection in `alpha` on ambient coordinates.
    pub fn reflection_matrix(&self, alpha: &Weight) -> QMatrix {
        let n = self.ambient_dim;
        (0..n)
            .map(|i| {
                // column j is the image of e_j; we build rows, so entry (i, j) = s(e_j)_i
                (0..n).map(|j| self.reflect_unchecked(alpha, &Weight::unit(n, j)).coords[i].clone()).collect()
            })
            .collect()
    }

    /// Coordinates of `v` in the basis of simple roots, if `v` lies in their span.
    pub fn simple_coordinates(&self, v: &Weight) -> Option<Vec<Rational>> {
        let gram: QMatrix = self
            .simple_roots
            .iter()
            .map(|a| self.simple_roots.iter().map(|b| self.inner(a, b)).collect())
            .collect();
        let rhs: Vec<Rational> = self.simple_roots.iter().map(|a| self.inner(v, a)).collect();
        let c = linalg::solve(&gram, &rhs)?;
        let back = c
            .iter()
            .zip(&self.simple_roots)
            .fold(Weight::zero(self.ambient_dim), |acc, (ci, a)| &acc + &a.scale(ci));
        (back == *v).then_some(c)
    }

    /// Pairings `<mu, alpha_i^vee>` with the simple coroots.
    pub fn fundamental_coordinates(&self, mu: &Weight) -> Vec<Rational> {
        self.simple_roots.iter().map(|a| self.coroot_pairing(mu, a)).collect()
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        self.fundamental_coordinates(mu).iter().all(|c| !c.is_negative())
    }

    /// Fundamental weights `omega_1..omega_l`, obtained from the inverse Cartan matrix.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let cartan: QMatrix = self.cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let inv = linalg::inverse(&cartan).expect("Cartan matrix of a root system is invertible");
        inv.iter()
            .map(|row| {
                row.iter()
                    .zip(&self.simple_roots)
                    .fold(Weight::zero(self.ambient_dim), |acc, (c, a)| &acc + &a.scale(c))
            })
            .collect()
    }

    /// `sum_i coeffs[i] * omega_(i+1)`.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: coeffs.len() });
        }
        Ok(self
            .fundamental_weights()
            .iter()
            .zip(coeffs)
            .fold(Weight::zero(self.ambient_dim), |acc, (w, &c)| &acc + &w.scale(&int(c))))
    }

    /// The unique dominant weight in `W mu` together with a Weyl element taking `mu` there.
    pub fn dominant_representative(&self, mu: &Weight) -> Result<(Weight, WeylElement)> {
        self.check_dim(mu)?;
        let mut cur = mu.clone();
        let mut word = VecDeque::new();
        while let Some(i) = (0..self.rank).find(|&i| self.coroot_pairing(&cur, &self.simple_roots[i]).is_negative()) {
            cur = self.simple_reflect(i, &cur);
            word.push_front(i);
        }
        let w = WeylElement::from_word(self, word.into_iter().collect());
        Ok((cur, w))
    }

    fn orbit_unchecked(&self, mu: &Weight, limit: usize) -> Result<BTreeSet<Weight>> {
        let mut seen: HashSet<Weight> = HashSet::from([mu.clone()]);
        let mut queue = VecDeque::from([mu.clone()]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank {
                let next = self.simple_reflect(i, &cur);
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return Err(Error::ResourceGuard { what: "Weyl orbit size".into(), limit });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `W mu`, closed under simple reflections, in canonical order.
    pub fn weyl_orbit(&self, mu: &Weight) -> Result<BTreeSet<Weight>> {
        self.weyl_orbit_with_limit(mu, ORBIT_GUARD)
    }

    pub fn weyl_orbit_with_limit(&self, mu: &Weight, limit: usize) -> Result<BTreeSet<Weight>> {
        self.check_dim(mu)?;
        if self.rank > MAX_ORBIT_RANK {
            return Err(Error::Precondition(format!("Weyl orbits are limited to rank <= {MAX_ORBIT_RANK}")));
        }
        self.orbit_unchecked(mu, limit)
    }

    /// True iff `lambda - mu` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        if mu.dim() != self.ambient_dim || lambda.dim() != self.ambient_dim {
            return false;
        }
        match self.simple_coordinates(&(lambda - mu)) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        }
    }

    /// The weights `Pi(lambda)` of the irreducible module of highest weight `lambda`.
    ///
    /// Computed as the smallest saturated set containing `lambda`: for every
    /// member `mu` and positive root `alpha`, the whole `alpha`-string from `mu`
    /// to `s_alpha(mu)` is added.
    pub fn weight_set(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        self.weight_set_with_limit(lambda, ORBIT_GUARD)
    }

    pub fn weight_set_with_limit(&self, lambda: &Weight, limit: usize) -> Result<BTreeSet<Weight>> {
        self.check_dim(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::Precondition(format!("highest weight {lambda} is not dominant")));
        }
        let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(mu) = queue.pop_front() {
            for alpha in &self.positive_roots {
                let m = self.coroot_pairing(&mu, alpha).to_integer();
                let m: i64 = i64::try_from(m).map_err(|_| Error::InvariantViolation("pairing overflow".into()))?;
                let (lo, hi) = if m >= 0 { (1, m) } else { (m, -1) };
                for k in lo..=hi {
                    let next = &mu - &alpha.scale(&int(k));
                    if seen.insert(next.clone()) {
                        if seen.len() > limit {
                            return Err(Error::ResourceGuard { what: "weight set size".into(), limit });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `chi = (1/n)(e_1 + ... + e_n)`; type A only.
    pub fn chi(&self) -> Result<Weight> {
        if self.family != Family::A {
            return Err(Error::UnsupportedFamily(format!("extended coordinates need type A, got {}", self.family)));
        }
        let n = self.ambient_dim as i64;
        Ok(Weight::new(vec![linalg::frac(1, n); self.ambient_dim]))
    }

    /// `{chi + mu : mu in Pi(lambda)}` in ambient coordinates.
    pub fn extended_weights(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        let chi = self.chi()?;
        Ok(self.weight_set(lambda)?.iter().map(|mu| &chi + mu).collect())
    }
}

/// An element of the Weyl group, carried as a word in simple reflections and
/// as a matrix on ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: QMatrix,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self { word: Vec::new(), matrix: linalg::identity(rs.ambient_dim()) }
    }

    /// The product `s_(word[0]) s_(word[1]) ... s_(word[k-1])`.
    pub fn from_word(rs: &RootSystem, word: Vec<usize>) -> Self {
        let matrix = word.iter().fold(linalg::identity(rs.ambient_dim()), |acc, &i| {
            linalg::mat_mul(&acc, &rs.reflection_matrix(&rs.simple_roots()[i]))
        });
        Self { word, matrix }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        mu.transform(&self.matrix)
    }

    /// Applies the word letter by letter (rightmost letter first).
    pub fn apply_word(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        self.word.iter().rev().fold(mu.clone(), |acc, &i| rs.simple_reflect(i, &acc))
    }
}
