//! Small matrices over prime fields, Borel subgroups, the Bruhat factorization
//! `m = u (t r) v`, and exhaustive orbit enumeration.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::involution::{InvolutionSpec, MatrixInvolution};
use crate::renner::RookElement;

/// Primes accepted as field sizes.
pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];
/// Bound on enumerated spaces and groups.
pub const SPACE_GUARD: usize = 1_000_000;

pub fn check_field(q: u8) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&q) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("field size {q} is not one of 2, 3, 5, 7")))
    }
}

/// Residue arithmetic modulo a small prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq {
    q: u8,
    value: u8,
}

impl Fq {
    pub fn new(q: u8, value: i64) -> Result<Self> {
        check_field(q)?;
        Ok(Self { q, value: value.rem_euclid(i64::from(q)) as u8 })
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Self) -> Self {
        Self { q: self.q, value: add(self.q, self.value, o.value) }
    }

    pub fn mul(self, o: Self) -> Self {
        Self { q: self.q, value: mul(self.q, self.value, o.value) }
    }

    pub fn neg(self) -> Self {
        Self { q: self.q, value: neg(self.q, self.value) }
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| Self { q: self.q, value: inv(self.q, self.value) })
    }
}

fn add(q: u8, a: u8, b: u8) -> u8 {
    ((u16::from(a) + u16::from(b)) % u16::from(q)) as u8
}

fn sub(q: u8, a: u8, b: u8) -> u8 {
    add(q, a, neg(q, b))
}

fn mul(q: u8, a: u8, b: u8) -> u8 {
    ((u16::from(a) * u16::from(b)) % u16::from(q)) as u8
}

fn neg(q: u8, a: u8) -> u8 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

fn inv(q: u8, a: u8) -> u8 {
    debug_assert!(a != 0);
    (1..q).find(|&b| mul(q, a, b) == 1).expect("prime field")
}

/// Smallest generator of the multiplicative group.
pub fn primitive_root(q: u8) -> u8 {
    (1..q)
        .find(|&g| {
            let mut x = 1u8;
            (1..q - 1).all(|_| {
                x = mul(q, x, g);
                x != 1
            })
        })
        .unwrap_or(1)
}

/// Square `n x n` matrix over `F_q`, row-major. Ordered lexicographically by entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    q: u8,
    n: usize,
    entries: Vec<u8>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Matrix literal `[[a,b],[c,d]]`.
impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Serialize for FqMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[u8]> = self.rows().collect();
        rows.serialize(s)
    }
}

impl FqMatrix {
    /// Builds a matrix from integer rows, reducing entries mod `q`.
    pub fn new(q: u8, rows: &[Vec<i64>]) -> Result<Self> {
        check_field(q)?;
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.len() });
        }
        let entries = rows.iter().flatten().map(|&x| x.rem_euclid(i64::from(q)) as u8).collect();
        Ok(Self { q, n, entries })
    }

    pub fn zero(q: u8, n: usize) -> Self {
        Self { q, n, entries: vec![0; n * n] }
    }

    pub fn identity(q: u8, n: usize) -> Self {
        let mut m = Self::zero(q, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diagonal(q: u8, diag: &[u8]) -> Self {
        let mut m = Self::zero(q, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d % q);
        }
        m
    }

    /// The 0/1 matrix of a rook element.
    pub fn from_rook(q: u8, r: &RookElement) -> Self {
        let mut m = Self::zero(q, r.n());
        for (i, &j) in r.map().iter().enumerate() {
            if j > 0 {
                m.set(i, j - 1, 1);
            }
        }
        m
    }

    /// Decodes a base-`q` row-major index, the inverse of [`FqMatrix::index`].
    pub fn from_index(q: u8, n: usize, mut index: u64) -> Self {
        let mut entries = vec![0; n * n];
        for e in entries.iter_mut() {
            *e = (index % u64::from(q)) as u8;
            index /= u64::from(q);
        }
        Self { q, n, entries }
    }

    /// Packed row-major base-`q` index.
    pub fn index(&self) -> u64 {
        self.entries.iter().rev().fold(0, |acc, &e| acc * u64::from(self.q) + u64::from(e))
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.n + j] = v % self.q;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.q != o.q {
            return Err(Error::InvalidParams(format!("field sizes differ: {} vs {}", self.q, o.q)));
        }
        if self.n != o.n {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.mul(o))
    }

    /// Product; both operands must share `n` and `q`.
    pub fn mul(&self, o: &Self) -> Self {
        debug_assert!(self.n == o.n && self.q == o.q);
        let (n, q) = (self.n, self.q);
        let mut out = Self::zero(q, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.entries[idx] = add(q, out.entries[idx], mul(q, a, o.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let entries = self.entries.iter().zip(&o.entries).map(|(&a, &b)| add(self.q, a, b)).collect();
        Self { q: self.q, n: self.n, entries }
    }

    pub fn neg(&self) -> Self {
        Self { q: self.q, n: self.n, entries: self.entries.iter().map(|&a| neg(self.q, a)).collect() }
    }

    pub fn scale(&self, c: u8) -> Self {
        Self { q: self.q, n: self.n, entries: self.entries.iter().map(|&a| mul(self.q, a, c % self.q)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.q, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.transpose() == self.neg() && (0..self.n).all(|i| self.get(i, i) == 0)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn is_unipotent_upper(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i) == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    fn row_echelon(&self) -> (Self, usize) {
        let (n, q) = (self.n, self.q);
        let mut a = self.clone();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..n).find(|&i| a.get(i, c) != 0) else { continue };
            for j in 0..n {
                a.entries.swap(r * n + j, p * n + j);
            }
            let pinv = inv(q, a.get(r, c));
            for i in 0..n {
                if i != r && a.get(i, c) != 0 {
                    let f = mul(q, a.get(i, c), pinv);
                    for j in 0..n {
                        let v = sub(q, a.get(i, j), mul(q, f, a.get(r, j)));
                        a.set(i, j, v);
                    }
                }
            }
            r += 1;
        }
        (a, r)
    }

    pub fn inverse(&self) -> Option<Self> {
        let (n, q) = (self.n, self.q);
        let mut a = self.clone();
        let mut b = Self::identity(q, n);
        for c in 0..n {
            let p = (c..n).find(|&i| a.get(i, c) != 0)?;
            for j in 0..n {
                a.entries.swap(c * n + j, p * n + j);
                b.entries.swap(c * n + j, p * n + j);
            }
            let pinv = inv(q, a.get(c, c));
            for j in 0..n {
                a.set(c, j, mul(q, a.get(c, j), pinv));
                b.set(c, j, mul(q, b.get(c, j), pinv));
            }
            for i in 0..n {
                let f = a.get(i, c);
                if i != c && f != 0 {
                    for j in 0..n {
                        let va = sub(q, a.get(i, j), mul(q, f, a.get(c, j)));
                        let vb = sub(q, b.get(i, j), mul(q, f, b.get(c, j)));
                        a.set(i, j, va);
                        b.set(i, j, vb);
                    }
                }
            }
        }
        Some(b)
    }

    /// Rank of the trailing block `A[i.., j..]` (0-based).
    pub fn trailing_rank(&self, i: usize, j: usize) -> usize {
        let (rows, cols) = (self.n - i, self.n - j);
        let size = rows.max(cols);
        let mut block = Self::zero(self.q, size);
        for r in 0..rows {
            for c in 0..cols {
                block.set(r, c, self.get(i + r, j + c));
            }
        }
        block.rank()
    }
}

fn space_size(q: u8, free_entries: usize) -> Option<usize> {
    let size = (q as usize).checked_pow(free_entries.try_into().ok()?)?;
    (size <= SPACE_GUARD).then_some(size)
}

/// All of `Mat_n(F_q)`, in index order.
pub fn enumerate_matrices(n: usize, q: u8) -> Result<Vec<FqMatrix>> {
    check_field(q)?;
    let size = space_size(q, n * n).ok_or(Error::ResourceGuard { what: "matrix space size".into(), limit: SPACE_GUARD })?;
    Ok((0..size as u64).map(|i| FqMatrix::from_index(q, n, i)).collect())
}

/// `Sym_n(F_q)`, sorted.
pub fn enumerate_symmetric(n: usize, q: u8) -> Result<Vec<FqMatrix>> {
    enumerate_patterned(n, q, true)
}

/// `Skew_n(F_q)` (zero diagonal), sorted.
pub fn enumerate_skew(n: usize, q: u8) -> Result<Vec<FqMatrix>> {
    enumerate_patterned(n, q, false)
}

fn enumerate_patterned(n: usize, q: u8, symmetric: bool) -> Result<Vec<FqMatrix>> {
    check_field(q)?;
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| symmetric || i < j).collect();
    let size = space_size(q, slots.len()).ok_or(Error::ResourceGuard { what: "matrix space size".into(), limit: SPACE_GUARD })?;
    let mut out: Vec<FqMatrix> = (0..size)
        .map(|mut idx| {
            let mut m = FqMatrix::zero(q, n);
            for &(i, j) in &slots {
                let v = (idx % q as usize) as u8;
                idx /= q as usize;
                m.set(i, j, v);
                m.set(j, i, if symmetric { v } else { neg(q, v) });
            }
            m
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Number of invertible upper triangular matrices, `(q-1)^n q^(n(n-1)/2)`.
pub fn borel_order(n: usize, q: u8) -> Option<usize> {
    let diag = (q as usize - 1).checked_pow(n as u32)?;
    let upper = (q as usize).checked_pow((n * n.saturating_sub(1) / 2) as u32)?;
    diag.checked_mul(upper)
}

/// Every invertible upper triangular matrix over `F_q`, each exactly once.
pub fn enumerate_borel(n: usize, q: u8) -> Result<impl Iterator<Item = FqMatrix>> {
    check_field(q)?;
    let total = borel_order(n, q)
        .filter(|&t| t <= SPACE_GUARD)
        .ok_or(Error::ResourceGuard { what: "Borel subgroup order".into(), limit: SPACE_GUARD })?;
    let upper: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok((0..total).map(move |mut idx| {
        let mut m = FqMatrix::zero(q, n);
        for i in 0..n {
            m.set(i, i, (idx % (q as usize - 1)) as u8 + 1);
            idx /= q as usize - 1;
        }
        for &(i, j) in &upper {
            m.set(i, j, (idx % q as usize) as u8);
            idx /= q as usize;
        }
        m
    }))
}

/// Generators of the upper triangular Borel subgroup: a primitive root in
/// each diagonal slot, and the elementary matrices `I + E_ij`, `i < j`.
pub fn borel_generators(n: usize, q: u8) -> Vec<FqMatrix> {
    let g = primitive_root(q);
    let mut gens = Vec::new();
    for i in 0..n {
        let mut d = FqMatrix::identity(q, n);
        d.set(i, i, g);
        if g != 1 {
            gens.push(d);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = FqMatrix::identity(q, n);
            e.set(i, j, 1);
            gens.push(e);
        }
    }
    gens
}

/// `m = u (t r) v` with `u`, `v` upper unipotent and `t` diagonal invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelFactorization {
    pub u: FqMatrix,
    pub t: FqMatrix,
    pub r: RookElement,
    pub v: FqMatrix,
}

impl BorelFactorization {
    pub fn product(&self) -> FqMatrix {
        let tr = self.t.mul(&FqMatrix::from_rook(self.t.q(), &self.r));
        self.u.mul(&tr).mul(&self.v)
    }

    /// Checks the echelon constraints: `u` is supported on entries `(k, i)`
    /// with `i` a pivot row, `k < i`, and `k` not a pivot row of an earlier
    /// column; `v` on entries `(j, l)` with `j` a pivot column and `l > j`;
    /// `t` is 1 off the pivot rows.
    pub fn satisfies_patterns(&self) -> bool {
        let n = self.r.n();
        let (u_pattern, v_pattern) = echelon_patterns(&self.r);
        let u_ok = self.u.is_unipotent_upper()
            && (0..n).all(|k| (k + 1..n).all(|i| self.u.get(k, i) == 0 || u_pattern[k][i]));
        let v_ok = self.v.is_unipotent_upper()
            && (0..n).all(|j| (j + 1..n).all(|l| self.v.get(j, l) == 0 || v_pattern[j][l]));
        let t_ok = self.t.is_diagonal()
            && (0..n).all(|i| self.t.get(i, i) != 0 && (self.r.map()[i] > 0 || self.t.get(i, i) == 1));
        u_ok && v_ok && t_ok
    }
}

/// Allowed strictly-upper supports of `u` and `v` for a rook component.
pub fn echelon_patterns(r: &RookElement) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let n = r.n();
    let col_of = |i: usize| r.map()[i].checked_sub(1);
    let mut u = vec![vec![false; n]; n];
    let mut v = vec![vec![false; n]; n];
    for i in 0..n {
        let Some(c) = col_of(i) else { continue };
        for k in 0..i {
            u[k][i] = !matches!(col_of(k), Some(ck) if ck < c);
        }
        for l in c + 1..n {
            v[c][l] = true;
        }
    }
    (u, v)
}

/// Gaussian reduction to a monomial matrix under left and right
/// multiplication by upper unipotent matrices. Columns are scanned left to
/// right; the pivot is the lowest nonzero entry, which then clears its column
/// upward and its row rightward.
pub fn bruhat_factor(m: &FqMatrix) -> BorelFactorization {
    let (n, q) = (m.n(), m.q());
    let mut a = m.clone();
    // a = row_ops * m * col_ops throughout
    let mut row_ops = FqMatrix::identity(q, n);
    let mut col_ops = FqMatrix::identity(q, n);
    let mut map = vec![0; n];
    let mut t = vec![1u8; n];
    for c in 0..n {
        let Some(i) = (0..n).rev().find(|&i| a.get(i, c) != 0) else { continue };
        let p = a.get(i, c);
        let pinv = inv(q, p);
        for k in 0..i {
            let f = mul(q, a.get(k, c), pinv);
            if f != 0 {
                for j in 0..n {
                    a.set(k, j, sub(q, a.get(k, j), mul(q, f, a.get(i, j))));
                    row_ops.set(k, j, sub(q, row_ops.get(k, j), mul(q, f, row_ops.get(i, j))));
                }
            }
        }
        for l in c + 1..n {
            let f = mul(q, a.get(i, l), pinv);
            if f != 0 {
                for k in 0..n {
                    a.set(k, l, sub(q, a.get(k, l), mul(q, f, a.get(k, c))));
                    col_ops.set(k, l, sub(q, col_ops.get(k, l), mul(q, f, col_ops.get(k, c))));
                }
            }
        }
        map[i] = c + 1;
        t[i] = p;
    }
    BorelFactorization {
        u: row_ops.inverse().expect("unipotent"),
        t: FqMatrix::diagonal(q, &t),
        r: RookElement::new(map).expect("one pivot per row and column"),
        v: col_ops.inverse().expect("unipotent"),
    }
}

/// A partition of an enumerated space into orbits. Each orbit is sorted, and
/// orbits are sorted by their minimal element, which serves as the label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<FqMatrix>>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    pub fn labels(&self) -> Vec<&FqMatrix> {
        self.orbits.iter().map(|o| &o[0]).collect()
    }

    /// Map from each point to the index of its orbit.
    pub fn orbit_index(&self) -> HashMap<&FqMatrix, usize> {
        self.orbits.iter().enumerate().flat_map(|(k, o)| o.iter().map(move |m| (m, k))).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of the group generated by `generators` acting on `space`.
///
/// Images under every generator are computed in parallel; the partition is
/// assembled sequentially, so output does not depend on scheduling. When
/// `seeds` is given only orbits meeting a seed are returned.
pub fn orbit_enumerate<G, F>(
    space: &[FqMatrix],
    generators: &[G],
    action: F,
    seeds: Option<&[FqMatrix]>,
) -> Result<OrbitPartition>
where
    G: Sync,
    F: Fn(&G, &FqMatrix) -> FqMatrix + Sync,
{
    if space.len() > SPACE_GUARD {
        return Err(Error::ResourceGuard { what: "orbit space size".into(), limit: SPACE_GUARD });
    }
    let index: HashMap<&FqMatrix, usize> = space.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let edges: Vec<Vec<usize>> = space
        .par_iter()
        .map(|m| {
            generators
                .iter()
                .map(|g| {
                    let image = action(g, m);
                    index.get(&image).copied().ok_or_else(|| {
                        Error::Precondition(format!("action maps {m} to {image}, outside the space"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..space.len()).collect();
    for (i, targets) in edges.iter().enumerate() {
        for &j in targets {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<FqMatrix>> = HashMap::new();
    for i in 0..space.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(space[i].clone());
    }
    let mut orbits: Vec<Vec<FqMatrix>> = groups
        .into_values()
        .map(|mut o| {
            o.sort();
            o
        })
        .collect();
    orbits.sort();
    if let Some(seeds) = seeds {
        orbits.retain(|o| seeds.iter().any(|s| o.binary_search(s).is_ok()));
    }
    Ok(OrbitPartition { orbits })
}

/// `(b1, b2) . m = b1 m b2^-1`.
pub fn two_sided_action(pair: &(FqMatrix, FqMatrix), m: &FqMatrix) -> FqMatrix {
    let b2_inv = pair.1.inverse().expect("group element");
    pair.0.mul(m).mul(&b2_inv)
}

/// Generators of `B x B`, as pairs with one identity component.
pub fn borel_pair_generators(n: usize, q: u8) -> Vec<(FqMatrix, FqMatrix)> {
    let id = FqMatrix::identity(q, n);
    let gens = borel_generators(n, q);
    gens.iter()
        .map(|g| (g.clone(), id.clone()))
        .chain(gens.iter().map(|g| (id.clone(), g.clone())))
        .collect()
}

/// `b . a = b a b^T`.
pub fn congruence_action(b: &FqMatrix, a: &FqMatrix) -> FqMatrix {
    b.mul(a).mul(&b.transpose())
}

/// `J = diag(J_2, ..., J_2)` with `J_2 = [[0, 1], [-1, 0]]`.
pub fn standard_symplectic(q: u8, n: usize) -> FqMatrix {
    let mut j = FqMatrix::zero(q, n);
    for k in 0..n / 2 {
        j.set(2 * k, 2 * k + 1, 1);
        j.set(2 * k + 1, 2 * k, q - 1);
    }
    j
}

fn realization(inv: &InvolutionSpec, m: &FqMatrix) -> Result<MatrixInvolution> {
    let kind = inv.theta0().ok_or_else(|| Error::Unrealized(inv.family().to_string()))?;
    let size = match kind {
        MatrixInvolution::Transpose => inv.params()[0],
        MatrixInvolution::Symplectic => 2 * inv.params()[0],
    };
    if m.n() != size {
        return Err(Error::DimensionMismatch { expected: size, got: m.n() });
    }
    Ok(kind)
}

/// The antiinvolution `theta_an`, extended from the group to all matrices.
pub fn theta_an(inv: &InvolutionSpec, m: &FqMatrix) -> Result<FqMatrix> {
    Ok(match realization(inv, m)? {
        MatrixInvolution::Transpose => m.transpose(),
        MatrixInvolution::Symplectic => {
            let j = standard_symplectic(m.q(), m.n());
            j.mul(&m.transpose()).mul(&j).neg()
        }
    })
}

/// `b * m = b m theta_an(b)`.
pub fn twisted_action(b: &FqMatrix, m: &FqMatrix, inv: &InvolutionSpec) -> Result<FqMatrix> {
    b.check_same(m)?;
    Ok(b.mul(m).mul(&theta_an(inv, b)?))
}
