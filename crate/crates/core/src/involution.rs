//! Classical involutions, their action on characters, restricted roots and
//! special weights.
//!
//! Each [`InvolutionSpec`] carries `theta*` as an integer matrix on ambient
//! weight coordinates, chosen relative to a maximally split torus:
//!
//! | family | root system | `theta*` |
//! |--------|-------------|----------|
//! | AI     | `A_(n-1)`   | `-id` |
//! | AII    | `A_(2n-1)`  | `e_(2i-1) <-> -e_(2i)` |
//! | AIII   | `A_(p+q-1)` | `e_i <-> e_(n+1-i)` for `i <= min(p, q)` |
//! | CI     | `C_n`       | `-id` |
//! | CII    | `C_(p+q)`   | `e_(2i-1) <-> -e_(2i)` for `i <= min(p, q)`, identity beyond |
//! | DIII   | `D_n`       | `e_(2i-1) <-> -e_(2i)` for `i <= n/2`, `e_n` fixed for odd `n` |
//! | BDI    | `B_k`/`D_k` | `-1` on the first `min(p, q)` coordinates, `+1` after |
//!
//! None of these are trusted by construction: [`InvolutionSpec::validate`]
//! checks that `theta*` squares to the identity, permutes the roots and
//! preserves the form.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, int, QMatrix, Rational};
use crate::root_weight::{Family, RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvolutionFamily {
    AI,
    AII,
    AIII,
    CI,
    CII,
    DIII,
    BDI,
    /// `theta* = id` on `A_(n-1)`; only useful as a degenerate test case.
    Identity,
}

impl fmt::Display for InvolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for InvolutionFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "AI" => Self::AI,
            "AII" => Self::AII,
            "AIII" => Self::AIII,
            "CI" => Self::CI,
            "CII" => Self::CII,
            "DIII" => Self::DIII,
            "BDI" => Self::BDI,
            "IDENTITY" => Self::Identity,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

impl InvolutionFamily {
    /// Families parametrized by a pair `(p, q)` rather than a single `n`.
    pub fn takes_pair(self) -> bool {
        matches!(self, Self::AIII | Self::CII | Self::BDI)
    }
}

/// Matrix-group realization of an involution, through its antiinvolution
/// `theta_an(x) = theta(x)^(-1)` extended to all matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixInvolution {
    /// `theta(g) = (g^-1)^T`, so `theta_an(x) = x^T`.
    Transpose,
    /// `theta(g) = -J (g^-1)^T J` with `J = diag(J_2, ..., J_2)`, so `theta_an(x) = -J x^T J`.
    Symplectic,
}

/// A classical symmetric pair at the level of characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSpec {
    family: InvolutionFamily,
    params: Vec<usize>,
    theta_star: Vec<Vec<i64>>,
    theta0: Option<MatrixInvolution>,
    root_system: RootSystem,
}

#[derive(Serialize, Deserialize)]
struct InvolutionRecord {
    family: InvolutionFamily,
    params: Vec<usize>,
    theta_star: Vec<Vec<i64>>,
}

impl Serialize for InvolutionSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InvolutionRecord { family: self.family, params: self.params.clone(), theta_star: self.theta_star.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvolutionSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = InvolutionRecord::deserialize(d)?;
        let spec = InvolutionSpec::from_params(rec.family, &rec.params).map_err(D::Error::custom)?;
        if spec.theta_star != rec.theta_star {
            return Err(D::Error::custom("theta_star does not match the catalog entry for these parameters"));
        }
        Ok(spec)
    }
}

fn neg_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect()).collect()
}

fn int_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `e_(2i) <-> -e_(2i+1)` (0-based) for `i < pairs`, identity on the rest.
fn pair_swap_negate(n: usize, pairs: usize) -> Vec<Vec<i64>> {
    let mut m = int_identity(n);
    for i in 0..pairs {
        let (a, b) = (2 * i, 2 * i + 1);
        m[a][a] = 0;
        m[b][b] = 0;
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

impl InvolutionSpec {
    /// `SL_n / SO_n`.
    pub fn ai(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("AI needs n >= 2".into()));
        }
        Self::build(InvolutionFamily::AI, vec![n], RootSystem::new(Family::A, n - 1)?, neg_identity(n), Some(MatrixInvolution::Transpose))
    }

    /// `SL_2n / Sp_2n`.
    pub fn aii(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("AII needs n >= 2 (rank l = n - 1 must be positive)".into()));
        }
        let dim = 2 * n;
        Self::build(
            InvolutionFamily::AII,
            vec![n],
            RootSystem::new(Family::A, dim - 1)?,
            pair_swap_negate(dim, n),
            Some(MatrixInvolution::Symplectic),
        )
    }

    /// `SL_(p+q) / S(GL_p x GL_q)`.
    pub fn aiii(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParams("AIII needs p, q >= 1".into()));
        }
        let n = p + q;
        let l = p.min(q);
        let sigma = |i: usize| if i < l || i >= n - l { n - 1 - i } else { i };
        let m = (0..n).map(|r| (0..n).map(|c| i64::from(sigma(c) == r)).collect()).collect();
        Self::build(InvolutionFamily::AIII, vec![p, q], RootSystem::new(Family::A, n - 1)?, m, None)
    }

    /// `Sp_2n / GL_n`.
    pub fn ci(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("CI needs n >= 1".into()));
        }
        Self::build(InvolutionFamily::CI, vec![n], RootSystem::new(Family::C, n)?, neg_identity(n), None)
    }

    /// `Sp_2(p+q) / (Sp_2p x Sp_2q)`.
    pub fn cii(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParams("CII needs p, q >= 1".into()));
        }
        let n = p + q;
        Self::build(InvolutionFamily::CII, vec![p, q], RootSystem::new(Family::C, n)?, pair_swap_negate(n, p.min(q)), None)
    }

    /// `SO_2n / GL_n`.
    pub fn diii(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("DIII needs n >= 2".into()));
        }
        Self::build(InvolutionFamily::DIII, vec![n], RootSystem::new(Family::D, n)?, pair_swap_negate(n, n / 2), None)
    }

    /// `SO_(p+q) / S(O_p x O_q)`.
    pub fn bdi(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 || p + q < 3 {
            return Err(Error::InvalidParams("BDI needs p, q >= 1 and p + q >= 3".into()));
        }
        let n = p + q;
        let k = n / 2;
        if n % 2 == 0 && k < 2 {
            return Err(Error::InvalidParams("BDI with even n needs n >= 4".into()));
        }
        let family = if n % 2 == 1 { Family::B } else { Family::D };
        let l = p.min(q);
        let m = (0..k)
            .map(|i| (0..k).map(|j| if i != j { 0 } else if i < l { -1 } else { 1 }).collect())
            .collect();
        Self::build(InvolutionFamily::BDI, vec![p, q], RootSystem::new(family, k)?, m, None)
    }

    /// The identity involution on `A_(n-1)`.
    pub fn identity(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("identity spec needs n >= 2".into()));
        }
        Self::build(InvolutionFamily::Identity, vec![n], RootSystem::new(Family::A, n - 1)?, int_identity(n), None)
    }

    pub fn from_params(family: InvolutionFamily, params: &[usize]) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("{family} expects {} parameter(s), got {params:?}", if family.takes_pair() { 2 } else { 1 }));
        match (family, params) {
            (InvolutionFamily::AI, &[n]) => Self::ai(n),
            (InvolutionFamily::AII, &[n]) => Self::aii(n),
            (InvolutionFamily::AIII, &[p, q]) => Self::aiii(p, q),
            (InvolutionFamily::CI, &[n]) => Self::ci(n),
            (InvolutionFamily::CII, &[p, q]) => Self::cii(p, q),
            (InvolutionFamily::DIII, &[n]) => Self::diii(n),
            (InvolutionFamily::BDI, &[p, q]) => Self::bdi(p, q),
            (InvolutionFamily::Identity, &[n]) => Self::identity(n),
            _ => Err(bad()),
        }
    }

    /// Every classical family instance whose root system has rank at most `max_rank`.
    pub fn catalog(max_rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 1..=max_rank + 1 {
            if n >= 2 && n - 1 <= max_rank {
                out.extend(Self::ai(n));
            }
            if 2 * n - 1 <= max_rank {
                out.extend(Self::aii(n));
            }
            if n <= max_rank {
                out.extend(Self::ci(n));
                out.extend(Self::diii(n));
            }
        }
        for p in 1..=max_rank + 1 {
            for q in p..=2 * max_rank + 1 {
                if p + q - 1 <= max_rank {
                    out.extend(Self::aiii(p, q));
                }
                if p + q <= max_rank {
                    out.extend(Self::cii(p, q));
                }
                if (p + q) / 2 <= max_rank {
                    out.extend(Self::bdi(p, q));
                }
            }
        }
        out.sort_by(|a, b| (a.family, &a.params).cmp(&(b.family, &b.params)));
        out
    }

    fn build(
        family: InvolutionFamily,
        params: Vec<usize>,
        root_system: RootSystem,
        theta_star: Vec<Vec<i64>>,
        theta0: Option<MatrixInvolution>,
    ) -> Result<Self> {
        let spec = Self { family, params, theta_star, theta0, root_system };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks `theta*^2 = id`, that `theta*` permutes the roots, and that it preserves the form.
    pub fn validate(&self) -> Result<()> {
        let n = self.root_system.ambient_dim();
        if self.theta_star.len() != n || self.theta_star.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: self.theta_star.len() });
        }
        let m = &self.theta_star;
        for i in 0..n {
            for j in 0..n {
                let sq: i64 = (0..n).map(|k| m[i][k] * m[k][j]).sum();
                if sq != i64::from(i == j) {
                    return Err(Error::InvariantViolation(format!("{}: theta* does not square to the identity", self.label())));
                }
            }
        }
        let rs = &self.root_system;
        let images: BTreeSet<Weight> = rs.roots().iter().map(|a| self.apply(a)).collect();
        if images.len() != rs.roots().len() || images.iter().any(|a| !rs.is_root(a)) {
            return Err(Error::InvariantViolation(format!("{}: theta* does not permute the roots", self.label())));
        }
        let basis: Vec<Weight> = (0..n).map(|i| Weight::unit(n, i)).collect();
        for a in &basis {
            for b in &basis {
                if rs.inner(&self.apply(a), &self.apply(b)) != rs.inner(a, b) {
                    return Err(Error::InvariantViolation(format!("{}: theta* does not preserve the form", self.label())));
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> InvolutionFamily {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn theta_star(&self) -> &[Vec<i64>] {
        &self.theta_star
    }

    pub fn theta0(&self) -> Option<MatrixInvolution> {
        self.theta0
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    /// Short label such as `AIII(1,3)` or `AII(2)`.
    pub fn label(&self) -> String {
        let p: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        format!("{}({})", self.family, p.join(","))
    }

    /// The symmetric variety this spec describes, e.g. `SL_4/Sp_4`.
    pub fn variety(&self) -> String {
        let p = &self.params;
        match self.family {
            InvolutionFamily::AI => format!("SL_{}/SO_{}", p[0], p[0]),
            InvolutionFamily::AII => format!("SL_{}/Sp_{}", 2 * p[0], 2 * p[0]),
            InvolutionFamily::AIII => format!("SL_{}/S(GL_{} x GL_{})", p[0] + p[1], p[0], p[1]),
            InvolutionFamily::CI => format!("Sp_{}/GL_{}", 2 * p[0], p[0]),
            InvolutionFamily::CII => format!("Sp_{}/(Sp_{} x Sp_{})", 2 * (p[0] + p[1]), 2 * p[0], 2 * p[1]),
            InvolutionFamily::DIII => format!("SO_{}/GL_{}", 2 * p[0], p[0]),
            InvolutionFamily::BDI => format!("SO_{}/S(O_{} x O_{})", p[0] + p[1], p[0], p[1]),
            InvolutionFamily::Identity => format!("SL_{}/SL_{}", p[0], p[0]),
        }
    }

    /// `theta*(chi)`.
    pub fn apply(&self, chi: &Weight) -> Weight {
        chi.transform_int(&self.theta_star)
    }

    fn check_compatible(&self, rs: &RootSystem) -> Result<()> {
        if rs.ambient_dim() != self.theta_star.len() {
            return Err(Error::DimensionMismatch { expected: self.theta_star.len(), got: rs.ambient_dim() });
        }
        Ok(())
    }

    /// Fundamental-weight coefficients of the spherical generators, as printed
    /// in the classical table (including its misprinted rows).
    pub fn printed_generator_coefficients(&self) -> Vec<Vec<i64>> {
        let rank = self.root_system.rank();
        let p = &self.params;
        let mut gens = GeneratorList::new(rank);
        match self.family {
            InvolutionFamily::CII => {
                let l = p[0].min(p[1]);
                for i in 1..=2 * l {
                    gens.push(&[(i, 2)]);
                }
                gens.into_inner()
            }
            InvolutionFamily::BDI => {
                let n = p[0] + p[1];
                let k = n / 2;
                let l = p[0].min(p[1]);
                if n % 2 == 0 {
                    if l < k {
                        (1..=l).for_each(|i| gens.push(&[(i, 2)]));
                    } else {
                        (1..l).for_each(|i| gens.push(&[(i, 2)]));
                        gens.push(&[(l, 4)]);
                    }
                } else if l + 1 < k {
                    (1..=l).for_each(|i| gens.push(&[(i, 2)]));
                } else if l + 1 == k {
                    (1..k - 1).for_each(|i| gens.push(&[(i, 2)]));
                    gens.push(&[(k - 1, 2), (k, 2)]);
                } else {
                    (1..=k).for_each(|i| gens.push(&[(i, 2)]));
                }
                gens.into_inner()
            }
            _ => self.generator_coefficients(),
        }
    }

    /// Fundamental-weight coefficients of the generators of the semigroup of
    /// spherical weights.
    ///
    /// Agrees with the classical table except in two places where the printed
    /// generators are not `theta`-special: the CII row (generators are
    /// `omega_2, omega_4, ..., omega_2l`) and the `l = k - 1` case of BDI, whose
    /// even and odd sub-rows are interchanged in print.
    pub fn generator_coefficients(&self) -> Vec<Vec<i64>> {
        let rank = self.root_system.rank();
        let p = &self.params;
        let mut gens = GeneratorList::new(rank);
        match self.family {
            InvolutionFamily::AI | InvolutionFamily::CI => (1..=rank).for_each(|i| gens.push(&[(i, 2)])),
            InvolutionFamily::AII => (1..p[0]).for_each(|i| gens.push(&[(2 * i, 1)])),
            InvolutionFamily::AIII => {
                let n = p[0] + p[1];
                (1..=p[0].min(p[1])).for_each(|i| gens.push(&[(i, 1), (n - i, 1)]));
            }
            InvolutionFamily::CII => (1..=p[0].min(p[1])).for_each(|i| gens.push(&[(2 * i, 1)])),
            InvolutionFamily::DIII => {
                let n = p[0];
                if n % 2 == 0 {
                    (1..n / 2).for_each(|i| gens.push(&[(2 * i, 1)]));
                    gens.push(&[(n, 2)]);
                } else {
                    (1..(n - 1) / 2).for_each(|i| gens.push(&[(2 * i, 1)]));
                    gens.push(&[(n - 1, 1), (n, 1)]);
                }
            }
            InvolutionFamily::BDI => {
                let n = p[0] + p[1];
                let k = n / 2;
                let l = p[0].min(p[1]);
                if l < k {
                    if n % 2 == 0 && l + 1 == k {
                        (1..k - 1).for_each(|i| gens.push(&[(i, 2)]));
                        gens.push(&[(k - 1, 2), (k, 2)]);
                    } else {
                        (1..=l).for_each(|i| gens.push(&[(i, 2)]));
                    }
                } else {
                    return self.printed_generator_coefficients();
                }
            }
            InvolutionFamily::Identity => {}
        }
        gens.into_inner()
    }
}

/// Accumulates generators as fundamental-weight coefficient vectors.
struct GeneratorList {
    rank: usize,
    gens: Vec<Vec<i64>>,
}

impl GeneratorList {
    fn new(rank: usize) -> Self {
        Self { rank, gens: Vec::new() }
    }

    /// `terms` are `(index, coefficient)` pairs with 1-based indices.
    fn push(&mut self, terms: &[(usize, i64)]) {
        let mut v = vec![0; self.rank];
        for &(i, c) in terms {
            v[i - 1] += c;
        }
        self.gens.push(v);
    }

    fn into_inner(self) -> Vec<Vec<i64>> {
        self.gens
    }
}

/// Roots fixed by `theta*` and the rest.
pub fn phi_decomposition(rs: &RootSystem, inv: &InvolutionSpec) -> Result<(BTreeSet<Weight>, BTreeSet<Weight>)> {
    inv.check_compatible(rs)?;
    Ok(rs.roots().iter().cloned().partition(|a| inv.apply(a) == *a))
}

/// True iff `theta*` sends every positive non-fixed root to a negative root.
pub fn check_positive_system(rs: &RootSystem, inv: &InvolutionSpec) -> bool {
    first_positivity_failure(rs, inv).is_none()
}

fn first_positivity_failure(rs: &RootSystem, inv: &InvolutionSpec) -> Option<Weight> {
    if inv.check_compatible(rs).is_err() {
        return rs.positive_roots().first().cloned();
    }
    rs.positive_roots().iter().find(|a| {
        let image = inv.apply(a);
        image != **a && rs.is_positive_root(&image)
    }).cloned()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedRootData {
    pub phi0: Vec<Weight>,
    pub phi1: Vec<Weight>,
    /// Indices (0-based) of simple roots fixed by `theta*`.
    pub delta0: Vec<usize>,
    /// Indices of the remaining simple roots; the first `rank_l` have pairwise
    /// distinct differences `alpha - theta*(alpha)`.
    pub delta1: Vec<usize>,
    pub restricted_simples: Vec<Weight>,
    pub rank_l: usize,
}

pub fn restricted_simple_roots(rs: &RootSystem, inv: &InvolutionSpec) -> Result<RestrictedRootData> {
    let (phi0, phi1) = phi_decomposition(rs, inv)?;
    if let Some(bad) = first_positivity_failure(rs, inv) {
        return Err(Error::PositivityGate(bad.to_string()));
    }
    let half = linalg::frac(1, 2);
    let (delta0, rest): (Vec<usize>, Vec<usize>) =
        (0..rs.rank()).partition(|&i| phi0.contains(&rs.simple_roots()[i]));
    let mut leading = Vec::new();
    let mut trailing = Vec::new();
    let mut restricted_simples: Vec<Weight> = Vec::new();
    for i in rest {
        let a = &rs.simple_roots()[i];
        let bar = (a - &inv.apply(a)).scale(&half);
        if restricted_simples.contains(&bar) {
            trailing.push(i);
        } else {
            restricted_simples.push(bar);
            leading.push(i);
        }
    }
    let rank_l = restricted_simples.len();
    leading.extend(trailing);
    Ok(RestrictedRootData {
        phi0: phi0.into_iter().collect(),
        phi1: phi1.into_iter().collect(),
        delta0,
        delta1: leading,
        restricted_simples,
        rank_l,
    })
}

/// A dominant weight is special when `theta*(lambda) = -lambda`.
pub fn is_special(inv: &InvolutionSpec, lambda: &Weight) -> Result<bool> {
    let rs = inv.root_system();
    if lambda.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: rs.ambient_dim(), got: lambda.dim() });
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant")));
    }
    Ok(inv.apply(lambda) == -lambda)
}

/// `theta_an*(chi) = -theta*(chi)`.
pub fn theta_an_star(inv: &InvolutionSpec, chi: &Weight) -> Weight {
    -&inv.apply(chi)
}

/// Generators of the semigroup of spherical weights, as weights.
pub fn spherical_generators(inv: &InvolutionSpec) -> Vec<Weight> {
    let rs = inv.root_system();
    inv.generator_coefficients()
        .iter()
        .map(|c| rs.weight_from_fundamental(c).expect("generator has rank-many coefficients"))
        .collect()
}

/// True iff `theta_an*` maps `Pi(lambda)` onto itself.
pub fn check_weight_set_stability(rs: &RootSystem, inv: &InvolutionSpec, lambda: &Weight) -> Result<bool> {
    inv.check_compatible(rs)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant")));
    }
    if !is_special(inv, lambda)? {
        return Err(Error::NotSpecial);
    }
    let weights = rs.weight_set(lambda)?;
    let image: BTreeSet<Weight> = weights.iter().map(|mu| theta_an_star(inv, mu)).collect();
    Ok(image == weights)
}

/// `chi - theta*(chi)`.
pub fn twisted_weight(inv: &InvolutionSpec, chi: &Weight) -> Weight {
    chi - &inv.apply(chi)
}

/// Checks that every twisted weight of `Pi(lambda)` has the form
/// `2 (lambda - sum_i n_i abar_i)` with rational `n_i >= 0`, i.e. that
/// `2 lambda - twisted_weight(mu)` lies in the nonnegative cone over the
/// doubled restricted simple roots.
pub fn twisted_weights_in_cone(rs: &RootSystem, inv: &InvolutionSpec, lambda: &Weight) -> Result<bool> {
    if !is_special(inv, lambda)? {
        return Err(Error::NotSpecial);
    }
    let data = restricted_simple_roots(rs, inv)?;
    let gens: Vec<Weight> = data.restricted_simples.iter().map(|a| a.scale(&int(2))).collect();
    let gram: QMatrix = gens.iter().map(|a| gens.iter().map(|b| rs.inner(a, b)).collect()).collect();
    let inv_gram = linalg::inverse(&gram)
        .ok_or_else(|| Error::InvariantViolation("restricted simple roots are linearly dependent".into()))?;
    let two_lambda = lambda.scale(&int(2));
    for mu in rs.weight_set(lambda)? {
        let target = &two_lambda - &twisted_weight(inv, &mu);
        let rhs: Vec<Rational> = gens.iter().map(|g| rs.inner(&target, g)).collect();
        let coeffs = linalg::mat_vec(&inv_gram, &rhs);
        let back = coeffs
            .iter()
            .zip(&gens)
            .fold(Weight::zero(rs.ambient_dim()), |acc, (c, g)| &acc + &g.scale(c));
        if back != target || coeffs.iter().any(Signed::is_negative) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the `-1` eigenspace of `theta*` restricted to the span of the roots.
pub fn split_rank(inv: &InvolutionSpec) -> usize {
    let rs = inv.root_system();
    // kernel of theta* + id on the span of the simple roots
    let images: QMatrix = rs.simple_roots().iter().map(|a| (&inv.apply(a) + a).coords().to_vec()).collect();
    rs.rank() - linalg::rank(&images)
}

impl RestrictedRootData {
    pub fn is_consistent(&self, rs: &RootSystem) -> bool {
        let total = self.phi0.len() + self.phi1.len() == rs.roots().len();
        let disjoint = self.phi0.iter().all(|a| !self.phi1.contains(a));
        let distinct: BTreeSet<&Weight> = self.restricted_simples.iter().collect();
        total && disjoint && distinct.len() == self.restricted_simples.len() && self.restricted_simples.iter().all(|a| !a.is_zero())
    }
}
