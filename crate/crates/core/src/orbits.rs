//! Borel orbits on symmetric and skew-symmetric matrices, their rank-control
//! invariants, and the partial involutions that parametrize them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{
    borel_generators, check_field, congruence_action, enumerate_matrices, enumerate_skew, enumerate_symmetric,
    orbit_enumerate, theta_an, FqMatrix,
};
use crate::involution::InvolutionSpec;
use crate::renner::{symmetric_rook_elements, RookElement};

/// Largest `n` accepted by [`verify_borel_meets_closure_n`].
pub const MAX_CLOSURE_N: usize = 3;

/// `tau(m) = m theta_an(m)`.
pub fn tau(m: &FqMatrix, inv: &InvolutionSpec) -> Result<FqMatrix> {
    Ok(m.mul(&theta_an(inv, m)?))
}

/// Fixed points of `theta_an`.
pub fn is_in_mq(m: &FqMatrix, inv: &InvolutionSpec) -> Result<bool> {
    Ok(theta_an(inv, m)? == *m)
}

/// Membership in `{m : m theta_an(m) = 1}`.
pub fn is_in_symmetric_submonoid(m: &FqMatrix, inv: &InvolutionSpec) -> Result<bool> {
    Ok(tau(m, inv)? == FqMatrix::identity(m.q(), m.n()))
}

/// `theta(g) = theta_an(g)^-1` on invertible matrices.
pub fn theta(g: &FqMatrix, inv: &InvolutionSpec) -> Result<FqMatrix> {
    theta_an(inv, g)?
        .inverse()
        .ok_or_else(|| Error::Precondition(format!("{g} is not invertible")))
}

/// Every `m` in `Mat_n(F_q)` with `m theta_an(m) = 1`, sorted.
pub fn symmetric_submonoid(inv: &InvolutionSpec, n: usize, q: u8) -> Result<Vec<FqMatrix>> {
    let mut out = Vec::new();
    for m in enumerate_matrices(n, q)? {
        if is_in_symmetric_submonoid(&m, inv)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// `rho[i][j] = rank A[i.., j..]` (0-based), with a zero row and column appended.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RankControl {
    pub rho: Vec<Vec<usize>>,
}

impl RankControl {
    pub fn n(&self) -> usize {
        self.rho.len().saturating_sub(1)
    }

    /// Weakly decreasing in both indices, steps of at most one, zero border.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        let border = (0..=n).all(|k| self.rho[n][k] == 0 && self.rho[k][n] == 0);
        let steps = (0..n).all(|i| {
            (0..=n).all(|j| {
                let down = self.rho[i][j].checked_sub(self.rho[i + 1][j]);
                let right = self.rho[j][i].checked_sub(self.rho[j][i + 1]);
                matches!(down, Some(0 | 1)) && matches!(right, Some(0 | 1))
            })
        });
        border && steps
    }

    /// Inclusion-exclusion `rho[i][j] - rho[i+1][j] - rho[i][j+1] + rho[i+1][j+1]`.
    pub fn second_difference(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let r = |i: usize, j: usize| self.rho[i][j] as i64;
        (0..n)
            .map(|i| (0..n).map(|j| r(i, j) - r(i + 1, j) - r(i, j + 1) + r(i + 1, j + 1)).collect())
            .collect()
    }
}

impl fmt::Display for RankControl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rho
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn rank_control(a: &FqMatrix) -> RankControl {
    let n = a.n();
    let mut rho = vec![vec![0; n + 1]; n + 1];
    for (i, row) in rho.iter_mut().enumerate().take(n) {
        for (j, x) in row.iter_mut().enumerate().take(n) {
            *x = a.trailing_rank(i, j);
        }
    }
    RankControl { rho }
}

fn invariant_to_rook(rho: &RankControl, fpf: bool) -> Result<RookElement> {
    let diff = rho.second_difference();
    let n = rho.n();
    let mut map = vec![0; n];
    for (i, row) in diff.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            match d {
                0 => {}
                1 if map[i] == 0 => map[i] = j + 1,
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "rank control {rho} has inclusion-exclusion entry {d} at ({i}, {j})"
                    )))
                }
            }
        }
    }
    let pi = RookElement::new(map).map_err(|e| Error::InvariantViolation(format!("rank control {rho}: {e}")))?;
    if !pi.is_symmetric() {
        return Err(Error::InvariantViolation(format!("rank control {rho} gives the non-symmetric {pi}")));
    }
    if fpf && !pi.is_fpf_symmetric() {
        return Err(Error::InvariantViolation(format!("rank control {rho} gives {pi}, which has a fixed point")));
    }
    Ok(pi)
}

/// The partial involution encoded by the rank control of a symmetric matrix.
pub fn invariant_to_partial_involution(rho: &RankControl) -> Result<RookElement> {
    invariant_to_rook(rho, false)
}

/// The partial fixed-point-free involution encoded by the rank control of a skew matrix.
pub fn invariant_to_partial_fpf(rho: &RankControl) -> Result<RookElement> {
    invariant_to_rook(rho, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymForm {
    Sym,
    Skew,
}

impl fmt::Display for SymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymForm::Sym => "sym",
            SymForm::Skew => "skew",
        })
    }
}

impl FromStr for SymForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sym" | "symmetric" => Ok(Self::Sym),
            "skew" | "alternating" => Ok(Self::Skew),
            other => Err(Error::Parse(format!("unknown form {other:?}; expected sym or skew"))),
        }
    }
}

impl SymForm {
    fn space(self, n: usize, q: u8) -> Result<Vec<FqMatrix>> {
        match self {
            SymForm::Sym => enumerate_symmetric(n, q),
            SymForm::Skew => enumerate_skew(n, q),
        }
    }

    fn contains(self, m: &FqMatrix) -> bool {
        match self {
            SymForm::Sym => m.is_symmetric(),
            SymForm::Skew => m.is_skew(),
        }
    }

    fn parametrizers(self, n: usize) -> Result<Vec<RookElement>> {
        symmetric_rook_elements(n, self == SymForm::Skew)
    }

    fn to_rook(self, rho: &RankControl) -> Result<RookElement> {
        invariant_to_rook(rho, self == SymForm::Skew)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitWitness {
    /// Minimal element of the orbit.
    pub label: FqMatrix,
    pub size: usize,
    pub parametrizer: RookElement,
    /// An orbit element of the form `t pi` with `t` diagonal invertible, when one exists.
    pub normal_form: Option<FqMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymOrbitReport {
    pub n: usize,
    pub q: u8,
    pub form: SymForm,
    pub orbit_count: usize,
    pub invariant_values: usize,
    pub expected_parametrizer_count: usize,
    pub witnesses: Vec<OrbitWitness>,
}

impl SymOrbitReport {
    /// Skew: orbits match parametrizers. Sym: invariant values match
    /// parametrizers, since square classes split orbits further over `F_q`.
    pub fn matches(&self) -> bool {
        match self.form {
            SymForm::Skew => self.orbit_count == self.expected_parametrizer_count,
            SymForm::Sym => self.invariant_values == self.expected_parametrizer_count,
        }
    }

    pub fn csv_header() -> &'static str {
        "space,group,q,n,orbit_count,invariant_values,expected,match"
    }

    pub fn csv_row(&self) -> String {
        let space = match self.form {
            SymForm::Sym => "Sym",
            SymForm::Skew => "Skew",
        };
        format!(
            "{space}_{n}(F_{q}),B(F_{q}) congruence,{q},{n},{},{},{},{}",
            self.orbit_count,
            self.invariant_values,
            self.expected_parametrizer_count,
            self.matches(),
            n = self.n,
            q = self.q
        )
    }
}

fn check_odd_field(q: u8) -> Result<()> {
    check_field(q)?;
    if q == 2 {
        return Err(Error::InvalidParams("congruence censuses need an odd field size".into()));
    }
    Ok(())
}

fn is_monomial(m: &FqMatrix) -> bool {
    let n = m.n();
    let rows_ok = (0..n).all(|i| (0..n).filter(|&j| m.get(i, j) != 0).count() <= 1);
    let cols_ok = (0..n).all(|j| (0..n).filter(|&i| m.get(i, j) != 0).count() <= 1);
    rows_ok && cols_ok
}

/// Borel congruence orbits on `Sym_n(F_q)` or `Skew_n(F_q)` against the
/// partial (fixed-point-free) involutions.
pub fn twisted_orbit_census(n: usize, q: u8, form: SymForm) -> Result<SymOrbitReport> {
    check_odd_field(q)?;
    let space = form.space(n, q)?;
    let partition = orbit_enumerate(&space, &borel_generators(n, q), congruence_action, None)?;
    let mut values = BTreeSet::new();
    let mut witnesses = Vec::with_capacity(partition.count());
    for orbit in &partition.orbits {
        let rho = rank_control(&orbit[0]);
        if let Some(other) = orbit.iter().find(|m| rank_control(m) != rho) {
            return Err(Error::InvariantViolation(format!(
                "rank control differs inside one orbit: {} vs {other}",
                orbit[0]
            )));
        }
        witnesses.push(OrbitWitness {
            label: orbit[0].clone(),
            size: orbit.len(),
            parametrizer: form.to_rook(&rho)?,
            normal_form: orbit.iter().find(|m| is_monomial(m)).cloned(),
        });
        values.insert(rho);
    }
    Ok(SymOrbitReport {
        n,
        q,
        form,
        orbit_count: partition.count(),
        invariant_values: values.len(),
        expected_parametrizer_count: form.parametrizers(n)?.len(),
        witnesses,
    })
}

/// Rank controls of every `t pi` in the space, with `t` diagonal invertible
/// and `pi` a symmetric (fixed-point-free, for skew) rook element.
pub fn monomial_rank_controls(n: usize, q: u8, form: SymForm) -> Result<BTreeMap<RankControl, FqMatrix>> {
    check_odd_field(q)?;
    let units: Vec<u8> = (1..q).collect();
    let mut tori = vec![Vec::new()];
    for _ in 0..n {
        tori = tori
            .into_iter()
            .flat_map(|t: Vec<u8>| units.iter().map(move |&u| [t.clone(), vec![u]].concat()))
            .collect();
    }
    let mut out = BTreeMap::new();
    for pi in form.parametrizers(n)? {
        let p = FqMatrix::from_rook(q, &pi);
        for t in &tori {
            let tp = FqMatrix::diagonal(q, t).mul(&p);
            if form.contains(&tp) {
                out.entry(rank_control(&tp)).or_insert(tp);
            }
        }
    }
    Ok(out)
}

/// True iff every matrix in the space has the rank control of some `t pi`.
pub fn verify_borel_meets_closure_n(n: usize, q: u8, form: SymForm) -> Result<bool> {
    if n > MAX_CLOSURE_N {
        return Err(Error::ResourceGuard { what: "closure check size n".into(), limit: MAX_CLOSURE_N });
    }
    let witnessed = monomial_rank_controls(n, q, form)?;
    Ok(form.space(n, q)?.iter().all(|a| witnessed.contains_key(&rank_control(a))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(q: u8, rows: &[&[i64]]) -> FqMatrix {
        FqMatrix::new(q, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn interior(rho: &RankControl) -> Vec<Vec<usize>> {
        let n = rho.n();
        rho.rho[..n].iter().map(|r| r[..n].to_vec()).collect()
    }

    #[test]
    fn tau_examples() {
        let ai = InvolutionSpec::ai(2).unwrap();
        assert!(tau(&FqMatrix::zero(3, 2), &ai).unwrap().is_zero());
        let e12 = mat(3, &[&[0, 1], &[0, 0]]);
        assert_eq!(tau(&e12, &ai).unwrap(), mat(3, &[&[1, 0], &[0, 0]]));
        let g = mat(3, &[&[1, 2], &[0, 2]]);
        assert!(tau(&g, &ai).unwrap().is_symmetric());
    }

    #[test]
    fn mq_examples() {
        let ai = InvolutionSpec::ai(2).unwrap();
        assert!(is_in_mq(&mat(3, &[&[1, 2], &[2, 0]]), &ai).unwrap());
        assert!(!is_in_mq(&mat(3, &[&[0, 1], &[0, 0]]), &ai).unwrap());
        assert!(is_in_symmetric_submonoid(&FqMatrix::identity(3, 2), &ai).unwrap());
        assert!(!is_in_symmetric_submonoid(&mat(3, &[&[1, 1], &[1, 1]]), &ai).unwrap());
        let ci = InvolutionSpec::ci(2).unwrap();
        assert!(matches!(tau(&FqMatrix::identity(3, 2), &ci), Err(Error::Unrealized(_))));
    }

    #[test]
    fn rank_control_examples() {
        let rho = rank_control(&FqMatrix::zero(3, 2));
        assert!(rho.rho.iter().flatten().all(|&x| x == 0));
        assert_eq!(interior(&rank_control(&FqMatrix::identity(3, 2))), vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(interior(&rank_control(&mat(3, &[&[0, 1], &[1, 0]]))), vec![vec![2, 1], vec![1, 0]]);
        assert!(rank_control(&mat(5, &[&[1, 2], &[3, 4]])).is_well_formed());
    }

    #[test]
    fn parametrizer_examples() {
        let id = invariant_to_partial_involution(&rank_control(&FqMatrix::identity(3, 2))).unwrap();
        assert_eq!(id, RookElement::identity(2));
        let ones = invariant_to_partial_involution(&rank_control(&mat(3, &[&[1, 1], &[1, 1]]))).unwrap();
        assert_eq!(ones, RookElement::unit(2, 2, 2).unwrap());
        let empty = invariant_to_partial_fpf(&rank_control(&FqMatrix::zero(3, 3))).unwrap();
        assert_eq!(empty, RookElement::zero(3));
        let skew = invariant_to_partial_fpf(&rank_control(&mat(3, &[&[0, 1], &[-1, 0]]))).unwrap();
        assert_eq!(skew, "2 1".parse().unwrap());
    }

    #[test]
    fn non_symmetric_input_is_flagged() {
        let e12 = mat(3, &[&[0, 1], &[0, 0]]);
        assert!(matches!(invariant_to_partial_involution(&rank_control(&e12)), Err(Error::InvariantViolation(_))));
        let id = FqMatrix::identity(3, 2);
        assert!(matches!(invariant_to_partial_fpf(&rank_control(&id)), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn census_examples() {
        let skew = twisted_orbit_census(3, 3, SymForm::Skew).unwrap();
        assert_eq!((skew.orbit_count, skew.expected_parametrizer_count), (4, 4));
        assert!(skew.matches());
        let sym = twisted_orbit_census(2, 3, SymForm::Sym).unwrap();
        assert_eq!(sym.invariant_values, 5);
        assert!(sym.orbit_count >= 5);
        assert!(sym.matches());
        assert_eq!(twisted_orbit_census(1, 3, SymForm::Sym).unwrap().invariant_values, 2);
        assert!(twisted_orbit_census(2, 2, SymForm::Sym).is_err());
    }

    #[test]
    fn closure_examples() {
        assert!(verify_borel_meets_closure_n(2, 3, SymForm::Sym).unwrap());
        assert!(verify_borel_meets_closure_n(1, 3, SymForm::Sym).unwrap());
        assert!(verify_borel_meets_closure_n(3, 3, SymForm::Skew).unwrap());
    }

    #[test]
    fn form_parsing() {
        assert_eq!("skew".parse::<SymForm>().unwrap(), SymForm::Skew);
        assert!("hermitian".parse::<SymForm>().is_err());
        assert_eq!(serde_json::to_string(&SymForm::Sym).unwrap(), "\"sym\"");
    }
}
