//! Exact convex hulls of weight sets, face counts, containment and cones.
//!
//! Hulls are computed in an affine chart of the points' affine span. Facets
//! come from the double-description method applied to the homogenized points;
//! extreme-ray adjacency uses the combinatorial test, so everything stays in
//! exact rational arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::involution::{is_special, InvolutionSpec};
use crate::linalg::{self, dot, int, QMatrix, Rational};
use crate::root_weight::{Family, RootSystem, Weight};

pub const MAX_HULL_POINTS: usize = 200;
pub const MAX_AMBIENT_DIM: usize = 6;
pub const MAX_FVECTOR_DIM: usize = 4;

/// `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Facet {
    pub fn value(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.value(x) == self.offset
    }

    pub fn admits(&self, x: &[Rational]) -> bool {
        self.value(x) <= self.offset
    }
}

/// `normal . x = offset`, one of the equations cutting out the affine span.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

/// A polytope with its vertices and an irredundant facet description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    vertices: Vec<Weight>,
    facets: Vec<Facet>,
    equations: Vec<Equation>,
    affine_dim: usize,
    chart: AffineChart,
    /// For each facet, the indices of the vertices lying on it.
    incidence: Vec<BTreeSet<usize>>,
}

/// Affine coordinates on the span: `x -> (x - base)[pivots]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct AffineChart {
    base: Vec<Rational>,
    pivots: Vec<usize>,
}

impl AffineChart {
    fn local(&self, x: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&p| &x[p] - &self.base[p]).collect()
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(linalg::format_rational).collect()
}

impl Serialize for RationalPolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            normal: Vec<String>,
            offset: String,
        }
        let rows = |it: &mut dyn Iterator<Item = (&Vec<Rational>, &Rational)>| -> Vec<Row> {
            it.map(|(n, o)| Row { normal: rationals(n), offset: linalg::format_rational(o) }).collect()
        };
        let mut st = s.serialize_struct("RationalPolytope", 5)?;
        st.serialize_field("affine_dim", &self.affine_dim)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("facets", &rows(&mut self.facets.iter().map(|f| (&f.normal, &f.offset))))?;
        st.serialize_field("equations", &rows(&mut self.equations.iter().map(|e| (&e.normal, &e.offset))))?;
        st.serialize_field("f_vector", &f_vector(self).ok())?;
        st.end()
    }
}

impl RationalPolytope {
    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.chart.base.len()
    }

    /// Vertex indices on each facet, aligned with [`RationalPolytope::facets`].
    pub fn incidence(&self) -> &[BTreeSet<usize>] {
        &self.incidence
    }
}

/// A cone `sum_i R_{>=0} g_i` that contains no line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyhedralCone {
    pub generators: Vec<Weight>,
}

/// Convex hull of at most [`MAX_HULL_POINTS`] points.
pub fn hull(points: &[Weight]) -> Result<RationalPolytope> {
    let pts: Vec<Weight> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let Some(first) = pts.first() else {
        return Err(Error::Precondition("hull of an empty point set".into()));
    };
    if pts.len() > MAX_HULL_POINTS {
        return Err(Error::ResourceGuard { what: "hull point count".into(), limit: MAX_HULL_POINTS });
    }
    let ambient = first.dim();
    if let Some(bad) = pts.iter().find(|p| p.dim() != ambient) {
        return Err(Error::DimensionMismatch { expected: ambient, got: bad.dim() });
    }
    if ambient > MAX_AMBIENT_DIM {
        return Err(Error::ResourceGuard { what: "hull ambient dimension".into(), limit: MAX_AMBIENT_DIM });
    }
    let base = first.coords().to_vec();
    let diffs: QMatrix = pts.iter().map(|p| (p - first).coords().to_vec()).collect();
    let (_, pivots) = linalg::rref(&diffs);
    let d = pivots.len();
    let equations = linalg::nullspace(&diffs, ambient)
        .into_iter()
        .map(|v| {
            let normal = linalg::primitive(&v);
            let offset = dot(&normal, &base);
            Equation { normal, offset }
        })
        .collect();
    let chart = AffineChart { base, pivots };
    let local: Vec<Vec<Rational>> = pts.iter().map(|p| chart.local(p.coords())).collect();

    let local_facets = if d == 0 { Vec::new() } else { facets_by_double_description(&local, d)? };
    let is_vertex: Vec<bool> = local
        .iter()
        .map(|c| {
            let tight: QMatrix = local_facets.iter().filter(|f| f.is_tight(c)).map(|f| f.normal.clone()).collect();
            d == 0 || linalg::rank(&tight) == d
        })
        .collect();
    let vertex_local: Vec<&Vec<Rational>> = local.iter().zip(&is_vertex).filter(|(_, &v)| v).map(|(c, _)| c).collect();
    let vertices: Vec<Weight> = pts.iter().zip(&is_vertex).filter(|(_, &v)| v).map(|(p, _)| p.clone()).collect();

    let mut lifted: Vec<(Facet, BTreeSet<usize>)> = local_facets
        .iter()
        .map(|f| {
            let mut normal = vec![Rational::zero(); ambient];
            for (k, &p) in chart.pivots.iter().enumerate() {
                normal[p] = f.normal[k].clone();
            }
            let offset = &f.offset + dot(&normal, &chart.base);
            let on: BTreeSet<usize> =
                vertex_local.iter().enumerate().filter(|(_, c)| f.is_tight(c)).map(|(i, _)| i).collect();
            (Facet { normal, offset }, on)
        })
        .collect();
    lifted.sort();
    let (facets, incidence) = lifted.into_iter().unzip();
    Ok(RationalPolytope { vertices, facets, equations, affine_dim: d, chart, incidence })
}

/// Facets `a . c <= b` of the full-dimensional hull of `pts` in `Q^d`.
fn facets_by_double_description(pts: &[Vec<Rational>], d: usize) -> Result<Vec<Facet>> {
    // cone {y : A y >= 0} with rows (c, 1); its extreme rays (a, b) are the facets -a . c <= b
    let rows: QMatrix = pts.iter().map(|c| c.iter().cloned().chain([int(1)]).collect()).collect();
    let mut basis = Vec::new();
    let mut chosen: QMatrix = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if linalg::rank(&chosen) > basis.len() {
            basis.push(i);
        } else {
            chosen.pop();
        }
        if basis.len() == d + 1 {
            break;
        }
    }
    let inv = linalg::inverse(&chosen)
        .ok_or_else(|| Error::InvariantViolation("hull basis is not affinely independent".into()))?;
    let mut processed: Vec<usize> = basis.clone();
    let mut rays: Vec<Vec<Rational>> =
        (0..=d).map(|k| linalg::primitive(&inv.iter().map(|row| row[k].clone()).collect::<Vec<_>>())).collect();

    let zero_set = |ray: &[Rational], processed: &[usize]| -> BTreeSet<usize> {
        processed.iter().copied().filter(|&i| dot(&rows[i], ray).is_zero()).collect()
    };

    for h in 0..rows.len() {
        if basis.contains(&h) {
            continue;
        }
        let values: Vec<Rational> = rays.iter().map(|r| dot(&rows[h], r)).collect();
        let zeros: Vec<BTreeSet<usize>> = rays.iter().map(|r| zero_set(r, &processed)).collect();
        let mut next: Vec<Vec<Rational>> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for p in (0..rays.len()).filter(|&i| values[i].is_positive()) {
            for n in (0..rays.len()).filter(|&i| values[i].is_negative()) {
                let common: BTreeSet<usize> = zeros[p].intersection(&zeros[n]).copied().collect();
                if common.len() + 1 < d {
                    continue;
                }
                let blocked = (0..rays.len()).any(|k| k != p && k != n && common.is_subset(&zeros[k]));
                if blocked {
                    continue;
                }
                let combo: Vec<Rational> = rays[n]
                    .iter()
                    .zip(&rays[p])
                    .map(|(yn, yp)| &values[p] * yn - &values[n] * yp)
                    .collect();
                next.push(linalg::primitive(&combo));
            }
        }
        processed.push(h);
        next.sort();
        next.dedup();
        rays = next;
    }
    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|y| Facet { normal: y[..d].iter().map(|a| -a).collect(), offset: y[d].clone() })
        .collect();
    facets.sort();
    Ok(facets)
}

/// True iff `x` lies in `p`.
pub fn contains(p: &RationalPolytope, x: &Weight) -> Result<bool> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), got: x.dim() });
    }
    let c = x.coords();
    Ok(p.equations.iter().all(|e| dot(&e.normal, c) == e.offset) && p.facets.iter().all(|f| f.admits(c)))
}

/// True iff `x` lies in `p` but on none of its facets.
pub fn contains_relative_interior(p: &RationalPolytope, x: &Weight) -> Result<bool> {
    Ok(contains(p, x)? && p.facets.iter().all(|f| !f.is_tight(x.coords())))
}

/// Number of faces of each dimension `0..affine_dim`, excluding the empty face and the polytope itself.
pub fn f_vector(p: &RationalPolytope) -> Result<Vec<usize>> {
    if p.affine_dim > MAX_FVECTOR_DIM {
        return Err(Error::ResourceGuard { what: "f-vector dimension".into(), limit: MAX_FVECTOR_DIM });
    }
    if p.affine_dim == 0 {
        return Ok(Vec::new());
    }
    let facets: BTreeSet<BTreeSet<usize>> = p.incidence.iter().cloned().collect();
    let mut counts = vec![0; p.affine_dim];
    let mut level = facets.clone();
    for dim in (0..p.affine_dim).rev() {
        counts[dim] = level.len();
        if dim == 0 {
            break;
        }
        let mut below = BTreeSet::new();
        for face in &level {
            let candidates: BTreeSet<BTreeSet<usize>> = facets
                .iter()
                .map(|g| face.intersection(g).copied().collect::<BTreeSet<usize>>())
                .filter(|c| !c.is_empty() && c != face)
                .collect();
            for c in &candidates {
                if !candidates.iter().any(|o| o != c && c.is_subset(o)) {
                    below.insert(c.clone());
                }
            }
        }
        level = below;
    }
    Ok(counts)
}

/// Hull of the Weyl orbit of `lambda`, shifted by `chi` in type A.
///
/// With an involution, `lambda` must also be special for it.
pub fn weight_polytope(rs: &RootSystem, lambda: &Weight, inv: Option<&InvolutionSpec>) -> Result<RationalPolytope> {
    if lambda.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: rs.ambient_dim(), got: lambda.dim() });
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant")));
    }
    if let Some(inv) = inv {
        if inv.root_system() != rs {
            return Err(Error::InvalidParams(format!("{} does not act on this root system", inv.label())));
        }
        if !is_special(inv, lambda)? {
            return Err(Error::NotSpecial);
        }
    }
    let orbit = rs.weyl_orbit(lambda)?;
    let points: Vec<Weight> = if rs.family() == Family::A {
        let chi = rs.chi()?;
        orbit.iter().map(|w| &chi + w).collect()
    } else {
        orbit.into_iter().collect()
    };
    hull(&points)
}

/// The cone over the vertices of `p`, which must not contain the origin.
pub fn cone_over(p: &RationalPolytope) -> Result<PolyhedralCone> {
    if contains(p, &Weight::zero(p.ambient_dim()))? {
        return Err(Error::NotStronglyConvex);
    }
    Ok(PolyhedralCone { generators: p.vertices.clone() })
}

fn cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Exact counterclockwise angle comparison of plane vectors, starting at the positive x-axis.
fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    let half = |v: &(Rational, Rational)| u8::from(v.1.is_negative() || (v.1.is_zero() && v.0.is_negative()));
    half(a).cmp(&half(b)).then_with(|| {
        let c = &a.0 * &b.1 - &a.1 * &b.0;
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Orders `idx` counterclockwise around `normal`, seen from its tip.
fn cyclic_order(points: &[Vec<Rational>], idx: &[usize], normal: &[Rational]) -> Vec<usize> {
    let k = Rational::from_integer((idx.len() as i64).into());
    let centroid: Vec<Rational> =
        (0..3).map(|c| idx.iter().fold(Rational::zero(), |acc, &i| acc + &points[i][c]) / &k).collect();
    let rel = |i: usize| -> Vec<Rational> { (0..3).map(|c| &points[i][c] - &centroid[c]).collect() };
    let u = rel(idx[0]);
    let w = cross(normal, &u);
    let mut keyed: Vec<((Rational, Rational), usize)> = idx
        .iter()
        .map(|&i| {
            let x = rel(i);
            ((dot(&x, &u), dot(&x, &w)), i)
        })
        .collect();
    keyed.sort_by(|a, b| angle_cmp(&a.0, &b.0));
    keyed.into_iter().map(|(_, i)| i).collect()
}

fn off_number(x: &Rational) -> String {
    let f = x.to_f64().unwrap_or(f64::NAN);
    format!("{f}")
}

/// OFF export of the projection to the first three affine-chart coordinates.
pub fn to_off(p: &RationalPolytope) -> Result<String> {
    let projected: Vec<Vec<Rational>> = p
        .vertices
        .iter()
        .map(|v| {
            let mut c = p.chart.local(v.coords());
            c.truncate(3);
            c.resize(3, Rational::zero());
            c
        })
        .collect();
    let shadow = hull(&projected.into_iter().map(Weight::new).collect::<Vec<_>>())?;
    let pts: Vec<Vec<Rational>> = shadow.vertices.iter().map(|v| v.coords().to_vec()).collect();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    match shadow.affine_dim {
        3 => {
            for (f, on) in shadow.facets.iter().zip(&shadow.incidence) {
                let idx: Vec<usize> = on.iter().copied().collect();
                faces.push(cyclic_order(&pts, &idx, &f.normal));
            }
        }
        2 => {
            let normal = shadow.equations[0].normal.clone();
            let idx: Vec<usize> = (0..pts.len()).collect();
            faces.push(cyclic_order(&pts, &idx, &normal));
        }
        _ => {}
    }
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} 0", pts.len(), faces.len());
    for c in &pts {
        let _ = writeln!(out, "{}", c.iter().map(off_number).collect::<Vec<_>>().join(" "));
    }
    for f in &faces {
        let _ = writeln!(out, "{} {}", f.len(), f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    Ok(out)
}
