//! Brute-force convex hull volume for small point sets in n-space.
//!
//! This is the ground-truth oracle every closed-form expression in the crate
//! is tested against, so it trades speed for transparency: every n-subset of
//! points is tested as a candidate facet hyperplane, facets are deduplicated
//! by their member sets, and the volume is summed from pyramids over an
//! interior point. Facet measures recurse on the same scheme one dimension
//! down after projecting into the facet hyperplane.

use crate::linalg::Vector;
use crate::lp::{self, LpOutcome};
use crate::simplex::{hyperplane_normal, Simplex};
use crate::{Error, Result};

/// Hard cap from the contract: the oracle is for desk-scale configurations.
const MAX_POINTS: usize = 64;

/// One supporting hyperplane of the hull.
#[derive(Clone, Debug)]
pub struct HullFacet {
    /// Unit normal pointing away from the hull.
    pub support_normal: Vector,
    /// ⟨normal, p⟩ = offset on the facet, ≤ offset inside.
    pub offset: f64,
    /// Indices of the input points lying on the facet hyperplane.
    pub member_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct HullResult {
    pub volume: f64,
    pub facets: Vec<HullFacet>,
    pub interior_point: Vector,
    /// Absolute tolerance used for the facet side tests (scale-aware).
    pub tolerance: f64,
}

/// Convex hull volume and facet structure of `points` in dimension `n`.
///
/// Errors with `DegenerateHull` when the points span fewer than n dimensions.
pub fn hull_volume(points: &[Vector], n: usize) -> Result<HullResult> {
    if !(2..=7).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "hull oracle supports 2 ≤ n ≤ 7, got {n}"
        )));
    }
    if points.len() < n + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} points in dimension {n}, got {}",
            n + 1,
            points.len()
        )));
    }
    if points.len() > MAX_POINTS {
        return Err(Error::InvalidInput(format!(
            "hull oracle capped at {MAX_POINTS} points, got {}",
            points.len()
        )));
    }
    for p in points {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.dim(),
            });
        }
    }
    let scale = points.iter().map(Vector::norm).fold(1.0, f64::max);
    let tol = 1e-9 * scale;

    let rank = affine_rank(points, tol);
    if rank < n {
        return Err(Error::DegenerateHull { rank, needed: n });
    }

    let mut centroid = Vector::zeros(n);
    for p in points {
        centroid = centroid.add(p);
    }
    centroid = centroid.scale(1.0 / points.len() as f64);

    let mut facets: Vec<HullFacet> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut subset = vec![0usize; n];
    enumerate_subsets(points.len(), n, &mut subset, 0, 0, &mut |idx| {
        if let Some(facet) = try_facet(points, idx, &centroid, tol) {
            if !seen.contains(&facet.member_indices) {
                seen.push(facet.member_indices.clone());
                facets.push(facet);
            }
        }
    });

    if facets.is_empty() {
        return Err(Error::DegenerateHull { rank, needed: n });
    }

    // deterministic order regardless of discovery order
    facets.sort_by(|a, b| {
        a.support_normal
            .0
            .partial_cmp(&b.support_normal.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.offset
                    .partial_cmp(&b.offset)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });

    // interior point: centroid of every point that lies on some facet
    let mut on_boundary: Vec<usize> = facets
        .iter()
        .flat_map(|f| f.member_indices.clone())
        .collect();
    on_boundary.sort_unstable();
    on_boundary.dedup();
    let mut interior = Vector::zeros(n);
    for &i in &on_boundary {
        interior = interior.add(&points[i]);
    }
    interior = interior.scale(1.0 / on_boundary.len() as f64);

    let mut volume = 0.0;
    for f in &facets {
        let dist = f.offset - f.support_normal.dot(&interior);
        let members: Vec<Vector> = f
            .member_indices
            .iter()
            .map(|&i| points[i].clone())
            .collect();
        let measure = facet_measure(&members, &f.support_normal, n)?;
        volume += measure * dist / n as f64;
    }

    Ok(HullResult {
        volume,
        facets,
        interior_point: interior,
        tolerance: tol,
    })
}

/// True iff p satisfies every facet inequality within the stored tolerance.
pub fn hull_contains(result: &HullResult, p: &Vector) -> bool {
    result
        .facets
        .iter()
        .all(|f| f.support_normal.dot(p) <= f.offset + result.tolerance)
}

/// Whether two placed simplices share at least one point, by LP feasibility
/// on the barycentric coordinates of a common point.
pub fn intersects(s1: &Simplex, s2: &Simplex) -> Result<bool> {
    if s1.dim() != s2.dim() {
        return Err(Error::DimensionMismatch {
            expected: s1.dim(),
            got: s2.dim(),
        });
    }
    Ok(common_point(s1, s2)?.is_some())
}

/// A point of S₁ ∩ S₂ if one exists: Σλᵢvᵢ = Σμⱼwⱼ, λ,μ in the standard
/// simplex. Coordinates are scaled to O(1) before the LP for robustness.
pub fn common_point(s1: &Simplex, s2: &Simplex) -> Result<Option<Vector>> {
    let n = s1.dim();
    let k1 = s1.vertices().len();
    let k2 = s2.vertices().len();
    let scale = s1
        .vertices()
        .iter()
        .chain(s2.vertices())
        .map(Vector::norm)
        .fold(1.0, f64::max);

    let cols = k1 + k2;
    let mut a = vec![vec![0.0; cols]; n + 2];
    let mut b = vec![0.0; n + 2];
    for j in 0..k1 {
        a[0][j] = 1.0;
    }
    b[0] = 1.0;
    for j in 0..k2 {
        a[1][k1 + j] = 1.0;
    }
    b[1] = 1.0;
    for r in 0..n {
        for j in 0..k1 {
            a[2 + r][j] = s1.vertex(j)[r] / scale;
        }
        for j in 0..k2 {
            a[2 + r][k1 + j] = -s2.vertex(j)[r] / scale;
        }
    }
    match lp::solve(&a, &b, &vec![0.0; cols]) {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Optimal { z, .. } => {
            let mut p = Vector::zeros(n);
            for j in 0..k1 {
                p = p.add(&s1.vertex(j).scale(z[j]));
            }
            Ok(Some(p))
        }
        LpOutcome::Unbounded => Err(Error::InvalidInput(
            "intersection LP unbounded (should not happen)".into(),
        )),
    }
}

/// Width of S₁ ∩ S₂ in direction d: max⟨d,x⟩ − min⟨d,x⟩ over the
/// intersection, or None when it is empty.
pub fn intersection_width(s1: &Simplex, s2: &Simplex, d: &Vector) -> Result<Option<f64>> {
    let n = s1.dim();
    let k1 = s1.vertices().len();
    let k2 = s2.vertices().len();
    let scale = s1
        .vertices()
        .iter()
        .chain(s2.vertices())
        .map(Vector::norm)
        .fold(1.0, f64::max);
    let cols = k1 + k2;
    let mut a = vec![vec![0.0; cols]; n + 2];
    let mut b = vec![0.0; n + 2];
    for j in 0..k1 {
        a[0][j] = 1.0;
    }
    b[0] = 1.0;
    for j in 0..k2 {
        a[1][k1 + j] = 1.0;
    }
    b[1] = 1.0;
    for r in 0..n {
        for j in 0..k1 {
            a[2 + r][j] = s1.vertex(j)[r] / scale;
        }
        for j in 0..k2 {
            a[2 + r][k1 + j] = -s2.vertex(j)[r] / scale;
        }
    }
    let mut c = vec![0.0; cols];
    for j in 0..k1 {
        c[j] = d.dot(s1.vertex(j));
    }
    let hi = match lp::solve(&a, &b, &c) {
        LpOutcome::Infeasible => return Ok(None),
        LpOutcome::Optimal { value, .. } => value,
        LpOutcome::Unbounded => return Err(Error::InvalidInput("width LP unbounded".into())),
    };
    let neg: Vec<f64> = c.iter().map(|v| -v).collect();
    let lo = match lp::solve(&a, &b, &neg) {
        LpOutcome::Infeasible => return Ok(None),
        LpOutcome::Optimal { value, .. } => -value,
        LpOutcome::Unbounded => return Err(Error::InvalidInput("width LP unbounded".into())),
    };
    Ok(Some(hi - lo))
}

fn enumerate_subsets(
    m: usize,
    k: usize,
    buf: &mut Vec<usize>,
    depth: usize,
    start: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        visit(buf);
        return;
    }
    for i in start..m {
        buf[depth] = i;
        enumerate_subsets(m, k, buf, depth + 1, i + 1, visit);
    }
}

fn try_facet(points: &[Vector], idx: &[usize], centroid: &Vector, tol: f64) -> Option<HullFacet> {
    let base = &points[idx[0]];
    let edges: Vec<Vector> = idx[1..].iter().map(|&i| points[i].sub(base)).collect();
    let raw = hyperplane_normal(&edges).ok()?;
    let normal = raw.normalized().ok()?;
    let mut offset = normal.dot(base);
    let mut normal = normal;
    // orient away from the centroid of all points
    let side = normal.dot(centroid) - offset;
    if side > tol {
        normal = normal.neg();
        offset = -offset;
    } else if side > -tol {
        // centroid on the candidate plane: cannot be a proper facet of a
        // full-dimensional hull
        return None;
    }
    let mut members = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let d = normal.dot(p) - offset;
        if d > tol {
            return None; // a point lies strictly outside: not supporting
        }
        if d.abs() <= tol {
            members.push(i);
        }
    }
    Some(HullFacet {
        support_normal: normal,
        offset,
        member_indices: members,
    })
}

/// (n−1)-measure of a facet: project members into the facet hyperplane and
/// recurse on the hull volume one dimension down (a fan decomposition from
/// the projected interior point).
fn facet_measure(members: &[Vector], normal: &Vector, n: usize) -> Result<f64> {
    let d = n - 1;
    if d == 0 {
        return Ok(1.0);
    }
    let basis = hyperplane_basis(normal, n);
    let base = &members[0];
    let projected: Vec<Vector> = members
        .iter()
        .map(|p| {
            let rel = p.sub(base);
            Vector::new(basis.iter().map(|e| e.dot(&rel)).collect())
        })
        .collect();
    if d == 1 {
        let lo = projected.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
        let hi = projected
            .iter()
            .map(|p| p[0])
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(hi - lo);
    }
    let sub = hull_volume(&projected, d)?;
    Ok(sub.volume)
}

/// Orthonormal basis of the hyperplane with the given unit normal, by
/// Gram-Schmidt over the most independent coordinate axes.
fn hyperplane_basis(normal: &Vector, n: usize) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::with_capacity(n - 1);
    // axes ordered by increasing |normal component| so projections stay stable
    let mut axes: Vec<usize> = (0..n).collect();
    axes.sort_by(|&a, &b| {
        normal[a]
            .abs()
            .partial_cmp(&normal[b].abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    for &ax in &axes {
        if basis.len() == n - 1 {
            break;
        }
        let mut e = Vector::zeros(n);
        e.0[ax] = 1.0;
        let mut v = e.sub(&normal.scale(normal.dot(&e)));
        for b in &basis {
            v = v.sub(&b.scale(b.dot(&v)));
        }
        if let Ok(u) = v.normalized() {
            basis.push(u);
        }
    }
    basis
}

/// Affine rank of a point set with a scale-aware tolerance, via Gram-Schmidt
/// on edge vectors from the first point.
fn affine_rank(points: &[Vector], tol: f64) -> usize {
    let base = &points[0];
    let mut basis: Vec<Vector> = Vec::new();
    for p in &points[1..] {
        let mut v = p.sub(base);
        for b in &basis {
            v = v.sub(&b.scale(b.dot(&v)));
        }
        if v.norm() > tol {
            basis.push(v.normalized().expect("norm checked"));
        }
    }
    basis.len()
}
