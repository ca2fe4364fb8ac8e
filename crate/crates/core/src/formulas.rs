//! Closed-form volume expressions for a simplex joined with a reflected or
//! translated copy of itself: the per-facet ratio sum for hyperplane
//! reflections, the prism/case decomposition for point reflections, the
//! shape-ratio upper bound, the single-upper-facet bound in both its direct
//! and Gram-matrix forms, and the constraint checks used for the regular
//! simplex.
//!
//! All operations assume the canonical placement s₀ = origin; the reflection
//! hyperplane H passes through s₀.

use crate::linalg::{gram_matrix, matrix_inverse, Vector, UNIT_NORM_TOL};
use crate::simplex::{regular_simplex, Simplex};
use crate::{Error, Result};

/// Threshold on ⟨u_i, u⟩ above which a facet counts as upper. Facets with
/// |⟨u_i,u⟩| ≤ τ are profile facets with zero-measure projection and are
/// excluded; their summand vanishes in the limit, so exclusion is exact.
const UPPER_TAU: f64 = 1e-10;

/// Admissibility slack on ⟨u, s_i⟩ ≥ 0 so that boundary configurations
/// (H containing a facet through s₀) remain representable.
const ADMISSIBLE_SLACK: f64 = -1e-12;

/// The set of facets seen first by rays coming down along `direction`, for a
/// simplex in the closed upper half-space of H.
#[derive(Clone, Debug)]
pub struct UpperSide {
    /// Indices i_l of the upper facets (facet i is opposite vertex i).
    pub facet_indices: Vec<usize>,
    /// Unit normal of H pointing into the upper half-space.
    pub direction: Vector,
}

impl UpperSide {
    pub fn k(&self) -> usize {
        self.facet_indices.len()
    }
}

/// The hyperplane-reflection hull ratio together with its per-facet summands.
#[derive(Clone, Debug)]
pub struct RatioBreakdown {
    /// Vol(conv(S, Sᴴ)) / Vol(S).
    pub ratio: f64,
    /// The k summands, already scaled by 2n; they sum to `ratio`.
    pub per_facet_terms: Vec<f64>,
    pub upper_side: UpperSide,
}

fn check_unit(u: &Vector) -> Result<()> {
    if (u.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!(
            "direction must be a unit vector, got norm {}",
            u.norm()
        )));
    }
    Ok(())
}

fn check_canonical(s: &Simplex) -> Result<()> {
    if !s.is_canonical() {
        return Err(Error::InvalidInput(
            "simplex must be in canonical placement (vertex 0 at the origin)".into(),
        ));
    }
    Ok(())
}

fn check_admissible(s: &Simplex, u: &Vector) -> Result<()> {
    if u.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            got: u.dim(),
        });
    }
    for (i, v) in s.vertices().iter().enumerate() {
        let d = u.dot(v);
        if d < ADMISSIBLE_SLACK {
            return Err(Error::InadmissibleDirection { index: i, value: d });
        }
    }
    Ok(())
}

/// True when the whole simplex lies in the closed half-space ⟨u, ·⟩ ≥ 0.
pub fn is_admissible(s: &Simplex, u: &Vector) -> bool {
    check_admissible(s, u).is_ok()
}

/// Upper side of `s` for the reflection hyperplane through s₀ with unit
/// normal `u`: every facet whose outward normal has positive component
/// along `u`.
pub fn upper_facets(s: &Simplex, u: &Vector) -> Result<UpperSide> {
    check_unit(u)?;
    check_canonical(s)?;
    check_admissible(s, u)?;
    let facet_indices = s
        .facet_data()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.unit_outward_normal.dot(u) > UPPER_TAU)
        .map(|(i, _)| i)
        .collect();
    Ok(UpperSide {
        facet_indices,
        direction: u.clone(),
    })
}

/// Relative hull volume of S and its mirror image Sᴴ:
/// 2n·Σ_l ⟨u_{i_l},u⟩·⟨u, s−s_{i_l}⟩ / |⟨u_{i_l}, (n+1)s_{i_l} − s⟩|,
/// summed over the upper facets.
pub fn reflection_hull_ratio(s: &Simplex, u: &Vector) -> Result<RatioBreakdown> {
    let upper_side = upper_facets(s, u)?;
    let n = s.dim() as f64;
    let vsum = s.vertex_sum();
    let mut per_facet_terms = Vec::with_capacity(upper_side.k());
    for &i in &upper_side.facet_indices {
        let f = &s.facet_data()[i];
        let si = s.vertex(i);
        let numer = f.unit_outward_normal.dot(u) * u.dot(&vsum.sub(si));
        let denom = f
            .unit_outward_normal
            .dot(&si.scale(n + 1.0).sub(&vsum))
            .abs();
        per_facet_terms.push(2.0 * n * numer / denom);
    }
    let ratio = per_facet_terms.iter().sum();
    Ok(RatioBreakdown {
        ratio,
        per_facet_terms,
        upper_side,
    })
}

/// Volume of the convex hull of an (n−1)-dimensional simplex facet and its
/// point-reflected image lying in a parallel hyperplane at distance `d`:
/// (2ⁿ⁻¹/n)·Vol_{n−1}(F)·d.
pub fn prism_decomposition_volume(facet_volume: f64, d: f64, n: usize) -> Result<f64> {
    if facet_volume <= 0.0 || d <= 0.0 || n == 0 {
        return Err(Error::InvalidInput(
            "prism decomposition needs positive facet volume, distance and dimension".into(),
        ));
    }
    Ok(2f64.powi(n as i32 - 1) / n as f64 * facet_volume * d)
}

/// Vol(conv(S ∪ S_x)) for a reflection center x inside S.
///
/// With λ the barycentric coordinates of x, the reflected vertex 2x − s_j
/// lands inside S exactly when λ_j ≥ ½ (at most one j). In that case the
/// hull is conv(F_j ∪ F_j^x) and the prism formula applies. Otherwise every
/// reflected vertex falls outside and the hull is summed over its supported
/// facets directly: each facet spans {s_i : i ≠ o} with a sign pattern
/// ε ∈ {±1}ⁿ, is supported iff |Σ_{i≠o} ε_i λ_i| ≤ λ_o, and contributes a
/// cone of volume λ_o·Vol(S) from x. Boundary patterns (equality) are shared
/// between two facet classes and weigh ½. The two branches agree where they
/// meet (λ_max = ½).
pub fn point_reflection_volume(s: &Simplex, x: &Vector) -> Result<f64> {
    let lam = s.barycentric(x)?;
    if lam.iter().any(|&l| l < -1e-10) {
        return Err(Error::InvalidInput(
            "reflection center must lie inside the simplex".into(),
        ));
    }
    let n = s.dim();
    let (argmax, &lam_max) = lam
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .expect("simplex has vertices");

    if lam_max >= 0.5 - 1e-12 {
        // case 1: the hull is conv(F_j ∪ F_j^x) between parallel hyperplanes
        let f = &s.facet_data()[argmax];
        let d = 2.0 * (f.offset - f.unit_outward_normal.dot(x)).max(0.0);
        return prism_decomposition_volume(f.facet_volume, d, n);
    }

    // case 2: sum the cones over all supported mixed facets
    let mut total = 0.0;
    for o in 0..=n {
        let rest: Vec<f64> = (0..=n).filter(|&i| i != o).map(|i| lam[i]).collect();
        let mut count = 0.0;
        for mask in 0u32..(1 << n) {
            let mut dot = 0.0;
            for (b, &l) in rest.iter().enumerate() {
                dot += if mask >> b & 1 == 1 { l } else { -l };
            }
            let gap = dot.abs() - lam[o];
            if gap < -1e-12 {
                count += 1.0;
            } else if gap <= 1e-12 {
                count += 0.5;
            }
        }
        total += lam[o] * count;
    }
    Ok(total * s.volume())
}

/// Shape-ratio upper bound on the reflection hull ratio:
/// 2·(k(n−1) + [facet 0 upper])·max_{i≠j}(‖s_i‖/m_j).
///
/// The facet-0 correction makes the term count exact: the sum over facet 0
/// has n nonvanishing summands rather than n−1, and without it the bound
/// drops below the ratio at the regular simplex optimum for n ≤ 4.
pub fn remark_upper_bound(s: &Simplex, upper: &UpperSide) -> Result<f64> {
    if upper.facet_indices.is_empty() {
        return Err(Error::InvalidInput(
            "upper side must contain a facet".into(),
        ));
    }
    let n = s.dim();
    let k = upper.k();
    let zero_upper = usize::from(upper.facet_indices.contains(&0));
    let count = k * (n - 1) + zero_upper;
    Ok(2.0 * count as f64 * s.min_height_ratio())
}

/// The single-upper-facet bound of the hull ratio, in both algebraic forms,
/// with the maximizing direction.
#[derive(Clone, Debug)]
pub struct UpperFacetBound {
    /// n·(1 + ‖s‖/⟨u₀,s⟩).
    pub bound: f64,
    /// (u₀ + s′)/‖u₀ + s′‖ with s′ = s/‖s‖; attains the bound when it leaves
    /// F₀ as the only upper facet.
    pub optimal_u: Vector,
    /// n + √(‖(1,…,1)G⁻¹‖₁)·‖M(1,…,1)ᵀ‖ from the Gram matrix G = MᵀM.
    pub gram_form: f64,
}

/// Bound for the case where the only upper facet is F₀ (opposite s₀).
pub fn single_upper_facet_bound(s: &Simplex) -> Result<UpperFacetBound> {
    check_canonical(s)?;
    let n = s.dim();
    let nf = n as f64;
    let vsum = s.vertex_sum();
    let u0 = &s.facet_data()[0].unit_outward_normal;
    let u0_dot_s = u0.dot(&vsum);
    if u0_dot_s <= 0.0 {
        return Err(Error::DegenerateSimplex);
    }
    let s_norm = vsum.norm();
    let bound = nf * (1.0 + s_norm / u0_dot_s);

    let s_unit = vsum.scale(1.0 / s_norm);
    let optimal_u = u0.add(&s_unit).normalized()?;

    let edges: Vec<Vector> = (1..=n).map(|i| s.vertex(i).clone()).collect();
    let g = gram_matrix(&edges)?;
    let g_inv = matrix_inverse(&g)?;
    let mut l1 = 0.0;
    for j in 0..n {
        let mut col_sum = 0.0;
        for i in 0..n {
            col_sum += g_inv.get(i, j);
        }
        l1 += col_sum.abs();
    }
    let gram_form = nf + l1.sqrt() * s_norm;

    Ok(UpperFacetBound {
        bound,
        optimal_u,
        gram_form,
    })
}

/// Proof-side constraints for the regular simplex: for observed upper-facet
/// count k ≥ 2, ⟨u₀,u⟩ must lie in [1/n, √(1−1/n²)] and satisfy
/// ⟨u₀,u⟩² ≤ (n+1)(n−k+1)/((k−1)+(n+1)(n−k+1)), all with slack 1e−9.
/// k = 1 is the equality branch of the maximum and is exempt.
pub fn regular_constraint_check(n: usize, k: usize, u: &Vector) -> Result<bool> {
    if k == 0 || k > n + 1 {
        return Err(Error::InvalidInput(format!(
            "upper facet count k={k} outside 1..={}",
            n + 1
        )));
    }
    check_unit(u)?;
    let s = regular_simplex(n)?;
    let u0 = s.vertex_sum().normalized()?;
    let c = u0.dot(u);
    if k == 1 {
        return Ok(true);
    }
    let nf = n as f64;
    let slack = 1e-9;
    let range_ok = c >= 1.0 / nf - slack && c <= (1.0 - 1.0 / (nf * nf)).sqrt() + slack;
    let kf = k as f64;
    let limit = (nf + 1.0) * (nf - kf + 1.0) / ((kf - 1.0) + (nf + 1.0) * (nf - kf + 1.0));
    Ok(range_ok && c * c <= limit + slack)
}

/// Mirror image of every vertex of `s` in the hyperplane through the origin
/// with unit normal `u`, appended to the original vertices. This is the
/// point set whose hull the ratio formula describes.
pub fn reflected_configuration(s: &Simplex, u: &Vector) -> Result<Vec<Vector>> {
    if (u.norm() - 1.0).abs() > UNIT_NORM_TOL.max(1e-9) {
        return Err(Error::InvalidInput("reflection normal must be unit".into()));
    }
    let mut pts: Vec<Vector> = s.vertices().to_vec();
    pts.extend(s.vertices().iter().map(|p| p.sub(&u.scale(2.0 * p.dot(u)))));
    Ok(pts)
}
