//! The Simplex type and the derived facet quantities the volume formulas
//! consume: outward unit normals, facet measures, heights, vertex sum.

use serde::{Deserialize, Serialize};

use crate::linalg::{determinant, gram_matrix, Matrix, Vector};
use crate::{Error, Isometry, Result};

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Per-facet derived data. Facet i is the one opposite vertex i.
#[derive(Clone, Debug)]
pub struct FacetData {
    pub opposite_vertex_index: usize,
    /// Unit normal pointing away from the opposite vertex.
    pub unit_outward_normal: Vector,
    pub centroid: Vector,
    /// (n−1)-dimensional measure of the facet.
    pub facet_volume: f64,
    /// Distance from the opposite vertex to the facet hyperplane (m_i).
    pub height: f64,
    /// Offset of the facet hyperplane: ⟨normal, p⟩ = offset for p on the facet.
    pub offset: f64,
}

/// An n-simplex given by n+1 affinely independent vertices. Slot 0 is the
/// designated vertex; `new` translates it to the origin, which every
/// closed-form expression in this crate assumes.
#[derive(Clone, Debug)]
pub struct Simplex {
    vertices: Vec<Vector>,
    facets: Vec<FacetData>,
    volume: f64,
}

/// JSON schema shared by the CLI and the test fixtures.
#[derive(Serialize, Deserialize)]
struct SimplexJson {
    n: usize,
    vertices: Vec<Vec<f64>>,
}

/// JSON schema for raw point sets consumed by the hull oracle.
#[derive(Serialize, Deserialize)]
pub struct PointSet {
    pub n: usize,
    pub points: Vec<Vec<f64>>,
}

impl Simplex {
    /// Canonical constructor: validates shape and non-degeneracy, then
    /// translates vertex 0 to the origin.
    pub fn new(vertices: Vec<Vector>) -> Result<Simplex> {
        let v0 = vertices
            .first()
            .ok_or_else(|| Error::InvalidInput("simplex needs vertices".into()))?
            .clone();
        let shifted = vertices.iter().map(|v| v.sub(&v0)).collect();
        Simplex::placed(shifted)
    }

    /// Constructor that keeps the vertices where they are. Used for isometric
    /// images whose position matters (intersection tests, hull input).
    pub fn placed(vertices: Vec<Vector>) -> Result<Simplex> {
        let n = vertices
            .len()
            .checked_sub(1)
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::InvalidInput("simplex needs at least 2 vertices".into()))?;
        if n > 8 {
            return Err(Error::InvalidInput(format!(
                "dimensions beyond 8 are unsupported, got {n}"
            )));
        }
        for v in &vertices {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.dim(),
                });
            }
            if !v.is_finite() {
                return Err(Error::InvalidInput("non-finite vertex coordinate".into()));
            }
        }
        let edges: Vec<Vector> = (1..=n).map(|i| vertices[i].sub(&vertices[0])).collect();
        let m = Matrix::from_columns(&edges)?;
        let volume = determinant(&m).abs() / factorial(n);
        let max_edge = max_edge_length(&vertices);
        if volume < 1e-12 * max_edge.powi(n as i32) {
            return Err(Error::DegenerateSimplex);
        }
        let facets = (0..=n)
            .map(|i| facet_of(&vertices, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Simplex {
            vertices,
            facets,
            volume,
        })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector {
        &self.vertices[i]
    }

    /// n-dimensional volume, |det[s₁−s₀, …, s_n−s₀]|/n!.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Facet data, indexed by opposite vertex.
    pub fn facet_data(&self) -> &[FacetData] {
        &self.facets
    }

    /// True when vertex 0 sits at the origin.
    pub fn is_canonical(&self) -> bool {
        self.vertices[0].norm() <= 1e-12 * max_edge_length(&self.vertices)
    }

    /// Vertex sum s = Σ_{i=1}^n s_i. Requires the canonical placement.
    pub fn vertex_sum(&self) -> Vector {
        debug_assert!(self.is_canonical(), "vertex_sum assumes s0 = origin");
        let mut s = Vector::zeros(self.dim());
        for v in &self.vertices[1..] {
            s = s.add(v);
        }
        s
    }

    /// max over i≠j of ‖s_i‖/m_j, the shape ratio the Remark's bound scales
    /// with. Small heights make it large.
    pub fn min_height_ratio(&self) -> f64 {
        let n = self.dim();
        let mut best: f64 = 0.0;
        for i in 1..=n {
            let norm_i = self.vertices[i].norm();
            for (j, f) in self.facets.iter().enumerate() {
                if i != j {
                    best = best.max(norm_i / f.height);
                }
            }
        }
        best
    }

    /// The same simplex with vertex `root` moved into slot 0 and the whole
    /// configuration translated so that it sits at the origin.
    pub fn rerooted(&self, root: usize) -> Result<Simplex> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.swap(0, root);
        let verts = order.iter().map(|&i| self.vertices[i].clone()).collect();
        Simplex::new(verts)
    }

    /// Image under an isometry, kept in place (not re-canonicalized).
    pub fn transformed(&self, iso: &Isometry) -> Result<Simplex> {
        let verts = self
            .vertices
            .iter()
            .map(|v| iso.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Simplex::placed(verts)
    }

    /// Barycentric coordinates of a point with respect to the vertices.
    pub fn barycentric(&self, p: &Vector) -> Result<Vec<f64>> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        // Solve Σ λ_i (s_i − s_0) = p − s_0 with λ_0 = 1 − Σλ_i.
        let n = self.dim();
        let edges: Vec<Vector> = (1..=n)
            .map(|i| self.vertices[i].sub(&self.vertices[0]))
            .collect();
        let m = Matrix::from_columns(&edges)?;
        let inv = crate::linalg::matrix_inverse(&m)?;
        let rhs = p.sub(&self.vertices[0]);
        let lam_tail = inv.mul_vector(&rhs)?;
        let mut lam = vec![0.0; n + 1];
        let mut sum = 0.0;
        for i in 0..n {
            lam[i + 1] = lam_tail[i];
            sum += lam_tail[i];
        }
        lam[0] = 1.0 - sum;
        Ok(lam)
    }

    /// True if p lies in the closed simplex within a small barycentric slack.
    pub fn contains(&self, p: &Vector) -> Result<bool> {
        let lam = self.barycentric(p)?;
        Ok(lam.iter().all(|&l| l >= -1e-10))
    }

    pub fn centroid(&self) -> Vector {
        let mut c = Vector::zeros(self.dim());
        for v in &self.vertices {
            c = c.add(v);
        }
        c.scale(1.0 / self.vertices.len() as f64)
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        max_edge_length(&self.vertices)
    }

    pub fn to_json(&self) -> String {
        let doc = SimplexJson {
            n: self.dim(),
            vertices: self.vertices.iter().map(|v| v.0.clone()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("simplex serializes")
    }

    pub fn from_json(text: &str) -> Result<Simplex> {
        let doc: SimplexJson = serde_json::from_str(text)?;
        if doc.vertices.len() != doc.n + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} vertices for n={}, got {}",
                doc.n + 1,
                doc.n,
                doc.vertices.len()
            )));
        }
        Simplex::new(doc.vertices.into_iter().map(Vector::new).collect())
    }
}

fn max_edge_length(vertices: &[Vector]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            best = best.max(vertices[i].distance(&vertices[j]));
        }
    }
    best.max(f64::MIN_POSITIVE)
}

/// Normal of the hyperplane spanned by `edges` (n−1 vectors in R^n) via the
/// generalized cross product: component j is the signed (n−1)-minor with
/// column j removed.
pub(crate) fn hyperplane_normal(edges: &[Vector]) -> Result<Vector> {
    let n = edges.first().map_or(0, |e| e.dim());
    if edges.len() + 1 != n {
        return Err(Error::InvalidInput(format!(
            "need {} edge vectors in dimension {}, got {}",
            n - 1,
            n,
            edges.len()
        )));
    }
    if n == 1 {
        return Ok(Vector::new(vec![1.0]));
    }
    let mut normal = vec![0.0; n];
    for j in 0..n {
        let mut minor = Matrix::zeros(n - 1, n - 1);
        for (r, e) in edges.iter().enumerate() {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                minor.set(r, cc, e[c]);
                cc += 1;
            }
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        normal[j] = sign * determinant(&minor);
    }
    Ok(Vector::new(normal))
}

/// (k)-dimensional measure of the simplex spanned by `edges` (k vectors),
/// computed as √(det G)/k! from the Gram matrix of the edges.
pub(crate) fn span_measure(edges: &[Vector]) -> Result<f64> {
    let k = edges.len();
    let g = gram_matrix(edges)?;
    let det = determinant(&g).max(0.0);
    Ok(det.sqrt() / factorial(k))
}

fn facet_of(vertices: &[Vector], opposite: usize) -> Result<FacetData> {
    let n = vertices.len() - 1;
    let members: Vec<&Vector> = vertices
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != opposite)
        .map(|(_, v)| v)
        .collect();
    let edges: Vec<Vector> = members[1..].iter().map(|v| v.sub(members[0])).collect();
    let raw = hyperplane_normal(&edges)?;
    let mut normal = raw.normalized().map_err(|_| Error::DegenerateSimplex)?;
    let mut centroid = Vector::zeros(n);
    for v in &members {
        centroid = centroid.add(v);
    }
    centroid = centroid.scale(1.0 / n as f64);
    // outward: away from the opposite vertex
    if normal.dot(&vertices[opposite].sub(&centroid)) > 0.0 {
        normal = normal.neg();
    }
    let offset = normal.dot(members[0]);
    let height = (normal.dot(&vertices[opposite]) - offset).abs();
    let facet_volume = span_measure(&edges)?;
    Ok(FacetData {
        opposite_vertex_index: opposite,
        unit_outward_normal: normal,
        centroid,
        facet_volume,
        height,
        offset,
    })
}

/// The regular n-simplex normalized as in the closed-form results: s₀ = 0,
/// ‖s_i‖ = 1 and ⟨s_i, s_j⟩ = 1/2, built by Cholesky-factoring the target
/// Gram matrix. 2 ≤ n ≤ 8.
pub fn regular_simplex(n: usize) -> Result<Simplex> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "regular_simplex supports 2 ≤ n ≤ 8, got {n}"
        )));
    }
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, if i == j { 1.0 } else { 0.5 });
        }
    }
    let l = g
        .cholesky()
        .expect("regular-simplex Gram matrix is positive definite");
    let mut vertices = vec![Vector::zeros(n)];
    for i in 0..n {
        vertices.push(Vector::new((0..n).map(|j| l.get(i, j)).collect()));
    }
    Simplex::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn unit_right_simplex(n: usize) -> Simplex {
        let mut verts = vec![Vector::zeros(n)];
        for i in 0..n {
            let mut c = vec![0.0; n];
            c[i] = 1.0;
            verts.push(Vector::new(c));
        }
        Simplex::new(verts).unwrap()
    }

    #[test]
    fn unit_right_simplex_volume() {
        assert_relative_eq!(unit_right_simplex(3).volume(), 1.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn regular_simplex_volume_matches_gram_oracle() {
        // oracle: √(det G)/n! with det G = (n+1)/2ⁿ
        for n in 2..=6 {
            let s = regular_simplex(n).unwrap();
            let det_g = (n as f64 + 1.0) / 2f64.powi(n as i32);
            let expect = det_g.sqrt() / factorial(n);
            assert_relative_eq!(s.volume(), expect, max_relative = 1e-12);
        }
        // spec'd n=2 value: √(3/4)/2
        let s2 = regular_simplex(2).unwrap();
        assert_relative_eq!(s2.volume(), (0.75f64).sqrt() / 2.0, max_relative = 1e-14);
    }

    #[test]
    fn volume_scales_homogeneously() {
        let s = unit_right_simplex(4);
        let c = 1.7;
        let scaled = Simplex::new(s.vertices().iter().map(|v| v.scale(c)).collect()).unwrap();
        assert_relative_eq!(
            scaled.volume(),
            s.volume() * c.powi(4),
            max_relative = 1e-10
        );
    }

    #[test]
    fn degenerate_simplex_rejected() {
        let r = Simplex::new(vec![
            Vector::new(vec![0.0, 0.0]),
            Vector::new(vec![1.0, 1.0]),
            Vector::new(vec![2.0, 2.0]),
        ]);
        assert!(matches!(r, Err(Error::DegenerateSimplex)));
    }

    #[test]
    fn facet_normal_of_unit_right_triangle() {
        let s = unit_right_simplex(2);
        let f0 = &s.facet_data()[0];
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        assert_relative_eq!(f0.unit_outward_normal[0], inv_sqrt2, epsilon = 1e-14);
        assert_relative_eq!(f0.unit_outward_normal[1], inv_sqrt2, epsilon = 1e-14);
    }

    #[test]
    fn facet_pyramid_identity_holds_on_random_simplex() {
        // Vol(S) = (1/n) · facet_volume_i · height_i for every facet
        let s = Simplex::new(vec![
            Vector::new(vec![0.0, 0.0, 0.0, 0.0]),
            Vector::new(vec![1.1, 0.2, -0.3, 0.4]),
            Vector::new(vec![-0.2, 0.9, 0.5, 0.1]),
            Vector::new(vec![0.3, -0.4, 1.2, -0.2]),
            Vector::new(vec![0.1, 0.3, 0.2, 1.4]),
        ])
        .unwrap();
        for f in s.facet_data() {
            assert_relative_eq!(
                s.volume(),
                f.facet_volume * f.height / 4.0,
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn facets_point_outward() {
        let s = regular_simplex(4).unwrap();
        for f in s.facet_data() {
            let opp = s.vertex(f.opposite_vertex_index);
            assert!(f.unit_outward_normal.dot(&opp.sub(&f.centroid)) < 0.0);
            assert!(f.height > 0.0);
            assert_relative_eq!(f.unit_outward_normal.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn vertex_sum_unit_right_simplex() {
        let s = unit_right_simplex(3);
        assert_eq!(s.vertex_sum(), Vector::new(vec![1.0, 1.0, 1.0]));
    }

    #[test]
    fn vertex_sum_norm_of_regular_simplex() {
        // ‖s‖² = 1ᵀG1 = n(n+1)/2
        for n in 2..=6 {
            let s = regular_simplex(n).unwrap();
            let expect = (n * (n + 1)) as f64 / 2.0;
            assert_relative_eq!(
                s.vertex_sum().dot(&s.vertex_sum()),
                expect,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn vertex_sum_negates_under_point_reflection_at_origin() {
        let s = unit_right_simplex(3);
        let reflected = s
            .transformed(&Isometry::PointReflection(Vector::zeros(3)))
            .unwrap();
        let sum = s.vertex_sum();
        let neg: Vector = reflected.vertices()[1..]
            .iter()
            .fold(Vector::zeros(3), |acc, v| acc.add(v));
        assert!(neg.distance(&sum.neg()) < 1e-14);
    }

    #[test]
    fn regular_simplex_gram_and_distances() {
        let s = regular_simplex(2).unwrap();
        let g = gram_matrix(&s.vertices()[1..]).unwrap();
        assert_relative_eq!(g.get(0, 0), 1.0, epsilon = 1e-12);
        assert_relative_eq!(g.get(0, 1), 0.5, epsilon = 1e-12);
        for n in 2..=8 {
            let s = regular_simplex(n).unwrap();
            let d01 = s.vertex(0).distance(s.vertex(1));
            for i in 0..=n {
                for j in i + 1..=n {
                    assert_relative_eq!(s.vertex(i).distance(s.vertex(j)), d01, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn regular_simplex_rejects_out_of_range() {
        assert!(regular_simplex(1).is_err());
        assert!(regular_simplex(9).is_err());
    }

    #[test]
    fn regular_simplex_normal_and_height_identities() {
        for n in 2..=6 {
            let s = regular_simplex(n).unwrap();
            let nf = n as f64;
            let sum = s.vertex_sum();
            let u0 = &s.facet_data()[0].unit_outward_normal;
            let su = sum.normalized().unwrap();
            for k in 0..n {
                assert!((u0[k] - su[k]).abs() < 1e-10);
            }
            // ‖(n+1)s_i − s‖ = n·√((n+1)/(2n))
            for i in 1..=n {
                let v = s.vertex(i).scale(nf + 1.0).sub(&sum);
                assert_relative_eq!(
                    v.norm(),
                    nf * ((nf + 1.0) / (2.0 * nf)).sqrt(),
                    max_relative = 1e-9
                );
            }
        }
    }

    #[test]
    fn min_height_ratio_regular_and_scale_invariance() {
        // golden value from the facet_data oracle: ‖s_i‖ = 1, m_j = √((n+1)/(2n))
        let s = regular_simplex(2).unwrap();
        let expect = 1.0 / ((3.0f64) / 4.0).sqrt();
        assert_relative_eq!(s.min_height_ratio(), expect, max_relative = 1e-12);

        let scaled = Simplex::new(s.vertices().iter().map(|v| v.scale(3.7)).collect()).unwrap();
        assert!((scaled.min_height_ratio() - s.min_height_ratio()).abs() < 1e-12);
    }

    #[test]
    fn flattening_increases_min_height_ratio() {
        let s = regular_simplex(3).unwrap();
        let base = s.min_height_ratio();
        // move vertex 3 toward the centroid of its opposite facet
        let f3 = &s.facet_data()[3];
        let v3 = s.vertex(3);
        let moved = v3.add(&f3.centroid.sub(v3).scale(0.6));
        let mut verts: Vec<Vector> = s.vertices().to_vec();
        verts[3] = moved;
        let flat = Simplex::new(verts).unwrap();
        assert!(flat.min_height_ratio() > base);
    }

    #[test]
    fn denominator_equals_n_times_height() {
        // |⟨u_i, (n+1)s_i − s⟩| = n·m_i
        for n in [2usize, 3, 5] {
            let s = regular_simplex(n).unwrap();
            let sum = s.vertex_sum();
            for f in s.facet_data() {
                let i = f.opposite_vertex_index;
                let d = f
                    .unit_outward_normal
                    .dot(&s.vertex(i).scale(n as f64 + 1.0).sub(&sum))
                    .abs();
                assert_relative_eq!(d, n as f64 * f.height, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn pyramid_identity_with_n_plus_one_form() {
        // Vol(S) = (1/n²)·|⟨u_i, (n+1)s_i − s⟩|·Vol_{n−1}(F_i)
        let s = Simplex::new(vec![
            Vector::new(vec![0.0, 0.0, 0.0]),
            Vector::new(vec![1.3, 0.1, 0.2]),
            Vector::new(vec![-0.3, 1.1, 0.4]),
            Vector::new(vec![0.2, -0.5, 0.9]),
        ])
        .unwrap();
        let n = 3.0;
        let sum = s.vertex_sum();
        for f in s.facet_data() {
            let i = f.opposite_vertex_index;
            let d = f
                .unit_outward_normal
                .dot(&s.vertex(i).scale(n + 1.0).sub(&sum))
                .abs();
            assert_relative_eq!(
                s.volume(),
                d * f.facet_volume / (n * n),
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let s = regular_simplex(3).unwrap();
        let text = s.to_json();
        let back = Simplex::from_json(&text).unwrap();
        assert_eq!(back.dim(), 3);
        assert_relative_eq!(back.volume(), s.volume(), max_relative = 1e-15);
    }

    #[test]
    fn json_vertex_count_checked() {
        assert!(Simplex::from_json(r#"{"n":3,"vertices":[[0,0,0],[1,0,0]]}"#).is_err());
    }

    #[test]
    fn barycentric_and_contains() {
        let s = unit_right_simplex(3);
        let lam = s.barycentric(&s.centroid()).unwrap();
        for l in &lam {
            assert_relative_eq!(*l, 0.25, epsilon = 1e-12);
        }
        assert!(s.contains(&s.centroid()).unwrap());
        assert!(!s.contains(&Vector::new(vec![2.0, 2.0, 2.0])).unwrap());
    }
}
