//! Dense linear algebra and isometry primitives for small dimensions (n ≤ 8).
//!
//! Everything here is a pure function on immutable values; the rest of the
//! crate builds on these types.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Norm threshold below which a hyperplane-reflection normal is rejected.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// A point or direction in Euclidean n-space, n ≤ 8 in practice.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Vector {
        self.scale(-1.0)
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    /// Unit vector in the same direction; errors on (near-)zero input.
    pub fn normalized(&self) -> Result<Vector> {
        let n = self.norm();
        if n < UNIT_NORM_TOL {
            return Err(Error::InvalidInput("cannot normalize a zero vector".into()));
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|a| a.is_finite())
    }

    /// Angle to another vector in radians, both assumed nonzero.
    pub fn angle_to(&self, other: &Vector) -> f64 {
        let c = self.dot(other) / (self.norm() * other.norm());
        c.clamp(-1.0, 1.0).acos()
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Dense real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: rows.iter().map(|r| r.len()).find(|&l| l != c).unwrap_or(c),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    /// Matrix with the given vectors as columns (the paper-style M = [s₁,…,s_n]).
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.dim());
        if cols.iter().any(|v| v.dim() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: cols.iter().map(|v| v.dim()).find(|&l| l != r).unwrap_or(r),
            });
        }
        let mut m = Matrix::zeros(r, c);
        for (j, v) in cols.iter().enumerate() {
            for i in 0..r {
                m.set(i, j, v[i]);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0.0;
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.dim(),
            });
        }
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += self.get(i, j) * v[j];
            }
        }
        Ok(Vector(out))
    }

    /// Largest Euclidean column norm; used as the scale in degeneracy tests.
    pub fn max_column_norm(&self) -> f64 {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// Cholesky factor L with A = L·Lᵀ, or None if not positive definite.
    pub fn cholesky(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut l = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut sum = self.get(i, j);
                for k in 0..j {
                    sum -= l.get(i, k) * l.get(j, k);
                }
                if i == j {
                    if sum <= 0.0 {
                        return None;
                    }
                    l.set(i, i, sum.sqrt());
                } else {
                    l.set(i, j, sum / l.get(j, j));
                }
            }
        }
        Some(l)
    }
}

/// Determinant: cofactor expansion for n ≤ 3, LU with partial pivoting above.
/// Returns 0 for singular input.
pub fn determinant(m: &Matrix) -> f64 {
    assert!(m.is_square(), "determinant requires a square matrix");
    let n = m.rows();
    match n {
        0 => 1.0,
        1 => m.get(0, 0),
        2 => m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0),
        3 => {
            m.get(0, 0) * (m.get(1, 1) * m.get(2, 2) - m.get(1, 2) * m.get(2, 1))
                - m.get(0, 1) * (m.get(1, 0) * m.get(2, 2) - m.get(1, 2) * m.get(2, 0))
                + m.get(0, 2) * (m.get(1, 0) * m.get(2, 1) - m.get(1, 1) * m.get(2, 0))
        }
        _ => lu_determinant(m),
    }
}

fn lu_determinant(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut a = m.clone();
    let mut det = 1.0;
    for col in 0..n {
        let mut pivot = col;
        let mut best = a.get(col, col).abs();
        for r in col + 1..n {
            let v = a.get(r, col).abs();
            if v > best {
                best = v;
                pivot = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, tmp);
            }
            det = -det;
        }
        det *= a.get(col, col);
        for r in col + 1..n {
            let f = a.get(r, col) / a.get(col, col);
            for j in col..n {
                a.set(r, j, a.get(r, j) - f * a.get(col, j));
            }
        }
    }
    det
}

/// Scale-invariant singularity test: |det| < 1e−12·(max column norm)ⁿ.
pub fn is_singular(m: &Matrix) -> bool {
    let scale = m.max_column_norm().max(f64::MIN_POSITIVE);
    determinant(m).abs() < 1e-12 * scale.powi(m.rows() as i32)
}

/// Gram matrix G[i][j] = ⟨v_i, v_j⟩ of a vector system.
pub fn gram_matrix(vectors: &[Vector]) -> Result<Matrix> {
    let k = vectors.len();
    if k == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    let dim = vectors[0].dim();
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let d = vectors[i].dot(&vectors[j]);
            g.set(i, j, d);
            g.set(j, i, d);
        }
    }
    Ok(g)
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn matrix_inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::InvalidInput(
            "matrix inverse requires a square matrix".into(),
        ));
    }
    if is_singular(m) {
        return Err(Error::SingularMatrix);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut inv = Matrix::identity(n);
    for col in 0..n {
        let mut pivot = col;
        let mut best = a.get(col, col).abs();
        for r in col + 1..n {
            let v = a.get(r, col).abs();
            if v > best {
                best = v;
                pivot = r;
            }
        }
        if best == 0.0 {
            return Err(Error::SingularMatrix);
        }
        if pivot != col {
            for j in 0..n {
                let t = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, t);
                let t = inv.get(col, j);
                inv.set(col, j, inv.get(pivot, j));
                inv.set(pivot, j, t);
            }
        }
        let p = a.get(col, col);
        for j in 0..n {
            a.set(col, j, a.get(col, j) / p);
            inv.set(col, j, inv.get(col, j) / p);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a.get(r, col);
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a.set(r, j, a.get(r, j) - f * a.get(col, j));
                inv.set(r, j, inv.get(r, j) - f * inv.get(col, j));
            }
        }
    }
    Ok(inv)
}

/// A Euclidean isometry from one of the three families the volume problem
/// ranges over. Hyperplane reflections are through planes containing the
/// origin; configurations with the contact vertex elsewhere are handled by
/// translating the simplex first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param")]
pub enum Isometry {
    Translation(Vector),
    PointReflection(Vector),
    HyperplaneReflection(Vector),
}

impl Isometry {
    /// Reflection in the hyperplane through the origin with the given unit
    /// normal. The norm must be 1 within 1e−12.
    pub fn hyperplane_reflection(normal: Vector) -> Result<Self> {
        if (normal.norm() - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "hyperplane reflection normal must be unit length, got norm {}",
                normal.norm()
            )));
        }
        Ok(Isometry::HyperplaneReflection(normal))
    }

    pub fn dim(&self) -> usize {
        match self {
            Isometry::Translation(v)
            | Isometry::PointReflection(v)
            | Isometry::HyperplaneReflection(v) => v.dim(),
        }
    }

    /// Image of a point under the isometry.
    pub fn apply(&self, p: &Vector) -> Result<Vector> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(match self {
            Isometry::Translation(t) => p.add(t),
            Isometry::PointReflection(x) => x.scale(2.0).sub(p),
            Isometry::HyperplaneReflection(u) => p.sub(&u.scale(2.0 * p.dot(u))),
        })
    }
}

/// Convenience wrapper matching the spec-level operation name.
pub fn apply_isometry(iso: &Isometry, p: &Vector) -> Result<Vector> {
    iso.apply(p)
}
