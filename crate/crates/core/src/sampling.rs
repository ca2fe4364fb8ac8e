//! Deterministic seeded sampling of the geometric objects the verification
//! suites range over: well-conditioned random simplices, admissible
//! reflection directions, interior points, and simplices satisfying the
//! single-upper-facet hypothesis.
//!
//! Everything takes an explicit ChaCha generator; there is no global RNG
//! state, so identical seeds give identical runs.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{gram_matrix, matrix_inverse, Matrix, Vector};
use crate::simplex::Simplex;

/// Standard normal deviate by Box-Muller.
pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Uniform direction on the unit sphere in n-space.
pub fn unit_vector(n: usize, rng: &mut ChaCha8Rng) -> Vector {
    loop {
        let v = Vector::new((0..n).map(|_| normal(rng)).collect());
        if let Ok(u) = v.normalized() {
            return u;
        }
    }
}

/// Uniform point of the standard k-simplex (Dirichlet(1,…,1) weights).
pub fn dirichlet(k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut w: Vec<f64> = (0..k)
        .map(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln())
        .collect();
    let total: f64 = w.iter().sum();
    for v in &mut w {
        *v /= total;
    }
    w
}

/// Random canonical simplex with Gaussian vertices, resampled until the
/// shape ratio max‖s_i‖/m_j stays below 8 so oracle comparisons at 1e−8
/// relative are well inside f64 headroom.
pub fn simplex(n: usize, rng: &mut ChaCha8Rng) -> Simplex {
    loop {
        let mut verts = vec![Vector::zeros(n)];
        for _ in 0..n {
            verts.push(Vector::new((0..n).map(|_| normal(rng)).collect()));
        }
        if let Ok(s) = Simplex::new(verts) {
            if s.min_height_ratio() < 8.0 {
                return s;
            }
        }
    }
}

/// Random unit direction with the simplex in its closed upper half-space,
/// sampled through the dual basis of the vertex cone so admissibility holds
/// by construction.
pub fn admissible_direction(s: &Simplex, rng: &mut ChaCha8Rng) -> Vector {
    let n = s.dim();
    let m = Matrix::from_columns(&s.vertices()[1..]).expect("canonical vertices");
    let g = gram_matrix(&s.vertices()[1..]).expect("same dimension");
    let dual = m
        .mul(&matrix_inverse(&g).expect("nondegenerate simplex"))
        .expect("shape");
    loop {
        let w = Vector::new(
            (0..n)
                .map(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln())
                .collect(),
        );
        let raw = dual.mul_vector(&w).expect("shape");
        if let Ok(u) = raw.normalized() {
            if crate::formulas::is_admissible(s, &u) {
                return u;
            }
        }
    }
}

/// Random interior point with Dirichlet barycentric weights.
pub fn interior_point(s: &Simplex, rng: &mut ChaCha8Rng) -> Vector {
    let lam = dirichlet(s.dim() + 1, rng);
    let mut x = Vector::zeros(s.dim());
    for (i, l) in lam.iter().enumerate() {
        x = x.add(&s.vertex(i).scale(*l));
    }
    x
}

/// Random simplex satisfying the single-upper-facet hypothesis: the outward
/// normal of F₀ is a nonnegative combination of the edge vectors,
/// equivalently (1,…,1)G⁻¹ ≥ 0 componentwise. Vertices are drawn clustered
/// around a common direction and rejected until the hypothesis holds.
pub fn single_upper_facet_simplex(n: usize, rng: &mut ChaCha8Rng) -> Simplex {
    let spread = match n {
        0..=3 => 0.45,
        4 => 0.35,
        _ => 0.28,
    };
    loop {
        let center = unit_vector(n, rng);
        let mut verts = vec![Vector::zeros(n)];
        for _ in 0..n {
            let noise = Vector::new((0..n).map(|_| spread * normal(rng)).collect());
            verts.push(center.add(&noise));
        }
        let Ok(s) = Simplex::new(verts) else { continue };
        if s.min_height_ratio() > 12.0 {
            continue;
        }
        let g = gram_matrix(&s.vertices()[1..]).expect("same dimension");
        let Ok(gi) = matrix_inverse(&g) else { continue };
        let nonneg = (0..n).all(|j| (0..n).map(|i| gi.get(i, j)).sum::<f64>() >= 0.0);
        if nonneg {
            return s;
        }
    }
}
