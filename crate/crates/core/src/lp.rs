//! Tiny dense two-phase simplex solver for the feasibility and support
//! problems behind simplex-simplex intersection tests. Problems here are a
//! handful of variables and rows, so a plain tableau with Bland's rule is
//! enough.

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    /// Optimal solution of max cᵀz s.t. Az = b, z ≥ 0.
    Optimal {
        z: Vec<f64>,
        value: f64,
    },
    Infeasible,
    Unbounded,
}

const EPS: f64 = 1e-9;

/// Maximize cᵀz subject to A z = b, z ≥ 0 (b may have any sign).
pub fn solve(a: &[Vec<f64>], b: &[f64], c: &[f64]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { c.len() } else { a[0].len() };
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);
    debug_assert_eq!(c.len(), n);

    // tableau over n structural + m artificial columns, RHS made nonnegative
    let total = n + m;
    let mut t = vec![vec![0.0; total + 1]; m];
    for i in 0..m {
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i][j] = sign * a[i][j];
        }
        t[i][n + i] = 1.0;
        t[i][total] = sign * b[i];
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // phase 1: minimize sum of artificials
    let mut obj = vec![0.0; total + 1];
    for i in 0..m {
        for j in 0..=total {
            obj[j] += t[i][j];
        }
    }
    for j in n..total {
        obj[j] = 0.0;
    }
    let scale = b.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    if !run_simplex(&mut t, &mut obj, &mut basis, n) {
        return LpOutcome::Unbounded; // cannot happen in phase 1
    }
    if obj[total] > EPS * scale {
        return LpOutcome::Infeasible;
    }
    // drive artificials out of the basis where possible
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| t[i][j].abs() > EPS) {
                pivot(&mut t, &mut obj, &mut basis, i, j);
            }
        }
    }

    // phase 2: maximize cᵀz with artificials pinned at zero. The objective
    // row carries reduced costs (enter while positive), so it starts from +c
    // and has the basic columns eliminated.
    let mut obj2 = vec![0.0; total + 1];
    for (j, &cj) in c.iter().enumerate() {
        obj2[j] = cj;
    }
    for i in 0..m {
        let bj = basis[i];
        if bj < n && obj2[bj].abs() > 0.0 {
            let f = obj2[bj];
            for j in 0..=total {
                obj2[j] -= f * t[i][j];
            }
        }
    }
    // forbid artificial columns from re-entering
    let artificial_block: Vec<usize> = (n..total).filter(|&j| !basis.contains(&j)).collect();
    for &j in &artificial_block {
        for row in t.iter_mut() {
            row[j] = 0.0;
        }
        obj2[j] = f64::INFINITY; // never attractive
    }
    if !run_simplex(&mut t, &mut obj2, &mut basis, total) {
        return LpOutcome::Unbounded;
    }

    let mut z = vec![0.0; n];
    for i in 0..m {
        if basis[i] < n {
            z[basis[i]] = t[i][total];
        }
    }
    let value = c.iter().zip(&z).map(|(ci, zi)| ci * zi).sum();
    LpOutcome::Optimal { z, value }
}

/// Standard primal iterations; entering columns restricted to `cols`.
/// Returns false on unboundedness.
fn run_simplex(t: &mut [Vec<f64>], obj: &mut [f64], basis: &mut [usize], cols: usize) -> bool {
    let m = t.len();
    let total = obj.len() - 1;
    for _ in 0..10_000 {
        // Bland: first improving column
        let Some(enter) = (0..cols).find(|&j| obj[j] > EPS && obj[j].is_finite()) else {
            return true;
        };
        let mut leave = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            if t[i][enter] > EPS {
                let ratio = t[i][total] / t[i][enter];
                if ratio < best - EPS
                    || (ratio < best + EPS && leave.is_none_or(|l: usize| basis[i] < basis[l]))
                {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return false;
        };
        pivot_raw(t, obj, basis, leave, enter);
    }
    true
}

fn pivot(t: &mut [Vec<f64>], obj: &mut [f64], basis: &mut [usize], row: usize, col: usize) {
    pivot_raw(t, obj, basis, row, col);
}

fn pivot_raw(t: &mut [Vec<f64>], obj: &mut [f64], basis: &mut [usize], row: usize, col: usize) {
    let total = obj.len() - 1;
    let p = t[row][col];
    for j in 0..=total {
        t[row][j] /= p;
    }
    for i in 0..t.len() {
        if i != row && t[i][col].abs() > 0.0 {
            let f = t[i][col];
            for j in 0..=total {
                t[i][j] -= f * t[row][j];
            }
        }
    }
    if obj[col].is_finite() && obj[col].abs() > 0.0 {
        let f = obj[col];
        for j in 0..=total {
            if obj[j].is_finite() {
                obj[j] -= f * t[row][j];
            }
        }
    }
    basis[row] = col;
}
