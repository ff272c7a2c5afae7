use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SinkhornError {
    #[error("input must be square and symmetric")]
    NotSymmetric,
    #[error("entry ({0}, {1}) is negative")]
    NegativeEntry(usize, usize),
    #[error("diagonal entry {0} is not 1")]
    BadDiagonal(usize),
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
}

const MAX_ITERATIONS: usize = 10_000;
const TARGET: f64 = 1e-12;

/// Symmetric Sinkhorn scaling: finds d > 0 with D·x·D doubly
/// stochastic, where D = Diag(d). The input must be symmetric,
/// entrywise nonnegative, with unit diagonal (which guarantees
/// scalability). Iterates d ← d / √(row sums of DxD) until the largest
/// row-sum deviation is below 1e-12.
///
/// The scaled matrix inherits the zero pattern of x, its positive
/// semidefiniteness, and — when x is the block of a θ⁺-optimal bordered
/// matrix — satisfies tr(DxD) ≤ θ⁺.
pub fn sinkhorn_feasible_point(x: &DMatrix<f64>) -> Result<(DVector<f64>, DMatrix<f64>), SinkhornError> {
    let n = x.nrows();
    if n != x.ncols() {
        return Err(SinkhornError::NotSymmetric);
    }
    for i in 0..n {
        if (x[(i, i)] - 1.0).abs() > 1e-6 {
            return Err(SinkhornError::BadDiagonal(i));
        }
        for j in 0..n {
            if (x[(i, j)] - x[(j, i)]).abs() > 1e-9 {
                return Err(SinkhornError::NotSymmetric);
            }
            if x[(i, j)] < -1e-7 {
                return Err(SinkhornError::NegativeEntry(i, j));
            }
        }
    }
    // solver output may carry noise up to the feasibility tolerance
    let x = x.map(|v| v.max(0.0));

    let mut d = DVector::from_element(n, 1.0);
    for _ in 0..MAX_ITERATIONS {
        let mut worst: f64 = 0.0;
        let mut row_sums = DVector::zeros(n);
        for i in 0..n {
            let mut sum = 0.0;
            for j in 0..n {
                sum += d[i] * x[(i, j)] * d[j];
            }
            row_sums[i] = sum;
            worst = worst.max((sum - 1.0).abs());
        }
        if worst <= TARGET {
            let r = DMatrix::from_fn(n, n, |i, j| d[i] * x[(i, j)] * d[j]);
            return Ok((d, r));
        }
        for i in 0..n {
            d[i] /= row_sums[i].sqrt();
        }
    }
    Err(SinkhornError::NoConvergence(MAX_ITERATIONS))
}
