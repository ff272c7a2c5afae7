use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Dense matrix of arbitrary-precision rationals, row-major.
///
/// `num::BigRational` keeps every entry in lowest terms with a positive
/// denominator, so equality is exact structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Entry from an integer fraction, e.g. `from_fraction(1, 3)` = 1/3.
    pub fn fraction(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn trace(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn matmul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// 0-based row indices of the nonzero entries of column `j`.
    pub fn column_support(&self, j: usize) -> Vec<usize> {
        (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).collect()
    }

    pub fn column_sum(&self, j: usize) -> BigRational {
        (0..self.rows).map(|i| self.get(i, j)).sum()
    }

    pub fn has_nonnegative_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| !self.get(i, j).is_negative())
    }

    /// Entries as f64, row-major (for handing exact points to the
    /// floating-point side).
    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|q| {
                let n = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
                let d = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
                n / d
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_and_trace() {
        let mut a = RationalMatrix::zeros(2, 2);
        a.set(0, 0, RationalMatrix::fraction(1, 2));
        a.set(0, 1, RationalMatrix::fraction(1, 2));
        a.set(1, 0, RationalMatrix::fraction(1, 2));
        a.set(1, 1, RationalMatrix::fraction(1, 2));
        let sq = a.matmul(&a);
        assert_eq!(sq, a); // idempotent
        assert_eq!(a.trace(), BigRational::one());
        assert!(a.is_symmetric());
    }

    #[test]
    fn normalization_is_automatic() {
        let q = RationalMatrix::fraction(2, -4);
        assert_eq!(q, RationalMatrix::fraction(-1, 2));
        assert_eq!(q.to_string(), "-1/2");
    }
}
