use nalgebra::{DMatrix, DVector};

/// Equality row removed by presolve because it is a linear combination
/// of the rows kept.
#[derive(Clone, Debug, PartialEq)]
pub struct DroppedRow {
    pub index: usize,
    pub label: String,
}

pub(crate) struct Presolved {
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
    /// Original indices of the kept rows, ascending.
    pub kept: Vec<usize>,
    pub dropped: Vec<DroppedRow>,
    /// A dependent row whose right-hand side contradicts the kept rows
    /// (certifies primal infeasibility of the equality system).
    pub inconsistent: Option<DroppedRow>,
}

/// Rank-revealing pass over the equality rows: pivoted modified
/// Gram-Schmidt on the rows of [A | b], with pivoting and dependence
/// decided on the A-part only. A row whose residual A-part norm falls
/// below `drop_tol · max(1, ‖row‖)` is dependent; if its carried b-part
/// residual is not small as well, the system is inconsistent.
pub(crate) fn drop_dependent_rows(
    a: &DMatrix<f64>,
    b: &DVector<f64>,
    labels: &[String],
    drop_tol: f64,
    consistency_tol: f64,
) -> Presolved {
    let p = a.nrows();
    let n = a.ncols();

    // residual rows, updated in place; column n carries b
    let mut work: Vec<DVector<f64>> = (0..p)
        .map(|i| {
            let mut v = DVector::zeros(n + 1);
            v.rows_mut(0, n).copy_from(&a.row(i).transpose());
            v[n] = b[i];
            v
        })
        .collect();
    let thresholds: Vec<f64> = (0..p)
        .map(|i| drop_tol * work[i].rows(0, n).norm().max(1.0))
        .collect();

    let mut kept: Vec<usize> = Vec::new();
    let mut remaining: Vec<usize> = (0..p).collect();
    let mut basis: Vec<DVector<f64>> = Vec::new();

    loop {
        // largest residual A-norm among remaining rows; ties break on index
        let Some((pos, &row_idx)) = remaining
            .iter()
            .enumerate()
            .max_by(|(_, &i), (_, &j)| {
                let ni = work[i].rows(0, n).norm();
                let nj = work[j].rows(0, n).norm();
                ni.partial_cmp(&nj).unwrap().then(j.cmp(&i))
            })
            .map(|(pos, i)| (pos, i))
        else {
            break;
        };
        let norm = work[row_idx].rows(0, n).norm();
        if norm <= thresholds[row_idx] {
            break; // everything left is dependent
        }
        // orthonormalize against previous basis once more (re-orthogonalization
        // keeps the basis numerically orthogonal)
        for q in &basis {
            let coeff = work[row_idx].rows(0, n).dot(&q.rows(0, n));
            let update = q * coeff;
            work[row_idx] -= update;
        }
        let norm = work[row_idx].rows(0, n).norm();
        let q = &work[row_idx] / norm;
        for &other in &remaining {
            if other == row_idx {
                continue;
            }
            let coeff = work[other].rows(0, n).dot(&q.rows(0, n));
            let update = &q * coeff;
            work[other] -= update;
        }
        basis.push(q);
        kept.push(row_idx);
        remaining.remove(pos);
    }

    kept.sort_unstable();
    let mut dropped = Vec::new();
    let mut inconsistent = None;
    for &i in &remaining {
        let row = DroppedRow {
            index: i,
            label: labels[i].clone(),
        };
        if work[i][n].abs() > consistency_tol && inconsistent.is_none() {
            inconsistent = Some(row.clone());
        }
        dropped.push(row);
    }
    dropped.sort_by_key(|r| r.index);

    let mut a_red = DMatrix::zeros(kept.len(), n);
    let mut b_red = DVector::zeros(kept.len());
    for (r, &i) in kept.iter().enumerate() {
        a_red.row_mut(r).copy_from(&a.row(i));
        b_red[r] = b[i];
    }

    Presolved {
        a: a_red,
        b: b_red,
        kept,
        dropped,
        inconsistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("r{i}")).collect()
    }

    #[test]
    fn drops_duplicate_row() {
        let a = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 0.0]);
        let b = DVector::from_vec(vec![1.0, 2.0, 1.0]);
        let pre = drop_dependent_rows(&a, &b, &labels(3), 1e-10, 1e-8);
        assert_eq!(pre.kept, vec![0, 1]);
        assert_eq!(pre.dropped.len(), 1);
        assert_eq!(pre.dropped[0].index, 2);
        assert!(pre.inconsistent.is_none());
    }

    #[test]
    fn detects_inconsistent_dependency() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 2.0, 2.0]);
        let b = DVector::from_vec(vec![1.0, 3.0]); // 2x(row0) would need b=2
        let pre = drop_dependent_rows(&a, &b, &labels(2), 1e-10, 1e-8);
        assert_eq!(pre.kept.len(), 1);
        assert!(pre.inconsistent.is_some());
    }

    #[test]
    fn keeps_full_rank_systems_intact() {
        let a = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 0.0, 0.0, 1.0, -1.0]);
        let b = DVector::from_vec(vec![1.0, 0.0]);
        let pre = drop_dependent_rows(&a, &b, &labels(2), 1e-10, 1e-8);
        assert_eq!(pre.kept, vec![0, 1]);
        assert!(pre.dropped.is_empty());
        assert_eq!(pre.a, a);
    }

    #[test]
    fn drops_combination_not_just_duplicates() {
        // row2 = row0 + row1
        let a = DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 2.0]);
        let b = DVector::from_vec(vec![1.0, 1.0, 2.0]);
        let pre = drop_dependent_rows(&a, &b, &labels(3), 1e-10, 1e-8);
        assert_eq!(pre.kept.len(), 2);
        assert_eq!(pre.dropped.len(), 1);
        assert!(pre.inconsistent.is_none());
    }

    #[test]
    fn zero_row_with_nonzero_rhs_is_inconsistent() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        let b = DVector::from_vec(vec![1.0, 5.0]);
        let pre = drop_dependent_rows(&a, &b, &labels(2), 1e-10, 1e-8);
        assert!(pre.inconsistent.is_some());
    }
}
