use nalgebra::{DMatrix, DVector};

pub(crate) const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Product cone: PSD blocks followed by a nonnegative orthant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    pub psd_block_sizes: Vec<usize>,
    pub nonneg_length: usize,
}

impl ConeSpec {
    pub fn new(psd_block_sizes: Vec<usize>, nonneg_length: usize) -> Self {
        assert!(psd_block_sizes.iter().all(|&s| s > 0), "PSD blocks must be nonempty");
        ConeSpec { psd_block_sizes, nonneg_length }
    }

    /// Total vectorized dimension: Σ sᵢ(sᵢ+1)/2 plus the orthant length.
    pub fn total_dim(&self) -> usize {
        self.psd_block_sizes.iter().map(|&s| svec_len(s)).sum::<usize>() + self.nonneg_length
    }

    /// Barrier degree ν = Σ sᵢ + orthant length.
    pub(crate) fn barrier_degree(&self) -> usize {
        self.psd_block_sizes.iter().sum::<usize>() + self.nonneg_length
    }

    pub fn layout(&self) -> VarLayout {
        let mut offsets = Vec::with_capacity(self.psd_block_sizes.len());
        let mut off = 0;
        for &s in &self.psd_block_sizes {
            offsets.push(off);
            off += svec_len(s);
        }
        VarLayout {
            cone: self.clone(),
            psd_offsets: offsets,
            nonneg_offset: off,
        }
    }
}

pub fn svec_len(s: usize) -> usize {
    s * (s + 1) / 2
}

/// Coordinate bookkeeping for the vectorized product cone.
#[derive(Clone, Debug)]
pub struct VarLayout {
    cone: ConeSpec,
    psd_offsets: Vec<usize>,
    nonneg_offset: usize,
}

impl VarLayout {
    pub fn cone(&self) -> &ConeSpec {
        &self.cone
    }

    pub fn total_dim(&self) -> usize {
        self.cone.total_dim()
    }

    pub fn psd_block_size(&self, block: usize) -> usize {
        self.cone.psd_block_sizes[block]
    }

    pub fn psd_block_range(&self, block: usize) -> std::ops::Range<usize> {
        let s = self.cone.psd_block_sizes[block];
        self.psd_offsets[block]..self.psd_offsets[block] + svec_len(s)
    }

    /// Flat coordinate of entry (i, j) of a PSD block, 0-based, either
    /// index order.
    pub fn psd_coord(&self, block: usize, i: usize, j: usize) -> usize {
        let s = self.cone.psd_block_sizes[block];
        assert!(i < s && j < s, "entry ({i},{j}) outside block of size {s}");
        self.psd_offsets[block] + svec_index(s, i, j)
    }

    /// Multiplier turning a coefficient on the matrix entry (i, j) into
    /// a coefficient on the corresponding svec coordinate, counting the
    /// unordered pair once.
    pub fn entry_scale(i: usize, j: usize) -> f64 {
        if i == j {
            1.0
        } else {
            1.0 / SQRT2
        }
    }

    pub fn nonneg_coord(&self, k: usize) -> usize {
        assert!(k < self.cone.nonneg_length, "orthant index {k} out of range");
        self.nonneg_offset + k
    }

    pub fn nonneg_range(&self) -> std::ops::Range<usize> {
        self.nonneg_offset..self.nonneg_offset + self.cone.nonneg_length
    }

    /// Unpacks PSD block `block` of a full variable vector into a
    /// symmetric matrix.
    pub fn extract_block(&self, v: &DVector<f64>, block: usize) -> DMatrix<f64> {
        let s = self.cone.psd_block_sizes[block];
        svec_to_mat(s, &v.as_slice()[self.psd_block_range(block)])
    }
}

/// svec index of (i, j) within one block: lower triangle, column-major.
pub(crate) fn svec_index(s: usize, i: usize, j: usize) -> usize {
    let (col, row) = if i >= j { (j, i) } else { (i, j) };
    col * s - col * (col + 1) / 2 + row
}

/// Unpacks a block's svec slice into a symmetric matrix.
pub(crate) fn svec_to_mat(s: usize, v: &[f64]) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(s, s);
    let mut k = 0;
    for j in 0..s {
        for i in j..s {
            if i == j {
                m[(i, j)] = v[k];
            } else {
                let val = v[k] / SQRT2;
                m[(i, j)] = val;
                m[(j, i)] = val;
            }
            k += 1;
        }
    }
    m
}

/// Packs a symmetric matrix into svec coordinates (reads the lower
/// triangle).
pub(crate) fn mat_to_svec(m: &DMatrix<f64>, out: &mut [f64]) {
    let s = m.nrows();
    let mut k = 0;
    for j in 0..s {
        for i in j..s {
            out[k] = if i == j { m[(i, j)] } else { SQRT2 * m[(i, j)] };
            k += 1;
        }
    }
}

#[cfg(test)]
pub(crate) fn svec_of(m: &DMatrix<f64>) -> DVector<f64> {
    let mut v = DVector::zeros(svec_len(m.nrows()));
    mat_to_svec(m, v.as_mut_slice());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svec_roundtrip_preserves_inner_products() {
        let a = DMatrix::from_row_slice(3, 3, &[2.0, 1.0, 0.5, 1.0, 3.0, -1.0, 0.5, -1.0, 4.0]);
        let b = DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 2.0, 0.0, 5.0, 1.0, 2.0, 1.0, 0.0]);
        let va = svec_of(&a);
        let vb = svec_of(&b);
        let frob = (a.transpose() * &b).trace();
        assert!((va.dot(&vb) - frob).abs() < 1e-12);
        let back = svec_to_mat(3, va.as_slice());
        assert!((back - a).norm() < 1e-12);
    }

    #[test]
    fn layout_coordinates() {
        let cone = ConeSpec::new(vec![2, 3], 4);
        assert_eq!(cone.total_dim(), 3 + 6 + 4);
        let layout = cone.layout();
        assert_eq!(layout.psd_coord(0, 0, 0), 0);
        assert_eq!(layout.psd_coord(0, 1, 0), 1);
        assert_eq!(layout.psd_coord(0, 1, 1), 2);
        assert_eq!(layout.psd_coord(1, 0, 0), 3);
        assert_eq!(layout.psd_coord(1, 2, 1), 3 + 4);
        assert_eq!(layout.nonneg_coord(0), 9);
        assert_eq!(layout.nonneg_range(), 9..13);
    }
}
