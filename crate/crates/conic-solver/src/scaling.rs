use nalgebra::{DMatrix, DVector};

use crate::cone::{mat_to_svec, svec_to_mat, ConeSpec, VarLayout};

/// Nesterov-Todd scaling point for one cone block.
///
/// For a PSD block with iterates X, Z ≻ 0 the scaling is stored in
/// factor form R with W = RRᵀ, chosen so that R⁻¹XR⁻ᵀ = RᵀZR = Λ, the
/// common diagonalized scaled point. For the orthant the factor is the
/// componentwise w = √(x/z) with λ = √(xz).
pub(crate) enum BlockScaling {
    Psd {
        size: usize,
        r: DMatrix<f64>,
        w: DMatrix<f64>,
        lambda: DVector<f64>,
    },
    Orthant {
        w: DVector<f64>,
        lambda: DVector<f64>,
    },
}

pub(crate) struct Scaling {
    layout: VarLayout,
    blocks: Vec<BlockScaling>,
}

/// Factors a symmetric positive definite matrix as M = L·Lᵀ. Uses
/// Cholesky, falling back to an eigendecomposition with clamped
/// eigenvalues when the matrix has drifted to the cone boundary; the
/// algebra downstream only needs *some* square factor, not a
/// triangular one.
fn factor_spd(m: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    if let Some(chol) = m.clone().cholesky() {
        return Some(chol.l());
    }
    let eig = m.clone().symmetric_eigen();
    let max_eig = eig.eigenvalues.iter().cloned().fold(f64::MIN, f64::max);
    if !(max_eig.is_finite() && max_eig > 0.0) {
        return None;
    }
    let floor = max_eig * 1e-14;
    let mut l = eig.eigenvectors.clone();
    for j in 0..m.nrows() {
        l.column_mut(j).scale_mut(eig.eigenvalues[j].max(floor).sqrt());
    }
    Some(l)
}

impl Scaling {
    /// Computes the NT scaling for the current (x, z); both must be in
    /// the interior of the cone.
    pub fn compute(cone: &ConeSpec, x: &DVector<f64>, z: &DVector<f64>) -> Option<Scaling> {
        let layout = cone.layout();
        let mut blocks = Vec::with_capacity(cone.psd_block_sizes.len() + 1);
        for (bi, &s) in cone.psd_block_sizes.iter().enumerate() {
            let range = layout.psd_block_range(bi);
            let xm = svec_to_mat(s, &x.as_slice()[range.clone()]);
            let zm = svec_to_mat(s, &z.as_slice()[range]);
            let lx = factor_spd(&xm)?;
            // lxᵀ·Z·lx = V·D·Vᵀ gives Λ = D^{1/2} and R = lx·V·D^{-1/4}
            let inner = lx.transpose() * &zm * &lx;
            let inner = (&inner + inner.transpose()) * 0.5;
            let eig = inner.symmetric_eigen();
            if eig.eigenvalues.iter().any(|&d| !(d.is_finite() && d > 0.0)) {
                return None;
            }
            let lambda = eig.eigenvalues.map(|d| d.sqrt());
            let mut r = &lx * &eig.eigenvectors;
            for j in 0..s {
                let q = eig.eigenvalues[j].powf(0.25);
                r.column_mut(j).scale_mut(1.0 / q);
            }
            let w = &r * r.transpose();
            blocks.push(BlockScaling::Psd { size: s, r, w, lambda });
        }
        if cone.nonneg_length > 0 {
            let range = layout.nonneg_range();
            let xs = DVector::from_row_slice(&x.as_slice()[range.clone()]);
            let zs = DVector::from_row_slice(&z.as_slice()[range]);
            if xs.iter().chain(zs.iter()).any(|&v| !(v.is_finite() && v > 0.0)) {
                return None;
            }
            let w = xs.zip_map(&zs, |a, b| (a / b).sqrt());
            let lambda = xs.zip_map(&zs, |a, b| (a * b).sqrt());
            blocks.push(BlockScaling::Orthant { w, lambda });
        }
        Some(Scaling { layout, blocks })
    }

    fn map_blocks(
        &self,
        v: &DVector<f64>,
        psd: impl Fn(&BlockScaling, &DMatrix<f64>) -> DMatrix<f64>,
        orthant: impl Fn(&DVector<f64>, &DVector<f64>) -> DVector<f64>,
    ) -> DVector<f64> {
        let mut out = DVector::zeros(v.len());
        let mut psd_idx = 0;
        for block in &self.blocks {
            match block {
                BlockScaling::Psd { size, .. } => {
                    let range = self.layout.psd_block_range(psd_idx);
                    let m = svec_to_mat(*size, &v.as_slice()[range.clone()]);
                    let mapped = psd(block, &m);
                    let mapped = (&mapped + mapped.transpose()) * 0.5;
                    mat_to_svec(&mapped, &mut out.as_mut_slice()[range]);
                    psd_idx += 1;
                }
                BlockScaling::Orthant { w, .. } => {
                    let range = self.layout.nonneg_range();
                    let vs = DVector::from_row_slice(&v.as_slice()[range.clone()]);
                    out.rows_mut(range.start, range.end - range.start)
                        .copy_from(&orthant(w, &vs));
                }
            }
        }
        out
    }

    /// Φv: svec(R·M·Rᵀ) per PSD block, w∘v on the orthant.
    pub fn phi(&self, v: &DVector<f64>) -> DVector<f64> {
        self.map_blocks(
            v,
            |b, m| match b {
                BlockScaling::Psd { r, .. } => r * m * r.transpose(),
                _ => unreachable!(),
            },
            |w, vs| w.component_mul(vs),
        )
    }

    /// Φᵀv: svec(Rᵀ·M·R) per PSD block, w∘v on the orthant.
    pub fn phi_t(&self, v: &DVector<f64>) -> DVector<f64> {
        self.map_blocks(
            v,
            |b, m| match b {
                BlockScaling::Psd { r, .. } => r.transpose() * m * r,
                _ => unreachable!(),
            },
            |w, vs| w.component_mul(vs),
        )
    }

    /// Gv = ΦΦᵀv: svec(W·M·W) per PSD block, w²∘v on the orthant.
    pub fn g(&self, v: &DVector<f64>) -> DVector<f64> {
        self.map_blocks(
            v,
            |b, m| match b {
                BlockScaling::Psd { w, .. } => w * m * w,
                _ => unreachable!(),
            },
            |w, vs| w.component_mul(w).component_mul(vs),
        )
    }

    /// Solves λ∘u = rhs in scaled coordinates (Λ diagonal, so this is a
    /// closed-form Lyapunov solve per block).
    pub fn lyapunov(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(rhs.len());
        let mut psd_idx = 0;
        for block in &self.blocks {
            match block {
                BlockScaling::Psd { size, lambda, .. } => {
                    let range = self.layout.psd_block_range(psd_idx);
                    let m = svec_to_mat(*size, &rhs.as_slice()[range.clone()]);
                    let mut u = m.clone();
                    for i in 0..*size {
                        for j in 0..*size {
                            u[(i, j)] = 2.0 * m[(i, j)] / (lambda[i] + lambda[j]);
                        }
                    }
                    mat_to_svec(&u, &mut out.as_mut_slice()[range]);
                    psd_idx += 1;
                }
                BlockScaling::Orthant { lambda, .. } => {
                    let range = self.layout.nonneg_range();
                    for (k, idx) in range.enumerate() {
                        out[idx] = rhs[idx] / lambda[k];
                    }
                }
            }
        }
        out
    }

    /// Jordan product u∘v in scaled coordinates: (UV + VU)/2 per PSD
    /// block, componentwise on the orthant.
    pub fn jordan(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(u.len());
        let mut psd_idx = 0;
        for block in &self.blocks {
            match block {
                BlockScaling::Psd { size, .. } => {
                    let range = self.layout.psd_block_range(psd_idx);
                    let um = svec_to_mat(*size, &u.as_slice()[range.clone()]);
                    let vm = svec_to_mat(*size, &v.as_slice()[range.clone()]);
                    let prod = (&um * &vm + &vm * &um) * 0.5;
                    mat_to_svec(&prod, &mut out.as_mut_slice()[range]);
                    psd_idx += 1;
                }
                BlockScaling::Orthant { .. } => {
                    let range = self.layout.nonneg_range();
                    for k in range {
                        out[k] = u[k] * v[k];
                    }
                }
            }
        }
        out
    }

    /// svec(λ∘λ) = svec(Λ²): the scaled complementarity value.
    pub fn lambda_squared(&self) -> DVector<f64> {
        let mut out = DVector::zeros(self.layout.total_dim());
        let mut psd_idx = 0;
        for block in &self.blocks {
            match block {
                BlockScaling::Psd { size, lambda, .. } => {
                    let range = self.layout.psd_block_range(psd_idx);
                    let m = DMatrix::from_diagonal(&lambda.map(|l| l * l));
                    let _ = size;
                    mat_to_svec(&m, &mut out.as_mut_slice()[range]);
                    psd_idx += 1;
                }
                BlockScaling::Orthant { lambda, .. } => {
                    let range = self.layout.nonneg_range();
                    for (k, idx) in range.enumerate() {
                        out[idx] = lambda[k] * lambda[k];
                    }
                }
            }
        }
        out
    }

    /// Largest α ∈ (0, cap] with λ + α·d in the cone, where d is a
    /// direction in scaled coordinates.
    pub fn max_step(&self, d: &DVector<f64>, cap: f64) -> f64 {
        let mut alpha = cap;
        let mut psd_idx = 0;
        for block in &self.blocks {
            match block {
                BlockScaling::Psd { size, lambda, .. } => {
                    let range = self.layout.psd_block_range(psd_idx);
                    let dm = svec_to_mat(*size, &d.as_slice()[range]);
                    // λ + αD ⪰ 0  ⟺  I + α·Λ^{-1/2} D Λ^{-1/2} ⪰ 0
                    let mut t = dm;
                    for i in 0..*size {
                        for j in 0..*size {
                            t[(i, j)] /= (lambda[i] * lambda[j]).sqrt();
                        }
                    }
                    let t = (&t + t.transpose()) * 0.5;
                    let min_eig = t
                        .symmetric_eigen()
                        .eigenvalues
                        .iter()
                        .cloned()
                        .fold(f64::MAX, f64::min);
                    if min_eig < 0.0 {
                        alpha = alpha.min(1.0 / (-min_eig));
                    }
                    psd_idx += 1;
                }
                BlockScaling::Orthant { lambda, .. } => {
                    let range = self.layout.nonneg_range();
                    for (k, idx) in range.enumerate() {
                        if d[idx] < 0.0 {
                            alpha = alpha.min(-lambda[k] / d[idx]);
                        }
                    }
                }
            }
        }
        alpha
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::svec_of;

    fn random_spd(n: usize, seed: u64) -> DMatrix<f64> {
        // deterministic pseudo-random SPD matrix
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
        };
        let m = DMatrix::from_fn(n, n, |_, _| next());
        &m * m.transpose() + DMatrix::identity(n, n) * (n as f64)
    }

    #[test]
    fn nt_scaling_diagonalizes_both_points() {
        let cone = ConeSpec::new(vec![4], 3);
        let xm = random_spd(4, 7);
        let zm = random_spd(4, 13);
        let mut x = DVector::zeros(cone.total_dim());
        let mut z = DVector::zeros(cone.total_dim());
        x.rows_mut(0, 10).copy_from(&svec_of(&xm));
        z.rows_mut(0, 10).copy_from(&svec_of(&zm));
        for k in 0..3 {
            x[10 + k] = 1.5 + k as f64;
            z[10 + k] = 0.25 * (k + 1) as f64;
        }
        let sc = Scaling::compute(&cone, &x, &z).unwrap();

        // R⁻¹·X·R⁻ᵀ and Rᵀ·Z·R must both equal Λ
        let BlockScaling::Psd { r, lambda, .. } = &sc.blocks[0] else {
            panic!()
        };
        let rinv = r.clone().try_inverse().unwrap();
        let scaled_x = &rinv * &xm * rinv.transpose();
        let scaled_z = match &sc.blocks[0] {
            BlockScaling::Psd { r, .. } => r.transpose() * &zm * r,
            _ => unreachable!(),
        };
        for i in 0..4 {
            assert!((scaled_x[(i, i)] - lambda[i]).abs() < 1e-9, "x diag");
            assert!((scaled_z[(i, i)] - lambda[i]).abs() < 1e-9, "z diag");
            for j in 0..4 {
                if i != j {
                    assert!(scaled_x[(i, j)].abs() < 1e-9);
                    assert!(scaled_z[(i, j)].abs() < 1e-9);
                }
            }
        }

        // G maps z to x (W·Z·W = X) — the defining NT property
        let gz = sc.g(&z);
        for k in 0..x.len() {
            assert!((gz[k] - x[k]).abs() < 1e-8, "WzW=x at {k}: {} vs {}", gz[k], x[k]);
        }
    }

    #[test]
    fn adjoint_identity() {
        let cone = ConeSpec::new(vec![3], 2);
        let x = {
            let mut v = DVector::zeros(cone.total_dim());
            v.rows_mut(0, 6).copy_from(&svec_of(&random_spd(3, 3)));
            v[6] = 2.0;
            v[7] = 0.7;
            v
        };
        let z = {
            let mut v = DVector::zeros(cone.total_dim());
            v.rows_mut(0, 6).copy_from(&svec_of(&random_spd(3, 11)));
            v[6] = 1.0;
            v[7] = 3.0;
            v
        };
        let sc = Scaling::compute(&cone, &x, &z).unwrap();
        // ⟨Φu, v⟩ = ⟨u, Φᵀv⟩
        let u = DVector::from_fn(cone.total_dim(), |i, _| (i as f64 * 0.37).sin());
        let v = DVector::from_fn(cone.total_dim(), |i, _| (i as f64 * 0.71).cos());
        let lhs = sc.phi(&u).dot(&v);
        let rhs = u.dot(&sc.phi_t(&v));
        assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn lyapunov_solves_jordan_equation() {
        let cone = ConeSpec::new(vec![3], 2);
        let x = {
            let mut v = DVector::zeros(cone.total_dim());
            v.rows_mut(0, 6).copy_from(&svec_of(&random_spd(3, 5)));
            v[6] = 1.2;
            v[7] = 0.4;
            v
        };
        let z = {
            let mut v = DVector::zeros(cone.total_dim());
            v.rows_mut(0, 6).copy_from(&svec_of(&random_spd(3, 9)));
            v[6] = 2.2;
            v[7] = 1.4;
            v
        };
        let sc = Scaling::compute(&cone, &x, &z).unwrap();
        let rhs = DVector::from_fn(cone.total_dim(), |i, _| 0.1 + (i as f64 * 0.29).sin().abs());
        let u = sc.lyapunov(&rhs);
        // verify λ∘u = rhs via the Jordan product with svec(Λ)
        let lambda_svec = {
            let mut v = DVector::zeros(cone.total_dim());
            let mut psd_idx = 0;
            for b in &sc.blocks {
                match b {
                    BlockScaling::Psd { lambda, .. } => {
                        let range = sc.layout.psd_block_range(psd_idx);
                        mat_to_svec(
                            &DMatrix::from_diagonal(lambda),
                            &mut v.as_mut_slice()[range],
                        );
                        psd_idx += 1;
                    }
                    BlockScaling::Orthant { lambda, .. } => {
                        let range = sc.layout.nonneg_range();
                        for (k, idx) in range.enumerate() {
                            v[idx] = lambda[k];
                        }
                    }
                }
            }
            v
        };
        let back = sc.jordan(&lambda_svec, &u);
        assert!((back - &rhs).norm() < 1e-9);
    }
}
