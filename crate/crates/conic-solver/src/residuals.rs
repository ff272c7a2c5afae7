use nalgebra::DVector;

use crate::cone::svec_to_mat;
use crate::program::ConicProgram;
use crate::solver::Solution;

/// Feasibility and optimality certificate for a solution against its
/// program, computed from scratch.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    /// ‖Ax − b‖ / (1 + ‖b‖)
    pub primal_residual: f64,
    /// ‖Aᵀy + z − c‖ / (1 + ‖c‖), minimization convention
    pub dual_residual: f64,
    /// ⟨x, z⟩ / (1 + |objective|)
    pub complementarity: f64,
    /// |primal − dual| / (1 + |primal|)
    pub relative_gap: f64,
    /// Minimum eigenvalue of each PSD block of x.
    pub min_psd_eigenvalues: Vec<f64>,
    /// Minimum orthant entry of x, if the cone has an orthant part.
    pub min_orthant_entry: Option<f64>,
}

impl ResidualReport {
    pub fn within(&self, feas_tol: f64, gap_tol: f64) -> bool {
        self.primal_residual <= feas_tol
            && self.dual_residual <= feas_tol
            && self.relative_gap <= gap_tol
    }
}

pub fn compute_residuals(program: &ConicProgram, solution: &Solution) -> ResidualReport {
    let c = program.c_min();
    let x = &solution.x;
    let primal_residual = (&program.a * x - &program.b).norm() / (1.0 + program.b.norm());
    let dual_residual =
        (program.a.transpose() * &solution.y + &solution.z - &c).norm() / (1.0 + c.norm());
    let pobj = c.dot(x);
    let complementarity = x.dot(&solution.z).abs() / (1.0 + pobj.abs());
    let dobj = program.b.dot(&solution.y);
    let relative_gap = (pobj - dobj).abs() / (1.0 + pobj.abs());

    let layout = program.layout();
    let min_psd_eigenvalues = program
        .cone
        .psd_block_sizes
        .iter()
        .enumerate()
        .map(|(bi, &s)| {
            let range = layout.psd_block_range(bi);
            let m = svec_to_mat(s, &x.as_slice()[range]);
            m.symmetric_eigen()
                .eigenvalues
                .iter()
                .cloned()
                .fold(f64::MAX, f64::min)
        })
        .collect();
    let min_orthant_entry = if program.cone.nonneg_length > 0 {
        let range = layout.nonneg_range();
        Some(
            DVector::from_row_slice(&x.as_slice()[range])
                .iter()
                .cloned()
                .fold(f64::MAX, f64::min),
        )
    } else {
        None
    };

    ResidualReport {
        primal_residual,
        dual_residual,
        complementarity,
        relative_gap,
        min_psd_eigenvalues,
        min_orthant_entry,
    }
}
