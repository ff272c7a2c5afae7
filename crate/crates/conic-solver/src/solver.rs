use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use thiserror::Error;

use crate::cone::ConeSpec;
use crate::presolve::{drop_dependent_rows, DroppedRow};
use crate::program::ConicProgram;
use crate::scaling::Scaling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    PrimalInfeasible,
    DualInfeasible,
    MaxIterations,
    NumericalFailure,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub gap_tol: f64,
    pub feas_tol: f64,
    pub max_iterations: usize,
    /// Fraction of the distance to the cone boundary taken per step.
    pub step_fraction: f64,
    /// Residual-norm threshold below which an equality row is dropped
    /// as linearly dependent.
    pub drop_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            gap_tol: 1e-8,
            feas_tol: 1e-8,
            max_iterations: 200,
            step_fraction: 0.98,
            drop_tol: 1e-10,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        let positive = self.gap_tol > 0.0 && self.feas_tol > 0.0 && self.drop_tol > 0.0;
        if !positive {
            return Err(SolverError::BadConfig("tolerances must be strictly positive".into()));
        }
        if !(self.step_fraction > 0.0 && self.step_fraction < 1.0) {
            return Err(SolverError::BadConfig("step fraction must lie in (0, 1)".into()));
        }
        if self.max_iterations == 0 {
            return Err(SolverError::BadConfig("max iterations must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid solver configuration: {0}")]
    BadConfig(String),
    #[error("malformed program: {0}")]
    BadProgram(String),
}

/// Per-iteration convergence metrics, objectives in the program's sense.
#[derive(Clone, Copy, Debug)]
pub struct IterationStats {
    pub mu: f64,
    pub primal_residual: f64,
    pub dual_residual: f64,
    pub relative_gap: f64,
    pub primal_objective: f64,
    pub dual_objective: f64,
    pub step: f64,
}

/// Solver output. `x`, `y`, `z` are the τ-normalized primal/dual
/// points; `y` and `z` are stated in minimization convention, i.e.
/// Aᵀy + z equals c for a minimization program and −c for a
/// maximization one. `y` covers all original rows, with zeros on rows
/// presolve dropped. Objective values are in the program's sense.
#[derive(Clone, Debug)]
pub struct Solution {
    pub status: SolveStatus,
    pub x: DVector<f64>,
    pub y: DVector<f64>,
    pub z: DVector<f64>,
    pub primal_objective: f64,
    pub dual_objective: f64,
    pub iterations: usize,
    pub dropped_rows: Vec<DroppedRow>,
    pub trace: Vec<IterationStats>,
}

struct Iterate {
    x: DVector<f64>,
    y: DVector<f64>,
    z: DVector<f64>,
    tau: f64,
    kappa: f64,
}

impl Iterate {
    fn snapshot(&self) -> Iterate {
        Iterate {
            x: self.x.clone(),
            y: self.y.clone(),
            z: self.z.clone(),
            tau: self.tau,
            kappa: self.kappa,
        }
    }
}

struct Direction {
    dx: DVector<f64>,
    dy: DVector<f64>,
    dz: DVector<f64>,
    dtau: f64,
    dkappa: f64,
    dx_scaled: DVector<f64>,
    dz_scaled: DVector<f64>,
}

#[derive(Clone, Copy)]
struct Metrics {
    pres: f64,
    dres: f64,
    relgap: f64,
    pobj_min: f64,
    dobj_min: f64,
    mu: f64,
}

/// Solves the conic program with a Mehrotra predictor-corrector in a
/// homogeneous self-dual embedding. Deterministic: two calls with the
/// same inputs produce bitwise-identical solutions.
pub fn solve_conic(program: &ConicProgram, config: &SolverConfig) -> Result<Solution, SolverError> {
    config.validate()?;
    program.validate().map_err(SolverError::BadProgram)?;

    let c = program.c_min();
    let n = program.num_vars();
    let total_rows = program.num_rows();

    let consistency_tol = config.feas_tol * (1.0 + program.b.amax());
    let pre = drop_dependent_rows(
        &program.a,
        &program.b,
        &program.row_labels,
        config.drop_tol,
        consistency_tol,
    );

    if pre.inconsistent.is_some() {
        // a dependent row contradicts the rows spanning it: the equality
        // system has no solution at all
        return Ok(Solution {
            status: SolveStatus::PrimalInfeasible,
            x: DVector::zeros(n),
            y: DVector::zeros(total_rows),
            z: DVector::zeros(n),
            primal_objective: f64::NAN,
            dual_objective: f64::NAN,
            iterations: 0,
            dropped_rows: pre.dropped,
            trace: Vec::new(),
        });
    }

    let a = pre.a;
    let b = pre.b;
    let p = a.nrows();
    let nu = (program.cone.barrier_degree() + 1) as f64;
    let norm_b = 1.0 + b.norm();
    let norm_c = 1.0 + c.norm();

    let metrics_of = |it: &Iterate| -> Metrics {
        let inv_tau = 1.0 / it.tau;
        let ax = &a * &it.x;
        let aty = a.transpose() * &it.y;
        let pres = (&ax * inv_tau - &b).norm() / norm_b;
        let dres = (&aty + &it.z - &c * it.tau).norm() * inv_tau / norm_c;
        let pobj_min = c.dot(&it.x) * inv_tau;
        let dobj_min = b.dot(&it.y) * inv_tau;
        let relgap = (pobj_min - dobj_min).abs() / (1.0 + pobj_min.abs());
        let mu = (it.x.dot(&it.z) + it.tau * it.kappa) / nu;
        Metrics { pres, dres, relgap, pobj_min, dobj_min, mu }
    };
    let converged = |m: &Metrics| {
        m.pres <= config.feas_tol && m.dres <= config.feas_tol && m.relgap <= config.gap_tol
    };

    // Initial point: identity blocks and unit orthant entries scaled by
    // 1 + ‖b‖∞, for both x and z.
    let scale0 = 1.0 + b.amax();
    let mut it = Iterate {
        x: initial_cone_point(program, scale0),
        y: DVector::zeros(p),
        z: initial_cone_point(program, scale0),
        tau: 1.0,
        kappa: 1.0,
    };

    let mut trace: Vec<IterationStats> = Vec::new();
    let mut best: Option<(Metrics, Iterate)> = None;
    let mut failed = false;

    for _ in 0..config.max_iterations {
        let m = metrics_of(&it);
        trace.push(IterationStats {
            mu: m.mu,
            primal_residual: m.pres,
            dual_residual: m.dres,
            relative_gap: m.relgap,
            primal_objective: program.value_from_min(m.pobj_min),
            dual_objective: program.value_from_min(m.dobj_min),
            step: 0.0,
        });
        let merit = m.pres.max(m.dres).max(m.relgap);
        if best
            .as_ref()
            .is_none_or(|(bm, _)| merit < bm.pres.max(bm.dres).max(bm.relgap))
        {
            best = Some((m, it.snapshot()));
        }

        if converged(&m) {
            let iters = trace.len() - 1;
            return Ok(finish(program, &it, SolveStatus::Optimal, iters, pre.dropped, trace, &pre.kept));
        }

        // Farkas-style certificates for infeasibility
        let aty = a.transpose() * &it.y;
        let bty = b.dot(&it.y);
        if bty > 0.0 {
            let cert = (&aty + &it.z).norm() / bty;
            if cert <= config.feas_tol * norm_c {
                let iters = trace.len() - 1;
                return Ok(finish(program, &it, SolveStatus::PrimalInfeasible, iters, pre.dropped, trace, &pre.kept));
            }
        }
        let ctx = c.dot(&it.x);
        if ctx < 0.0 {
            let cert = (&a * &it.x).norm() / (-ctx);
            if cert <= config.feas_tol * norm_b {
                let iters = trace.len() - 1;
                return Ok(finish(program, &it, SolveStatus::DualInfeasible, iters, pre.dropped, trace, &pre.kept));
            }
        }

        let Some(scaling) = Scaling::compute(&program.cone, &it.x, &it.z) else {
            failed = true;
            break;
        };

        // Schur complement S = A·G·Aᵀ, shared by both directions
        let mut ga_rows = DMatrix::zeros(p, n);
        for i in 0..p {
            let gi = scaling.g(&a.row(i).transpose());
            ga_rows.row_mut(i).copy_from(&gi.transpose());
        }
        let s_mat = &ga_rows * a.transpose();
        let s_mat = (&s_mat + s_mat.transpose()) * 0.5;
        let Some(s_chol) = factor_schur(s_mat) else {
            failed = true;
            break;
        };

        let gc = scaling.g(&c);
        let agc = &a * &gc;
        let u1 = solve_refined(&s_chol, &a, &ga_rows, &(&b + &agc));

        let r_p = &a * &it.x - &b * it.tau;
        let r_d = &c * it.tau - &aty - &it.z;
        let r_g = bty - ctx - it.kappa;

        let newton = |rhs_p: &DVector<f64>,
                      rhs_d: &DVector<f64>,
                      rhs_g: f64,
                      rhs_s: &DVector<f64>,
                      rhs_k: f64|
         -> Direction {
            let l = scaling.lyapunov(rhs_s);
            let phi_l = scaling.phi(&l);
            let g_rhs_d = scaling.g(rhs_d);
            let rhs_y = rhs_p - &a * &g_rhs_d - &a * &phi_l;
            let v2 = solve_refined(&s_chol, &a, &ga_rows, &rhs_y);
            let denom = b.dot(&u1) - agc.dot(&u1) + c.dot(&gc) + it.kappa / it.tau;
            let numer =
                rhs_g - b.dot(&v2) + agc.dot(&v2) + gc.dot(rhs_d) + c.dot(&phi_l) + rhs_k / it.tau;
            let dtau = numer / denom;
            let dy = &v2 + &u1 * dtau;
            let t = rhs_d + a.transpose() * &dy - &c * dtau;
            let dz = -&t;
            let dz_scaled = -scaling.phi_t(&t);
            let dx_scaled = &l - &dz_scaled;
            let dx = scaling.phi(&dx_scaled);
            let dkappa = (rhs_k - it.kappa * dtau) / it.tau;
            Direction { dx, dy, dz, dtau, dkappa, dx_scaled, dz_scaled }
        };

        let lambda_sq = scaling.lambda_squared();

        // predictor (affine) direction
        let aff = newton(&(-&r_p), &(-&r_d), -r_g, &(-&lambda_sq), -it.tau * it.kappa);
        let alpha_aff = step_to_boundary(&scaling, &aff, &it, 1.0);

        let mu_aff = {
            let xz = (&it.x + &aff.dx * alpha_aff).dot(&(&it.z + &aff.dz * alpha_aff));
            let tk = (it.tau + alpha_aff * aff.dtau) * (it.kappa + alpha_aff * aff.dkappa);
            (xz + tk) / nu
        };
        let sigma = (mu_aff / m.mu).powi(3).clamp(0.0, 1.0);

        // corrector: recentre to σμ and subtract the Mehrotra
        // second-order term computed from the affine direction
        let eta = 1.0 - sigma;
        let mut rhs_s = -&lambda_sq - scaling.jordan(&aff.dx_scaled, &aff.dz_scaled);
        add_identity(&mut rhs_s, &program.cone, sigma * m.mu);
        let rhs_k = sigma * m.mu - it.tau * it.kappa - aff.dtau * aff.dkappa;
        let dir = newton(&(-&r_p * eta), &(-&r_d * eta), -r_g * eta, &rhs_s, rhs_k);

        let alpha_max = step_to_boundary(&scaling, &dir, &it, 1.0 / config.step_fraction);
        let alpha = (config.step_fraction * alpha_max).min(1.0);
        if !alpha.is_finite() || alpha <= 1e-10 {
            failed = true;
            break;
        }

        it.x += &dir.dx * alpha;
        it.y += &dir.dy * alpha;
        it.z += &dir.dz * alpha;
        it.tau += alpha * dir.dtau;
        it.kappa += alpha * dir.dkappa;
        trace.last_mut().expect("pushed above").step = alpha;
    }

    // the final update never went through the loop-top check
    let m = metrics_of(&it);
    let merit = m.pres.max(m.dres).max(m.relgap);
    if best
        .as_ref()
        .is_none_or(|(bm, _)| merit < bm.pres.max(bm.dres).max(bm.relgap))
    {
        best = Some((m, it.snapshot()));
    }

    let (bm, best_it) = best.expect("at least one iterate recorded");
    let status = if converged(&bm) {
        SolveStatus::Optimal
    } else if failed {
        SolveStatus::NumericalFailure
    } else {
        SolveStatus::MaxIterations
    };
    let iters = trace.len();
    Ok(finish(program, &best_it, status, iters, pre.dropped, trace, &pre.kept))
}

fn initial_cone_point(program: &ConicProgram, scale: f64) -> DVector<f64> {
    let layout = program.layout();
    let mut v = DVector::zeros(program.num_vars());
    for (bi, &s) in program.cone.psd_block_sizes.iter().enumerate() {
        for i in 0..s {
            v[layout.psd_coord(bi, i, i)] = scale;
        }
    }
    for k in layout.nonneg_range() {
        v[k] = scale;
    }
    v
}

fn add_identity(v: &mut DVector<f64>, cone: &ConeSpec, weight: f64) {
    let layout = cone.layout();
    for (bi, &s) in cone.psd_block_sizes.iter().enumerate() {
        for i in 0..s {
            v[layout.psd_coord(bi, i, i)] += weight;
        }
    }
    for k in layout.nonneg_range() {
        v[k] += weight;
    }
}

fn factor_schur(s: DMatrix<f64>) -> Option<Cholesky<f64, Dyn>> {
    let base = s.diagonal().amax().max(1.0);
    let mut shifted = s.clone();
    let mut shift = 0.0_f64;
    for attempt in 0..8 {
        if attempt > 0 {
            let new_shift = base * 1e-14 * 100f64.powi(attempt - 1);
            for i in 0..shifted.nrows() {
                shifted[(i, i)] += new_shift - shift;
            }
            shift = new_shift;
        }
        if let Some(chol) = Cholesky::new(shifted.clone()) {
            return Some(chol);
        }
    }
    None
}

/// Schur solve with one round of iterative refinement; S·v is applied
/// as ga_rows·(Aᵀ)ᵀv to match the factorized operator.
fn solve_refined(
    chol: &Cholesky<f64, Dyn>,
    a: &DMatrix<f64>,
    ga_rows: &DMatrix<f64>,
    rhs: &DVector<f64>,
) -> DVector<f64> {
    let mut v = chol.solve(rhs);
    let resid = rhs - ga_rows * (a.transpose() * &v);
    v += chol.solve(&resid);
    v
}

fn step_to_boundary(scaling: &Scaling, dir: &Direction, it: &Iterate, cap: f64) -> f64 {
    let mut alpha = scaling.max_step(&dir.dx_scaled, cap);
    alpha = alpha.min(scaling.max_step(&dir.dz_scaled, cap));
    if dir.dtau < 0.0 {
        alpha = alpha.min(-it.tau / dir.dtau);
    }
    if dir.dkappa < 0.0 {
        alpha = alpha.min(-it.kappa / dir.dkappa);
    }
    alpha
}

fn finish(
    program: &ConicProgram,
    it: &Iterate,
    status: SolveStatus,
    iterations: usize,
    dropped: Vec<DroppedRow>,
    trace: Vec<IterationStats>,
    kept_rows: &[usize],
) -> Solution {
    let c = program.c_min();
    let expand_y = |y_red: &DVector<f64>| {
        let mut y_full = DVector::zeros(program.num_rows());
        for (r, &orig) in kept_rows.iter().enumerate() {
            y_full[orig] = y_red[r];
        }
        y_full
    };
    match status {
        SolveStatus::PrimalInfeasible | SolveStatus::DualInfeasible => Solution {
            // raw Farkas ray; callers consume the status
            status,
            x: it.x.clone(),
            y: expand_y(&it.y),
            z: it.z.clone(),
            primal_objective: f64::NAN,
            dual_objective: f64::NAN,
            iterations,
            dropped_rows: dropped,
            trace,
        },
        _ => {
            let inv_tau = 1.0 / it.tau;
            let x = &it.x * inv_tau;
            let y = expand_y(&(&it.y * inv_tau));
            let z = &it.z * inv_tau;
            let pobj = program.value_from_min(c.dot(&x));
            let dobj = program.value_from_min(program.b.dot(&y));
            Solution {
                status,
                x,
                y,
                z,
                primal_objective: pobj,
                dual_objective: dobj,
                iterations,
                dropped_rows: dropped,
                trace,
            }
        }
    }
}
