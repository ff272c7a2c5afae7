use std::fmt;

use conic_solver::{
    compute_residuals, solve_conic, ConicProgram, ResidualReport, Solution, SolveStatus,
    SolverConfig, SolverError,
};
use graph_core::Graph;
use thiserror::Error;

use crate::models;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Theta,
    ThetaMinus,
    ThetaPlus,
    ThetaHat,
    ThetaHatPrime,
}

impl BoundKind {
    /// CLI spellings: theta, theta-, theta+, that, that'.
    pub fn parse(s: &str) -> Option<BoundKind> {
        match s {
            "theta" => Some(BoundKind::Theta),
            "theta-" => Some(BoundKind::ThetaMinus),
            "theta+" => Some(BoundKind::ThetaPlus),
            "that" => Some(BoundKind::ThetaHat),
            "that'" => Some(BoundKind::ThetaHatPrime),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::Theta => "theta",
            BoundKind::ThetaMinus => "theta-",
            BoundKind::ThetaPlus => "theta+",
            BoundKind::ThetaHat => "that",
            BoundKind::ThetaHatPrime => "that'",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A solved bound: the certified optimal value together with the
/// solution it came from and its recomputed residual report.
#[derive(Clone, Debug)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub value: f64,
    pub graph_fingerprint: String,
    pub solution: Solution,
    pub residuals: ResidualReport,
}

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("solver error: {0}")]
    Solver(#[from] SolverError),
    #[error("{kind} solve for graph {fingerprint} ended with status {status:?}")]
    NotOptimal {
        kind: BoundKind,
        status: SolveStatus,
        fingerprint: String,
    },
    #[error("theta_hat_prime is built by the moment extension, not by eval_bound")]
    MomentKind,
}

/// Solves `program` for `g`, certifies the residuals, and wraps the
/// result. Shared by the models here and by the moment extension.
pub fn certify(
    kind: BoundKind,
    g: &Graph,
    program: &ConicProgram,
    cfg: &SolverConfig,
) -> Result<BoundValue, BoundError> {
    let solution = solve_conic(program, cfg)?;
    if solution.status != SolveStatus::Optimal {
        return Err(BoundError::NotOptimal {
            kind,
            status: solution.status,
            fingerprint: g.fingerprint(),
        });
    }
    let residuals = compute_residuals(program, &solution);
    Ok(BoundValue {
        kind,
        value: solution.primal_objective,
        graph_fingerprint: g.fingerprint(),
        solution,
        residuals,
    })
}

/// Builds and solves the model for `kind` at the graph `g` (no
/// complement is taken here; callers choose the evaluation graph).
pub fn eval_bound(kind: BoundKind, g: &Graph, cfg: &SolverConfig) -> Result<BoundValue, BoundError> {
    let program = match kind {
        BoundKind::Theta => models::build_theta_primal(g),
        BoundKind::ThetaMinus => models::build_theta_minus(g),
        BoundKind::ThetaPlus => models::build_theta_plus(g),
        BoundKind::ThetaHat => models::build_hat_theta(g),
        BoundKind::ThetaHatPrime => return Err(BoundError::MomentKind),
    };
    certify(kind, g, &program, cfg)
}
