use serde::{Deserialize, Serialize};

use conic_solver::{ResidualReport, SolverConfig};
use theta_models::BoundValue;

/// Machine-readable bounds report; the JSON form is documented by
/// `docs/bounds_report.schema.json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub tool_version: String,
    pub graph: GraphDescriptor,
    pub bounds: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValues>,
    pub solver: SolverSettings,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDescriptor {
    /// Vertex and edge counts of the graph as loaded.
    pub n: usize,
    pub m: usize,
    pub source: String,
    pub fingerprint: String,
    /// Whether the bounds were evaluated at the complement.
    pub complemented: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundEntry {
    pub kind: String,
    pub value: f64,
    pub status: String,
    pub iterations: usize,
    /// Fingerprint of the graph the model was actually built on.
    pub graph_fingerprint: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub primal_residual: f64,
    pub dual_residual: f64,
    pub relative_gap: f64,
    pub complementarity: f64,
    pub min_psd_eigenvalue: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_orthant_entry: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExactValues {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub coloring: Vec<Vec<usize>>,
    pub max_stable_set: Vec<usize>,
    /// Cross-check through the projection-matrix characterization,
    /// present when the graph is small enough to enumerate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_via_projection: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolverSettings {
    pub gap_tol: f64,
    pub feas_tol: f64,
    pub max_iterations: usize,
}

impl From<&SolverConfig> for SolverSettings {
    fn from(cfg: &SolverConfig) -> Self {
        SolverSettings {
            gap_tol: cfg.gap_tol,
            feas_tol: cfg.feas_tol,
            max_iterations: cfg.max_iterations,
        }
    }
}

impl Certificate {
    pub fn from_residuals(r: &ResidualReport) -> Certificate {
        Certificate {
            primal_residual: r.primal_residual,
            dual_residual: r.dual_residual,
            relative_gap: r.relative_gap,
            complementarity: r.complementarity,
            min_psd_eigenvalue: r
                .min_psd_eigenvalues
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min),
            min_orthant_entry: r.min_orthant_entry,
        }
    }
}

impl BoundEntry {
    pub fn from_bound(bound: &BoundValue) -> BoundEntry {
        BoundEntry {
            kind: bound.kind.as_str().to_string(),
            value: bound.value,
            status: "optimal".to_string(),
            iterations: bound.solution.iterations,
            graph_fingerprint: bound.graph_fingerprint.clone(),
            certificate: Certificate::from_residuals(&bound.residuals),
        }
    }
}

/// Truncation (not rounding) to three decimals, the display convention
/// of the published tables.
pub fn trunc3(v: f64) -> f64 {
    (v * 1000.0).trunc() / 1000.0
}

pub fn round3(v: f64) -> f64 {
    (v * 1000.0).round() / 1000.0
}
