//! Exact combinatorial oracles, all in enumeration or arbitrary-precision
//! rational arithmetic: stable sets, α, ω, χ with witnesses, assignment
//! matrices, the ρ / ψ maps between colourings and doubly stochastic
//! projection matrices, and the validator for combinatorial projection
//! matrices. These are the ground truth the SDP relaxations are tested
//! against, so nothing here uses floating point.
//!
//! Every operation is a pure function of immutable inputs; enumeration
//! guards keep the brute-force searches at desk scale.

mod chromatic;
mod partition;
mod projection;
mod rational;
mod stable;
mod transitive;

pub use chromatic::{chi_exact, ChiResult};
pub use partition::Partition;
pub use projection::{
    chi_via_projection, enumerate_assignment_matrices, enumerate_stable_partitions,
    is_combinatorial_projection, psi, rho, AssignmentMatrix, ProjectionDiagnostic,
};
pub use rational::RationalMatrix;
pub use stable::{alpha_exact, enumerate_stable_sets, omega_exact, AlphaResult};
pub use transitive::is_vertex_transitive_small;

use thiserror::Error;

/// Enumeration limits. The defaults keep every exact search below a
/// second on desk hardware.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Subset enumeration (stable sets, α).
    pub stable_sets: usize,
    /// Exact chromatic number.
    pub chromatic: usize,
    /// Set-partition and assignment-matrix enumeration.
    pub partitions: usize,
    /// Brute-force vertex-transitivity.
    pub transitivity: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            stable_sets: 20,
            chromatic: 12,
            partitions: 8,
            transitivity: 9,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("{op}: n = {n} exceeds the enumeration guard {limit}")]
    GuardExceeded { op: &'static str, n: usize, limit: usize },
    #[error("matrix is {rows}x{cols}, expected {n}x{n}")]
    DimensionMismatch { rows: usize, cols: usize, n: usize },
    #[error("assignment matrix has an all-zero column {0}")]
    ZeroColumn(usize),
    #[error("k = {k} outside 1..={n}")]
    BadColourCount { k: usize, n: usize },
    #[error("not a combinatorial projection matrix: {0}")]
    NotAProjection(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
}
