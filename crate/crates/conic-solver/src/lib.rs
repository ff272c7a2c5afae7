//! Dense primal-dual interior-point solver for conic linear programs
//!
//! ```text
//! minimize    ⟨c, x⟩
//! subject to  A x = b,   x ∈ K,
//! ```
//!
//! where K is a product of positive-semidefinite blocks and a
//! nonnegative orthant. Symmetric matrix variables are vectorized with
//! √2-scaled off-diagonals so that Frobenius inner products of matrices
//! become dot products of vectors.
//!
//! The algorithm is a Mehrotra predictor-corrector with Nesterov-Todd
//! scaling inside a homogeneous self-dual embedding, so primal or dual
//! infeasibility is detected through the τ/κ ratio instead of diverging.
//! A presolve pass drops linearly dependent equality rows (the moment
//! models generate them by construction) and reports what it dropped.
//!
//! Solves are single-threaded and deterministic: the same program and
//! configuration yield bitwise-identical `Solution`s.

mod cone;
mod presolve;
mod program;
mod residuals;
mod scaling;
mod solver;

pub use cone::{ConeSpec, VarLayout};
pub use presolve::DroppedRow;
pub use program::{ConicProgram, ProgramBuilder, Sense};
pub use residuals::{compute_residuals, ResidualReport};
pub use solver::{solve_conic, IterationStats, Solution, SolveStatus, SolverConfig, SolverError};
