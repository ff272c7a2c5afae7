//! SDP models for the Lovász theta number θ, its Schrijver (θ⁻) and
//! Szegedy (θ⁺) strengthenings, and the projection variant θ̂ defined
//! as the minimum trace of a doubly stochastic, entrywise-nonnegative
//! PSD matrix vanishing on the non-adjacent pairs of its argument.
//! Also houses the closed forms for two-clique unions, the worst-case
//! gap formulas, and the Sinkhorn scaling used to turn θ⁺-optimal
//! blocks into θ̂-feasible points.
//!
//! Convention: the chromatic lower bound for a graph H is evaluated at
//! the complement, e.g. `eval_bound(ThetaHat, &h.complement(), …)`,
//! mirroring θ⁺(H̄) ≤ χ(H).

mod bounds;
mod closed_form;
mod models;
mod sinkhorn;

pub use bounds::{certify, eval_bound, BoundError, BoundKind, BoundValue};
pub use closed_form::{gap_asymptotics, two_clique_closed_form, worst_case_gap, GapAsymptotics, TwoCliqueCertificate};
pub use models::{
    build_hat_theta, build_theta_dual, build_theta_minus, build_theta_plus, build_theta_primal,
};
pub use sinkhorn::{sinkhorn_feasible_point, SinkhornError};
