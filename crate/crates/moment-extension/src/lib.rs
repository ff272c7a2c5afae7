//! Moment strengthening θ̂′ of the projection theta number.
//!
//! The variable is a fully symmetric third-order tensor T whose slices
//! (T_{i··}) play the role of the diagonal blocks R_ii of the
//! first-stage moment matrix; each slice must be PSD, entrywise
//! nonnegative, and normalized to total mass one, and the slices share
//! storage through the tensor symmetry (R_ii)_{jl} = (R_jj)_{il}. The
//! constraint slice_i·e_i = diag(slice_i) collapses under full symmetry
//! to the identification T_{iij} = T_{ijj} and is applied in storage.
//!
//! Entries whose index set contains a non-adjacent pair vanish, so the
//! model eliminates them at build time; this empties whole rows and
//! columns of each slice, and the PSD blocks are therefore built on the
//! closed neighbourhood of each vertex (an exact reformulation that
//! keeps the problem strictly feasible).

mod build;
mod tensor;

pub use build::{
    build_hat_theta_prime, build_hat_theta_prime_with, hat_theta_prime, MomentError, MomentModel,
    MomentOptions, ZeroHandling,
};
pub use tensor::{canonical_index, tensor_len, SymTensor3};
