//! Entanglement of the spin-1 AKLT valence-bond-solid state.
//!
//! Closed-form spectra, negativities and entropies of block density matrices,
//! checked against an exact matrix-product-state oracle and a Monte Carlo
//! evaluation of the classical sphere representation.

pub mod cli;
pub mod closed_forms;
pub mod effective_rho;
pub mod error;
pub mod linalg;
pub mod mps_oracle;
pub mod pauli_algebra;
pub mod sphere_mc;
pub mod verify;

pub use error::{Error, Result};
