//! Exact simulation and pulse-level compilation for quantum computing with
//! fixed, always-on couplings.
//!
//! Logical bits are encoded in several physical qubits so that the encoded
//! states are annihilated by the inter-bit coupling Hamiltonian (an
//! *interaction-free subspace*). Gates are compiled to schedules of
//! instantaneous local unitaries interleaved with free evolution under the
//! full, never-switched chain Hamiltonian, then checked against their targets
//! by exact state-vector simulation.
//!
//! Two architectures are supported:
//!
//! * [`model::DiagonalChain`]: Ising (`σᶻσᶻ`) couplings, two physical qubits
//!   per logical bit, codewords `|↑↓⟩` and `|↓↑⟩`.
//! * [`model::ExchangeChain`]: exchange couplings, one information-carrying
//!   star per logical bit plus a two-dot isolator held in the singlet.

pub mod compile_exchange;
pub mod compile_ising;
pub mod encoding;
mod error;
pub mod model;
pub mod par;
pub mod schedule;
pub mod statevector;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
