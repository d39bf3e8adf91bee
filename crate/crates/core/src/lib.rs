//! Encoders and exact simulation for qubit registers under collective noise,
//! where every qubit sees the same unitary `W`.
//!
//! - [`linalg`]: dense complex matrices, states, partial trace, fidelity, entropy.
//! - [`su2`]: single-qubit rotations, Euler angles, irrep multiplicities, block checks.
//! - [`codes`]: the three-, four- and five-qubit encoders and their gate lists.
//! - [`channels`]: mixed-unitary collective channels.
//! - [`verify`]: seeded verification suites producing JSON reports.

pub mod channels;
pub mod codes;
pub mod error;
pub mod json;
pub mod linalg;
pub mod random;
pub mod su2;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{fidelity, partial_trace, von_neumann_entropy, ComplexMatrix, DensityMatrix, StateVector};
