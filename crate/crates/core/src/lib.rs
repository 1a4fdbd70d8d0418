//! Matrix-free construction of the single-exponential unitary mapping one pure
//! state to another in the same Hilbert space.
//!
//! The central object is the anti-Hermitian generator `T[a,b]` built from a
//! state pair, `T[a,b](c) = <a,c> b - <b,c> a`. Its minimal polynomial has
//! degree at most three, which yields algebraic eigenprojectors and a
//! closed-form expression for `exp(theta T)` that can be applied to any vector
//! in O(d) using two generator applications. [`map_state`] solves for the
//! angle that sends `a` to the ray of `b` and returns a reusable applicator.
//!
//! The [`oracle`] module carries the brute-force references (dense Pade
//! exponential and the Gram-Schmidt basis-pairing unitary) used to validate
//! the closed forms and as the benchmark baseline.

pub mod exponential;
pub mod generator;
pub mod hilbert;
pub mod oracle;
pub mod spectral;

pub use exponential::{map_state, Branch, MappingResult, UnitaryApplicator};
pub use generator::{CaseTag, Generator};
pub use hilbert::{inner_product, invariants, InvariantSet, StateVector};
pub use oracle::DenseMatrix;
pub use spectral::SpectralData;

use thiserror::Error;

/// Errors surfaced by constructors and operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero input vector")]
    ZeroVector,
    #[error("state vector must have dimension >= 1")]
    EmptyVector,
    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),
    #[error("operation not defined for the real-collinear case (T = 0)")]
    UnsupportedCase,
    #[error("projector index {index} out of range (count {count})")]
    ProjectorIndex { index: usize, count: usize },
    #[error("matrix must be square")]
    NonSquareMatrix,
}

pub type Result<T> = std::result::Result<T, Error>;
