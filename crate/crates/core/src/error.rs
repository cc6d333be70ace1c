//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by exact polynomial algebra and the operator calculus
/// built on top of it.
///
/// `DivisionNotExact` deserves a note: every difference/reflection operator
/// in this crate is applied by assembling a numerator over a cleared
/// denominator and dividing exactly. The operators map (symmetric) Laurent
/// polynomials to (symmetric) Laurent polynomials, so a failed division
/// signals a transcription bug, never a data problem.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Evaluation of a Laurent polynomial with negative-degree terms at z = 0.
    #[error("evaluation at z = 0 of a Laurent polynomial with negative powers")]
    ZeroPoint,

    /// Polynomial division left a nonzero remainder.
    #[error("exact division failed: {0}")]
    DivisionNotExact(String),

    /// Parameters degenerate for the requested decomposition (e.g. ab = 1).
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    /// A symmetric Laurent polynomial was required.
    #[error("Laurent polynomial is not symmetric under z -> 1/z")]
    NotSymmetric,

    /// A denominator factor of a closed-form coefficient vanished.
    #[error("parameter singularity: {0}")]
    ParameterSingularity(String),

    /// Parameter pack failed its validity constraints.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Basis cache does not extend to the required degree.
    #[error("basis cached to degree {cached}, need degree {needed}")]
    InsufficientBasisDepth { needed: usize, cached: usize },

    /// Input is in neither eigenspace of the classified operator.
    #[error("input is not an eigenvector")]
    NotAnEigenvector,

    /// Pochhammer factor (alpha+1)_k vanishes for some k in range.
    #[error("pole at negative integer parameter: {0}")]
    PoleAtNegativeInteger(String),

    /// An exact square root of q was required but q is not a rational square.
    #[error("q^(1/2) is irrational for q = {0}; exact mode needs a perfect square")]
    IrrationalScaleFactor(String),

    /// A float limit sweep failed to converge.
    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    /// Doubling the quadrature grid failed to reduce the residual.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
