use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is empty or not square")]
    NotSquare,

    #[error("non-finite entry in input")]
    NonFinite,

    #[error("not Hermitian (max |M - M^H| = {0:e})")]
    NotHermitian(f64),

    #[error("Jacobi sweep budget exhausted (off-diagonal norm {0:e})")]
    NoConvergence(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPSD(f64),

    #[error("trace is not 1 (got {re} + {im}i)")]
    BadTrace { re: f64, im: f64 },

    #[error("basis is not unitary (max |B^H B - I| = {0:e})")]
    NotUnitary(f64),

    #[error("basis does not diagonalize the operator (max off-diagonal {0:e})")]
    NotEigenbasis(f64),

    #[error("Bloch vector outside the unit ball (norm {0})")]
    OutsideBlochBall(f64),

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("overlap matrix is not doubly stochastic (max deviation {0:e})")]
    NotDoublyStochastic(f64),

    #[error("effective diagonal differs from <b|rho|b> by {0:e}")]
    EffectiveMismatch(f64),

    #[error("symbol {symbol} has model probability {prob:e}")]
    ModelSupportViolation { symbol: u8, prob: f64 },

    #[error("block length {0} outside 1..=20")]
    BlockTooLarge(usize),

    #[error("invalid symbol {0}; alphabet is {{0, 1}}")]
    InvalidSymbol(u8),

    #[error("not a bijection on {0}-bit strings")]
    NotBijective(usize),

    #[error("state vector norm is {0}, expected 1")]
    NotNormalized(f64),

    #[error("empty input sequence")]
    EmptyInput,

    #[error("sample length {0} is shorter than the minimum {1}")]
    SampleTooShort(usize, usize),

    #[error("kept qubits {m} exceeds block length {n}")]
    KeptOutOfRange { m: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name for command-line diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(..) => "dimension_mismatch",
            Error::NotSquare => "not_square",
            Error::NonFinite => "non_finite",
            Error::NotHermitian(_) => "not_hermitian",
            Error::NoConvergence(_) => "no_convergence",
            Error::NotPSD(_) => "not_psd",
            Error::BadTrace { .. } => "bad_trace",
            Error::NotUnitary(_) => "not_unitary",
            Error::NotEigenbasis(_) => "not_eigenbasis",
            Error::OutsideBlochBall(_) => "outside_bloch_ball",
            Error::InvalidDistribution(_) => "invalid_distribution",
            Error::NotDoublyStochastic(_) => "not_doubly_stochastic",
            Error::EffectiveMismatch(_) => "effective_mismatch",
            Error::ModelSupportViolation { .. } => "model_support_violation",
            Error::BlockTooLarge(_) => "block_too_large",
            Error::InvalidSymbol(_) => "invalid_symbol",
            Error::NotBijective(_) => "not_bijective",
            Error::NotNormalized(_) => "not_normalized",
            Error::EmptyInput => "empty_input",
            Error::SampleTooShort(..) => "sample_too_short",
            Error::KeptOutOfRange { .. } => "kept_out_of_range",
        }
    }
}
