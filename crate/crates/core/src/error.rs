use thiserror::Error;

/// Errors raised by state construction and the geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("entry count {found} does not match shape {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is not one (got {trace})")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("matrix is not unitary (max deviation of U^dagger U from identity {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("amplitude count {0} is not a perfect square")]
    NotBipartite(usize),

    #[error("decomposition failed: {0}")]
    DecompositionFailure(&'static str),

    #[error("partial traces differ (max entrywise deviation {deviation:e})")]
    PartialTraceMismatch { deviation: f64 },

    #[error("rank {mu} out of range for dimension {n} (need 1 <= mu <= n)")]
    RankOutOfRange { n: usize, mu: usize },

    #[error("repeated nonzero eigenvalue (gap {gap:e}); tangent rank needs a generic spectrum")]
    NonGenericSpectrum { gap: f64 },

    #[error("singular-value gap ratio {ratio:e} is below the required separation")]
    AmbiguousRank { ratio: f64 },

    #[error("state is already pure; its rank cannot be lowered")]
    AlreadyPure,

    #[error("eigenvalue {eigenvalue} is within tolerance of one; split weight degenerates")]
    DegenerateTotalWeight { eigenvalue: f64 },

    #[error("operation needs N = 2, got N = {0}")]
    DimensionNotTwo(usize),

    #[error("Bloch vector lies outside the unit ball (norm {norm})")]
    OutsideBall { norm: f64 },

    #[error("sampling exhausted after {attempts} rejected draws")]
    SamplingExhausted { attempts: usize },
}

/// Coarse failure class, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input is not a valid object of the claimed kind.
    Validation,
    /// The input is valid but violates an operation's precondition.
    Precondition,
    /// A numerical routine failed or produced an unusable answer.
    Numerical,
}

impl Error {
    /// Stable identifier for the variant, e.g. `"TraceNotOne"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::NonFinite => "NonFinite",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::TraceNotOne { .. } => "TraceNotOne",
            Error::NotPositive { .. } => "NotPositive",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::NotUnitary { .. } => "NotUnitary",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotBipartite(_) => "NotBipartite",
            Error::DecompositionFailure(_) => "DecompositionFailure",
            Error::PartialTraceMismatch { .. } => "PartialTraceMismatch",
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::NonGenericSpectrum { .. } => "NonGenericSpectrum",
            Error::AmbiguousRank { .. } => "AmbiguousRank",
            Error::AlreadyPure => "AlreadyPure",
            Error::DegenerateTotalWeight { .. } => "DegenerateTotalWeight",
            Error::DimensionNotTwo(_) => "DimensionNotTwo",
            Error::OutsideBall { .. } => "OutsideBall",
            Error::SamplingExhausted { .. } => "SamplingExhausted",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NotSquare { .. }
            | Error::ShapeMismatch { .. }
            | Error::NonFinite
            | Error::NotHermitian { .. }
            | Error::TraceNotOne { .. }
            | Error::NotPositive { .. }
            | Error::NotNormalized { .. }
            | Error::NotUnitary { .. }
            | Error::NotBipartite(_)
            | Error::OutsideBall { .. } => ErrorClass::Validation,
            Error::DimensionMismatch { .. }
            | Error::PartialTraceMismatch { .. }
            | Error::RankOutOfRange { .. }
            | Error::NonGenericSpectrum { .. }
            | Error::AlreadyPure
            | Error::DegenerateTotalWeight { .. }
            | Error::DimensionNotTwo(_) => ErrorClass::Precondition,
            Error::DecompositionFailure(_)
            | Error::AmbiguousRank { .. }
            | Error::SamplingExhausted { .. } => ErrorClass::Numerical,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
