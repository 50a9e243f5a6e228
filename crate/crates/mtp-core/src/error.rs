use thiserror::Error;

/// Every failure the library can report. `code` gives the stable
/// machine-readable name used in the CLI error envelope.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    EmptyDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("+inf cannot take part in tropical multiplication")]
    InfiniteProduct,
    #[error("invalid generator {index}: {reason}")]
    InvalidGenerator { index: usize, reason: String },
    #[error("generator set is not minimal; call minimal_generators first")]
    NotMinimized,
    #[error("point is not one of the generators")]
    NotAGenerator,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("non-integer input ({0}); scale the data to integers first")]
    NonIntegerInput(String),
    #[error("grid budget exceeded: {cells} cells requested, budget is {budget}")]
    GridBudgetExceeded { cells: u128, budget: u128 },
    #[error("element {0} has no counterpart in the other poset")]
    IdentificationFailure(String),
    #[error("poset has no unique bottom and top")]
    MissingExtremes,
    #[error("not a crosscut: {0}")]
    NotACrosscut(String),
    #[error("entry {0} is not an integer")]
    NotIntegral(String),
    #[error(
        "entry {0} is not positive; multiply the ideal by x1*...*xd \
         (I and x1*...*xd*I have isomorphic resolutions)"
    )]
    NotPositive(String),
    #[error("generator {generator} does not strictly divide x^c in coordinate {coordinate}")]
    NotStrictlyDividing { generator: usize, coordinate: usize },
    #[error("point is not a principal apex")]
    NotAnApex,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyDimension => "EmptyDimension",
            Error::DimMismatch { .. } => "DimMismatch",
            Error::InfiniteProduct => "InfiniteProduct",
            Error::InvalidGenerator { .. } => "InvalidGenerator",
            Error::NotMinimized => "NotMinimized",
            Error::NotAGenerator => "NotAGenerator",
            Error::TooLarge(_) => "TooLarge",
            Error::NonIntegerInput(_) => "NonIntegerInput",
            Error::GridBudgetExceeded { .. } => "GridBudgetExceeded",
            Error::IdentificationFailure(_) => "IdentificationFailure",
            Error::MissingExtremes => "MissingExtremes",
            Error::NotACrosscut(_) => "NotACrosscut",
            Error::NotIntegral(_) => "NotIntegral",
            Error::NotPositive(_) => "NotPositive",
            Error::NotStrictlyDividing { .. } => "NotStrictlyDividing",
            Error::NotAnApex => "NotAnApex",
            Error::Parse(_) => "Parse",
        }
    }

    /// Budget failures map to a different exit status than validation failures.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::TooLarge(_) | Error::GridBudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
