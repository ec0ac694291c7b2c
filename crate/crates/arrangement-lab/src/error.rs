use thiserror::Error;

use crate::local_system::ResonanceVerdict;

/// Every failure mode surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("hyperplanes {0} and {1} define the same affine hyperplane")]
    DuplicateHyperplane(usize, usize),
    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),
    #[error("hyperplane index {index} out of range (arrangement has {len} hyperplanes)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("row count mismatch: local system has {got} rows, arrangement has {expected} hyperplanes")]
    RowCountMismatch { expected: usize, got: usize },
    #[error("no generic hyperplane found after {0} attempts")]
    RetryLimitExceeded(usize),
    #[error("hyperplane is not generic: violating flat with hyperplane set {{{}}}", format_indices(.0))]
    NotGeneric(Vec<usize>),
    #[error("arrangement with {n} hyperplanes exceeds the oracle bound {bound}")]
    OracleTooLarge { n: usize, bound: usize },
    #[error("arrangement with {n} hyperplanes exceeds the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("zero vector at position {0}")]
    ZeroVector(usize),
    #[error("arrangement is not essential")]
    NotEssential,
    #[error("local system is resonant: {} violation(s)", .0.violations.len())]
    Resonant(ResonanceVerdict),
    #[error("ambient dimension {0} is too small for this operation")]
    DimensionTooSmall(usize),
    #[error("k = {k} out of range (need 2 <= k <= {max})")]
    KOutOfRange { k: usize, max: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

fn format_indices(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(|i| i.to_string()).collect();
    parts.join(",")
}

impl Error {
    /// CLI exit-code class: 1 for I/O and parse failures, 2 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedInput(_)
            | Error::DuplicateHyperplane(_, _)
            | Error::ZeroNormal(_)
            | Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
