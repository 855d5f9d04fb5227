//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong across the library, one variant per
/// contract violation named by the operation that raises it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `mod_inverse(a, m)` with gcd(a, m) != 1.
    NotInvertible { a: i64, modulus: u64 },
    /// A modulus that must be prime is not.
    NotPrime(u64),
    /// A table or convolution request exceeds the configured size cap,
    /// or exact integer arithmetic would overflow 128 bits.
    ResourceLimit(String),
    /// Coefficient normalization requires a(1) = 1.
    BadLeadingCoefficient(i128),
    /// Index outside the table range.
    OutOfRange(String),
    /// A log-log fit needs at least 3 points.
    DegenerateGrid(usize),
    /// A fit point has magnitude <= 0 (log undefined).
    NonpositiveMagnitude(f64),
    /// Operation requires a nontrivial (hence primitive) character.
    TrivialCharacter,
    /// The two moduli of the composite character sum must be coprime.
    ModuliNotCoprime { q: u64, p: u64 },
    /// A FormTable shorter than the requested sum range.
    TableTooShort { need: usize, have: usize },
    /// Plateau weight needs delta >= 1.
    BadDelta(f64),
    /// Arc decomposition needs 1 <= P < Q <= X.
    BadParameters(String),
    /// Theorem hypotheses (p < X, ell >= 3) violated.
    HypothesisViolated(String),
    /// A quadrature did not reach its tolerance.
    QuadratureFailure(String),
    /// Mellin contour abscissa outside the allowed half-plane.
    ContourOutOfRange { sigma: f64, min: f64 },
    /// Dual-sum truncation too small for the requested tolerance budget.
    TruncationTooSmall { last_term: f64, budget: f64 },
    /// Invalid experiment configuration (bad key, bad value, bad grid).
    BadConfig(String),
    /// I/O wrapper for cache and report emission.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible { a, modulus } => {
                write!(f, "{} is not invertible mod {}", a, modulus)
            }
            Error::NotPrime(n) => write!(f, "{} is not prime", n),
            Error::ResourceLimit(msg) => write!(f, "resource limit: {}", msg),
            Error::BadLeadingCoefficient(a1) => {
                write!(f, "leading coefficient must be 1, got {}", a1)
            }
            Error::OutOfRange(msg) => write!(f, "out of range: {}", msg),
            Error::DegenerateGrid(n) => {
                write!(f, "need at least 3 grid points, got {}", n)
            }
            Error::NonpositiveMagnitude(v) => {
                write!(f, "fit magnitude must be positive, got {}", v)
            }
            Error::TrivialCharacter => {
                write!(f, "operation requires a nontrivial character")
            }
            Error::ModuliNotCoprime { q, p } => {
                write!(f, "moduli q={} and p={} are not coprime", q, p)
            }
            Error::TableTooShort { need, have } => {
                write!(f, "form table too short: need {}, have {}", need, have)
            }
            Error::BadDelta(d) => write!(f, "delta must be >= 1, got {}", d),
            Error::BadParameters(msg) => write!(f, "bad parameters: {}", msg),
            Error::HypothesisViolated(msg) => {
                write!(f, "hypothesis violated: {}", msg)
            }
            Error::QuadratureFailure(msg) => write!(f, "quadrature failure: {}", msg),
            Error::ContourOutOfRange { sigma, min } => {
                write!(f, "contour sigma={} outside allowed half-plane (> {})", sigma, min)
            }
            Error::TruncationTooSmall { last_term, budget } => write!(
                f,
                "truncation too small: last included term {:.3e} exceeds budget {:.3e}",
                last_term, budget
            ),
            Error::BadConfig(msg) => write!(f, "bad config: {}", msg),
            Error::Io(msg) => write!(f, "io error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
