use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the documented domain of an operation.
    InvalidParameter(String),
    /// The characteristic is composite or smaller than 5.
    UnsupportedCharacteristic(u64),
    /// A user supplied base-field modulus is not monic irreducible of the right degree.
    InvalidModulus(String),
    DivisionByZero,
    /// `m = k * l` with `k | q - 1`, `k > 1` could not be established.
    DecompositionFailure(String),
    /// An enumeration would produce more than `cap` vectors.
    EnumerationTooLarge { cap: usize },
    /// A conjugate binomial vanished and cannot be inverted.
    DegenerateBinomial,
    /// The factorisation budget ran out before the number was fully split.
    FactorizationTimeout,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnsupportedCharacteristic(p) => {
                write!(f, "unsupported characteristic {p}: a prime p >= 5 is required")
            }
            Error::InvalidModulus(msg) => write!(f, "invalid modulus: {msg}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::DecompositionFailure(msg) => write!(f, "decomposition failure: {msg}"),
            Error::EnumerationTooLarge { cap } => {
                write!(f, "enumeration exceeds the cap of {cap} vectors")
            }
            Error::DegenerateBinomial => f.write_str("conjugate binomial is zero"),
            Error::FactorizationTimeout => f.write_str("factorization time budget exceeded"),
        }
    }
}

impl core::error::Error for Error {}
