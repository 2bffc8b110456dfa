//! Error type shared by the whole crate.

use std::fmt;
use std::io;

/// Errors reported by framing, builders, oracles and the bench harness.
#[derive(Debug)]
pub enum Error {
    /// Input violates a documented precondition (empty word, bad family
    /// parameters, mismatched array lengths, ...).
    InvalidInput(String),
    /// A symbol of the input has no rank in the supplied alphabet order.
    UnknownSymbol {
        symbol: u32,
    },
    /// A position lies outside the framed word.
    OutOfBounds {
        position: usize,
        framed_len: usize,
    },
    /// An operation received a text framed with the wrong sentinel mode.
    ModeMismatch {
        expected: crate::text::SentinelMode,
        found: crate::text::SentinelMode,
    },
    /// An LCE query with `l >= r`.
    InvalidQuery(String),
    /// A caller-supplied lower bound exceeded the true LCE
    /// (detected by the shadow oracle).
    ContractViolation(String),
    /// Two built results do not come from the same interior word.
    InputMismatch(String),
    /// A cross-check against an oracle or a stated identity failed.
    Verification(String),
    /// A counter grew outside the admissible linear-growth window.
    LinearityViolation {
        counter: &'static str,
        factor: f64,
        lo: f64,
        hi: f64,
    },
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {}", msg),
            Error::UnknownSymbol { symbol } => {
                write!(f, "symbol {} has no rank in the alphabet order", symbol)
            }
            Error::OutOfBounds {
                position,
                framed_len,
            } => write!(
                f,
                "position {} outside framed word of length {}",
                position, framed_len
            ),
            Error::ModeMismatch { expected, found } => write!(
                f,
                "sentinel mode mismatch: expected {:?}, found {:?}",
                expected, found
            ),
            Error::InvalidQuery(msg) => write!(f, "invalid LCE query: {}", msg),
            Error::ContractViolation(msg) => write!(f, "contract violation: {}", msg),
            Error::InputMismatch(msg) => write!(f, "input mismatch: {}", msg),
            Error::Verification(msg) => write!(f, "verification failed: {}", msg),
            Error::LinearityViolation {
                counter,
                factor,
                lo,
                hi,
            } => write!(
                f,
                "counter {} grew by {:.4}, outside [{:.4}, {:.4}]",
                counter, factor, lo, hi
            ),
            Error::Io(e) => write!(f, "io error: {}", e),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
