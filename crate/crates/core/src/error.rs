//! Crate-wide error type. Configuration problems carry the offending key so
//! CLI users see which setting to fix; numerical failures carry enough state
//! to locate the run that produced them.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value is missing, malformed, or out of range.
    #[error("config error at `{key}`: {reason}")]
    Config { key: String, reason: String },

    /// Raised when a field or source term contains NaN/Inf on entry to a solver.
    #[error("non-finite values in {context}")]
    NonFinite { context: String },

    /// The time integration produced non-finite values; `t` is the last valid time.
    #[error("solution blew up at t = {t:.6e} (step {step})")]
    BlowUp { t: f64, step: u64 },

    /// A norm or ratio whose definition requires a nonzero denominator got zero.
    #[error("degenerate input for {what}: denominator is zero")]
    Degenerate { what: String },

    /// Lebesgue exponent outside [1, inf].
    #[error("L^q exponent must satisfy q >= 1, got {q}")]
    LqOutOfRange { q: f64 },

    /// Power-law fitting needs at least 4 in-window points with positive coordinates.
    #[error("power-law fit rejected: {reason}")]
    Fit { reason: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            reason: reason.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
