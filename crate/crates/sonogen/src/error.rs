//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated its documented range or parity requirement.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Array dimensions did not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input data was unusable (too short, wrong sample rate, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// The operation is not defined for this feature kind.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A binary container failed validation. `offset` is the byte position
    /// at which the problem was detected.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },

    /// Checkpoint written by an incompatible format version.
    #[error("checkpoint version {found} unsupported (expected {expected}); upgrade required")]
    Version { found: u32, expected: u32 },

    /// Payload checksum mismatch or truncation.
    #[error("corrupt container: {0}")]
    Corrupt(String),

    /// Training produced a non-finite loss; carries a diagnostic snapshot.
    #[error("non-finite loss at step {step}: loss_d={loss_d}, loss_g={loss_g} (snapshot: {snapshot})")]
    NonFinite {
        step: u64,
        loss_d: f64,
        loss_g: f64,
        snapshot: String,
    },

    /// Dataset cannot support the requested operation.
    #[error("degenerate dataset: {0}")]
    Degenerate(String),

    #[error("i/o error{}: {source}", context_suffix(.context))]
    Io {
        #[source]
        source: std::io::Error,
        context: String,
    },
}

fn context_suffix(context: &str) -> String {
    if context.is_empty() {
        String::new()
    } else {
        format!(" ({context})")
    }
}

impl From<std::io::Error> for Error {
    fn from(source: std::io::Error) -> Self {
        Error::Io {
            source,
            context: String::new(),
        }
    }
}

impl Error {
    pub fn io(source: std::io::Error, context: impl Into<String>) -> Self {
        Error::Io {
            source,
            context: context.into(),
        }
    }
}
