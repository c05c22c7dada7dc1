use thiserror::Error;

/// Errors raised by the algebra layers and the session front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    Context(String),
    #[error("{module}: {message}")]
    Domain { module: &'static str, message: String },
    #[error("{module}: unsupported input: {message}")]
    Unsupported { module: &'static str, message: String },
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: no ring has been declared")]
    UnboundRing { line: usize, column: usize },
    #[error("{line}:{column}: unbound name `{name}`")]
    UnboundName { line: usize, column: usize, name: String },
    #[error("{line}:{column}: duplicate ring declaration")]
    DuplicateRing { line: usize, column: usize },
    #[error("{line}:{column}: `{command}` requires homogeneous input but `{name}` is not homogeneous")]
    Inhomogeneous { line: usize, column: usize, command: String, name: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(module: &'static str, message: impl Into<String>) -> Self {
        Error::Domain { module, message: message.into() }
    }

    pub(crate) fn unsupported(module: &'static str, message: impl Into<String>) -> Self {
        Error::Unsupported { module, message: message.into() }
    }

    /// Stable machine-readable class name, used in JSON reports.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Context(_) => "context",
            Error::Domain { .. } => "domain",
            Error::Unsupported { .. } => "unsupported",
            Error::Syntax { .. } => "syntax",
            Error::UnboundRing { .. } => "unbound-ring",
            Error::UnboundName { .. } => "unbound-name",
            Error::DuplicateRing { .. } => "duplicate-ring",
            Error::Inhomogeneous { .. } => "inhomogeneous",
            Error::Verification(_) => "verification",
            Error::Config(_) => "config",
        }
    }

    /// The library module an error originated from, when known.
    pub fn origin(&self) -> &'static str {
        match self {
            Error::Context(_) => "ring",
            Error::Domain { module, .. } | Error::Unsupported { module, .. } => module,
            Error::Verification(_) => "harness",
            Error::Config(_) => "harness",
            _ => "session",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
