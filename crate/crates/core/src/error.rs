use thiserror::Error;

/// Broad failure classes. The CLI maps these onto process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Validation,
    Capability,
    Sampling,
    Io,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Usage => 2,
            ErrorKind::Validation => 3,
            ErrorKind::Capability => 4,
            // Sampling failures and I/O are reported as runtime failures.
            ErrorKind::Sampling | ErrorKind::Io => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("inversion of zero")]
    InversionOfZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{0}")]
    Usage(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("vertex {vertex}: {reason}")]
    VertexValidation { vertex: usize, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported: {0}")]
    Capability(String),

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ModulusMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::InversionOfZero
            | Error::NotPrime(_)
            | Error::Parameter(_)
            | Error::Usage(_) => ErrorKind::Usage,
            Error::Validation(_)
            | Error::VertexValidation { .. }
            | Error::Parse { .. } => ErrorKind::Validation,
            Error::Capability(_) => ErrorKind::Capability,
            Error::Sampling(_) => ErrorKind::Sampling,
            Error::Io(_) => ErrorKind::Io,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
