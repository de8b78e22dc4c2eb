use std::fmt;

use dmstrata::ErrorClass;

/// Exit codes, stable across releases.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const VALIDATION: i32 = 3;
    pub const PRECONDITION: i32 = 4;
    pub const NUMERICAL: i32 = 5;
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable input, malformed JSON or a document of the wrong shape.
    Parse(String),
    Core(dmstrata::Error),
    /// The command ran but its check failed; the report is still emitted.
    Failed {
        code: &'static str,
        message: String,
        report: String,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Core(e) => match e.class() {
                ErrorClass::Validation => exit::VALIDATION,
                ErrorClass::Precondition => exit::PRECONDITION,
                ErrorClass::Numerical => exit::NUMERICAL,
            },
            CliError::Failed { .. } => exit::NUMERICAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "ParseError: {msg}"),
            CliError::Core(e) => write!(f, "{}: {e}", e.code()),
            CliError::Failed { code, message, .. } => write!(f, "{code}: {message}"),
        }
    }
}

impl From<dmstrata::Error> for CliError {
    fn from(e: dmstrata::Error) -> Self {
        CliError::Core(e)
    }
}
