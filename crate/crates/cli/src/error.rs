use std::fmt;

/// Failure of a command. Usage and parse errors, unbound letters and bad
/// configuration files exit with status 1; mathematical errors with 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Config { line: usize, message: String },
    Math(gcalg::Error),
    Undefined(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(gcalg::Error::UnboundLetter(_)) => 1,
            CliError::Math(_) | CliError::Undefined(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Config { line, message } => write!(f, "config error: line {line}: {message}"),
            CliError::Math(e @ gcalg::Error::UnboundLetter(_)) => write!(f, "usage error: {e}"),
            CliError::Math(e) => write!(f, "math error: {e}"),
            CliError::Undefined(m) => write!(f, "math error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gcalg::Error> for CliError {
    fn from(e: gcalg::Error) -> Self {
        CliError::Math(e)
    }
}
