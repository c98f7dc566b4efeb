use std::fmt;
use std::process::ExitCode;

/// How a command ended, mapped onto the exit code contract:
/// 0 success, 1 usage or input error, 2 proven negative, 3 inconclusive.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Negative(String),
    Inconclusive(String),
}

pub type Outcome = Result<(), Failure>;

impl Failure {
    pub fn code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Usage(_) => 1,
            Failure::Negative(_) => 2,
            Failure::Inconclusive(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Negative(m) => write!(f, "negative: {m}"),
            Failure::Inconclusive(m) => write!(f, "inconclusive: {m}"),
        }
    }
}

pub fn usage(msg: impl fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}
