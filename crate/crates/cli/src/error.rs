//! Exit-code classification: 1 for mathematical failures, 2 for bad input.

use std::fmt;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: String) -> Self {
        CliError { code: 2, message }
    }

    pub fn math(message: String) -> Self {
        CliError { code: 1, message }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<liedef::Error> for CliError {
    fn from(e: liedef::Error) -> Self {
        CliError {
            code: if e.is_mathematical() { 1 } else { 2 },
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
