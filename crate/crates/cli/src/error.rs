use std::fmt;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_INCOMPATIBLE: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    pub fn incompatible(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INCOMPATIBLE,
            message: message.into(),
        }
    }

    pub fn io(what: &str, e: std::io::Error) -> Self {
        CliError::invalid(format!("{what}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<exponacci::Error> for CliError {
    fn from(e: exponacci::Error) -> Self {
        match e {
            exponacci::Error::NotOutwinding { .. } | exponacci::Error::NotInwinding { .. } => {
                CliError::incompatible(e.to_string())
            }
            _ => CliError::invalid(e.to_string()),
        }
    }
}
