use std::fmt;

use periodic_syt::{RecurrenceError, ShapeError, SpecError, SymmetryError, TableauError, TransferError};

/// Failure classes, one per exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Validation,
    Limit,
    Inconsistent,
}

impl Kind {
    pub fn code(self) -> u8 {
        match self {
            Kind::Validation => 1,
            Kind::Limit => 2,
            Kind::Inconsistent => 3,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Validation, message: message.into() }
    }

    pub fn limit(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Limit, message: message.into() }
    }

    pub fn inconsistent(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Inconsistent, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ShapeError> for CliError {
    fn from(e: ShapeError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        let kind = match e {
            TableauError::ShapeTooLarge { .. } | TableauError::TooManyTableaux { .. } => Kind::Limit,
            TableauError::ConstructionFailed(_) => Kind::Inconsistent,
            _ => Kind::Validation,
        };
        CliError { kind, message: e.to_string() }
    }
}

impl From<TransferError> for CliError {
    fn from(e: TransferError) -> Self {
        match e {
            TransferError::Shape(e) => e.into(),
            TransferError::Tableau(e) => e.into(),
            TransferError::EnumerationLimitExceeded { .. } => CliError::limit(e.to_string()),
            TransferError::BelowRange { .. } => {
                CliError::validation(format!("{e} (use --method brute for small n)"))
            }
            _ => CliError::inconsistent(e.to_string()),
        }
    }
}

impl From<RecurrenceError> for CliError {
    fn from(e: RecurrenceError) -> Self {
        match e {
            RecurrenceError::TooFewTerms { .. } => CliError::validation(e.to_string()),
            _ => CliError::inconsistent(e.to_string()),
        }
    }
}

impl From<SymmetryError> for CliError {
    fn from(e: SymmetryError) -> Self {
        match e {
            SymmetryError::Shape(e) => e.into(),
            SymmetryError::Tableau(e) => e.into(),
            SymmetryError::NotASubset => CliError::validation(e.to_string()),
            _ => CliError::inconsistent(e.to_string()),
        }
    }
}
