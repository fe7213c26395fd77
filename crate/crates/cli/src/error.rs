use std::fmt;

use hyperreal_core::calculus::CalculusError;
use hyperreal_core::formula_dsl::FormulaError;
use hyperreal_core::lc_field::ParseLcError;
use hyperreal_core::{ExprError, FieldError};

#[derive(Debug)]
pub enum CliError {
    Field(FieldError),
    Expr(ExprError),
    Calculus(CalculusError),
    Formula(FormulaError),
    Config { line: usize, message: String },
    Io { path: String, message: String },
    Usage(String),
}

impl CliError {
    /// Module the error comes from.
    pub fn module(&self) -> &'static str {
        match self {
            CliError::Field(_) => "lc_field",
            CliError::Expr(_) => "transfer_ext",
            CliError::Calculus(_) => "calculus",
            CliError::Formula(_) => "formula_dsl",
            CliError::Config { .. } | CliError::Io { .. } | CliError::Usage(_) => "cli",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Field(e) => e.name(),
            CliError::Expr(e) => e.name(),
            CliError::Calculus(e) => e.name(),
            CliError::Formula(e) => e.name(),
            CliError::Config { .. } => "ConfigError",
            CliError::Io { .. } => "IoError",
            CliError::Usage(_) => "UsageError",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Field(e) => write!(f, "{e}"),
            CliError::Expr(e) => write!(f, "{e}"),
            CliError::Calculus(e) => write!(f, "{e}"),
            CliError::Formula(e) => write!(f, "{e}"),
            CliError::Config { line: 0, message } => write!(f, "ConfigError: {message}"),
            CliError::Config { line, message } => write!(f, "ConfigError at line {line}: {message}"),
            CliError::Io { path, message } => write!(f, "IoError: {path}: {message}"),
            CliError::Usage(m) => write!(f, "UsageError: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Field(e)
    }
}

impl From<ParseLcError> for CliError {
    fn from(e: ParseLcError) -> Self {
        CliError::Field(e.into())
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Field(f) => CliError::Field(f),
            other => CliError::Expr(other),
        }
    }
}

impl From<CalculusError> for CliError {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::Expr(x) => x.into(),
            other => CliError::Calculus(other),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        CliError::Formula(e)
    }
}
