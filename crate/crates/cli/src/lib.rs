//! Front end for `skewbound`: expression parsing, report rendering and the
//! regression table.

pub mod expr;
pub mod report;
pub mod table;
pub mod verify;

pub use expr::{parse, ManifoldExpr, ParseError};

use skewbound::ManifoldData;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("domain error: {0}")]
    Domain(#[from] skewbound::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
        }
    }
}

/// Rendered output of a command that checks something.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checked {
    pub text: String,
    pub all_pass: bool,
}

impl Checked {
    pub fn exit_code(&self) -> i32 {
        if self.all_pass {
            0
        } else {
            3
        }
    }
}

pub fn manifold(expr: &ManifoldExpr) -> Result<ManifoldData, CliError> {
    Ok(ManifoldData::from_atoms(&expr.factors)?)
}

pub(crate) fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
