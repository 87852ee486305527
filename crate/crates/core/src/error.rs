use std::fmt;

use thiserror::Error;

use crate::report::WeightReport;

pub type Result<T, E = LocexError> = std::result::Result<T, E>;

/// A proven inequality came out false, or an equality flag disagreed with its
/// structural detector. Always a bug somewhere; carries enough to reproduce.
#[derive(Debug, Clone)]
pub struct Violation {
    pub theorem: String,
    pub reason: String,
    /// Instance serialized in its file format.
    pub instance: String,
    pub report: Option<WeightReport>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.theorem, self.reason)
    }
}

#[derive(Debug, Error)]
pub enum LocexError {
    #[error("{format} parse error at line {line}: {msg}")]
    Parse {
        format: &'static str,
        line: usize,
        msg: String,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: String,
        limit: usize,
        actual: usize,
    },

    #[error("precondition failed: {msg}")]
    Precondition { msg: String, witness: Vec<String> },

    #[error("theorem violation (must investigate): {0}")]
    Violation(Box<Violation>),

    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("report format error: {0}")]
    Report(String),
}

impl LocexError {
    pub(crate) fn parse(format: &'static str, line: usize, msg: impl Into<String>) -> Self {
        LocexError::Parse {
            format,
            line,
            msg: msg.into(),
        }
    }

    pub fn capacity(what: impl Into<String>, limit: usize, actual: usize) -> Self {
        LocexError::Capacity {
            what: what.into(),
            limit,
            actual,
        }
    }

    pub fn precondition(msg: impl Into<String>, witness: Vec<String>) -> Self {
        LocexError::Precondition {
            msg: msg.into(),
            witness,
        }
    }

    pub(crate) fn violation(
        theorem: &str,
        reason: impl Into<String>,
        instance: String,
        report: Option<WeightReport>,
    ) -> Self {
        LocexError::Violation(Box::new(Violation {
            theorem: theorem.to_string(),
            reason: reason.into(),
            instance,
            report,
        }))
    }
}
