use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: parse error at line {line}, column {column}: {msg}")]
    Parse { path: PathBuf, line: usize, column: usize, msg: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Geometry(#[from] cpkin::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn parse(path: impl Into<PathBuf>, e: &serde_json::Error) -> Self {
        let msg = e.to_string();
        // serde_json appends its own position; keep only the message
        let msg = match msg.rfind(" at line ") {
            Some(i) => msg[..i].to_string(),
            None => msg,
        };
        CliError::Parse { path: path.into(), line: e.line(), column: e.column(), msg }
    }

    /// 2 for bad input or I/O, 3 for degenerate geometry.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Geometry(cpkin::Error::Invalid(_)) => 2,
            CliError::Geometry(_) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
