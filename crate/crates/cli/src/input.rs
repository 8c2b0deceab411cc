use std::fs;
use std::path::Path;

use lgtypes::text::TextError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Text { origin: String, source: TextError },
    #[error("{0}")]
    Input(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            _ => 2,
        }
    }

    pub fn input(e: impl ToString) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_file<T>(path: &Path, parse: impl Fn(&str) -> Result<T, TextError>) -> Result<T, CliError> {
    let text = read_file(path)?;
    parse(&text).map_err(|source| CliError::Text {
        origin: path.display().to_string(),
        source,
    })
}

/// `value` itself, or the contents of the file when written `@path`.
pub fn parse_inline<T>(flag: &str, value: &str, parse: impl Fn(&str) -> Result<T, TextError>) -> Result<T, CliError> {
    match value.strip_prefix('@') {
        Some(path) => parse_file(Path::new(path), parse),
        None => parse(value).map_err(|source| CliError::Text {
            origin: flag.to_string(),
            source,
        }),
    }
}
