//! Shared error type for the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum UktError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("name error: {0}")]
    Name(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("precision error: {0}")]
    Precision(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
