use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid specialization target: {0}")]
    InvalidTarget(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("scale limit exceeded: {what} = {value} > {limit}")]
    ScaleLimit { what: String, value: usize, limit: usize },
    #[error("not a member of the requested span")]
    NotMember,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
