use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's domain (negative value, mismatched parents, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A stated precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A search or enumeration would exceed its configured size.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
