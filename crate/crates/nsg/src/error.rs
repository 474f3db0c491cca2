//! Error type shared across the crate.

use std::fmt;

/// Errors raised by semigroup, poset and ideal computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid input: violated precondition, malformed descriptor, bad flag.
    Input(String),
    /// A configured resource cap (search nodes, basis size, ...) was hit.
    Resource(String),
    /// A contract that should hold by theory was violated at run time.
    /// Surfacing this is always a bug report, never silently swallowed.
    Contract(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Resource(msg) => write!(f, "resource cap exceeded: {msg}"),
            Error::Contract(msg) => write!(f, "internal contract violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
