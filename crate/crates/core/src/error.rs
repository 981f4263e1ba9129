use alloc::string::String;
use core::fmt;

use crate::logspace::SignedLogReal;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    Domain(String),
    /// A quantum state or configuration violates one of its defining inequalities.
    Validation(String),
    /// Adaptive quadrature stopped before reaching the requested tolerance.
    Convergence {
        estimate: SignedLogReal,
        rel_error: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Validation(msg) => write!(f, "invalid state: {msg}"),
            Error::Convergence { estimate, rel_error } => write!(
                f,
                "quadrature did not converge: best estimate log|I| = {:.12e} (sign {}), relative error bound {:.3e}",
                estimate.logmag(),
                estimate.sign(),
                rel_error
            ),
        }
    }
}

impl core::error::Error for Error {}
