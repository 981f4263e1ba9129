#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod entropic;
pub mod error;
pub mod hydrogenic;
pub mod logspace;
pub mod orthopoly;
pub mod quadrature;

pub use error::{Error, Result};
pub use logspace::SignedLogReal;
