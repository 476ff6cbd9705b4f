//! Output statistics of N partially distinguishable identical particles
//! (bosons or fermions) interfering on a linear unitary multiport.

pub mod error;
pub mod linalg;
pub mod permgroup;
pub mod random;
pub mod states;

pub use error::{Error, Result};
