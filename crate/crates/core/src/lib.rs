pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod gauge;
pub mod interp;
pub mod seeds;
pub mod spectrum;

pub use error::{Error, Result};
