pub mod error;
pub mod langford;
pub mod matrix;

pub use error::{Error, Result};
