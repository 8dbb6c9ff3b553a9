pub mod error;
pub mod algebra;
pub mod constructions;
pub mod exact;
pub mod format;
pub mod rng;
pub mod samples;
pub mod structure;

pub use error::{Error, Result};
