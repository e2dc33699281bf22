pub mod arith;
pub mod error;

pub use error::{Error, ParseError, Result};
pub mod weyl;
pub mod parse;
pub mod centralizer;
pub mod exec;
pub mod dixmier;
