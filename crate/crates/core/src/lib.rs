pub mod cli;
pub mod compose;
pub mod conformal;
pub mod error;
pub mod groebner;
pub mod order;
pub mod poly;
pub mod presentations;
pub mod tree;

pub use error::{Error, Result};
