//! Exact arithmetic for associative dialgebras over ℚ and GF(p).

pub mod algebra;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod identities;
pub mod structure;

pub use error::{Error, Result};
