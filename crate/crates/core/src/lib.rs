//! Exact computations with finite groups and their characters.

pub mod chartab;
pub mod cli;
pub mod detform;
pub mod error;
pub mod group;
pub mod io;
pub mod kchar;
pub mod num;
pub mod recon;

pub use error::{Error, Result};
