//! Minimal temporally connected edge labellings: constructions, verification,
//! exhaustive generation and rendering.

pub mod error;
pub mod temporal;

pub use error::{Error, Result};
pub mod constructions;
pub mod cycle;
pub mod io;
pub mod ptgen;
pub mod random;
pub mod render;
