pub mod error;
pub mod ring;
mod syntax;

pub use error::{Error, Result};
pub mod groebner;
pub mod matrix;
pub mod presentation;
pub mod complexes;
pub mod resolutions;
pub mod invariants;
pub mod derived;
pub mod ascent;
pub mod harness;
pub mod session;
