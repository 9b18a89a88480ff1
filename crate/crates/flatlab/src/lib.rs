//! Spectral, combinatorial and coding-theoretic analysis of Boolean and
//! vectorial functions over F_2^n: Walsh and differential spectra, the
//! associated linear codes, vanishing and nonvanishing flats, design
//! verification, covering radii and extendability of bent functions.

pub mod codes;
pub mod designs;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod flats;
pub mod func;
pub mod metric;
pub mod spectra;

pub use error::{Error, Result};
pub use func::VectorialFunc;
