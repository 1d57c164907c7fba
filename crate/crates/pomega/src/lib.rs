//! Exact computation of slash, backslash and classical homology for the
//! p-complex built from k-subsets of [n] over GF(p), together with the
//! surrounding combinatorics: density and threshold statistics, bounded
//! lattice paths, Specht layers, Garnir straightening and p-standard
//! polytabloid bases.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod pcomplex;
pub mod specht;
pub mod tableaux;
pub mod verify;
pub mod subsets;

pub use error::{Error, Result};
