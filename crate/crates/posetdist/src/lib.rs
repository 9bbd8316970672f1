//! IO formats, fixtures, and the command-line front end for the poset
//! distinguishing-number toolkit in `posetdist-core`.

pub mod cli;
pub mod fixtures;
pub mod io;

pub use posetdist_core as core;
