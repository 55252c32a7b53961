//! File formats and the command-line front end for the engine in `pec-core`.

pub mod cli;
pub mod dot;
