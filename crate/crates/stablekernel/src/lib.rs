//! Command-line tools, JSON formats and a bundled example corpus for
//! `stablekernel-core`.

pub mod casebook;
pub mod cli;
pub mod io;
