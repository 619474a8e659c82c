//! Files, reports and the command line for [`hitomezashi_core`].
//!
//! The core crate is `no_std`; everything that touches the filesystem,
//! serialises to JSON or CSV, or uses threads lives here.

pub mod census;
pub mod cli;
pub mod patternfile;
pub mod report;

pub use hitomezashi_core as core;
