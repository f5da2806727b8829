//! File formats, parallel grid evaluation, verification suites and the
//! command-line driver built on [`gks_core`].

pub mod cli;
pub mod parallel;
pub mod render;
pub mod suites;

pub use gks_core;
