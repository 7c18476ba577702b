//! IO, file formats, threaded verification and the `gotzmann` command line
//! on top of [`gotzmann_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod report;

pub use cli::run;
