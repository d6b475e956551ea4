//! Command-line front end, JSON wire formats and parallel drivers for
//! `plethykit-core`.

pub mod cli;
pub mod parallel;
pub mod wire;
