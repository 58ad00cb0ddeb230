//! IO, parallel drivers and the command line for `pushlab-core`.

pub mod cli;
pub mod drivers;
pub mod format;
pub mod report;

pub use cli::run;
pub use format::{parse_digraph6, parse_graph6, write_digraph6, write_graph6, FormatError};
