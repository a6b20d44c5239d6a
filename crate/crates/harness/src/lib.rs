//! Command-line harness: graph file formats, the exhaustive sweep over small
//! cubic graphs and its JSON-lines report.

pub mod analysis;
pub mod cli;
pub mod io;
pub mod report;
pub mod sweep;
