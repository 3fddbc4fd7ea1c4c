//! Command-line front end: the hypergraph file format, report rendering and
//! command dispatch for the `vca` binary.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, Command, Format};
pub use format::{parse_hypergraph, serialize_hypergraph, ParseError, ParsedInput};
pub use report::{RunReport, Verdict};
