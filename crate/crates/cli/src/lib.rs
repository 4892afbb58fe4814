//! Command-line front end for the `dsc2` isolator: polynomial documents,
//! the `isolate` and `bench` commands, and their output formats.

pub mod bench_cmd;
pub mod document;
pub mod error;
pub mod isolate_cmd;

pub use document::{InputFormat, PolynomialDocument};
pub use error::CliError;
pub use isolate_cmd::{run_isolate, IsolateOptions, IsolateReport, OutputFormat, SquareFreePolicy};
