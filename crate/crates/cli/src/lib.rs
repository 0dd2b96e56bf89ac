//! Documents, subcommands and pictures for the `parslit` command-line tool.

pub mod commands;
pub mod document;
pub mod svg;

pub use commands::{run, Cli, CliError, Command};
pub use document::{read, write, DocError, Document, Kind, Object, Violation};
