//! Library side of the `sagin` command-line tool: argument definitions, the
//! scenario descriptor format, output writers and the subcommand bodies.

pub mod args;
pub mod commands;
pub mod descriptor;
pub mod error;
pub mod output;

pub use commands::{run, Environment, Report};
pub use descriptor::ScenarioDescriptor;
pub use error::CliError;
