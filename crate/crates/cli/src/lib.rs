//! Document parsing, report rendering, and command dispatch for the
//! `yamaguti` command-line tool.

pub mod cli;
pub mod doc;
pub mod expr;
mod jsonfmt;
pub mod render;

pub use cli::{execute, Cli, Outcome};
