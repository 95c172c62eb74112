//! Command-line front end for the `ratiosect` minimizers.

pub mod expr;
pub mod output;
pub mod select;

mod commands;

pub use commands::{run, Cli};
