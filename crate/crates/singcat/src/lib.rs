//! JSON formats, reports and the `singcat` command line on top of
//! [`singcat_core`].

pub mod cli;
pub mod commands;
pub mod demo;
pub mod json;
pub mod report;

pub use commands::{run, InputError};
pub use report::{Artifact, Report};
