//! Command-line front end and report formats for `normsum-core`.
//!
//! The binary is a thin layer: [`cli::run`] parses arguments, calls the
//! matching function in [`commands`], and renders the result through
//! [`output`]. Everything is callable from Rust as well.

pub mod cli;
pub mod commands;
pub mod output;
pub mod report;

pub use normsum_core as core;
