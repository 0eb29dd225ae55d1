//! File format and command implementations for the `entwine` binary.

pub mod commands;
pub mod format;
