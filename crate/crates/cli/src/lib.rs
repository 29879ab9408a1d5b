//! Command-line front end: file formats, input loading, and the subcommand
//! driver. All mathematics lives in `qgs-core`; this crate only moves data
//! between files, terminal, and the core types.

pub mod app;
pub mod formats;
pub mod input;
