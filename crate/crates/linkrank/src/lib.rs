//! File formats, exporters, run reports and the command-line front end for
//! [`linkrank_core`].

pub mod cli;
mod error;
pub mod export;
pub mod formats;
pub mod report;

pub use error::ParseError;
pub use linkrank_core as core;
pub use linkrank_core::generate;
