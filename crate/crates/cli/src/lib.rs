//! Command-line front end for `dnum-core`: evidence documents, distance and
//! matrix reports, and regeneration of the published examples.

pub mod commands;
pub mod document;
pub mod error;
pub mod format;
pub mod paper;

pub use commands::run;
pub use document::{EvidenceDocument, Exclusivity, PairEntry, PairValue};
pub use error::CliError;
