//! Command-line front end and file formats for `trimulti-core`.
//!
//! * [`document`]: the JSON realization document plus DOT and TSV edge
//!   listings.
//! * [`generate`]: seeded random sequences that meet the realization
//!   conditions.
//! * [`bench`]: wall-clock timing of `realize`.
//! * [`app`]: the subcommands behind the `trimulti` binary.

pub mod app;
pub mod bench;
pub mod document;
pub mod generate;

pub use bench::{bench_realize, BenchError, BenchReport};
pub use document::{NotRealizableDocument, RealizationDocument};
pub use generate::{find_sequence, generate_valid_sequence, GenerateError};
