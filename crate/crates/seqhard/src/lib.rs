//! File formats, seeded generators, property suites and the command-line
//! front end over `seqhard-core`.

pub mod bench;
pub mod cli;
pub mod error;
pub mod formats;
pub mod gen;
pub mod report;
pub mod verify;

pub use error::CliError;
