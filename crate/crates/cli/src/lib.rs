//! File formats, reports and command implementations behind the `cathedral`
//! binary.

pub mod commands;
pub mod dot;
pub mod error;
pub mod formats;
pub mod report;
pub mod verify;

pub use error::CliError;
pub use formats::Format;
