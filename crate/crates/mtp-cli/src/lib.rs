//! Serialization, DOT output, the command dispatcher and the `verify` suite
//! behind the `mtp` binary.

pub mod commands;
pub mod dot;
pub mod io;
pub mod json;
pub mod verify;

pub use commands::{error_envelope, exit_code, run, Cli, Command, Format, Method};
pub use io::{Entry, InstanceFile, NamedPoint};
pub use json::{BettiJson, ComplexJson, HomologyJson, PosetJson};
pub use verify::{report_lines, verify, Report, Status, VerifyOptions};
