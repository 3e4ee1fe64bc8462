//! File formats, reports, and the command dispatch behind the `tropic`
//! binary. Exposed as a library so integration tests can drive commands
//! in-process.

pub mod app;
pub mod io;
pub mod report;

pub use app::{run, EXIT_DATA, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
