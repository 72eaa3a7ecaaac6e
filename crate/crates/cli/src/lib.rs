//! Command-line front end: matrix files, report documents and command
//! dispatch.

pub mod app;
pub mod matfile;
pub mod report;

pub use app::{run, CommandOutput};
pub use matfile::{parse_matrix, render_matrix, ParseError};
pub use report::{Report, ReportDocument};
