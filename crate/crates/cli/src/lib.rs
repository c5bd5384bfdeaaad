//! Library side of the `novikov` command-line tool.

pub mod commands;
pub mod document;
pub mod report;

pub use commands::{parse_grid, run, Command, CommandError, Options};
pub use document::{parse_problem, FieldError, ProblemDocument};
pub use report::{render_csv, render_human, Report};
