//! Command-line front end and JSON formats for `skeinkit-core`.

pub mod cli;
pub mod expr;
pub mod json;

pub use cli::{run, Env, Outcome};
