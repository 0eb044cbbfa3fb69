//! Expression parsing and subcommand implementations behind the `qserre`
//! binary.

pub mod commands;
pub mod expr;
