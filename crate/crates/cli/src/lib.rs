//! Text front end for `bicycles-core`: an expression language for finite
//! models, the commands behind the `bicycles` binary, and named demos.

pub mod commands;
pub mod demos;
pub mod dsl;

pub use commands::{
    cmd_assert_eq, cmd_check, cmd_check_all, cmd_eval, cmd_list_axioms, CliError, Format, Options, Outcome, Status,
    TheoryChoice, ERROR_EXIT,
};
pub use demos::{cmd_demo, cmd_list_demos, DEMOS};
