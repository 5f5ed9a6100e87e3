use std::io::{Read, Write};
use std::process::ExitCode;

use bicycles_cli::{
    cmd_assert_eq, cmd_check, cmd_check_all, cmd_demo, cmd_eval, cmd_list_axioms, cmd_list_demos, CliError, Format,
    Options, Outcome, TheoryChoice, ERROR_EXIT,
};
use bicycles_core::harness::TrialConfig;
use clap::{Parser, Subcommand};

/// Exact finite model of cobordism bicycles: evaluate expressions, compare
/// canonical forms and run the randomized axiom harness.
///
/// Exit status: 0 pass, 1 a check or assertion failed, 2 usage or input
/// error, 3 a demo confirmed an expected inequality.
#[derive(Parser, Debug)]
#[command(name = "bicycles", version)]
struct Cli {
    /// Harness seed.
    #[arg(long, global = true, default_value_t = TrialConfig::default().seed)]
    seed: u64,
    /// Trials per axiom.
    #[arg(long, global = true, default_value_t = TrialConfig::default().trials)]
    trials: usize,
    /// Largest number of points in a generated space.
    #[arg(long, global = true, default_value_t = TrialConfig::default().max_points)]
    max_points: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Theory for checks: bicycles, mod-N, first-coordinate, zero or mutant-NAME.
    #[arg(long, global = true, default_value = "bicycles", value_parser = parse_theory)]
    theory: TheoryChoice,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a script, or evaluate EXPR against its declarations.
    Eval {
        /// Script file, or `-` for stdin.
        script: String,
        expr: Option<String>,
    },
    /// Exit 0 iff two expressions have equal canonical forms.
    AssertEq {
        /// Script file, or `-` for stdin.
        script: String,
        lhs: String,
        rhs: String,
    },
    /// Run one axiom through the randomized harness.
    Check { axiom: String },
    /// Run every axiom through the randomized harness.
    CheckAll,
    /// Run a named demo; lists the demos when NAME is omitted.
    Demo { name: Option<String> },
    /// List every axiom id the harness knows.
    ListAxioms,
}

fn parse_theory(s: &str) -> Result<TheoryChoice, String> {
    s.parse()
}

fn read_source(path: &str) -> Result<(String, String), CliError> {
    let io = |error| CliError::Io {
        path: path.to_string(),
        error,
    };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok((text, "<stdin>".into()))
    } else {
        Ok((std::fs::read_to_string(path).map_err(io)?, path.to_string()))
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let config = TrialConfig {
        seed: cli.seed,
        trials: cli.trials,
        max_points: cli.max_points,
        ..TrialConfig::default()
    };
    config.validate()?;
    let opts = Options {
        config,
        format: cli.format,
        theory: cli.theory,
    };
    match cli.command {
        Command::Eval { script, expr } => {
            let (text, name) = read_source(&script)?;
            cmd_eval(&text, &name, expr.as_deref(), &opts)
        }
        Command::AssertEq { script, lhs, rhs } => {
            let (text, name) = read_source(&script)?;
            cmd_assert_eq(&text, &name, &lhs, &rhs, &opts)
        }
        Command::Check { axiom } => cmd_check(&axiom, &opts),
        Command::CheckAll => cmd_check_all(&opts),
        Command::Demo { name: Some(name) } => cmd_demo(&name, &opts),
        Command::Demo { name: None } => Ok(cmd_list_demos()),
        Command::ListAxioms => Ok(cmd_list_axioms(&opts)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(outcome.output.as_bytes());
            ExitCode::from(outcome.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}
