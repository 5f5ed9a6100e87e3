use std::fmt::Write as _;
use std::str::FromStr;

use bicycles_core::harness::{
    check_all, check_axiom_in, check_theory, AxiomId, AxiomReport, MutantTheory, Mutation, TheoryReport, TrialConfig,
};
use bicycles_core::theory::{make_quotient_theory, LabelMap};
use bicycles_core::{BivariantTheory, CobordismBicycles, GroupElement};
use serde_json::{json, Value};

use crate::dsl::{self, DslError, Program, Statement};

/// How a command finished. Errors are reported separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A demo whose point is that two sides differ, and they did.
    InequalityConfirmed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InequalityConfirmed => 3,
        }
    }

    fn and(self, ok: bool) -> Status {
        if ok {
            self
        } else {
            Status::Fail
        }
    }
}

/// Exit code for usage, parse, elaboration and I/O errors.
pub const ERROR_EXIT: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}:{error}")]
    Dsl { source_name: String, error: DslError },
    #[error("{0}")]
    Core(#[from] bicycles_core::Error),
    #[error("cannot read {path}: {error}")]
    Io { path: String, error: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn dsl(source_name: &str, error: DslError) -> Self {
        CliError::Dsl {
            source_name: source_name.to_string(),
            error,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// The theory that `check`, `check-all` and script `check` statements run in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TheoryChoice {
    #[default]
    Bicycles,
    Quotient(LabelMap),
    Mutant(Mutation),
}

fn kebab(camel: &str) -> String {
    let mut out = String::new();
    for (i, c) in camel.chars().enumerate() {
        if c.is_ascii_uppercase() {
            if i > 0 {
                out.push('-');
            }
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

impl TheoryChoice {
    /// Every accepted spelling except the `mod-N` family.
    pub fn names() -> Vec<String> {
        let mut out = vec!["bicycles".to_string(), "first-coordinate".into(), "zero".into()];
        out.extend(Mutation::ALL.iter().map(|m| format!("mutant-{}", kebab(&format!("{m:?}")))));
        out
    }

    fn with<R>(&self, run: impl WithTheory<R>) -> R {
        match *self {
            TheoryChoice::Bicycles => run.call(&CobordismBicycles),
            TheoryChoice::Quotient(q) => run.call(&make_quotient_theory(q)),
            TheoryChoice::Mutant(m) => run.call(&MutantTheory(m)),
        }
    }
}

trait WithTheory<R> {
    fn call<T: BivariantTheory<Element = GroupElement>>(self, theory: &T) -> R;
}

impl FromStr for TheoryChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bicycles" => return Ok(TheoryChoice::Bicycles),
            "first-coordinate" => return Ok(TheoryChoice::Quotient(LabelMap::FIRST_COORDINATE)),
            "zero" => return Ok(TheoryChoice::Quotient(LabelMap::ZERO)),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("mod-") {
            return match n.parse::<i64>() {
                Ok(n) if n >= 1 => Ok(TheoryChoice::Quotient(LabelMap::Reduce(n))),
                _ => Err(format!("`{s}`: the modulus must be a positive integer")),
            };
        }
        if let Some(m) = Mutation::ALL
            .iter()
            .find(|m| s == format!("mutant-{}", kebab(&format!("{m:?}"))))
        {
            return Ok(TheoryChoice::Mutant(*m));
        }
        let names = Self::names();
        let mut close: Vec<&String> = names.iter().filter(|n| strsim::jaro_winkler(s, n) > 0.8).collect();
        close.truncate(3);
        let hint = if close.is_empty() {
            format!("expected one of {}, or mod-N", names.join(", "))
        } else {
            let list: Vec<String> = close.iter().map(|n| format!("`{n}`")).collect();
            format!("did you mean {}?", list.join(", "))
        };
        Err(format!("unknown theory `{s}`; {hint}"))
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub config: TrialConfig,
    pub format: Format,
    pub theory: TheoryChoice,
}

/// Rendered output and how the command finished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: Status,
}

fn emit(opts: &Options, text: String, json: Value, status: Status) -> Outcome {
    let output = match opts.format {
        Format::Text => text,
        Format::Structured => serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n",
    };
    Outcome { output, status }
}

pub fn element_json(e: &GroupElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(g, c)| {
            json!({
                "coeff": c,
                "x": g.x.to_string(),
                "y": g.y.to_string(),
                "d": g.d,
                "labels": g.labels.iter().map(|l| [l.0, l.1]).collect::<Vec<_>>(),
                "degree": g.degree(e.tgt()),
            })
        })
        .collect();
    json!({ "text": e.to_string(), "terms": terms })
}

fn parse_axiom(id: &str) -> Result<AxiomId, CliError> {
    id.parse::<AxiomId>().map_err(|_| {
        let names = AxiomId::names();
        let mut close: Vec<&String> = names.iter().filter(|n| strsim::jaro_winkler(&id.to_uppercase(), n) > 0.85).collect();
        close.truncate(3);
        let hint = if close.is_empty() {
            "run `bicycles list-axioms` for the full list".to_string()
        } else {
            let list: Vec<String> = close.iter().map(|n| format!("`{n}`")).collect();
            format!("did you mean {}?", list.join(", "))
        };
        CliError::Usage(format!("unknown axiom `{id}`; {hint}"))
    })
}

struct CheckOne<'a>(AxiomId, &'a TrialConfig);

impl WithTheory<bicycles_core::Result<AxiomReport>> for CheckOne<'_> {
    fn call<T: BivariantTheory<Element = GroupElement>>(self, theory: &T) -> bicycles_core::Result<AxiomReport> {
        check_axiom_in(theory, self.0, self.1)
    }
}

struct CheckTheory<'a>(&'a TrialConfig);

impl WithTheory<bicycles_core::Result<TheoryReport>> for CheckTheory<'_> {
    fn call<T: BivariantTheory<Element = GroupElement>>(self, theory: &T) -> bicycles_core::Result<TheoryReport> {
        check_theory(theory, self.0)
    }
}

/// Runs every statement of an elaborated script.
pub fn run_program(program: &Program, opts: &Options) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for st in &program.statements {
        match st {
            Statement::Eval { expr, value } => {
                writeln!(text, "{expr} = {value}").unwrap();
                items.push(json!({ "kind": "eval", "expr": expr.to_string(), "value": element_json(value) }));
            }
            Statement::Assert { lhs, rhs, equal, lhs_value, rhs_value } => {
                let holds = st.holds();
                ok &= holds;
                let op = if *equal { "==" } else { "!=" };
                writeln!(text, "assert {lhs} {op} {rhs}: {}", if holds { "PASS" } else { "FAIL" }).unwrap();
                if !holds || !*equal {
                    writeln!(text, "  lhs = {lhs_value}\n  rhs = {rhs_value}").unwrap();
                }
                items.push(json!({
                    "kind": "assert",
                    "lhs": lhs.to_string(),
                    "rhs": rhs.to_string(),
                    "expect": if *equal { "equal" } else { "different" },
                    "holds": holds,
                    "lhs_value": element_json(lhs_value),
                    "rhs_value": element_json(rhs_value),
                }));
            }
            Statement::Check(id) => {
                let axiom = parse_axiom(&id.name)?;
                let report = opts.theory.with(CheckOne(axiom, &opts.config))?;
                ok &= report.passed();
                text.push_str(&report.to_string());
                items.push(json!({ "kind": "check", "report": report }));
            }
        }
    }
    let status = Status::Pass.and(ok);
    Ok(emit(opts, text, json!({ "statements": items, "passed": ok }), status))
}

/// Runs a script, or evaluates `expr` against the script's declarations.
pub fn cmd_eval(source: &str, source_name: &str, expr: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let program = dsl::load(source).map_err(|e| CliError::dsl(source_name, e))?;
    let Some(expr) = expr else {
        return run_program(&program, opts);
    };
    let value = eval_in(&program, expr)?;
    Ok(emit(opts, format!("{value}\n"), element_json(&value), Status::Pass))
}

fn eval_in(program: &Program, expr: &str) -> Result<GroupElement, CliError> {
    let e = dsl::parse_expr(expr).map_err(|e| CliError::dsl("<expr>", e))?;
    program.env.eval(&e).map_err(|e| CliError::dsl("<expr>", e))
}

/// Passes iff the two expressions have equal canonical forms.
pub fn cmd_assert_eq(source: &str, source_name: &str, lhs: &str, rhs: &str, opts: &Options) -> Result<Outcome, CliError> {
    let program = dsl::load(source).map_err(|e| CliError::dsl(source_name, e))?;
    let (a, b) = (eval_in(&program, lhs)?, eval_in(&program, rhs)?);
    let equal = a == b;
    let verdict = if equal { "EQUAL" } else { "DIFFERENT" };
    let text = format!("{verdict}\n  lhs = {a}\n  rhs = {b}\n");
    let json = json!({ "equal": equal, "lhs": element_json(&a), "rhs": element_json(&b) });
    Ok(emit(opts, text, json, Status::Pass.and(equal)))
}

pub fn cmd_check(axiom: &str, opts: &Options) -> Result<Outcome, CliError> {
    let id = parse_axiom(axiom)?;
    let report = opts.theory.with(CheckOne(id, &opts.config))?;
    let json = serde_json::to_value(&report).expect("reports serialize");
    Ok(emit(opts, report.to_string(), json, Status::Pass.and(report.passed())))
}

pub fn cmd_check_all(opts: &Options) -> Result<Outcome, CliError> {
    let report = match opts.theory {
        TheoryChoice::Bicycles => check_all(&opts.config)?,
        _ => opts.theory.with(CheckTheory(&opts.config))?,
    };
    let output = match opts.format {
        Format::Text => report.to_string(),
        Format::Structured => report.to_json() + "\n",
    };
    Ok(Outcome {
        output,
        status: Status::Pass.and(report.passed()),
    })
}

fn family(id: AxiomId) -> &'static str {
    match id {
        AxiomId::Theory(_) => "theory",
        AxiomId::Gamma(_) => "transformation",
        AxiomId::Oracle(_) => "oracle",
        AxiomId::Vector(..) => "vector-bundle",
        AxiomId::Forget(_) => "forget",
    }
}

pub fn cmd_list_axioms(opts: &Options) -> Outcome {
    let ids = AxiomId::all();
    let mut text = String::new();
    for id in &ids {
        writeln!(text, "{:<22} {}", id.name(), family(*id)).unwrap();
    }
    let json: Vec<Value> = ids.iter().map(|id| json!({ "id": id.name(), "family": family(*id) })).collect();
    emit(opts, text, Value::Array(json), Status::Pass)
}
