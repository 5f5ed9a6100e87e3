//! Named scenarios runnable with `bicycles demo NAME`.

use std::fmt::Write as _;

use bicycles_core::harness::{check_axiom_in, check_theory, AxiomId, MutantTheory, Mutation};
use bicycles_core::theory::{
    forget_pullback_counterexample, forget_pullback_paths, gamma_universal, make_quotient_theory, uniqueness_check,
    LabelMap,
};
use bicycles_core::CobordismBicycles;
use serde_json::{json, Value};

use crate::commands::{element_json, run_program, CliError, Format, Options, Outcome, Status};
use crate::dsl;

/// Rendered text, structured details and the verdict of a built-in demo.
type Report = Result<(String, Value, Status), CliError>;

pub enum Body {
    Script(&'static str),
    Builtin(fn(&Options) -> Report),
}

pub struct Demo {
    pub name: &'static str,
    pub summary: &'static str,
    pub body: Body,
}

pub const DEMOS: [Demo; 8] = [
    Demo {
        name: "pppu",
        summary: "pushforward of units across a fiber square",
        body: Body::Script(include_str!("../demos/pppu.bc")),
    },
    Demo {
        name: "units",
        summary: "units are identities; c1 slides across a unit",
        body: Body::Script(include_str!("../demos/units.bc")),
    },
    Demo {
        name: "chern",
        summary: "Chern operators commute with each other, products and pushforwards",
        body: Body::Script(include_str!("../demos/chern.bc")),
    },
    Demo {
        name: "normal-form",
        summary: "a generator rebuilt from units, Chern operators and pushforwards",
        body: Body::Script(include_str!("../demos/normal-form.bc")),
    },
    Demo {
        name: "projection",
        summary: "projection formulas for smooth and proper pullbacks",
        body: Body::Script(include_str!("../demos/projection.bc")),
    },
    Demo {
        name: "forget-pullback-fails",
        summary: "the forget map does not commute with pullback",
        body: Body::Builtin(forget_pullback_fails),
    },
    Demo {
        name: "universality",
        summary: "the universal transformation into bicycles and into a quotient",
        body: Body::Builtin(universality),
    },
    Demo {
        name: "mutants",
        summary: "each deliberately broken theory is caught by the harness",
        body: Body::Builtin(mutants),
    },
];

pub fn find(name: &str) -> Option<&'static Demo> {
    DEMOS.iter().find(|d| d.name == name)
}

pub fn cmd_demo(name: &str, opts: &Options) -> Result<Outcome, CliError> {
    let demo = find(name).ok_or_else(|| {
        let names: Vec<String> = DEMOS.iter().map(|d| d.name.to_string()).collect();
        let mut close: Vec<&String> = names.iter().filter(|n| strsim::jaro_winkler(name, n) > 0.8).collect();
        close.truncate(3);
        let hint = if close.is_empty() {
            format!("available: {}", names.join(", "))
        } else {
            let list: Vec<String> = close.iter().map(|n| format!("`{n}`")).collect();
            format!("did you mean {}?", list.join(", "))
        };
        CliError::Usage(format!("unknown demo `{name}`; {hint}"))
    })?;
    let (body, json, status) = match demo.body {
        Body::Script(src) => {
            let program = dsl::load(src).map_err(|e| CliError::dsl(&format!("demo {}", demo.name), e))?;
            let inner = Options {
                format: Format::Text,
                ..opts.clone()
            };
            let text = run_program(&program, &inner)?;
            let structured = run_program(&program, &Options { format: Format::Structured, ..opts.clone() })?;
            let json: Value = serde_json::from_str(&structured.output).expect("own JSON parses");
            (text.output, json, text.status)
        }
        Body::Builtin(run) => run(opts)?,
    };
    let verdict = match status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::InequalityConfirmed => "EXPECTED INEQUALITY CONFIRMED",
    };
    let output = match opts.format {
        Format::Text => format!("DEMO {} ({})\n{body}DEMO {}: {verdict}\n", demo.name, demo.summary, demo.name),
        Format::Structured => {
            let v = json!({ "demo": demo.name, "summary": demo.summary, "result": verdict, "details": json });
            serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
        }
    };
    Ok(Outcome { output, status })
}

pub fn cmd_list_demos() -> Outcome {
    let mut output = String::new();
    for d in &DEMOS {
        writeln!(output, "{:<22} {}", d.name, d.summary).unwrap();
    }
    Outcome {
        output,
        status: Status::Pass,
    }
}

fn forget_pullback_fails(_: &Options) -> Report {
    let (g, alpha) = forget_pullback_counterexample()?;
    let (lhs, rhs) = forget_pullback_paths(&g, &alpha)?;
    let mut text = String::new();
    writeln!(text, "X = Y = {{y}}, f = id, g : {{y1', y2'}} -> {{y}}, all of dimension 0").unwrap();
    writeln!(text, "alpha = {alpha}").unwrap();
    writeln!(text, "forget(g^* alpha)            = {lhs}   ({} terms)", lhs.len()).unwrap();
    writeln!(text, "(g')^* forget(alpha) ,^* g   = {rhs}   ({} terms)", rhs.len()).unwrap();
    let status = if lhs != rhs {
        Status::InequalityConfirmed
    } else {
        Status::Fail
    };
    let json = json!({
        "alpha": alpha.to_string(),
        "lhs": element_json(&lhs),
        "rhs": element_json(&rhs),
        "lhs_terms": lhs.len(),
        "rhs_terms": rhs.len(),
    });
    Ok((text, json, status))
}

const UNIVERSALITY_SCRIPT: &str = "
space X { x0: dim 0, x1: dim 1 }
space Y { y0: dim 1 }
space V { v0: dim 1, v1: dim 2 }
map p : V -> X { v0 -> x0, v1 -> x1 }
map s : V -> Y { v0 -> y0, v1 -> y0 }
bundle L on V { v0: (1, 2), v1: (-1, 3) }
bundle M on V { v0: (2, 2), v1: (0, -1) }
let a = [X <- p, s -> Y ; L]
let b = [X <- p, s -> Y ; L, M] - 2 * [X <- p, s -> Y]
let c = [X <- p, s -> Y ; M, M, L]
";

fn universality(opts: &Options) -> Report {
    let program = dsl::load(UNIVERSALITY_SCRIPT).map_err(|e| CliError::dsl("demo universality", e))?;
    let samples: Vec<_> = program.env.elements.values().cloned().collect();
    let quotient = make_quotient_theory(LabelMap::Reduce(2));
    let mut text = String::new();
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, a) in &program.env.elements {
        let into_z = gamma_universal(&CobordismBicycles, a)?;
        let into_q = gamma_universal(&quotient, a)?;
        let identity = &into_z == a;
        let relabels = into_q == quotient.relabel(a);
        ok &= identity && relabels;
        writeln!(text, "{name} = {a}").unwrap();
        writeln!(text, "  gamma into bicycles is the identity: {identity}").unwrap();
        writeln!(text, "  gamma into labels mod 2 = {into_q}  (equals relabeling: {relabels})").unwrap();
        rows.push(json!({ "name": name, "value": element_json(a), "identity": identity, "relabels": relabels }));
    }
    let accepts = uniqueness_check(&quotient, |a| gamma_universal(&quotient, a), &samples)?;
    let rejects = !uniqueness_check(&quotient, |a| Ok(gamma_universal(&quotient, a)?.neg()), &samples)?;
    ok &= accepts && rejects;
    writeln!(text, "uniqueness accepts gamma: {accepts}; rejects -gamma: {rejects}").unwrap();
    let mut laws = Vec::new();
    for id in AxiomId::all().into_iter().filter(|id| matches!(id, AxiomId::Gamma(_))) {
        let r = check_axiom_in(&quotient, id, &opts.config)?;
        ok &= r.passed();
        text.push_str(&r.to_string());
        laws.push(r);
    }
    let json = json!({ "elements": rows, "uniqueness_accepts": accepts, "uniqueness_rejects_negation": rejects, "laws": laws });
    Ok((text, json, if ok { Status::Pass } else { Status::Fail }))
}

fn mutants(opts: &Options) -> Report {
    let mut text = String::new();
    let mut ok = true;
    let mut rows = Vec::new();
    for m in Mutation::ALL {
        let report = check_theory(&MutantTheory(m), &opts.config)?;
        let caught = report.failed_axioms();
        ok &= !caught.is_empty();
        let smallest = report
            .axioms
            .iter()
            .flat_map(|r| r.witnesses.iter())
            .min_by_key(|w| (w.largest_space, w.points));
        write!(text, "{m:?}: caught by {}", if caught.is_empty() { "nothing".into() } else { caught.join(", ") }).unwrap();
        if let Some(w) = smallest {
            write!(text, "; smallest witness {} points, largest space {}", w.points, w.largest_space).unwrap();
        }
        text.push('\n');
        rows.push(json!({ "mutation": format!("{m:?}"), "caught_by": caught, "smallest_witness": smallest }));
    }
    Ok((text, Value::Array(rows), if ok { Status::Pass } else { Status::Fail }))
}
