//! Randomized checking of the axioms on generated finite instances.
//!
//! Each trial draws an instance from a generator seeded by the run seed, the
//! axiom and the trial index, so runs are reproducible and trials can be
//! evaluated in parallel. Failing instances are shrunk before reporting.

mod axioms;
mod config;
mod gen;
mod instance;
mod laws;
mod mutants;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use axioms::{AxiomId, ForgetLaw, GammaLaw, Law, OracleCheck, TheoryAxiom, VbLaw};
pub use config::{TrialConfig, MAX_POINTS_LIMIT, MAX_RANK_LIMIT};
pub use gen::Gen;
pub use instance::{
    BundleSpec, ElemKind, ElemSpec, Instance, MapSpec, Materialized, RawCycleSpec, RawSpec,
    RawVbSpec, Term, VBundleSpec,
};
pub use laws::{build, evaluate, Verdict};
pub use mutants::{Mutation, MutantTheory};

use crate::error::Result;
use crate::theory::{BivariantTheory, CobordismBicycles};

/// Failing trials that are shrunk and reported in full.
pub const MAX_WITNESSES: usize = 3;

/// A shrunk failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub points: usize,
    pub largest_space: usize,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip)]
    pub data: Instance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub theory: String,
    pub trials: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AXIOM {} trials={} failures={}", self.axiom, self.trials, self.failures)?;
        for w in &self.witnesses {
            writeln!(
                f,
                "  witness trial={} points={} largest_space={}",
                w.trial, w.points, w.largest_space
            )?;
            for line in w.instance.lines() {
                writeln!(f, "    {line}")?;
            }
            writeln!(f, "    lhs = {}", w.lhs)?;
            writeln!(f, "    rhs = {}", w.rhs)?;
        }
        Ok(())
    }
}

/// Reports for several axioms in one theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryReport {
    pub theory: String,
    pub config: TrialConfig,
    pub axioms: Vec<AxiomReport>,
}

impl TheoryReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomReport::passed)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| !a.passed())
            .map(|a| a.axiom.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for TheoryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "THEORY {} seed={}", self.theory, self.config.seed)?;
        for a in &self.axioms {
            write!(f, "{a}")?;
        }
        let failed = self.failed_axioms();
        if failed.is_empty() {
            writeln!(f, "ALL {} AXIOMS HOLD", self.axioms.len())
        } else {
            writeln!(f, "FAILED {}", failed.join(" "))
        }
    }
}

fn trial_rng(cfg: &TrialConfig, id: AxiomId, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(id.ordinal());
    rng
}

/// The instance drawn for a given trial.
pub fn trial_instance(cfg: &TrialConfig, id: AxiomId, trial: usize) -> Instance {
    let mut rng = trial_rng(cfg, id, trial);
    let mut g = Gen::new(&mut rng, cfg);
    build(id, &mut g)
}

/// Greedily replaces a failing instance by smaller failing ones until no
/// candidate in [`Instance::shrink_candidates`] still fails.
pub fn shrink<T: BivariantTheory>(theory: &T, id: AxiomId, inst: Instance, verdict: Verdict) -> (Instance, Verdict) {
    let (mut inst, mut verdict) = (inst, verdict);
    'outer: loop {
        for c in inst.shrink_candidates() {
            let v = evaluate(theory, id, &c);
            if !v.holds() {
                inst = c;
                verdict = v;
                continue 'outer;
            }
        }
        return (inst, verdict);
    }
}

fn witness(trial: usize, inst: Instance, verdict: Verdict) -> Witness {
    let (lhs, rhs) = match verdict {
        Verdict::Violated { lhs, rhs } => (lhs, rhs),
        Verdict::Error(e) => (format!("error: {e}"), String::new()),
        Verdict::Holds => unreachable!("witnesses come from failing trials"),
    };
    Witness {
        trial,
        points: inst.total_points(),
        largest_space: inst.largest_space(),
        instance: inst.to_string(),
        lhs,
        rhs,
        data: inst,
    }
}

/// Runs `cfg.trials` trials of `id` in `theory`.
pub fn check_axiom_in<T: BivariantTheory>(theory: &T, id: AxiomId, cfg: &TrialConfig) -> Result<AxiomReport> {
    cfg.validate()?;
    let failures: Vec<(usize, Instance, Verdict)> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|trial| {
            let inst = trial_instance(cfg, id, trial);
            let v = evaluate(theory, id, &inst);
            (!v.holds()).then_some((trial, inst, v))
        })
        .collect();
    let mut witnesses: Vec<Witness> = failures
        .iter()
        .take(MAX_WITNESSES)
        .cloned()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(trial, inst, v)| {
            let (inst, v) = shrink(theory, id, inst, v);
            witness(trial, inst, v)
        })
        .collect();
    witnesses.sort_by(|a, b| (&a.instance, &a.lhs, a.trial).cmp(&(&b.instance, &b.lhs, b.trial)));
    Ok(AxiomReport {
        axiom: id.name(),
        theory: theory.name(),
        trials: cfg.trials,
        failures: failures.len(),
        witnesses,
    })
}

/// Runs one axiom, by name, against the bicycle theory itself.
pub fn check_axiom(name: &str, cfg: &TrialConfig) -> Result<AxiomReport> {
    check_axiom_in(&CobordismBicycles, name.parse()?, cfg)
}

/// Runs every theory axiom and transformation law against `theory`.
pub fn check_theory<T: BivariantTheory>(theory: &T, cfg: &TrialConfig) -> Result<TheoryReport> {
    run_all(theory, AxiomId::theory_axioms(), cfg)
}

/// Runs every axiom, including the concrete checks on the bicycle groups.
pub fn check_all(cfg: &TrialConfig) -> Result<TheoryReport> {
    run_all(&CobordismBicycles, AxiomId::all(), cfg)
}

fn run_all<T: BivariantTheory>(theory: &T, ids: Vec<AxiomId>, cfg: &TrialConfig) -> Result<TheoryReport> {
    let axioms = ids
        .into_iter()
        .map(|id| check_axiom_in(theory, id, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoryReport {
        theory: theory.name(),
        config: cfg.clone(),
        axioms,
    })
}
