use bicycles_core::harness::{
    check_all, check_axiom, check_axiom_in, check_theory, evaluate, shrink, trial_instance, AxiomId, Gen,
    MutantTheory, Mutation, TrialConfig,
};
use bicycles_core::theory::{make_quotient_theory, LabelMap};
use bicycles_core::{CobordismBicycles, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn quick() -> TrialConfig {
    TrialConfig::default().with_trials(60)
}

#[test]
fn every_axiom_name_round_trips() {
    for id in AxiomId::all() {
        assert_eq!(id.name().parse::<AxiomId>().unwrap(), id);
    }
    assert_eq!("a2p".parse::<AxiomId>().unwrap().name(), "A2'");
    assert_eq!("vb-sum-a1".parse::<AxiomId>().unwrap().name(), "VB-SUM-A1");
}

#[test]
fn unknown_axiom_is_an_error() {
    assert_eq!(
        check_axiom("A99", &quick()).unwrap_err(),
        Error::UnknownAxiom("A99".into())
    );
}

#[test]
fn invalid_configs_are_rejected() {
    let too_big = TrialConfig::default().with_max_points(7);
    assert!(matches!(check_axiom("A1", &too_big), Err(Error::InvalidConfig(_))));
    let mut cfg = TrialConfig {
        max_rank: 4,
        ..TrialConfig::default()
    };
    assert!(cfg.validate().is_err());
    cfg.max_rank = 3;
    cfg.dim_range = (2, 1);
    assert!(cfg.validate().is_err());
}

#[test]
fn zero_trials_give_an_empty_report() {
    let r = check_axiom("A1", &TrialConfig::default().with_trials(0)).unwrap();
    assert_eq!((r.trials, r.failures), (0, 0));
    assert!(r.witnesses.is_empty());
    assert_eq!(r.to_string(), "AXIOM A1 trials=0 failures=0\n");
}

#[test]
fn generation_is_deterministic() {
    let cfg = TrialConfig::default();
    for id in AxiomId::all() {
        assert_eq!(trial_instance(&cfg, id, 7), trial_instance(&cfg, id, 7));
    }
    let a = trial_instance(&cfg, AxiomId::all()[0], 1);
    let b = trial_instance(&cfg.clone().with_seed(2), AxiomId::all()[0], 1);
    assert_ne!(a, b);
}

#[test]
fn generated_smooth_maps_are_smooth() {
    let cfg = TrialConfig::default().with_max_points(6);
    for seed in 0..200 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Gen::new(&mut rng, &cfg);
        let y = g.space();
        g.smooth_into(y);
        g.smooth_from(y);
        let m = g.finish().materialize().unwrap();
        assert!(m.maps.iter().all(|f| f.is_smooth()), "seed {seed}");
    }
}

#[test]
fn generated_elements_respect_the_counting_bound() {
    let cfg = TrialConfig::default();
    let bound = cfg.max_points * ((2 * cfg.label_bound + 1) as usize).pow(2);
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Gen::new(&mut rng, &cfg);
        let (x, y) = (g.space(), g.space());
        g.element(x, y);
        let m = g.finish().materialize().unwrap();
        assert!(m.element(0).len() <= bound);
    }
}

#[test]
fn bicycles_pass_a_quick_battery() {
    let report = check_all(&quick()).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn quotient_theories_pass_the_theory_battery() {
    for q in [LabelMap::FIRST_COORDINATE, LabelMap::Reduce(2), LabelMap::ZERO] {
        let report = check_theory(&make_quotient_theory(q), &quick()).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn broken_product_is_caught_with_a_shrunk_witness() {
    let t = MutantTheory(Mutation::ProductDropsRightLabels);
    let r = check_axiom_in(&t, "CH3".parse().unwrap(), &quick()).unwrap();
    assert!(r.failures > 0);
    let w = &r.witnesses[0];
    assert!(w.largest_space <= 3, "{r}");
    assert!(!evaluate(&t, "CH3".parse().unwrap(), &w.data).holds());
}

#[test]
fn sabotaged_unit_fails_ppu() {
    let report = check_theory(&MutantTheory(Mutation::RotatedUnit), &quick()).unwrap();
    assert!(report.failed_axioms().contains(&"PPU"), "{report}");
}

#[test]
fn shrinking_keeps_the_failure() {
    let t = MutantTheory(Mutation::SmoothPullbackFirstPreimage);
    let id: AxiomId = "A3a".parse().unwrap();
    let cfg = quick();
    let (trial, v) = (0..cfg.trials)
        .map(|i| (i, evaluate(&t, id, &trial_instance(&cfg, id, i))))
        .find(|(_, v)| !v.holds())
        .expect("the mutant fails somewhere");
    let original = trial_instance(&cfg, id, trial);
    let (small, verdict) = shrink(&t, id, original.clone(), v);
    assert!(!verdict.holds());
    assert_eq!(evaluate(&t, id, &small), verdict);
    assert!(small.total_points() <= original.total_points());
}

#[test]
fn reports_are_deterministic_and_serialize() {
    let cfg = quick();
    let t = MutantTheory(Mutation::NegatedLeftChern);
    let a = check_theory(&t, &cfg).unwrap();
    let b = check_theory(&t, &cfg).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.to_json(), b.to_json());
    let parsed: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(parsed["theory"], "mutant:NegatedLeftChern");
    assert!(parsed["axioms"].as_array().unwrap().len() == AxiomId::theory_axioms().len());
}

#[test]
fn text_report_lists_witness_blocks() {
    let t = MutantTheory(Mutation::NegatedLeftChern);
    let r = check_axiom_in(&t, "UC".parse().unwrap(), &quick()).unwrap();
    let text = r.to_string();
    assert!(text.starts_with("AXIOM UC trials=60 failures="));
    assert!(text.contains("  witness trial="));
    assert!(text.contains("    lhs = "));
    let z = check_axiom_in(&CobordismBicycles, "UC".parse().unwrap(), &quick()).unwrap();
    assert_eq!(z.to_string(), "AXIOM UC trials=60 failures=0\n");
}
