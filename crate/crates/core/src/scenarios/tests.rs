use super::*;
use crate::functors::{binom, Functor, FunctorTag, Product};
use crate::linear::LabeledFreeModule;
use crate::ring::{Field, Ring};

#[test]
fn fixtures_parse_and_tag_provenance() {
    let f = fixtures();
    assert!(f.len() >= 19);
    for (name, e) in f {
        assert!(
            e.kind == "reference table" || e.kind == "independent oracle",
            "{name}: {}",
            e.kind
        );
        assert!(!e.values.is_empty() && !e.note.is_empty());
    }
    assert_eq!(fixture("gk").unwrap().values, vec![1, 0, 1, 0, 1, 0, 0]);
    assert!(fixture("missing").is_err());
}

/// `cr_m(F)(k, ..., k) = Σ_j (-1)^{m-j} C(m, j) dim F(k^j)`.
fn inclusion_exclusion(f: &dyn Functor, m: usize) -> i64 {
    let r = Ring::field_only(Field::prime(97).unwrap());
    (0..=m)
        .map(|j| {
            let dim = f.on_module(&LabeledFreeModule::standard(&r, "e", j, 0)).rank() as i64;
            let sign = if (m - j).is_multiple_of(2) { 1 } else { -1 };
            sign * binom(m, j) as i64 * dim
        })
        .sum()
}

fn oracle_tables(d: usize) -> PredictionTables {
    let (l2, s2) = (binom(d, 2) as i64, binom(d + 1, 2) as i64);
    let row = |m: usize| -> Vec<i64> {
        let sym3 = inclusion_exclusion(&FunctorTag::sym(3), m);
        let l = inclusion_exclusion(&FunctorTag::schur(), m);
        let d2v = inclusion_exclusion(&Product(vec![FunctorTag::div(2), FunctorTag::tensor_pow(1)]), m);
        let e3 = inclusion_exclusion(&FunctorTag::ext(3), m);
        let d3 = inclusion_exclusion(&FunctorTag::div(3), m);
        vec![sym3, l * d as i64, d2v * l2 + e3 * s2, l * d as i64 * l2, d3 * l2 * l2]
    };
    PredictionTables {
        f: row(1),
        cr2: row(2),
        cr3: row(3),
    }
}

#[test]
fn prediction_tables_match_inclusion_exclusion() {
    let r = Ring::field_only(Field::prime(97).unwrap());
    for d in 1..=4 {
        assert_eq!(prediction_tables(&r, d).unwrap(), oracle_tables(d), "d = {d}");
    }
}

#[test]
fn predictions_for_rank_two() {
    let cfg = ScenarioConfig::default_plane();
    let res = run_predictions(&cfg, 2, None).unwrap();
    assert!(res.pass, "{:?}", res.failures());
    assert_eq!(res.computed, vec![1, 0, 1, 0, 1, 2, 4, 4, 4, 2, 1, 4, 6, 4, 1]);
    assert!(res.notes.iter().any(|n| n.contains("rank 9") && n.contains("give 6")));
}

#[test]
fn predictions_for_rank_three_use_the_closed_form() {
    let res = run_predictions(&ScenarioConfig::default_plane(), 3, None).unwrap();
    assert!(res.pass, "{:?}", res.failures());
    // cr_3(F_2) = 3 C(3,2) + C(4,2)
    assert_eq!(res.computed[12], 15);
    assert!(run_predictions(&ScenarioConfig::default_plane(), 0, None).is_err());
}

#[test]
fn measured_g_tables_feed_the_comparison() {
    let cfg = ScenarioConfig::default_plane();
    let wrong = GTables {
        f: vec![1, 0, 1, 0, 1],
        cr2: vec![2, 4, 4, 4, 2],
        cr3: vec![1, 4, 9, 4, 1],
    };
    assert!(!run_predictions(&cfg, 2, Some(&wrong)).unwrap().pass);
}

#[test]
fn small_scenarios_pass_on_defaults() {
    let cfg = ScenarioConfig::default_plane();
    for name in ["tor-powers", "sym2", "schur", "cauchy", "gamma", "engines"] {
        let r = run_named(name, &cfg).unwrap();
        assert!(r.pass, "{name}: {:?}", r.failures());
        assert_eq!(r.millis, 0);
    }
}

#[test]
fn budget_overrun_is_flagged() {
    let mut cfg = ScenarioConfig::default_plane();
    cfg.max_rank = 10;
    let r = run_named("sym2", &cfg).unwrap();
    assert!(r.budget_exceeded && !r.pass);
}

#[test]
fn single_element_sequence_is_rejected_where_a_pair_is_needed() {
    let r = Ring::plane(97);
    let desc = crate::ring::RingDescriptor::new(r.clone(), Some(vec![r.var(0)])).unwrap();
    let cfg = ScenarioConfig::new(desc);
    assert!(matches!(run_named("gk", &cfg), Err(crate::error::Error::Config(_))));
    assert!(run_named("nonsense", &cfg).is_err());
}

#[test]
fn residue_dimension_of_a_non_reduced_ideal() {
    let r = Ring::plane(97);
    let desc = crate::ring::RingDescriptor::new(r.clone(), Some(vec![r.var(0).pow(2), r.var(1)])).unwrap();
    let cfg = ScenarioConfig::new(desc);
    assert_eq!(residue_dim(&cfg).unwrap(), 2);
    let res = run_tor_powers(&cfg).unwrap();
    assert!(res.pass, "{:?}", res.failures());
}
