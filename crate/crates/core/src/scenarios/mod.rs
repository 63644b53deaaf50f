//! End-to-end pipelines: each scenario builds its complexes, measures homology and compares
//! the rank tables with stored expectations.

mod checks;
mod derived;
mod predict;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::{engines_agree, homology_graded_with, homology_groebner, ChainComplex, HomologyOptions};
use crate::error::{Error, Result};
use crate::groebner::{ModuleGB, Presentation};
use crate::ring::{Poly, RingDescriptor};

pub use checks::{
    run_cauchy_check, run_ez_check, run_gamma_check, run_koszul_qis, run_l31_homology, run_schur_comparison,
};
pub use derived::{run_cross2, run_cross3, run_gk, run_sym2, run_tor_powers};
pub use predict::{prediction_tables, run_predictions, GTables, PredictionTables};

/// Which homology engine measures the rank tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Graded,
    Groebner,
    Both,
}

impl Engine {
    fn graded(self) -> bool {
        self != Engine::Groebner
    }

    fn groebner(self) -> bool {
        self != Engine::Graded
    }
}

#[derive(Clone, Debug)]
pub struct ScenarioConfig {
    pub desc: RingDescriptor,
    /// Top simplicial level built.
    pub n_max: usize,
    /// Top internal degree examined by the graded engine.
    pub t_max: i32,
    pub engine: Engine,
    /// Report wall-clock times; otherwise `millis` is 0 so reports are reproducible.
    pub timing: bool,
    /// Largest module rank a scenario may build.
    pub max_rank: usize,
}

impl ScenarioConfig {
    pub fn new(desc: RingDescriptor) -> ScenarioConfig {
        ScenarioConfig {
            desc,
            n_max: 7,
            t_max: 12,
            engine: Engine::Graded,
            timing: false,
            max_rank: 200_000,
        }
    }

    /// `F_97[x,y]` with `I = (x, y)`.
    pub fn default_plane() -> ScenarioConfig {
        ScenarioConfig::new(RingDescriptor::default_plane(97))
    }

    pub(crate) fn sequence(&self) -> Result<&[Poly]> {
        self.desc.regular_sequence().ok_or_else(|| Error::Config("no regular sequence configured".into()))
    }

    pub(crate) fn pair(&self) -> Result<(&Poly, &Poly)> {
        match self.sequence()? {
            [f, g] => Ok((f, g)),
            s => Err(Error::Config(format!("this scenario needs a regular sequence of length 2, got {}", s.len()))),
        }
    }

    pub(crate) fn budget(&self, what: &str, rank: usize) -> Result<()> {
        if rank > self.max_rank {
            return Err(Error::Budget(format!("{what} has rank {rank}, above the limit {}", self.max_rank)));
        }
        Ok(())
    }
}

/// Ring configuration as echoed in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingEcho {
    pub field: String,
    pub vars: Vec<String>,
    pub seq: Vec<String>,
}

impl RingEcho {
    pub fn of(desc: &RingDescriptor) -> RingEcho {
        RingEcho {
            field: desc.ring().field().to_string(),
            vars: desc.ring().vars().to_vec(),
            seq: desc.regular_sequence().unwrap_or(&[]).iter().map(|f| f.to_string()).collect(),
        }
    }
}

/// A named verification inside a scenario.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioResult {
    pub name: String,
    pub ring: RingEcho,
    pub expected: Vec<i64>,
    pub computed: Vec<i64>,
    pub per_degree: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Where the expected values come from, per fixture table.
    pub provenance: BTreeMap<String, String>,
    pub budget_exceeded: bool,
    pub pass: bool,
    pub millis: u64,
}

impl ScenarioResult {
    fn new(name: &str, cfg: &ScenarioConfig) -> ScenarioResult {
        ScenarioResult {
            name: name.into(),
            ring: RingEcho::of(&cfg.desc),
            expected: Vec::new(),
            computed: Vec::new(),
            per_degree: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            provenance: BTreeMap::new(),
            budget_exceeded: false,
            pass: false,
            millis: 0,
        }
    }

    /// Append a compared table: expected values from the fixture, computed values as measured.
    fn compare(&mut self, table: &str, computed: &[i64]) -> Result<()> {
        self.compare_as(table, table, computed)
    }

    /// As [`ScenarioResult::compare`], reported under `key`.
    fn compare_as(&mut self, key: &str, table: &str, computed: &[i64]) -> Result<()> {
        let entry = fixture(table)?;
        self.compare_values(key, &entry.kind, &entry.values, computed);
        Ok(())
    }

    fn compare_values(&mut self, key: &str, kind: &str, expected: &[i64], computed: &[i64]) {
        self.provenance.insert(key.into(), kind.into());
        self.expected.extend(expected);
        self.computed.extend(computed);
        self.per_degree.insert(key.into(), json!({ "expected": expected, "computed": computed }));
    }

    fn detail(&mut self, key: &str, v: Value) {
        self.per_degree.insert(key.into(), v);
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, pass, detail));
    }

    /// `pass` iff every compared value matches and every check holds.
    fn finish(mut self, cfg: &ScenarioConfig, start: Instant) -> ScenarioResult {
        self.pass = self.expected == self.computed && self.checks.iter().all(|c| c.pass);
        self.millis = if cfg.timing { start.elapsed().as_millis() as u64 } else { 0 };
        self
    }

    /// Names of failed checks plus mismatching tables.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        for (table, v) in &self.per_degree {
            if let (Some(e), Some(c)) = (v.get("expected"), v.get("computed")) {
                if e != c {
                    out.push(format!("{table}: expected {e}, computed {c}"));
                }
            }
        }
        out
    }

    /// A failed placeholder for a scenario that stopped at its budget.
    pub fn budget_failure(name: &str, cfg: &ScenarioConfig, reason: &str) -> ScenarioResult {
        let mut r = ScenarioResult::new(name, cfg);
        r.budget_exceeded = true;
        r.notes.push(reason.into());
        r
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct FixtureEntry {
    pub kind: String,
    pub note: String,
    pub values: Vec<i64>,
}

static FIXTURES: OnceLock<BTreeMap<String, FixtureEntry>> = OnceLock::new();

/// Stored expectations, keyed by table name.
pub fn fixtures() -> &'static BTreeMap<String, FixtureEntry> {
    FIXTURES.get_or_init(|| toml::from_str(include_str!("../../fixtures/expected.toml")).expect("fixture file parses"))
}

pub fn fixture(name: &str) -> Result<&'static FixtureEntry> {
    fixtures().get(name).ok_or_else(|| Error::Config(format!("no expected table named {name}")))
}

/// `dim_k R/I`, which must be finite for R/I-ranks to be read off dimensions.
pub(crate) fn residue_dim(cfg: &ScenarioConfig) -> Result<usize> {
    let seq = cfg.sequence()?;
    Presentation::new(ModuleGB::ideal(cfg.desc.ring(), seq))
        .finite_dim
        .ok_or_else(|| Error::Config("R/I is not finite-dimensional over the base field".into()))
}

/// Rank tables of one complex as modules over `R/I`, where `I` is generated by `annihilators`.
pub(crate) struct Measured {
    pub ranks: Vec<i64>,
    pub checks: Vec<Check>,
    pub detail: Value,
}

fn rank_from_dim(total: usize, unit: usize) -> i64 {
    if unit > 0 && total.is_multiple_of(unit) {
        (total / unit) as i64
    } else {
        -1
    }
}

/// Homology of `c` in degrees `ks`, with ranks measured as multiples of `unit = dim R/I` and
/// annihilator certificates for `annihilators`.
pub(crate) fn measure(
    label: &str,
    c: &ChainComplex,
    ks: RangeInclusive<i32>,
    cfg: &ScenarioConfig,
    unit: usize,
    annihilators: &[Poly],
) -> Result<Measured> {
    let mut checks = Vec::new();
    let mut detail = serde_json::Map::new();
    let mut graded_ranks = None;
    if cfg.engine.graded() {
        let opts = HomologyOptions::new(cfg.t_max).degrees(ks.clone()).annihilators(annihilators);
        let report = homology_graded_with(c, &opts)?;
        checks.push(Check::new(format!("{label}: annihilated by I"), report.all_annihilated(), "graded engine"));
        checks.push(Check::new(format!("{label}: Euler characteristic"), report.euler_consistent, "per internal degree"));
        checks.push(Check::new(
            format!("{label}: homology below t_max"),
            !report.stabilization_warning,
            format!("t_max = {}", cfg.t_max),
        ));
        for d in &report.degrees {
            detail.insert(format!("H_{}", d.k), json!(d.dims));
        }
        graded_ranks = Some(ks.clone().map(|k| rank_from_dim(report.total(k), unit)).collect::<Vec<_>>());
        if cfg.engine.groebner() {
            let agree = groebner_presentations(c, ks.clone())?
                .iter()
                .zip(ks.clone())
                .all(|(p, k)| engines_agree(&report, k, p));
            checks.push(Check::new(format!("{label}: engines agree"), agree, "graded vs Gröbner, every internal degree"));
        }
    }
    let ranks = match graded_ranks {
        Some(r) => r,
        None => {
            let pres = groebner_presentations(c, ks.clone())?;
            let mut ranks = Vec::new();
            for (p, k) in pres.iter().zip(ks.clone()) {
                let killed = annihilators.iter().all(|f| {
                    (0..p.generator_count).all(|i| p.relations.contains(&[(i as u32, f.clone())]))
                });
                checks.push(Check::new(format!("{label}: H_{k} annihilated by I"), killed, "Gröbner membership"));
                let dims: BTreeMap<i32, usize> = (0..=cfg.t_max).map(|t| (t, p.hilbert(t))).filter(|(_, d)| *d > 0).collect();
                detail.insert(format!("H_{k}"), json!(dims));
                ranks.push(p.finite_dim.map_or(-1, |d| rank_from_dim(d, unit)));
            }
            ranks
        }
    };
    Ok(Measured {
        ranks,
        checks,
        detail: Value::Object(detail),
    })
}

pub(crate) fn groebner_presentations(c: &ChainComplex, ks: RangeInclusive<i32>) -> Result<Vec<Presentation>> {
    ks.collect::<Vec<_>>().par_iter().map(|&k| homology_groebner(c, k)).collect()
}

/// Degrees `0..=k_max` clipped to what `levels` simplicial levels determine.
pub(crate) fn degrees_for(cfg: &ScenarioConfig, k_max: usize) -> (usize, RangeInclusive<i32>) {
    let levels = (k_max + 1).min(cfg.n_max);
    let top = k_max.min(levels.saturating_sub(1));
    (levels, 0..=top as i32)
}

/// Every scenario, in the order `all` runs them.
pub const SCENARIOS: [&str; 13] = [
    "gk", "sym2", "cross2", "cross3", "tor-powers", "predict", "schur", "l31", "koszul", "ez", "cauchy", "gamma", "engines",
];

fn run_inner(name: &str, cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    match name {
        "gk" => run_gk(cfg),
        "sym2" => run_sym2(cfg),
        "cross2" => run_cross2(cfg),
        "cross3" => run_cross3(cfg),
        "tor-powers" => run_tor_powers(cfg),
        "predict" => run_predictions(cfg, 2, None),
        "schur" => run_schur_comparison(cfg),
        "l31" => run_l31_homology(cfg),
        "koszul" => run_koszul_qis(cfg, 3),
        "ez" => run_ez_check(cfg),
        "cauchy" => run_cauchy_check(cfg),
        "gamma" => run_gamma_check(cfg),
        "engines" => checks::run_engine_agreement(cfg),
        _ => Err(Error::Config(format!("unknown scenario {name}"))),
    }
}

/// Runs a scenario by name; a budget overrun yields a flagged, failing result.
pub fn run_named(name: &str, cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    match run_inner(name, cfg) {
        Err(Error::Budget(reason)) => Ok(ScenarioResult::budget_failure(name, cfg, &reason)),
        other => other,
    }
}

/// Runs every scenario, feeding the measured G-tables into the prediction comparison.
pub fn run_all(cfg: &ScenarioConfig, jobs: usize) -> Result<Vec<ScenarioResult>> {
    let names: Vec<&str> = SCENARIOS.iter().copied().filter(|n| *n != "predict").collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut results: Vec<ScenarioResult> =
        pool.install(|| names.par_iter().map(|n| run_named(n, cfg)).collect::<Result<Vec<_>>>())?;
    let g = GTables::from_results(&results);
    let predict = match run_predictions(cfg, 2, g.as_ref()) {
        Err(Error::Budget(reason)) => ScenarioResult::budget_failure("predict", cfg, &reason),
        other => other?,
    };
    let pos = SCENARIOS.iter().position(|n| *n == "predict").expect("listed");
    results.insert(pos, predict);
    Ok(results)
}

#[cfg(test)]
mod tests;
