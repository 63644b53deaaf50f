use std::time::Instant;

use super::{degrees_for, measure, residue_dim, ScenarioConfig, ScenarioResult};
use crate::complex::total_complex_many;
use crate::error::Result;
use crate::functors::FunctorTag;
use crate::koszul::{principal_resolution, regular_sequence_resolution};
use crate::simplicial::{apply_pointwise_functor, diagonal_tensor, gamma, normalize, SimplicialModule};

/// `F` applied levelwise, refusing to build a top level above the budget.
pub(crate) fn apply_guarded(cfg: &ScenarioConfig, tag: FunctorTag, a: &SimplicialModule) -> Result<SimplicialModule> {
    cfg.budget(&format!("{tag} at level {}", a.n_max()), tag.rank_on(a.level(a.n_max()).rank()))?;
    Ok(apply_pointwise_functor(&tag, a))
}

/// `Δ(A_1 ⊗ ... ⊗ A_m)`, refusing to build a top level above the budget.
pub(crate) fn diagonal_guarded(cfg: &ScenarioConfig, factors: &[&SimplicialModule]) -> Result<SimplicialModule> {
    let top = factors.iter().map(|a| a.level(a.n_max()).rank()).fold(1usize, |acc, r| acc.saturating_mul(r));
    cfg.budget("diagonal tensor product", top)?;
    diagonal_tensor(factors)
}

/// `H_k N Sym³ Γ P` for the resolution `P` of `R/I`, checked against the route through
/// `N Sym³ Δ(ΓK ⊗ ΓL)`.
pub fn run_gk(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("gk", cfg);
    let (f, g) = cfg.pair()?;
    let seq = [f.clone(), g.clone()];
    let unit = residue_dim(cfg)?;
    let ring = cfg.desc.ring();
    let (levels, ks) = degrees_for(cfg, 6);
    let sym3 = FunctorTag::sym(3);

    let gp = gamma(&regular_sequence_resolution(&cfg.desc)?, levels)?;
    let route_a = normalize(&apply_guarded(cfg, sym3, &gp)?)?;
    let a = measure("N Sym^3 Gamma P", &route_a, ks.clone(), cfg, unit, &seq)?;
    res.checks.extend(a.checks);
    res.detail("N Sym^3 Gamma P", a.detail);
    res.compare("gk", &a.ranks)?;

    let gk = gamma(&principal_resolution(ring, "k", f), levels)?;
    let gl = gamma(&principal_resolution(ring, "l", g), levels)?;
    let route_b = normalize(&apply_guarded(cfg, sym3, &diagonal_guarded(cfg, &[&gk, &gl])?)?)?;
    let b = measure("N Sym^3 Delta(Gamma K (x) Gamma L)", &route_b, ks, cfg, unit, &seq)?;
    res.checks.extend(b.checks);
    res.check("route independence", a.ranks == b.ranks, format!("{:?} vs {:?}", a.ranks, b.ranks));
    res.detail("N Sym^3 Delta(Gamma K (x) Gamma L)", b.detail);
    Ok(res.finish(cfg, start))
}

/// `H_k N Sym² Γ P`.
pub fn run_sym2(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("sym2", cfg);
    let (f, g) = cfg.pair()?;
    let unit = residue_dim(cfg)?;
    let (levels, ks) = degrees_for(cfg, 3);
    let gp = gamma(&regular_sequence_resolution(&cfg.desc)?, levels)?;
    let n = normalize(&apply_guarded(cfg, FunctorTag::sym(2), &gp)?)?;
    let m = measure("N Sym^2 Gamma P", &n, ks, cfg, unit, &[f.clone(), g.clone()])?;
    res.checks.extend(m.checks);
    res.detail("N Sym^2 Gamma P", m.detail);
    res.compare("sym2", &m.ranks)?;
    Ok(res.finish(cfg, start))
}

/// `H_k N Δ(Sym²ΓP ⊗ ΓP)`, its mirror `H_k N Δ(ΓP ⊗ Sym²ΓP)`, and their sum.
pub fn run_cross2(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("cross2", cfg);
    let (f, g) = cfg.pair()?;
    let seq = [f.clone(), g.clone()];
    let unit = residue_dim(cfg)?;
    let (levels, ks) = degrees_for(cfg, 5);
    let gp = gamma(&regular_sequence_resolution(&cfg.desc)?, levels)?;
    let s2 = apply_guarded(cfg, FunctorTag::sym(2), &gp)?;
    let mut sides = Vec::new();
    for (label, factors) in [
        ("N Delta(Sym^2 Gamma P (x) Gamma P)", [&s2, &gp]),
        ("N Delta(Gamma P (x) Sym^2 Gamma P)", [&gp, &s2]),
    ] {
        let n = normalize(&diagonal_guarded(cfg, &factors)?)?;
        let m = measure(label, &n, ks.clone(), cfg, unit, &seq)?;
        res.checks.extend(m.checks);
        res.detail(label, m.detail);
        sides.push(m.ranks);
    }
    res.compare_as("left side", "cross2_side", &sides[0])?;
    res.compare_as("right side", "cross2_side", &sides[1])?;
    let totals: Vec<i64> = sides[0].iter().zip(&sides[1]).map(|(a, b)| a + b).collect();
    res.compare("cross2_total", &totals)?;
    Ok(res.finish(cfg, start))
}

/// `H_k N Δ(ΓP ⊗ ΓP ⊗ ΓP)`, cross-checked against `H_k Tot(P ⊗ P ⊗ P)`.
pub fn run_cross3(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("cross3", cfg);
    let (f, g) = cfg.pair()?;
    let seq = [f.clone(), g.clone()];
    let unit = residue_dim(cfg)?;
    let (levels, ks) = degrees_for(cfg, 5);
    let p = regular_sequence_resolution(&cfg.desc)?;
    let gp = gamma(&p, levels)?;
    let n = normalize(&diagonal_guarded(cfg, &[&gp, &gp, &gp])?)?;
    let m = measure("N Delta(Gamma P (x) Gamma P (x) Gamma P)", &n, ks.clone(), cfg, unit, &seq)?;
    res.checks.extend(m.checks);
    res.detail("N Delta(Gamma P (x) Gamma P (x) Gamma P)", m.detail);
    res.compare("cross3", &m.ranks)?;
    let tot = measure("Tot(P (x) P (x) P)", &total_complex_many(&[&p, &p, &p]), ks, cfg, unit, &seq)?;
    res.checks.extend(tot.checks);
    res.check("Tot cross-check", tot.ranks == m.ranks, format!("{:?} vs {:?}", tot.ranks, m.ranks));
    Ok(res.finish(cfg, start))
}

/// `H_k Tot(P^{⊗2})` and `H_k Tot(P^{⊗3})`.
pub fn run_tor_powers(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("tor-powers", cfg);
    let (f, g) = cfg.pair()?;
    let seq = [f.clone(), g.clone()];
    let unit = residue_dim(cfg)?;
    let p = regular_sequence_resolution(&cfg.desc)?;
    for (table, copies, top) in [("tor2", 2usize, 2), ("tor3", 3, 4)] {
        let tot = total_complex_many(&vec![&p; copies]);
        let label = format!("Tot(P^{copies})");
        let m = measure(&label, &tot, 0..=top, cfg, unit, &seq)?;
        res.checks.extend(m.checks);
        res.detail(&label, m.detail);
        res.compare(table, &m.ranks)?;
    }
    Ok(res.finish(cfg, start))
}
