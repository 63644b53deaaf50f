use std::sync::Arc;
use std::time::Instant;

use serde_json::json;

use super::derived::{apply_guarded, diagonal_guarded};
use super::{degrees_for, groebner_presentations, measure, residue_dim, Check, ScenarioConfig, ScenarioResult};
use crate::complex::{
    check_quasi_isomorphism, engines_agree, homology_graded_with, monomial_kernel, total_complex_many, ChainComplex,
    ChainMap, HomologyOptions,
};
use crate::error::{Error, Result};
use crate::functors::{
    binom, cauchy_det_map, cauchy_m21_map, cross_effect, delta_map, field_columns, induced_map, plus_map,
    schur_comparison, straightening_map, sym_multiplication_map, Functor, FunctorTag,
};
use crate::groebner::{ModuleGB, Presentation};
use crate::koszul::{cokoszul_complex, koszul_complex, principal_resolution, regular_sequence_resolution};
use crate::linear::{Echelon, FieldMatrix, LabeledFreeModule, MapMatrix};
use crate::ring::{Poly, Ring};
use crate::simplicial::{eilenberg_zilber, gamma, normalize, normalize_map, normalize_with_data};

fn field_rank(m: &MapMatrix) -> usize {
    FieldMatrix::from_columns(m.ring().field(), m.nrows(), field_columns(m)).rank()
}

fn base_field_ring(cfg: &ScenarioConfig) -> Arc<Ring> {
    Ring::field_only(cfg.desc.ring().field())
}

/// Number of copies `m` when `pres` is literally `(R/(ideal))^m`: the relations are exactly
/// `ideal · e_i` for every generator.
fn quotient_copies(pres: &Presentation, ideal: &[Poly]) -> Option<usize> {
    let ambient = pres.relations.ambient();
    let ideal_gb = ModuleGB::ideal(pres.relations.ring(), ideal).generators();
    let want: Vec<_> = (0..pres.generator_count as u32)
        .flat_map(|i| ideal_gb.iter().map(move |g| vec![(i, g[0].1.clone())]))
        .collect();
    let want_gb = ModuleGB::new(ambient, &want).ok()?;
    let same = want.iter().all(|v| pres.relations.contains(v)) && pres.relations.generators().iter().all(|v| want_gb.contains(v));
    same.then_some(pres.generator_count)
}

/// Homology of `c` as copies of `R/(ideal)`, certified by Gröbner presentations, with graded
/// agreement checks when the graded engine is enabled.
fn copies_table(
    res: &mut ScenarioResult,
    label: &str,
    c: &ChainComplex,
    ks: std::ops::RangeInclusive<i32>,
    ideal: &[Poly],
    cfg: &ScenarioConfig,
) -> Result<Vec<i64>> {
    let pres = groebner_presentations(c, ks.clone())?;
    let mut detail = serde_json::Map::new();
    let mut ranks = Vec::new();
    for (p, k) in pres.iter().zip(ks.clone()) {
        let relations: Vec<String> = p
            .relations
            .generators()
            .iter()
            .map(|v| v.iter().map(|(i, q)| format!("{q}·g{i}")).collect::<Vec<_>>().join(" + "))
            .collect();
        detail.insert(
            format!("H_{k}"),
            json!({ "generator_degrees": p.generator_degrees(), "relations": relations }),
        );
        ranks.push(quotient_copies(p, ideal).map_or(-1, |m| m as i64));
    }
    if cfg.engine.graded() {
        let report = homology_graded_with(c, &HomologyOptions::new(cfg.t_max).degrees(ks.clone()))?;
        let agree = pres.iter().zip(ks).all(|(p, k)| engines_agree(&report, k, p));
        res.check(format!("{label}: engines agree"), agree, "graded vs Gröbner, every internal degree");
    }
    res.detail(label, serde_json::Value::Object(detail));
    Ok(ranks)
}

/// `H_k N L³₁ΓK` and the auxiliary homologies of `NΔ(ΓK ⊗ Sym²ΓK)`, `N Sym³ΓK` as copies of
/// `R/(f)`, and `H_k N M_{(2,1)}` as R/I-ranks, `M_{(2,1)}` being the kernel of multiplication
/// `Sym³(ΓK ⊗ ΓL) -> Sym³ΓK ⊗ Sym³ΓL`.
pub fn run_l31_homology(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("l31", cfg);
    let seq = cfg.sequence()?;
    let f = seq[0].clone();
    let ring = cfg.desc.ring();
    let k = principal_resolution(ring, "k", &f);
    let ideal = [f.clone()];

    let (levels, ks) = degrees_for(cfg, 4);
    let gk = gamma(&k, levels)?;
    let nl = normalize(&apply_guarded(cfg, FunctorTag::schur(), &gk)?)?;
    let ranks = copies_table(&mut res, "N L^3_1 Gamma K", &nl, ks, &ideal, cfg)?;
    res.compare("l31", &ranks)?;

    let (levels, ks) = degrees_for(cfg, 3);
    let gk = gamma(&k, levels)?;
    let s2 = apply_guarded(cfg, FunctorTag::sym(2), &gk)?;
    let nd = normalize(&diagonal_guarded(cfg, &[&gk, &s2])?)?;
    let ranks = copies_table(&mut res, "N Delta(Gamma K (x) Sym^2 Gamma K)", &nd, ks.clone(), &ideal, cfg)?;
    res.compare("l31_delta", &ranks)?;
    let ns = normalize(&apply_guarded(cfg, FunctorTag::sym(3), &gk)?)?;
    let ranks = copies_table(&mut res, "N Sym^3 Gamma K", &ns, ks, &ideal, cfg)?;
    res.compare("l31_sym3", &ranks)?;

    let [f, g] = seq else {
        res.notes.push("M_(2,1) needs a regular sequence of length 2; skipped".into());
        return Ok(res.finish(cfg, start));
    };
    let unit = residue_dim(cfg)?;
    let (levels, ks) = degrees_for(cfg, 6);
    let gk = gamma(&principal_resolution(ring, "k", f), levels)?;
    let gl = gamma(&principal_resolution(ring, "l", g), levels)?;
    let sym3 = FunctorTag::sym(3);
    let source = apply_guarded(cfg, sym3, &diagonal_guarded(cfg, &[&gk, &gl])?)?;
    let target = diagonal_guarded(cfg, &[&apply_guarded(cfg, sym3, &gk)?, &apply_guarded(cfg, sym3, &gl)?])?;
    let maps = (0..=levels)
        .map(|n| sym_multiplication_map(gk.level(n), gl.level(n), 3).relabel(source.level(n), target.level(n)))
        .collect::<Result<Vec<_>>>()?;
    let phi = normalize_map(&normalize_with_data(&source)?, &normalize_with_data(&target)?, &maps)?;
    let m21 = monomial_kernel(&phi)?;
    let m = measure("N M_(2,1)", &m21, ks, cfg, unit, &[f.clone(), g.clone()])?;
    res.checks.extend(m.checks);
    res.detail("N M_(2,1)", m.detail);
    res.compare("m21", &m.ranks)?;
    Ok(res.finish(cfg, start))
}

/// Cross-effects of `L³₁` and `coL³₁` on lines, the comparison isomorphism between them, and
/// commutation of the Δ_ε and +_ε squares with it.
pub fn run_schur_comparison(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("schur", cfg);
    let ring = base_field_ring(cfg);
    let line = LabeledFreeModule::standard(&ring, "e", 1, 0);
    let (l, co) = (FunctorTag::schur(), FunctorTag::coschur());
    let lines = |n: usize| vec![line.clone(); n];

    let mut ranks = Vec::new();
    for tag in [l, co] {
        for n in 1..=4 {
            ranks.push(cross_effect(&tag, &lines(n))?.rank() as i64);
        }
    }
    res.compare("schur", &ranks)?;

    // α : cr(coL) -> cr(L) induced by the natural comparison on the direct sum
    let alpha = |args: &[LabeledFreeModule]| -> Result<MapMatrix> {
        let sum = LabeledFreeModule::direct_sum(&args.iter().collect::<Vec<_>>());
        induced_map(&schur_comparison(&sum), &cross_effect(&co, args)?, &cross_effect(&l, args)?)
    };
    let is_iso = |m: &MapMatrix| m.nrows() == m.ncols() && field_rank(m) == m.ncols();
    for n in 1..=4 {
        let a = alpha(&lines(n))?;
        res.check(format!("α invertible on cr_{n}"), is_iso(&a), format!("{}x{}", a.nrows(), a.ncols()));
    }
    let pair = [LabeledFreeModule::standard(&ring, "v", 2, 0), LabeledFreeModule::standard(&ring, "w", 3, 0)];
    let pair_ranks = [cross_effect(&l, &pair)?.rank() as i64, cross_effect(&co, &pair)?.rank() as i64];
    res.compare("schur_pair", &pair_ranks)?;
    res.check("α invertible on cr_2 at (k^2, k^3)", is_iso(&alpha(&pair)?), "");

    for eps in [vec![2], vec![1, 2], vec![2, 1]] {
        let args = lines(eps.len());
        let copies = lines(eps.iter().sum());
        let (a_in, a_out) = (alpha(&args)?, alpha(&copies)?);
        let (dl, dc) = (delta_map(&l, &args, &eps)?, delta_map(&co, &args, &eps)?);
        let lhs = dl.map.after(&a_in);
        let rhs = a_out.after(&dc.map);
        res.check(format!("Δ_{eps:?} square commutes"), lhs.same_entries(&rhs), "");
        let (pl, pc) = (plus_map(&l, &args, &eps)?, plus_map(&co, &args, &eps)?);
        let lhs = pl.map.after(&a_out);
        let rhs = a_in.after(&pc.map);
        res.check(format!("+_{eps:?} square commutes"), lhs.same_entries(&rhs), "");
    }

    // F(V ⊕ W) = F(V) ⊕ F(W) ⊕ cr_2(F)(V, W)
    let sum = LabeledFreeModule::direct_sum(&[&pair[0], &pair[1]]);
    for tag in [FunctorTag::sym(3), FunctorTag::ext(3), FunctorTag::div(3), FunctorTag::tensor_pow(3), l, co] {
        let lhs = tag.on_module(&sum).rank();
        let rhs = tag.on_module(&pair[0]).rank() + tag.on_module(&pair[1]).rank() + cross_effect(&tag, &pair)?.rank();
        res.check(format!("cross-effect decomposition for {}", tag.name()), lhs == rhs, format!("{lhs} vs {rhs}"));
    }
    Ok(res.finish(cfg, start))
}

/// Graded homology tables of two complexes agree in every listed degree.
fn same_homology(a: &ChainComplex, b: &ChainComplex, ks: std::ops::RangeInclusive<i32>, t_max: i32) -> Result<(bool, Vec<i64>, Vec<i64>)> {
    let opts = HomologyOptions::new(t_max).degrees(ks.clone());
    let (ha, hb) = (homology_graded_with(a, &opts)?, homology_graded_with(b, &opts)?);
    let same = ks.clone().all(|k| ha.degree(k).map(|d| &d.dims) == hb.degree(k).map(|d| &d.dims));
    let totals = |h: &crate::complex::HomologyReport| ks.clone().map(|k| h.total(k) as i64).collect();
    Ok((same, totals(&ha), totals(&hb)))
}

/// `Kos^n(f)` against `N Sym^n Γ(P -> Q)` and `coKos^n(f)` against `N Λ^n Γ(P -> Q)` for
/// multiplication by `f`, the pair `(f, g)` and an invertible map.
pub fn run_koszul_qis(cfg: &ScenarioConfig, n_functor: usize) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("koszul", cfg);
    if n_functor == 0 {
        return Err(Error::Config("functor degree must be at least 1".into()));
    }
    let ring = cfg.desc.ring();
    let seq = cfg.sequence()?;
    let degree = |p: &Poly| p.degree().unwrap_or(0) as i32;
    let q = LabeledFreeModule::standard(ring, "q", 1, 0);
    let mut cases: Vec<(&str, MapMatrix)> = Vec::new();
    let p1 = LabeledFreeModule::standard(ring, "p", 1, degree(&seq[0]));
    cases.push(("f", MapMatrix::scalar_map(&p1, &q, seq[0].clone())));
    if let [f, g] = seq {
        let p2 = LabeledFreeModule::new(
            ring,
            vec![crate::linear::BasisLabel::atom("p0", degree(f)), crate::linear::BasisLabel::atom("p1", degree(g))],
        )?;
        cases.push(("(f,g)", MapMatrix::new(&p2, &q, vec![vec![(0, f.clone())], vec![(0, g.clone())]])?));
    }
    let v = LabeledFreeModule::standard(ring, "v", 2, 0);
    let w = LabeledFreeModule::standard(ring, "w", 2, 0);
    let one = ring.one();
    cases.push((
        "invertible",
        MapMatrix::new(&v, &w, vec![vec![(0, one.clone())], vec![(0, one.clone()), (1, one.clone())]])?,
    ));

    let mut spots = Vec::new();
    for (name, map) in &cases {
        let c = ChainComplex::two_term(map, 1);
        for n in 1..=n_functor {
            let gc = gamma(&c, n + 1)?;
            let ks = 0..=n as i32;
            let kos = koszul_complex(map, n)?;
            let nsym = normalize(&apply_guarded(cfg, FunctorTag::sym(n), &gc)?)?;
            let (same, theirs, ours) = same_homology(&nsym, &kos, ks.clone(), cfg.t_max)?;
            res.check(format!("Kos^{n}({name}) vs N Sym^{n} Gamma"), same, format!("{ours:?} vs {theirs:?}"));
            res.compare_values(&format!("Kos^{n}({name})"), "N Sym Gamma side", &theirs, &ours);
            let cokos = cokoszul_complex(map, n)?;
            let next = normalize(&apply_guarded(cfg, FunctorTag::ext(n), &gc)?)?;
            let (same, theirs, ours) = same_homology(&next, &cokos, ks.clone(), cfg.t_max)?;
            res.check(format!("coKos^{n}({name}) vs N Λ^{n} Gamma"), same, format!("{ours:?} vs {theirs:?}"));
            res.compare_values(&format!("coKos^{n}({name})"), "N Λ Gamma side", &theirs, &ours);

            match (*name, n) {
                ("f", 3) => spots.push(("f", copies_table(&mut res, "Kos^3(f)", &kos, ks, &seq[..1], cfg)?)),
                ("invertible", 3) => spots.push(("invertible", ours_totals(&kos, ks, cfg)?)),
                ("(f,g)", 2) => {
                    let m = measure("Kos^2((f,g))", &kos, ks, cfg, residue_dim(cfg)?, seq)?;
                    res.checks.extend(m.checks);
                    spots.push(("(f,g)", m.ranks));
                }
                _ => {}
            }
        }
    }
    if spots.len() == 3 {
        let flat: Vec<i64> = spots.into_iter().flat_map(|(_, v)| v).collect();
        res.compare("koszul", &flat)?;
    } else {
        res.notes.push("stored spot values need n = 3 and a regular sequence of length 2; skipped".into());
    }
    Ok(res.finish(cfg, start))
}

fn ours_totals(c: &ChainComplex, ks: std::ops::RangeInclusive<i32>, cfg: &ScenarioConfig) -> Result<Vec<i64>> {
    let h = homology_graded_with(c, &HomologyOptions::new(cfg.t_max).degrees(ks.clone()))?;
    Ok(ks.map(|k| h.total(k) as i64).collect())
}

/// Shuffle and Alexander-Whitney maps for `(ΓK, ΓL)` and `(ΓP, ΓP)`, and homology agreement of
/// `NΔ` with `Tot` for these pairs and for `(ΓP, ΓP, ΓP)`.
pub fn run_ez_check(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("ez", cfg);
    let (f, g) = cfg.pair()?;
    let seq = [f.clone(), g.clone()];
    let unit = residue_dim(cfg)?;
    let ring = cfg.desc.ring();
    let levels = cfg.n_max.min(5);
    let p = regular_sequence_resolution(&cfg.desc)?;
    let gp = gamma(&p, levels)?;
    let gk = gamma(&principal_resolution(ring, "k", f), levels)?;
    let gl = gamma(&principal_resolution(ring, "l", g), levels)?;
    let top = levels.saturating_sub(1) as i32;

    let mut computed = Vec::new();
    for (name, a, b) in [("(Gamma K, Gamma L)", &gk, &gl), ("(Gamma P, Gamma P)", &gp, &gp)] {
        let ez = eilenberg_zilber(a, b)?;
        let section = ChainMap::compose(&ez.aw, &ez.shuffle)?.is_identity();
        res.check(format!("aw∘sh = id for {name}"), section, format!("degrees ≤ {levels}"));
        for (map, label) in [(&ez.shuffle, "shuffle"), (&ez.aw, "Alexander-Whitney")] {
            let q = check_quasi_isomorphism(map, 0..=top, cfg.t_max);
            res.check(format!("{label} is a quasi-isomorphism for {name}"), q.ok, q.failures.join("; "));
        }
        let d = measure(&format!("N Delta{name}"), &ez.diagonal, 0..=2, cfg, unit, &seq)?;
        let t = measure(&format!("Tot{name}"), &ez.tot, 0..=2, cfg, unit, &seq)?;
        res.checks.extend(d.checks);
        res.checks.extend(t.checks);
        res.check(format!("NΔ and Tot agree for {name}"), d.ranks == t.ranks, format!("{:?} vs {:?}", d.ranks, t.ranks));
        computed.extend(d.ranks);
    }
    let ks = 0..=top.min(4);
    let d = measure("N Delta(Gamma P)^3", &normalize(&diagonal_guarded(cfg, &[&gp, &gp, &gp])?)?, ks.clone(), cfg, unit, &seq)?;
    let t = measure("Tot(P^3)", &total_complex_many(&[&p, &p, &p]), ks, cfg, unit, &seq)?;
    res.checks.extend(d.checks);
    res.checks.extend(t.checks);
    res.check("NΔ and Tot agree for the triple", d.ranks == t.ranks, format!("{:?} vs {:?}", d.ranks, t.ranks));
    computed.extend(d.ranks);
    res.compare("ez", &computed)?;
    Ok(res.finish(cfg, start))
}

fn schur_dim(r: usize) -> usize {
    r * (r * r).saturating_sub(1) / 3
}

/// The filtration `im det ⊆ im det + im m_{(2,1)} ⊆ Sym³(P ⊗ Q)` and its quotients, by rank and
/// membership.
pub fn run_cauchy_check(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("cauchy", cfg);
    let ring = base_field_ring(cfg);
    let field = ring.field();
    let mut computed = Vec::new();
    for (rp, rq) in [(2usize, 2usize), (3, 3), (2, 3), (3, 4), (4, 4)] {
        let tag = format!("({rp},{rq})");
        let (p, q) = (LabeledFreeModule::standard(&ring, "p", rp, 0), LabeledFreeModule::standard(&ring, "q", rq, 0));
        let det = cauchy_det_map(&p, &q);
        let m21 = cauchy_m21_map(&p, &q);
        let mult = sym_multiplication_map(&p, &q, 3);
        let total = det.nrows();
        let rank_det = field_rank(&det);
        let mut span = Echelon::new(field);
        for c in field_columns(&det) {
            span.insert(&c);
        }
        let det_span = span.clone();
        for c in field_columns(&m21) {
            span.insert(&c);
        }
        let both = span.rank();
        let (middle, top) = (both - rank_det, total - both);
        let rank_mult = field_rank(&mult);

        res.check(
            format!("{tag} quotient dimensions"),
            rank_det == binom(rp, 3) * binom(rq, 3)
                && middle == schur_dim(rp) * schur_dim(rq)
                && top == binom(rp + 2, 3) * binom(rq + 2, 3),
            format!("{total} = {rank_det} + {middle} + {top}"),
        );
        res.check(format!("{tag} multiplication onto Sym³P ⊗ Sym³Q"), rank_mult == mult.nrows(), format!("rank {rank_mult}"));
        res.check(
            format!("{tag} filtration stage is the kernel of multiplication"),
            mult.after(&det).is_zero() && mult.after(&m21).is_zero() && rank_mult == total - both,
            "",
        );
        if rp >= 3 && rq >= 3 {
            res.check(format!("{tag} determinant map injective"), rank_det == det.ncols(), format!("rank {rank_det}"));
        }
        // m_{(2,1)} kills the kernel of Λ²P⊗P⊗Λ²Q⊗Q -> L³₁P ⊗ L³₁Q modulo im det
        let quot = MapMatrix::tensor(&straightening_map(&p), &straightening_map(&q));
        let kernel = FieldMatrix::from_columns(field, quot.nrows(), field_columns(&quot)).kernel();
        let m21f = FieldMatrix::from_columns(field, m21.nrows(), field_columns(&m21));
        let factors = kernel.iter().all(|v| det_span.contains(&m21f.apply(v)));
        res.check(format!("{tag} m_(2,1) factors through L³₁P ⊗ L³₁Q"), factors, format!("{} kernel vectors", kernel.len()));
        if (rp, rq) == (2, 2) || (rp, rq) == (3, 3) {
            computed.extend([total, rank_det, middle, top].map(|x| x as i64));
        }
    }
    res.compare("cauchy", &computed)?;
    Ok(res.finish(cfg, start))
}

/// Simplicial identities, `d² = 0` and `NΓ = id` on the building blocks.
pub fn run_gamma_check(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("gamma", cfg);
    let ring = cfg.desc.ring();
    let seq = cfg.sequence()?;
    let levels = cfg.n_max.min(5);
    let p = regular_sequence_resolution(&cfg.desc)?;
    let mut blocks = vec![("K", principal_resolution(ring, "k", &seq[0])), ("P", p.clone())];
    if let [f, g] = seq {
        let pair = MapMatrix::new(
            &LabeledFreeModule::new(
                ring,
                vec![
                    crate::linear::BasisLabel::atom("p0", f.degree().unwrap_or(0) as i32),
                    crate::linear::BasisLabel::atom("p1", g.degree().unwrap_or(0) as i32),
                ],
            )?,
            &LabeledFreeModule::standard(ring, "q", 1, 0),
            vec![vec![(0, f.clone())], vec![(0, g.clone())]],
        )?;
        blocks.push(("Kos^3((f,g))", koszul_complex(&pair, 3)?));
    }
    for (name, c) in &blocks {
        let gc = gamma(c, levels)?;
        res.check(format!("simplicial identities for Gamma {name}"), gc.identity_violation().is_none(), gc.identity_violation().unwrap_or_default());
        res.check(format!("d² = 0 on the unnormalized Gamma {name}"), gc.unnormalized().is_d_squared_zero(), "");
        let n = normalize(&gc)?;
        res.check(format!("N Gamma {name} = {name}"), n.trimmed().same_matrices(&c.trimmed()), "identical matrices");
        let s = apply_guarded(cfg, FunctorTag::sym(2), &gc)?;
        res.check(format!("simplicial identities for Sym^2 Gamma {name}"), s.identity_violation().is_none(), "");
        res.check(format!("d² = 0 on N Sym^2 Gamma {name}"), normalize(&s)?.is_d_squared_zero(), "");
    }
    let gp = gamma(&p, levels)?;
    let d = diagonal_guarded(cfg, &[&gp, &gp])?;
    res.check("simplicial identities for Delta(Gamma P (x) Gamma P)", d.identity_violation().is_none(), "");
    let mut ranks: Vec<i64> = gp.ranks().iter().map(|&r| r as i64).collect();
    ranks.extend(normalize(&gp)?.trimmed().ranks().iter().map(|&r| r as i64));
    res.compare("gamma", &ranks)?;
    Ok(res.finish(cfg, start))
}

/// Graded and Gröbner engines on small complexes, degree by degree.
pub(crate) fn run_engine_agreement(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let start = Instant::now();
    let mut res = ScenarioResult::new("engines", cfg);
    let ring = cfg.desc.ring();
    let seq = cfg.sequence()?;
    let k = principal_resolution(ring, "k", &seq[0]);
    let p = regular_sequence_resolution(&cfg.desc)?;
    let gk = gamma(&k, 4)?;
    let gp = gamma(&p, 4)?;
    let complexes: Vec<(&str, ChainComplex)> = vec![
        ("K", k.clone()),
        ("P", p.clone()),
        ("Tot(P (x) P)", total_complex_many(&[&p, &p])),
        ("N Sym^2 Gamma P", normalize(&apply_guarded(cfg, FunctorTag::sym(2), &gp)?)?),
        ("N L^3_1 Gamma K", normalize(&apply_guarded(cfg, FunctorTag::schur(), &gk)?)?),
        ("N Sym^3 Gamma K", normalize(&apply_guarded(cfg, FunctorTag::sym(3), &gk)?)?),
    ];
    for (name, c) in &complexes {
        let ks = 0..=c.hi().max(0);
        let report = homology_graded_with(c, &HomologyOptions::new(cfg.t_max).degrees(ks.clone()))?;
        let pres = groebner_presentations(c, ks.clone())?;
        let agree: Vec<i32> = ks.filter(|&k| !engines_agree(&report, k, &pres[k as usize])).collect();
        res.checks.push(Check::new(
            format!("engines agree on {name}"),
            agree.is_empty(),
            if agree.is_empty() { String::new() } else { format!("disagreement in degrees {agree:?}") },
        ));
    }
    Ok(res.finish(cfg, start))
}
