use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::chain::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::groebner::{kernel, Presentation};
use crate::linear::{normalize_sparse, Echelon, FieldMatrix, LabeledFreeModule, MonomialCache, SparseVec};
use crate::ring::{Monomial, Poly, Scalar};

/// Options for the graded engine.
#[derive(Clone, Debug)]
pub struct HomologyOptions {
    pub t_max: i32,
    /// Homological degrees to report; defaults to the support.
    pub degrees: Option<RangeInclusive<i32>>,
    /// Homogeneous elements whose action on homology must vanish.
    pub annihilators: Vec<Poly>,
}

impl HomologyOptions {
    pub fn new(t_max: i32) -> Self {
        HomologyOptions {
            t_max,
            degrees: None,
            annihilators: Vec::new(),
        }
    }

    pub fn degrees(mut self, ks: RangeInclusive<i32>) -> Self {
        self.degrees = Some(ks);
        self
    }

    pub fn annihilators(mut self, fs: &[Poly]) -> Self {
        self.annihilators = fs.to_vec();
        self
    }
}

/// Homology in one homological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHomology {
    pub k: i32,
    /// Internal degree -> dimension over the base field (nonzero entries only).
    pub dims: BTreeMap<i32, usize>,
    pub total: usize,
    /// Every configured annihilator acts by zero.
    pub annihilated: bool,
}

/// Output of the graded engine.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub t_min: i32,
    pub t_max: i32,
    pub degrees: Vec<DegreeHomology>,
    /// `Σ (-1)^k dim H_{k,t} = Σ (-1)^k dim C_{k,t}` for every `t`.
    pub euler_consistent: bool,
    /// Some homology survives in the top two internal degrees computed.
    pub stabilization_warning: bool,
    pub annihilators: Vec<String>,
}

impl HomologyReport {
    pub fn degree(&self, k: i32) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.k == k)
    }

    /// Total dimension in degree `k` (0 outside the report).
    pub fn total(&self, k: i32) -> usize {
        self.degree(k).map_or(0, |d| d.total)
    }

    pub fn totals(&self, ks: RangeInclusive<i32>) -> Vec<usize> {
        ks.map(|k| self.total(k)).collect()
    }

    pub fn dim(&self, k: i32, t: i32) -> usize {
        self.degree(k).and_then(|d| d.dims.get(&t).copied()).unwrap_or(0)
    }

    pub fn all_annihilated(&self) -> bool {
        self.degrees.iter().all(|d| d.annihilated)
    }
}

/// Offsets of the per-label blocks of a graded slice.
pub(crate) struct SliceLayout {
    offsets: Vec<usize>,
    degrees: Vec<i32>,
    t: i32,
    #[cfg_attr(not(test), allow(dead_code))]
    pub dim: usize,
}

impl SliceLayout {
    pub(crate) fn new(m: &LabeledFreeModule, t: i32, cache: &mut MonomialCache) -> SliceLayout {
        let mut offsets = Vec::with_capacity(m.rank());
        let mut dim = 0;
        for &d in m.degrees() {
            offsets.push(dim);
            if d <= t {
                dim += cache.of_degree((t - d) as u32).0.len();
            }
        }
        SliceLayout {
            offsets,
            degrees: m.degrees().to_vec(),
            t,
            dim,
        }
    }

    fn locate(&self, idx: usize) -> usize {
        self.offsets.partition_point(|&o| o <= idx) - 1
    }

    /// Label index and monomial of a slice coordinate.
    pub(crate) fn decode(&self, idx: usize, cache: &mut MonomialCache) -> (usize, Monomial) {
        let mut i = self.locate(idx);
        // skip empty blocks sharing an offset
        while self.degrees[i] > self.t || self.offsets.get(i + 1).is_some_and(|&o| o == self.offsets[i] && o <= idx) {
            i += 1;
        }
        let monos = &cache.of_degree((self.t - self.degrees[i]) as u32).0;
        (i, monos[idx - self.offsets[i]])
    }

    pub(crate) fn encode(&self, label: usize, m: &Monomial, cache: &mut MonomialCache) -> usize {
        let d = (self.t - self.degrees[label]) as u32;
        self.offsets[label] + cache.of_degree(d).1[m] as usize
    }
}

fn slice(c: &ChainComplex, n: i32, t: i32, cache: &mut MonomialCache) -> Option<FieldMatrix> {
    c.differential_ref(n).map(|d| d.slice_unchecked(t, cache))
}

fn slice_rank(c: &ChainComplex, n: i32, t: i32) -> usize {
    let mut cache = MonomialCache::new(c.ring());
    slice(c, n, t, &mut cache).map_or(0, |m| m.rank())
}

/// Cycles at `(k, t)` whose classes form a basis of `H_{k,t}`.
fn representatives(c: &ChainComplex, k: i32, t: i32, cache: &mut MonomialCache) -> (Vec<SparseVec>, Echelon) {
    let field = c.ring().field();
    let dim = c.module(k).slice_dim(t);
    let cycles = match slice(c, k, t, cache) {
        Some(d) => d.kernel(),
        None => (0..dim as u32).map(|i| vec![(i, field.one())]).collect(),
    };
    let mut ech = Echelon::new(field);
    if let Some(b) = slice(c, k + 1, t, cache) {
        for col in b.columns() {
            ech.insert(col);
        }
    }
    let boundaries = ech.clone();
    let reps = cycles.into_iter().filter(|z| ech.insert(z)).collect();
    (reps, boundaries)
}

/// `f * v` for a slice vector `v` of `m` at degree `t`.
fn multiply(m: &LabeledFreeModule, t: i32, v: &[(u32, Scalar)], f: &Poly, cache: &mut MonomialCache) -> SparseVec {
    let e = f.degree().unwrap_or(0) as i32;
    let src = SliceLayout::new(m, t, cache);
    let dst = SliceLayout::new(m, t + e, cache);
    let mut out = Vec::new();
    for (i, a) in v {
        let (label, mono) = src.decode(*i as usize, cache);
        for (fm, fc) in f.terms() {
            let idx = dst.encode(label, &mono.mul(fm), cache);
            out.push((idx as u32, a * fc));
        }
    }
    normalize_sparse(out)
}

fn annihilated(c: &ChainComplex, k: i32, t: i32, fs: &[Poly]) -> bool {
    let mut cache = MonomialCache::new(c.ring());
    let (reps, _) = representatives(c, k, t, &mut cache);
    fs.iter().all(|f| {
        let e = f.degree().unwrap_or(0) as i32;
        let mut ech = Echelon::new(c.ring().field());
        if let Some(b) = slice(c, k + 1, t + e, &mut cache) {
            for col in b.columns() {
                ech.insert(col);
            }
        }
        reps.iter().all(|z| ech.contains(&multiply(&c.module(k), t, z, f, &mut cache)))
    })
}

/// Internal degrees examined by the graded engine.
fn t_range(c: &ChainComplex, t_max: i32) -> RangeInclusive<i32> {
    let degs = c.support().flat_map(|n| c.module(n).degrees().to_vec());
    let (lo, hi) = degs.fold((i32::MAX, i32::MIN), |(a, b), d| (a.min(d), b.max(d)));
    if lo > hi {
        #[allow(clippy::reversed_empty_ranges)]
        return 0..=-1;
    }
    if c.ring().nvars() == 0 {
        lo..=hi
    } else {
        lo..=t_max
    }
}

/// Homology by exact linear algebra on graded slices.
pub fn homology_graded(c: &ChainComplex, t_max: i32) -> Result<HomologyReport> {
    homology_graded_with(c, &HomologyOptions::new(t_max))
}

pub fn homology_graded_with(c: &ChainComplex, opts: &HomologyOptions) -> Result<HomologyReport> {
    if !c.is_homogeneous() {
        return Err(Error::NotHomogeneous(
            "graded engine needs homogeneous differentials; use homology_groebner".into(),
        ));
    }
    if opts.annihilators.iter().any(|f| !f.is_homogeneous() || f.is_zero()) {
        return Err(Error::NotHomogeneous("annihilators must be nonzero homogeneous".into()));
    }
    let ks = opts.degrees.clone().unwrap_or(c.support());
    let ts = t_range(c, opts.t_max);
    let rank_keys: Vec<(i32, i32)> = (*ks.start()..=*ks.end() + 1)
        .flat_map(|k| ts.clone().map(move |t| (k, t)))
        .collect();
    let ranks: BTreeMap<(i32, i32), usize> = rank_keys
        .par_iter()
        .map(|&(k, t)| ((k, t), slice_rank(c, k, t)))
        .collect();
    let mut degrees = Vec::new();
    let mut nonzero = Vec::new();
    for k in ks.clone() {
        let m = c.module(k);
        let mut dims = BTreeMap::new();
        for t in ts.clone() {
            let h = m.slice_dim(t) - ranks[&(k, t)] - ranks[&(k + 1, t)];
            if h > 0 {
                dims.insert(t, h);
                nonzero.push((k, t));
            }
        }
        let total = dims.values().sum();
        degrees.push(DegreeHomology {
            k,
            dims,
            total,
            annihilated: true,
        });
    }
    if !opts.annihilators.is_empty() && c.ring().nvars() > 0 {
        let failed: Vec<(i32, i32)> = nonzero
            .par_iter()
            .filter(|&&(k, t)| !annihilated(c, k, t, &opts.annihilators))
            .copied()
            .collect();
        for (k, _) in failed {
            degrees.iter_mut().find(|d| d.k == k).expect("reported degree").annihilated = false;
        }
    }
    // Euler consistency over the full support, where it is an identity of ranks
    let full = ks == c.support();
    let euler_consistent = !full
        || ts.clone().all(|t| {
            let sign = |k: i32| if k.rem_euclid(2) == 0 { 1i64 } else { -1 };
            let h: i64 = degrees.iter().map(|d| sign(d.k) * d.dims.get(&t).copied().unwrap_or(0) as i64).sum();
            let ch: i64 = c.support().map(|k| sign(k) * c.module(k).slice_dim(t) as i64).sum();
            h == ch
        });
    let top = *ts.end();
    let stabilization_warning =
        c.ring().nvars() > 0 && degrees.iter().any(|d| d.dims.keys().any(|&t| t >= top - 1));
    Ok(HomologyReport {
        t_min: *ts.start(),
        t_max: top,
        degrees,
        euler_consistent,
        stabilization_warning,
        annihilators: opts.annihilators.iter().map(|f| f.to_string()).collect(),
    })
}

/// `H_k(C)` as a finitely presented module, certified by Gröbner bases.
pub fn homology_groebner(c: &ChainComplex, k: i32) -> Result<Presentation> {
    let cycles = kernel(&c.differential(k));
    let boundaries = c.differential(k + 1).into_columns();
    Presentation::subquotient(&c.module(k), &cycles, &boundaries)
}

/// Per-internal-degree agreement of the two engines in degree `k`, for `t` in the report's range.
pub fn engines_agree(report: &HomologyReport, k: i32, pres: &Presentation) -> bool {
    (report.t_min..=report.t_max).all(|t| report.dim(k, t) == pres.hilbert(t))
}

/// Result of checking that a chain map induces isomorphisms on graded homology.
#[derive(Clone, Debug, Default, Serialize)]
pub struct QuasiIsoCheck {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Compares homology dimensions and checks the induced map is injective on every slice.
pub fn check_quasi_isomorphism(phi: &ChainMap, ks: RangeInclusive<i32>, t_max: i32) -> QuasiIsoCheck {
    let ts = {
        let a = t_range(&phi.source, t_max);
        let b = t_range(&phi.target, t_max);
        (*a.start()).min(*b.start())..=(*a.end()).max(*b.end())
    };
    let keys: Vec<(i32, i32)> = ks.flat_map(|k| ts.clone().map(move |t| (k, t))).collect();
    let mut failures: Vec<String> = keys
        .par_iter()
        .filter_map(|&(k, t)| {
            let mut cache = MonomialCache::new(phi.source.ring());
            let (reps, _) = representatives(&phi.source, k, t, &mut cache);
            let (target_reps, mut boundaries) = representatives(&phi.target, k, t, &mut cache);
            if reps.len() != target_reps.len() {
                return Some(format!("H_{k} at t={t}: {} vs {}", reps.len(), target_reps.len()));
            }
            let m = phi.component(k).slice_unchecked(t, &mut cache);
            let injective = reps.iter().all(|z| boundaries.insert(&m.apply(z)));
            (!injective).then(|| format!("H_{k} at t={t}: induced map not injective"))
        })
        .collect();
    failures.sort();
    QuasiIsoCheck {
        ok: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::total_complex;
    use crate::linear::MapMatrix;
    use crate::ring::{parse_poly, Ring};
    use std::sync::Arc;

    fn mult(ring: &Arc<Ring>, f: Poly, name: &str) -> ChainComplex {
        let d = f.degree().unwrap() as i32;
        let src = LabeledFreeModule::standard(ring, &format!("{name}1"), 1, d);
        let tgt = LabeledFreeModule::standard(ring, &format!("{name}0"), 1, 0);
        ChainComplex::two_term(&MapMatrix::scalar_map(&src, &tgt, f), 1)
    }

    #[test]
    fn resolution_of_the_residue_field() {
        let r = Ring::plane(97);
        let p = total_complex(&mult(&r, r.var(0), "k"), &mult(&r, r.var(1), "l"));
        let opts = HomologyOptions::new(12).annihilators(&[r.var(0), r.var(1)]);
        let h = homology_graded_with(&p, &opts).unwrap();
        assert_eq!(h.totals(0..=2), vec![1, 0, 0]);
        assert_eq!(h.dim(0, 0), 1);
        assert!(h.all_annihilated() && h.euler_consistent && !h.stabilization_warning);
        assert!(homology_groebner(&p, 1).unwrap().is_zero());
        assert!(engines_agree(&h, 0, &homology_groebner(&p, 0).unwrap()));
    }

    #[test]
    fn cokernel_of_x() {
        let r = Ring::plane(97);
        let k = mult(&r, r.var(0), "k");
        let opts = HomologyOptions::new(12).annihilators(&[r.var(0), r.var(1)]);
        let h = homology_graded_with(&k, &opts).unwrap();
        assert!((0..=12).all(|t| h.dim(0, t) == 1));
        assert_eq!(h.total(1), 0);
        assert!(h.stabilization_warning);
        // y does not act by zero on k[y]
        assert!(!h.all_annihilated());
        let pres = homology_groebner(&k, 0).unwrap();
        assert_eq!(pres.finite_dim, None);
        assert!(engines_agree(&h, 0, &pres));
    }

    #[test]
    fn invertible_map_is_exact() {
        let r = Ring::plane(97);
        let a = LabeledFreeModule::standard(&r, "a", 1, 0);
        let b = LabeledFreeModule::standard(&r, "b", 1, 0);
        let c = ChainComplex::two_term(&MapMatrix::scalar_map(&a, &b, r.int(3)), 1);
        let h = homology_graded(&c, 6).unwrap();
        assert_eq!(h.totals(0..=1), vec![0, 0]);
        assert!(homology_groebner(&c, 0).unwrap().is_zero());
    }

    #[test]
    fn presentation_of_residue_field() {
        let r = Ring::plane(97);
        let src = LabeledFreeModule::standard(&r, "e", 2, 1);
        let tgt = LabeledFreeModule::standard(&r, "u", 1, 0);
        let f = MapMatrix::new(&src, &tgt, vec![vec![(0, r.var(0))], vec![(0, r.var(1))]]).unwrap();
        let pres = homology_groebner(&ChainComplex::two_term(&f, 1), 0).unwrap();
        assert_eq!(pres.finite_dim, Some(1));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = Ring::plane(97);
        let c = mult(&r, parse_poly(&r, "x+y^2").unwrap(), "k");
        assert!(matches!(homology_graded(&c, 4), Err(Error::NotHomogeneous(_))));
        assert_eq!(homology_groebner(&c, 0).unwrap().finite_dim, None);
    }

    #[test]
    fn slice_layout_roundtrip() {
        let r = Ring::plane(97);
        let m = LabeledFreeModule::new(
            &r,
            vec![
                crate::linear::BasisLabel::atom("a", 0),
                crate::linear::BasisLabel::atom("b", 3),
                crate::linear::BasisLabel::atom("c", 1),
            ],
        )
        .unwrap();
        let mut cache = MonomialCache::new(&r);
        let lay = SliceLayout::new(&m, 2, &mut cache);
        assert_eq!(lay.dim, 3 + 2);
        for i in 0..lay.dim {
            let (l, mono) = lay.decode(i, &mut cache);
            assert_eq!(lay.encode(l, &mono, &mut cache), i);
        }
    }

    #[test]
    fn identity_is_a_quasi_isomorphism() {
        let r = Ring::plane(97);
        let p = total_complex(&mult(&r, r.var(0), "k"), &mult(&r, r.var(1), "l"));
        let maps = p.support().map(|n| (n, MapMatrix::identity(&p.module(n)))).collect();
        let id = ChainMap::new(&p, &p, maps).unwrap();
        assert!(check_quasi_isomorphism(&id, 0..=2, 6).ok);
        let zero = ChainMap::new(&p, &p, Vec::new()).unwrap();
        assert!(!check_quasi_isomorphism(&zero, 0..=2, 6).ok);
    }
}
