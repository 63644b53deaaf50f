use std::collections::HashMap;

use super::module::SimplicialModule;
use super::surjection::Surjection;
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linear::{BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};

/// One summand copy `C_k` of a Γ level, indexed by a surjection `[n] -> [k]`.
struct Level {
    module: LabeledFreeModule,
    /// `(k, surjection, index in C_k)` of every basis element, in basis order.
    entries: Vec<(usize, Surjection, u32)>,
    index: HashMap<(Surjection, u32), u32>,
}

fn level(c: &ChainComplex, n: usize) -> Level {
    let mut raw: Vec<(BasisLabel, usize, Surjection, u32)> = Vec::new();
    for k in 0..=n.min(c.hi().max(0) as usize) {
        let ck = c.module(k as i32);
        for s in Surjection::all(n, k) {
            for (i, l) in ck.basis().iter().enumerate() {
                raw.push((BasisLabel::gamma(l.clone(), s.clone()), k, s.clone(), i as u32));
            }
        }
    }
    raw.sort_by(|a, b| a.0.cmp(&b.0));
    let entries: Vec<(usize, Surjection, u32)> = raw.iter().map(|(_, k, s, i)| (*k, s.clone(), *i)).collect();
    let index = entries
        .iter()
        .enumerate()
        .map(|(pos, (_, s, i))| ((s.clone(), *i), pos as u32))
        .collect();
    let module = LabeledFreeModule::new(c.ring(), raw.into_iter().map(|r| r.0).collect()).expect("distinct Γ labels");
    Level { module, entries, index }
}

/// Matrix of the structure map induced by a monotone `alpha : [m] -> [n]`, given by its values.
fn structure_map(c: &ChainComplex, src: &Level, tgt: &Level, alpha: &[usize]) -> MapMatrix {
    let one = c.ring().one();
    let cols: Vec<PolyVec> = src
        .entries
        .iter()
        .map(|(k, sigma, i)| {
            let sv = sigma.values();
            let composite: Vec<usize> = alpha.iter().map(|&a| sv[a]).collect();
            let mut image = composite.clone();
            image.dedup();
            let rank_of = |v: usize| image.binary_search(&v).expect("in image");
            let reduced = Surjection::from_values(&composite.iter().map(|&v| rank_of(v)).collect::<Vec<_>>())
                .expect("epi part of a monotone map");
            if image.len() == k + 1 {
                // monic part is the identity
                vec![(tgt.index[&(reduced, *i)], one.clone())]
            } else if image.len() == *k && image[0] == 1 {
                // monic part omits 0: the differential
                c.differential(*k as i32)
                    .column(*i as usize)
                    .iter()
                    .map(|(r, p)| (tgt.index[&(reduced.clone(), *r)], p.clone()))
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    MapMatrix::new(&src.module, &tgt.module, cols).expect("Γ structure map")
}

/// Dold-Kan Γ of a complex supported in non-negative degrees, truncated at `n_max`.
///
/// Level `n` is the sum over surjections `σ : [n] -> [k]` of copies of `C_k`. For monotone
/// `α`, factor `σ ∘ α = ι ∘ σ'`; the component is the identity when `ι` is the identity,
/// the differential when `ι` misses exactly `0`, and zero otherwise.
pub fn gamma(c: &ChainComplex, n_max: usize) -> Result<SimplicialModule> {
    if c.lo() < 0 && c.support().any(|n| n < 0 && c.rank(n) > 0) {
        return Err(Error::Simplicial("Γ needs a complex supported in non-negative degrees".into()));
    }
    let c = if c.lo() < 0 { c.restricted(0, c.hi().max(0)) } else { c.clone() };
    let levels: Vec<Level> = (0..=n_max).map(|n| level(&c, n)).collect();
    let faces = (0..=n_max)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let delta: Vec<usize> = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
                    structure_map(&c, &levels[n], &levels[n - 1], &delta)
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..=n_max)
        .map(|n| {
            if n == n_max {
                return Vec::new();
            }
            (0..=n)
                .map(|j| {
                    let sigma: Vec<usize> = (0..n + 2).map(|i| if i <= j { i } else { i - 1 }).collect();
                    structure_map(&c, &levels[n], &levels[n + 1], &sigma)
                })
                .collect()
        })
        .collect();
    SimplicialModule::new(c.ring(), levels.into_iter().map(|l| l.module).collect(), faces, degeneracies)
}
