//! Koszul and co-Koszul complexes of a map between free modules.

use crate::complex::{total_complex, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::functors::{ext_module, multiset_rank, multisets, subset_rank, subsets, sym_module};
use crate::linear::{normalize_poly_vec, BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::{Poly, RingDescriptor};

/// Rows and columns of the Koszul differentials of `f : P -> Q`.
struct KoszulData {
    /// `modules[k] = Λ^k P ⊗ Sym^{n-k} Q`.
    modules: Vec<LabeledFreeModule>,
    /// `diffs[k - 1] : degree k -> degree k - 1`, as columns.
    diffs: Vec<Vec<PolyVec>>,
}

fn koszul_data(f: &MapMatrix, n: usize) -> KoszulData {
    let (p, q) = (f.source(), f.target());
    let (rp, rq) = (p.rank(), q.rank());
    let modules: Vec<LabeledFreeModule> = (0..=n)
        .map(|k| LabeledFreeModule::tensor(&[&ext_module(p, k), &sym_module(q, n - k)]))
        .collect();
    let diffs = (1..=n)
        .map(|k| {
            let width = multisets(rq, n - k + 1).len() as u32;
            let mut cols = Vec::new();
            for wedge in subsets(rp, k) {
                for sym in multisets(rq, n - k) {
                    let mut out = Vec::new();
                    for (i, &pi) in wedge.iter().enumerate() {
                        // 0-based position i carries (-1)^(k - 1 - i)
                        let odd = (k - 1 - i) % 2 == 1;
                        let mut rest = wedge.clone();
                        rest.remove(i);
                        let row = subset_rank(rp, &rest) * width;
                        for (r, c) in f.column(pi as usize) {
                            let mut m = sym.clone();
                            let pos = m.partition_point(|&x| x <= *r);
                            m.insert(pos, *r);
                            out.push((row + multiset_rank(rq, &m), if odd { c.neg() } else { c.clone() }));
                        }
                    }
                    cols.push(normalize_poly_vec(out));
                }
            }
            cols
        })
        .collect();
    KoszulData { modules, diffs }
}

/// `Kos^n(f)`: degree `k` is `Λ^k P ⊗ Sym^{n-k} Q`, with
/// `p_1∧…∧p_k ⊗ q ↦ Σ_i (-1)^{k-i} p_1∧…p̂_i…∧p_k ⊗ f(p_i) q`.
pub fn koszul_complex(f: &MapMatrix, n: usize) -> Result<ChainComplex> {
    let data = koszul_data(f, n);
    let diffs = data
        .diffs
        .into_iter()
        .enumerate()
        .map(|(i, cols)| MapMatrix::new(&data.modules[i + 1], &data.modules[i], cols))
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(f.ring(), 0, data.modules, diffs)
}

/// Co-Koszul complex of `f : P -> Q`: the dual of `Kos^n(f^*)`, re-indexed so that
/// degree `j` is `Λ^{n-j} Q ⊗ D^j P`.
pub fn cokoszul_complex(f: &MapMatrix, n: usize) -> Result<ChainComplex> {
    let fd = f.dual();
    let data = koszul_data(&fd, n);
    let (p, q) = (f.source(), f.target());
    let labels = |v: &LabeledFreeModule, key: &[u32]| -> Vec<BasisLabel> { key.iter().map(|&i| v.label(i as usize).clone()).collect() };
    // degree j corresponds to Kos degree n - j of the dual map
    let modules: Vec<LabeledFreeModule> = (0..=n)
        .map(|j| {
            let mut basis = Vec::new();
            for w in subsets(q.rank(), n - j) {
                for m in multisets(p.rank(), j) {
                    basis.push(BasisLabel::TensorWord(vec![
                        BasisLabel::WedgeSet(labels(q, &w)),
                        BasisLabel::DividedMonomial(labels(p, &m)),
                    ]));
                }
            }
            LabeledFreeModule::from_sorted(f.ring(), basis)
        })
        .collect();
    let diffs = (1..=n)
        .map(|j| {
            // transpose of the Kos differential out of degree n - j + 1
            let k = n - j + 1;
            let mut cols = vec![Vec::new(); modules[j].rank()];
            for (c, col) in data.diffs[k - 1].iter().enumerate() {
                for (r, x) in col {
                    cols[*r as usize].push((c as u32, x.clone()));
                }
            }
            MapMatrix::new(&modules[j], &modules[j - 1], cols)
        })
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(f.ring(), 0, modules, diffs)
}

/// `R(-deg f) --f--> R` in degrees 1 and 0.
pub fn principal_resolution(ring: &std::sync::Arc<crate::ring::Ring>, name: &str, f: &Poly) -> ChainComplex {
    let deg = f.degree().unwrap_or(0) as i32;
    let src = LabeledFreeModule::standard(ring, &format!("{name}1"), 1, deg);
    let tgt = LabeledFreeModule::standard(ring, &format!("{name}0"), 1, 0);
    ChainComplex::two_term(&MapMatrix::scalar_map(&src, &tgt, f.clone()), 1)
}

/// Free resolution of `R/I` for the configured regular sequence: `R --f--> R`, or
/// `Tot(K ⊗ L)` for a pair, checked against `Kos²(R ⊕ R --(f,g)--> R)`.
pub fn regular_sequence_resolution(desc: &RingDescriptor) -> Result<ChainComplex> {
    let ring = desc.ring();
    let seq = desc.regular_sequence().ok_or_else(|| Error::Config("no regular sequence configured".into()))?;
    match seq {
        [f] => Ok(principal_resolution(ring, "k", f)),
        [f, g] => {
            let tot = total_complex(&principal_resolution(ring, "k", f), &principal_resolution(ring, "l", g));
            koszul_isomorphism(&tot, f, g)?;
            Ok(tot)
        }
        _ => Err(Error::Config("regular sequence must have length 1 or 2".into())),
    }
}

/// Degreewise signed permutation `Tot(K ⊗ L) -> Kos²((f, g))`, checked to be a chain map.
pub fn koszul_isomorphism(tot: &ChainComplex, f: &Poly, g: &Poly) -> Result<ChainMap> {
    let ring = tot.ring();
    let (df, dg) = (f.degree().unwrap_or(0) as i32, g.degree().unwrap_or(0) as i32);
    let p = LabeledFreeModule::new(ring, vec![BasisLabel::atom("p0", df), BasisLabel::atom("p1", dg)])?;
    let q = LabeledFreeModule::standard(ring, "q", 1, 0);
    let map = MapMatrix::new(&p, &q, vec![vec![(0, f.clone())], vec![(0, g.clone())]])?;
    let kos = koszul_complex(&map, 2)?;
    let one = ring.one();
    // Tot degree 1 lists the g-block before the f-block
    let deg1 = MapMatrix::new(&tot.module(1), &kos.module(1), vec![vec![(1, one.clone())], vec![(0, one.clone())]])?;
    for sign in [one.clone(), one.neg()] {
        let comps = vec![
            (0, MapMatrix::new(&tot.module(0), &kos.module(0), vec![vec![(0, one.clone())]])?),
            (1, deg1.clone()),
            (2, MapMatrix::new(&tot.module(2), &kos.module(2), vec![vec![(0, sign)]])?),
        ];
        if let Ok(phi) = ChainMap::new(tot, &kos, comps) {
            return Ok(phi);
        }
    }
    Err(Error::BrokenComplex("Tot(K ⊗ L) does not match Kos² of the sequence".into()))
}

#[cfg(test)]
mod tests;
