use std::collections::HashMap;

use super::binom;
use crate::linear::{normalize_poly_vec, BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Poly;

/// Sorted multisets of size `l` from `0..r`, lexicographic.
pub(crate) fn multisets(r: usize, l: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(binom((r + l).saturating_sub(1), l));
    let mut cur = Vec::with_capacity(l);
    fn rec(r: u32, l: usize, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for v in lo..r {
            cur.push(v);
            rec(r, l, v, cur, out);
            cur.pop();
        }
    }
    rec(r as u32, l, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing subsets of size `l` from `0..r`, lexicographic.
pub(crate) fn subsets(r: usize, l: usize) -> Vec<Vec<u32>> {
    multisets(r + 1, l)
        .into_iter()
        .filter(|m| m.windows(2).all(|w| w[0] < w[1]))
        .filter(|m| m.iter().all(|&v| (v as usize) < r))
        .collect()
}

/// Position of a sorted multiset in [`multisets`].
pub(crate) fn multiset_rank(r: usize, key: &[u32]) -> u32 {
    let l = key.len();
    let mut rank = 0;
    let mut lo = 0usize;
    for (i, &a) in key.iter().enumerate() {
        let rest = l - i - 1;
        for v in lo..a as usize {
            rank += binom(r - v + rest - 1, rest);
        }
        lo = a as usize;
    }
    rank as u32
}

/// Position of a strictly increasing set in [`subsets`].
pub(crate) fn subset_rank(r: usize, key: &[u32]) -> u32 {
    let l = key.len();
    let mut rank = 0;
    let mut lo = 0usize;
    for (i, &a) in key.iter().enumerate() {
        let rest = l - i - 1;
        for v in lo..a as usize {
            rank += binom(r - v - 1, rest);
        }
        lo = a as usize + 1;
    }
    rank as u32
}

fn labels_of(v: &LabeledFreeModule, key: &[u32]) -> Vec<BasisLabel> {
    key.iter().map(|&i| v.label(i as usize).clone()).collect()
}

pub(crate) fn sym_module(v: &LabeledFreeModule, l: usize) -> LabeledFreeModule {
    let labels = multisets(v.rank(), l).iter().map(|m| BasisLabel::SymMonomial(labels_of(v, m))).collect();
    LabeledFreeModule::from_sorted(v.ring(), labels)
}

pub(crate) fn ext_module(v: &LabeledFreeModule, l: usize) -> LabeledFreeModule {
    let labels = subsets(v.rank(), l).iter().map(|m| BasisLabel::WedgeSet(labels_of(v, m))).collect();
    LabeledFreeModule::from_sorted(v.ring(), labels)
}

pub(crate) fn div_module(v: &LabeledFreeModule, l: usize) -> LabeledFreeModule {
    let labels = multisets(v.rank(), l).iter().map(|m| BasisLabel::DividedMonomial(labels_of(v, m))).collect();
    LabeledFreeModule::from_sorted(v.ring(), labels)
}

/// Symmetric product of the given columns, keyed by sorted multisets of row indices.
pub(crate) fn sym_product(cols: &[&PolyVec], one: &Poly) -> HashMap<Vec<u32>, Poly> {
    let mut acc: HashMap<Vec<u32>, Poly> = HashMap::from([(Vec::new(), one.clone())]);
    for col in cols {
        let mut next: HashMap<Vec<u32>, Poly> = HashMap::with_capacity(acc.len() * col.len());
        for (key, c) in &acc {
            for (r, p) in col.iter() {
                let mut k = key.clone();
                let pos = k.partition_point(|&x| x <= *r);
                k.insert(pos, *r);
                let term = c.mul(p);
                next.entry(k).and_modify(|e| *e = e.add(&term)).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        acc = next;
    }
    acc
}

/// Exterior product of the given columns, keyed by increasing sets of row indices.
pub(crate) fn ext_product(cols: &[&PolyVec], one: &Poly) -> HashMap<Vec<u32>, Poly> {
    let mut acc: HashMap<Vec<u32>, Poly> = HashMap::from([(Vec::new(), one.clone())]);
    for col in cols {
        let mut next: HashMap<Vec<u32>, Poly> = HashMap::with_capacity(acc.len() * col.len());
        for (key, c) in &acc {
            for (r, p) in col.iter() {
                let Err(pos) = key.binary_search(r) else { continue };
                let mut k = key.clone();
                k.insert(pos, *r);
                let term = c.mul(p);
                let term = if (key.len() - pos) % 2 == 1 { term.neg() } else { term };
                next.entry(k).and_modify(|e| *e = e.add(&term)).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        acc = next;
    }
    acc
}

/// Columns of `Sym^l` of the map with the given columns (`n_src` inputs, `n_tgt` rows).
pub(crate) fn sym_columns(cols: &[PolyVec], n_src: usize, n_tgt: usize, l: usize, one: &Poly) -> Vec<PolyVec> {
    multisets(n_src, l)
        .iter()
        .map(|m| {
            let picked: Vec<&PolyVec> = m.iter().map(|&i| &cols[i as usize]).collect();
            normalize_poly_vec(sym_product(&picked, one).into_iter().map(|(k, p)| (multiset_rank(n_tgt, &k), p)).collect())
        })
        .collect()
}

pub(crate) fn sym_map(f: &MapMatrix, l: usize, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
    let cols = sym_columns(f.columns(), f.ncols(), f.nrows(), l, &f.ring().one());
    MapMatrix::new(source, target, cols).expect("Sym shapes")
}

pub(crate) fn ext_map(f: &MapMatrix, l: usize, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
    let one = f.ring().one();
    let cols = subsets(f.ncols(), l)
        .iter()
        .map(|m| {
            let picked: Vec<&PolyVec> = m.iter().map(|&i| f.column(i as usize)).collect();
            normalize_poly_vec(ext_product(&picked, &one).into_iter().map(|(k, p)| (subset_rank(f.nrows(), &k), p)).collect())
        })
        .collect();
    MapMatrix::new(source, target, cols).expect("Λ shapes")
}

/// Transpose of column data: `n_rows` is the number of rows of the input.
pub(crate) fn transpose_columns(cols: &[PolyVec], n_rows: usize) -> Vec<PolyVec> {
    let mut out = vec![Vec::new(); n_rows];
    for (j, c) in cols.iter().enumerate() {
        for (r, p) in c {
            out[*r as usize].push((j as u32, p.clone()));
        }
    }
    out
}

/// `D^l(f)` as the transpose of `Sym^l` of the transpose.
pub(crate) fn div_map(f: &MapMatrix, l: usize, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
    let ft = f.transposed_columns();
    let s = sym_columns(&ft, f.nrows(), f.ncols(), l, &f.ring().one());
    MapMatrix::new(source, target, transpose_columns(&s, source.rank())).expect("D shapes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_match_enumeration() {
        for r in 0..6 {
            for l in 1..4 {
                for (i, m) in multisets(r, l).iter().enumerate() {
                    assert_eq!(multiset_rank(r, m) as usize, i);
                }
                for (i, m) in subsets(r, l).iter().enumerate() {
                    assert_eq!(subset_rank(r, m) as usize, i);
                }
                assert_eq!(multisets(r, l).len(), binom(r + l - 1, l));
                assert_eq!(subsets(r, l).len(), binom(r, l));
            }
        }
    }
}
