use super::basic::{ext_module, multiset_rank, multisets, subsets, sym_module};
use super::binom;
use crate::linear::{normalize_poly_vec, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Poly;

fn pair_sym3(rp: usize, rq: usize, pairs: [(u32, u32); 3], c: &Poly, out: &mut PolyVec) {
    let mut key: Vec<u32> = pairs.iter().map(|(i, j)| i * rq as u32 + j).collect();
    key.sort_unstable();
    out.push((multiset_rank(rp * rq, &key), c.clone()));
}

/// `Λ³P ⊗ Λ³Q -> Sym³(P ⊗ Q)`, `(p1∧p2∧p3) ⊗ (q1∧q2∧q3) ↦ det[p_a ⊗ q_b]`.
pub fn cauchy_det_map(p: &LabeledFreeModule, q: &LabeledFreeModule) -> MapMatrix {
    let (rp, rq) = (p.rank(), q.rank());
    let one = p.ring().one();
    let minus = one.neg();
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([0, 2, 1], true),
        ([1, 0, 2], true),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([2, 1, 0], true),
    ];
    let mut cols = Vec::new();
    for i in subsets(rp, 3) {
        for j in subsets(rq, 3) {
            let mut out = Vec::new();
            for (s, odd) in PERMS {
                let pairs = [0, 1, 2].map(|a| (i[a], j[s[a]]));
                pair_sym3(rp, rq, pairs, if odd { &minus } else { &one }, &mut out);
            }
            cols.push(normalize_poly_vec(out));
        }
    }
    let source = LabeledFreeModule::tensor(&[&ext_module(p, 3), &ext_module(q, 3)]);
    let target = sym_module(&LabeledFreeModule::tensor(&[p, q]), 3);
    MapMatrix::new(&source, &target, cols).expect("determinant map shapes")
}

/// `Λ²P ⊗ P ⊗ Λ²Q ⊗ Q -> Sym³(P ⊗ Q)`,
/// `(p1∧p2) ⊗ p3 ⊗ (q1∧q2) ⊗ q3 ↦ ((p1⊗q1)(p2⊗q2) − (p1⊗q2)(p2⊗q1)) · (p3⊗q3)`.
pub fn cauchy_m21_map(p: &LabeledFreeModule, q: &LabeledFreeModule) -> MapMatrix {
    let (rp, rq) = (p.rank(), q.rank());
    let one = p.ring().one();
    let minus = one.neg();
    let mut cols = Vec::new();
    for i in subsets(rp, 2) {
        for p3 in 0..rp as u32 {
            for j in subsets(rq, 2) {
                for q3 in 0..rq as u32 {
                    let mut out = Vec::new();
                    pair_sym3(rp, rq, [(i[0], j[0]), (i[1], j[1]), (p3, q3)], &one, &mut out);
                    pair_sym3(rp, rq, [(i[0], j[1]), (i[1], j[0]), (p3, q3)], &minus, &mut out);
                    cols.push(normalize_poly_vec(out));
                }
            }
        }
    }
    let source = LabeledFreeModule::tensor(&[&ext_module(p, 2), p, &ext_module(q, 2), q]);
    let target = sym_module(&LabeledFreeModule::tensor(&[p, q]), 3);
    MapMatrix::new(&source, &target, cols).expect("(2,1) map shapes")
}

/// Multiplication `Sym^l(A ⊗ B) -> Sym^l A ⊗ Sym^l B`; sends basis elements to basis elements.
pub fn sym_multiplication_map(a: &LabeledFreeModule, b: &LabeledFreeModule, l: usize) -> MapMatrix {
    let (ra, rb) = (a.rank(), b.rank());
    let width = binom(rb + l - 1, l) as u32;
    let one = a.ring().one();
    let cols = multisets(ra * rb, l)
        .iter()
        .map(|m| {
            let mut ka: Vec<u32> = m.iter().map(|x| x / rb as u32).collect();
            let mut kb: Vec<u32> = m.iter().map(|x| x % rb as u32).collect();
            ka.sort_unstable();
            kb.sort_unstable();
            vec![(multiset_rank(ra, &ka) * width + multiset_rank(rb, &kb), one.clone())]
        })
        .collect();
    let source = sym_module(&LabeledFreeModule::tensor(&[a, b]), l);
    let target = LabeledFreeModule::tensor(&[&sym_module(a, l), &sym_module(b, l)]);
    MapMatrix::new(&source, &target, cols).expect("multiplication shapes")
}
