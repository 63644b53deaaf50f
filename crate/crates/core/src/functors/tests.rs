use std::sync::Arc;

use proptest::prelude::*;

use super::cross::field_columns;
use super::*;
use crate::linear::FieldMatrix;
use crate::ring::{Field, Ring};

fn k(p: u32) -> Arc<Ring> {
    Ring::field_only(Field::prime(p).unwrap())
}

fn free(r: &Arc<Ring>, prefix: &str, n: usize) -> LabeledFreeModule {
    LabeledFreeModule::standard(r, prefix, n, 0)
}

fn matrix(r: &Arc<Ring>, src: &LabeledFreeModule, tgt: &LabeledFreeModule, entries: &[i64]) -> MapMatrix {
    let cols = (0..src.rank())
        .map(|c| (0..tgt.rank()).map(|i| (i as u32, r.int(entries[c * tgt.rank() + i]))).collect())
        .collect();
    MapMatrix::new(src, tgt, cols).unwrap()
}

fn rank(m: &MapMatrix) -> usize {
    FieldMatrix::from_columns(m.ring().field(), m.nrows(), field_columns(m)).rank()
}

fn all_tags() -> Vec<FunctorTag> {
    let mut v = Vec::new();
    for l in 1..=3 {
        v.extend([FunctorTag::sym(l), FunctorTag::ext(l), FunctorTag::div(l), FunctorTag::tensor_pow(l)]);
    }
    v.extend([FunctorTag::schur(), FunctorTag::coschur()]);
    v
}

#[test]
fn sym_cube_of_scalar() {
    let r = Ring::plane(97);
    let m = free(&r, "e", 1);
    let c = r.var(0).add(&r.int(2));
    let f = MapMatrix::scalar_map(&m, &m, c.clone());
    assert_eq!(functor_on_map(FunctorTag::sym(3), &f).entry(0, 0), c.pow(3));
}

#[test]
fn schur_dimensions() {
    let r = k(97);
    let dims: Vec<usize> = [2, 3, 4].iter().map(|&n| FunctorTag::schur().on_module(&free(&r, "e", n)).rank()).collect();
    assert_eq!(dims, vec![2, 8, 20]);
    // rank of Λ²V⊗V -> V⊗Sym²V equals the tableau count
    for n in [2, 3, 4] {
        let v = free(&r, "e", n);
        let q = straightening_map(&v);
        assert_eq!(rank(&q), n * (n * n - 1) / 3);
    }
}

#[test]
fn divided_cube_of_identity() {
    let r = k(97);
    let v = free(&r, "e", 2);
    let d = functor_on_map(FunctorTag::div(3), &MapMatrix::identity(&v));
    assert_eq!(d.ncols(), 4);
    assert!(d.same_entries(&MapMatrix::identity(d.source())));
}

#[test]
fn exterior_square_is_determinant_and_first_power_is_identity() {
    let r = k(97);
    let v = free(&r, "e", 2);
    let f = matrix(&r, &v, &v, &[1, 2, 3, 4]);
    let l2 = functor_on_map(FunctorTag::ext(2), &f);
    assert_eq!(l2.entry(0, 0), r.int(-2));
    assert!(functor_on_map(FunctorTag::ext(1), &f).same_entries(&f));
}

#[test]
fn divided_powers_differ_from_symmetric_powers() {
    let r = k(97);
    let (a, b) = (free(&r, "a", 2), free(&r, "b", 1));
    // (1, 1): e0 + e1 under D² and Sym²
    let f = matrix(&r, &b, &a, &[1, 1]);
    let s = functor_on_map(FunctorTag::sym(2), &f);
    let d = functor_on_map(FunctorTag::div(2), &f);
    assert_eq!(s.entry(1, 0), r.int(2));
    assert_eq!(d.entry(1, 0), r.int(1));
}

#[test]
fn predicted_ranks_match_modules() {
    let r = k(97);
    for n in 0..5 {
        for tag in all_tags() {
            assert_eq!(tag.rank_on(n), tag.on_module(&free(&r, "e", n)).rank(), "{tag} on rank {n}");
        }
    }
}

fn arb_entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..4, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn functoriality(e1 in arb_entries(6), e2 in arb_entries(6)) {
        let r = k(97);
        let (u, v, w) = (free(&r, "u", 2), free(&r, "v", 3), free(&r, "w", 2));
        let f = matrix(&r, &u, &v, &e1);
        let g = matrix(&r, &v, &w, &e2);
        for tag in all_tags() {
            let lhs = tag.on_map(&g.after(&f));
            let rhs = tag.on_map(&g).after(&tag.on_map(&f));
            prop_assert!(lhs == rhs, "{tag}");
            let id = tag.on_map(&MapMatrix::identity(&v));
            prop_assert!(id == MapMatrix::identity(id.source()), "{tag}");
        }
    }

    #[test]
    fn schur_comparison_is_natural(e in arb_entries(6)) {
        let r = k(97);
        let (u, v) = (free(&r, "u", 2), free(&r, "v", 3));
        let f = matrix(&r, &u, &v, &e);
        let lhs = schur_comparison(&v).after(&FunctorTag::coschur().on_map(&f));
        let rhs = FunctorTag::schur().on_map(&f).after(&schur_comparison(&u));
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn cross_effect_decomposition(a in 1usize..3, b in 1usize..3) {
        let r = k(97);
        let (va, vb) = (free(&r, "a", a), free(&r, "b", b));
        let sum = LabeledFreeModule::direct_sum(&[&va, &vb]);
        for tag in all_tags() {
            let cr2 = cross_effect(&tag, &[va.clone(), vb.clone()]).unwrap();
            prop_assert_eq!(
                tag.on_module(&sum).rank(),
                tag.on_module(&va).rank() + tag.on_module(&vb).rank() + cr2.rank(),
                "{}", tag
            );
        }
    }
}

#[test]
fn schur_comparison_needs_three_invertible() {
    for n in [2, 3, 4] {
        let v = free(&k(97), "e", n);
        assert_eq!(rank(&schur_comparison(&v)), n * (n * n - 1) / 3);
    }
    // in characteristic 3 it degenerates once V has rank 3
    assert_eq!(rank(&schur_comparison(&free(&k(3), "e", 2))), 2);
    assert_eq!(rank(&schur_comparison(&free(&k(3), "e", 3))), 7);
}

#[test]
fn cross_effects_of_sym_cube() {
    let r = k(97);
    let line = free(&r, "e", 1);
    let ranks: Vec<usize> = (1..=4)
        .map(|n| cross_effect(&FunctorTag::sym(3), &vec![line.clone(); n]).unwrap().rank())
        .collect();
    assert_eq!(ranks, vec![1, 2, 1, 0]);
}

#[test]
fn cross_effects_of_schur_functors() {
    let r = k(97);
    let line = free(&r, "e", 1);
    for tag in [FunctorTag::schur(), FunctorTag::coschur()] {
        let ranks: Vec<usize> = (1..=4).map(|n| cross_effect(&tag, &vec![line.clone(); n]).unwrap().rank()).collect();
        assert_eq!(ranks, vec![0, 2, 2, 0]);
    }
    let cr = cross_effect(&FunctorTag::schur(), &[free(&r, "a", 2), free(&r, "b", 3)]).unwrap();
    assert_eq!(cr.rank(), 30);
}

#[test]
fn cross_effect_vanishes_on_zero_argument() {
    let r = k(97);
    let cr = cross_effect(&FunctorTag::sym(3), &[free(&r, "a", 2), LabeledFreeModule::zero(&r)]).unwrap();
    assert_eq!(cr.rank(), 0);
}

#[test]
fn cross_effect_inductive_identity() {
    // cr_3(F)(U,V,W) = cr_2(F)(U⊕V, W) − cr_2(F)(U,W) − cr_2(F)(V,W)
    let r = k(97);
    let (u, v, w) = (free(&r, "u", 1), free(&r, "v", 2), free(&r, "w", 1));
    let uv = LabeledFreeModule::direct_sum(&[&u, &v]);
    for tag in all_tags() {
        let cr3 = cross_effect(&tag, &[u.clone(), v.clone(), w.clone()]).unwrap().rank();
        let big = cross_effect(&tag, &[uv.clone(), w.clone()]).unwrap().rank();
        let a = cross_effect(&tag, &[u.clone(), w.clone()]).unwrap().rank();
        let b = cross_effect(&tag, &[v.clone(), w.clone()]).unwrap().rank();
        assert_eq!(big, a + b + cr3, "{tag}");
    }
}

#[test]
fn cross_effects_need_a_field() {
    let r = Ring::plane(97);
    assert!(cross_effect(&FunctorTag::sym(2), &[free(&r, "a", 1)]).is_err());
}

#[test]
fn diagonal_and_plus_for_sym_square() {
    let r = k(97);
    let line = free(&r, "e", 1);
    let d = delta_map(&FunctorTag::sym(2), std::slice::from_ref(&line), &[2]).unwrap();
    assert_eq!((d.map.ncols(), d.map.nrows()), (1, 1));
    assert_eq!(d.map.entry(0, 0), r.int(2));
    let p = plus_map(&FunctorTag::sym(2), &[line], &[2]).unwrap();
    assert_eq!(p.map.entry(0, 0), r.int(1));
}

#[test]
fn plus_after_diagonal_on_exterior_square() {
    let r = k(97);
    let v = free(&r, "e", 2);
    let d = delta_map(&FunctorTag::ext(2), std::slice::from_ref(&v), &[2]).unwrap();
    let p = plus_map(&FunctorTag::ext(2), &[v], &[2]).unwrap();
    let pd = p.map.after(&d.map);
    assert!(pd == MapMatrix::identity(pd.source()).scale(&r.field().from_i64(2)));
}

#[test]
fn malformed_epsilon_is_rejected() {
    let r = k(97);
    let line = free(&r, "e", 1);
    assert!(delta_map(&FunctorTag::sym(2), std::slice::from_ref(&line), &[0]).is_err());
    assert!(plus_map(&FunctorTag::sym(2), &[line], &[1, 1]).is_err());
}

#[test]
fn cauchy_ranks() {
    let r = k(97);
    for (n, expected) in [(2usize, (0usize, 4usize, 16usize, 20usize)), (3, (1, 64, 100, 165))] {
        let (p, q) = (free(&r, "p", n), free(&r, "q", n));
        let det = cauchy_det_map(&p, &q);
        let m21 = cauchy_m21_map(&p, &q);
        let mult = sym_multiplication_map(&p, &q, 3);
        let both_cols: Vec<_> = field_columns(&det).into_iter().chain(field_columns(&m21)).collect();
        let both = FieldMatrix::from_columns(r.field(), det.nrows(), both_cols).rank();
        let total = det.nrows();
        assert_eq!((rank(&det), both - rank(&det), total - both, total), expected);
        // the filtration stage is exactly the kernel of multiplication
        assert_eq!(rank(&mult), total - both);
        assert!(mult.after(&det).is_zero() && mult.after(&m21).is_zero());
    }
}

#[test]
fn determinant_entries_are_signs() {
    let r = k(97);
    let p = free(&r, "p", 3);
    let det = cauchy_det_map(&p, &p);
    assert_eq!(det.nnz(), 6);
    assert!(det.column(0).iter().all(|(_, c)| c == &r.int(1) || c == &r.int(-1)));
    assert!(cauchy_det_map(&free(&r, "a", 2), &free(&r, "b", 2)).is_zero());
}
