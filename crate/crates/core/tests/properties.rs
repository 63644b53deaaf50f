//! Randomized structural properties across modules, on maps whose entries are linear forms.

use std::sync::Arc;

use dflab::complex::{engines_agree, homology_graded_with, homology_groebner, ChainComplex, ChainMap, HomologyOptions};
use dflab::functors::FunctorTag;
use dflab::koszul::{cokoszul_complex, koszul_complex};
use dflab::linear::{LabeledFreeModule, MapMatrix};
use dflab::ring::{Poly, Ring};
use dflab::simplicial::{apply_pointwise_functor, eilenberg_zilber, gamma, normalize};
use proptest::prelude::*;

fn linear_form(r: &Arc<Ring>, a: i64, b: i64) -> Poly {
    r.var(0).scale(&r.field().from_i64(a)).add(&r.var(1).scale(&r.field().from_i64(b)))
}

/// `R(-1)^m -> R^n` with entries `a x + b y`.
fn linear_map(r: &Arc<Ring>, m: usize, n: usize, coeffs: &[(i64, i64)]) -> MapMatrix {
    let src = LabeledFreeModule::standard(r, "s", m, 1);
    let tgt = LabeledFreeModule::standard(r, "t", n, 0);
    let cols = (0..m)
        .map(|c| (0..n).map(|i| (i as u32, { let (a, b) = coeffs[c * n + i]; linear_form(r, a, b) })).collect())
        .collect();
    MapMatrix::new(&src, &tgt, cols).unwrap()
}

/// Square map between modules in the same degree, entries in the base field.
fn constant_map(r: &Arc<Ring>, src: &LabeledFreeModule, tgt: &LabeledFreeModule, entries: &[i64]) -> MapMatrix {
    let cols = (0..src.rank())
        .map(|c| (0..tgt.rank()).map(|i| (i as u32, r.int(entries[c * tgt.rank() + i]))).collect())
        .collect();
    MapMatrix::new(src, tgt, cols).unwrap()
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-2i64..3, -2i64..3), n)
}

fn ints(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..4, n)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative_and_slices_multiply(e1 in ints(4), e2 in ints(6), e3 in ints(6), c in coeffs(2)) {
        let r = Ring::plane(97);
        let (u, v, w, z) = (
            LabeledFreeModule::standard(&r, "u", 2, 1),
            LabeledFreeModule::standard(&r, "v", 2, 1),
            LabeledFreeModule::standard(&r, "w", 3, 1),
            LabeledFreeModule::standard(&r, "z", 2, 1),
        );
        let f = constant_map(&r, &u, &v, &e1);
        let g = constant_map(&r, &v, &w, &e2);
        let h = constant_map(&r, &w, &z, &e3);
        prop_assert!(h.after(&g).after(&f) == h.after(&g.after(&f)));
        let m = linear_map(&r, 2, 1, &c);
        let m = m.relabel(&v, m.target()).unwrap();
        let mf = m.after(&f);
        for t in 1..4 {
            let lhs = mf.graded_slice(t).unwrap();
            let rhs = m.graded_slice(t).unwrap().mul(&f.graded_slice(t).unwrap());
            prop_assert_eq!(lhs.columns(), rhs.columns());
        }
    }

    #[test]
    fn tensor_is_functorial(e1 in ints(4), e2 in ints(4), e3 in ints(4), e4 in ints(4)) {
        let r = Ring::plane(97);
        let v = LabeledFreeModule::standard(&r, "v", 2, 0);
        let (f, g) = (constant_map(&r, &v, &v, &e1), constant_map(&r, &v, &v, &e2));
        let (f2, g2) = (constant_map(&r, &v, &v, &e3), constant_map(&r, &v, &v, &e4));
        let lhs = MapMatrix::tensor(&g.after(&f), &g2.after(&f2));
        let rhs = MapMatrix::tensor(&g, &g2).after(&MapMatrix::tensor(&f, &f2));
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn engines_agree_on_random_two_term_complexes(m in 1usize..3, n in 1usize..3, c in coeffs(4)) {
        let r = Ring::plane(97);
        let k = ChainComplex::two_term(&linear_map(&r, m, n, &c), 1);
        let report = homology_graded_with(&k, &HomologyOptions::new(6)).unwrap();
        for deg in 0..=1 {
            prop_assert!(engines_agree(&report, deg, &homology_groebner(&k, deg).unwrap()));
        }
    }

    #[test]
    fn gamma_round_trips_and_satisfies_identities(m in 1usize..3, n in 1usize..3, c in coeffs(4)) {
        let r = Ring::plane(97);
        let k = ChainComplex::two_term(&linear_map(&r, m, n, &c), 1);
        let g = gamma(&k, 4).unwrap();
        prop_assert_eq!(g.identity_violation(), None);
        prop_assert!(g.has_monomial_degeneracies());
        prop_assert!(g.unnormalized().is_d_squared_zero());
        prop_assert!(normalize(&g).unwrap().trimmed().same_matrices(&k));
        let s = apply_pointwise_functor(&FunctorTag::sym(2), &g);
        prop_assert_eq!(s.identity_violation(), None);
    }

    #[test]
    fn alexander_whitney_is_a_section_of_the_shuffle(c1 in coeffs(1), c2 in coeffs(2)) {
        let r = Ring::plane(97);
        let a = gamma(&ChainComplex::two_term(&linear_map(&r, 1, 1, &c1), 1), 4).unwrap();
        let b = gamma(&ChainComplex::two_term(&linear_map(&r, 1, 2, &c2), 1), 4).unwrap();
        let ez = eilenberg_zilber(&a, &b).unwrap();
        prop_assert!(ChainMap::compose(&ez.aw, &ez.shuffle).unwrap().is_identity());
    }

    #[test]
    fn koszul_complexes_match_derived_functors(m in 1usize..3, c in coeffs(2), n in 1usize..3) {
        let r = Ring::plane(97);
        let f = linear_map(&r, m, 1, &c);
        let g = gamma(&ChainComplex::two_term(&f, 1), n + 1).unwrap();
        let opts = HomologyOptions::new(6).degrees(0..=n as i32);
        let kos = koszul_complex(&f, n).unwrap();
        let cokos = cokoszul_complex(&f, n).unwrap();
        prop_assert!(kos.is_d_squared_zero() && cokos.is_d_squared_zero());
        let pairs = [
            (kos, normalize(&apply_pointwise_functor(&FunctorTag::sym(n), &g)).unwrap()),
            (cokos, normalize(&apply_pointwise_functor(&FunctorTag::ext(n), &g)).unwrap()),
        ];
        for (lhs, rhs) in pairs {
            let (hl, hr) = (homology_graded_with(&lhs, &opts).unwrap(), homology_graded_with(&rhs, &opts).unwrap());
            for k in 0..=n as i32 {
                for t in 0..=6 {
                    prop_assert_eq!(hl.dim(k, t), hr.dim(k, t));
                }
            }
        }
    }
}
