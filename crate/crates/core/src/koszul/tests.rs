use std::sync::Arc;

use super::*;
use crate::complex::{homology_graded, shift, HomologyReport};
use crate::functors::FunctorTag;
use crate::ring::{Field, MonomialOrder, Ring};
use crate::simplicial::{apply_pointwise_functor, gamma, normalize};

fn line(r: &Arc<Ring>, name: &str, deg: i32) -> LabeledFreeModule {
    LabeledFreeModule::standard(r, name, 1, deg)
}

fn times_x(r: &Arc<Ring>) -> MapMatrix {
    MapMatrix::scalar_map(&line(r, "p", 1), &line(r, "q", 0), r.var(0))
}

fn row_xy(r: &Arc<Ring>) -> MapMatrix {
    let p = LabeledFreeModule::standard(r, "p", 2, 1);
    MapMatrix::new(&p, &line(r, "q", 0), vec![vec![(0, r.var(0))], vec![(0, r.var(1))]]).unwrap()
}

fn dims(h: &HomologyReport, ks: std::ops::RangeInclusive<i32>, t_max: i32) -> Vec<Vec<usize>> {
    ks.map(|k| (0..=t_max).map(|t| h.dim(k, t)).collect()).collect()
}

#[test]
fn koszul_square_of_the_maximal_ideal() {
    let r = Ring::plane(97);
    let kos = koszul_complex(&row_xy(&r), 2).unwrap();
    assert_eq!(kos.ranks(), vec![1, 2, 1]);
    assert_eq!(homology_graded(&kos, 6).unwrap().totals(0..=2), vec![1, 0, 0]);
}

#[test]
fn koszul_cube_of_multiplication_is_the_two_term_complex() {
    let r = Ring::plane(97);
    let f = times_x(&r);
    let kos = koszul_complex(&f, 3).unwrap();
    assert!(kos.trimmed().same_matrices(&ChainComplex::two_term(&f, 1)));
}

#[test]
fn cokoszul_cube_of_multiplication_is_shifted() {
    let r = Ring::plane(97);
    let f = times_x(&r);
    let co = cokoszul_complex(&f, 3).unwrap();
    assert!(co.trimmed().same_matrices(&shift(&ChainComplex::two_term(&f, 1), -2)));
}

#[test]
fn koszul_of_isomorphism_is_exact() {
    let r = Ring::plane(97);
    let v = LabeledFreeModule::standard(&r, "v", 2, 0);
    let id = MapMatrix::identity(&v);
    for n in 1..=3 {
        for c in [koszul_complex(&id, n).unwrap(), cokoszul_complex(&id, n).unwrap()] {
            let h = homology_graded(&c, 4).unwrap();
            assert!(h.totals(0..=n as i32).iter().all(|&d| d == 0));
        }
    }
}

#[test]
fn first_cokoszul_is_the_map() {
    let r = Ring::plane(97);
    let f = row_xy(&r);
    assert!(cokoszul_complex(&f, 1).unwrap().same_matrices(&koszul_complex(&f, 1).unwrap()));
}

#[test]
fn differentials_square_to_zero() {
    let r = Ring::plane(97);
    let p = LabeledFreeModule::standard(&r, "p", 3, 1);
    let q = LabeledFreeModule::standard(&r, "q", 2, 0);
    let (x, y) = (r.var(0), r.var(1));
    let f = MapMatrix::new(&p, &q, vec![vec![(0, x.clone()), (1, y.clone())], vec![(1, x.add(&y))], vec![(0, y)]]).unwrap();
    for n in 1..=4 {
        assert!(koszul_complex(&f, n).unwrap().is_d_squared_zero());
        assert!(cokoszul_complex(&f, n).unwrap().is_d_squared_zero());
    }
}

#[test]
fn regular_sequence_resolutions() {
    let desc = RingDescriptor::default_plane(97);
    let res = regular_sequence_resolution(&desc).unwrap();
    assert_eq!(res.ranks(), vec![1, 2, 1]);
    assert_eq!(homology_graded(&res, 5).unwrap().totals(0..=2), vec![1, 0, 0]);

    let r1 = Ring::new(Field::prime(97).unwrap(), vec!["x".into()], MonomialOrder::Degrevlex).unwrap();
    let desc1 = RingDescriptor::new(r1.clone(), Some(vec![r1.var(0)])).unwrap();
    let res1 = regular_sequence_resolution(&desc1).unwrap();
    assert_eq!(res1.ranks(), vec![1, 1]);
    let h = homology_graded(&res1, 5).unwrap();
    assert_eq!(dims(&h, 0..=1, 5), vec![vec![1, 0, 0, 0, 0, 0], vec![0; 6]]);

    let none = RingDescriptor::new(r1, None).unwrap();
    assert!(regular_sequence_resolution(&none).is_err());
}

#[test]
fn koszul_matches_derived_symmetric_square() {
    let r = Ring::plane(97);
    for f in [times_x(&r), row_xy(&r)] {
        let kos = homology_graded(&koszul_complex(&f, 2).unwrap(), 6).unwrap();
        let g = gamma(&ChainComplex::two_term(&f, 1), 3).unwrap();
        let n = normalize(&apply_pointwise_functor(&FunctorTag::sym(2), &g)).unwrap();
        let rhs = homology_graded(&n, 6).unwrap();
        assert_eq!(dims(&kos, 0..=2, 6), dims(&rhs, 0..=2, 6));
        let co = homology_graded(&cokoszul_complex(&f, 2).unwrap(), 6).unwrap();
        let n = normalize(&apply_pointwise_functor(&FunctorTag::ext(2), &g)).unwrap();
        let rhs = homology_graded(&n, 6).unwrap();
        assert_eq!(dims(&co, 0..=2, 6), dims(&rhs, 0..=2, 6));
    }
}
