//! Truncated simplicial modules and the Dold-Kan functors.

mod ez;
mod gamma;
mod module;
mod normalize;
mod pointwise;
mod surjection;

pub use ez::{eilenberg_zilber, EilenbergZilber};
pub use gamma::gamma;
pub use module::{diagonal_tensor, SimplicialModule};
pub use pointwise::apply_pointwise_functor;
pub use normalize::{normalize, normalize_map, normalize_with_data, Normalization};
pub use surjection::Surjection;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::complex::{check_quasi_isomorphism, homology_graded, total_complex, ChainComplex, ChainMap};
    use crate::linear::{LabeledFreeModule, MapMatrix};
    use crate::ring::{Field, Ring};

    fn mult(ring: &Arc<Ring>, var: usize, name: &str) -> ChainComplex {
        let src = LabeledFreeModule::standard(ring, &format!("{name}1"), 1, 1);
        let tgt = LabeledFreeModule::standard(ring, &format!("{name}0"), 1, 0);
        ChainComplex::two_term(&MapMatrix::scalar_map(&src, &tgt, ring.var(var)), 1)
    }

    fn koszul_xy(ring: &Arc<Ring>) -> ChainComplex {
        total_complex(&mult(ring, 0, "k"), &mult(ring, 1, "l"))
    }

    #[test]
    fn gamma_level_ranks() {
        let r = Ring::plane(97);
        let gk = gamma(&mult(&r, 0, "k"), 5).unwrap();
        assert_eq!(gk.ranks(), (0..=5).map(|n| 1 + n).collect::<Vec<_>>());
        let gp = gamma(&koszul_xy(&r), 5).unwrap();
        assert_eq!(gp.ranks(), (0..=5usize).map(|n| 1 + 2 * n + n * n.saturating_sub(1) / 2).collect::<Vec<_>>());
    }

    #[test]
    fn gamma_satisfies_simplicial_identities() {
        let r = Ring::plane(97);
        assert_eq!(gamma(&mult(&r, 0, "k"), 5).unwrap().identity_violation(), None);
        assert_eq!(gamma(&koszul_xy(&r), 4).unwrap().identity_violation(), None);
        let m = LabeledFreeModule::standard(&r, "m", 2, 0);
        assert_eq!(SimplicialModule::constant(&m, 4).identity_violation(), None);
    }

    #[test]
    fn normalized_gamma_is_identity() {
        let r = Ring::plane(97);
        for c in [mult(&r, 0, "k"), koszul_xy(&r)] {
            let n = normalize(&gamma(&c, 5).unwrap()).unwrap();
            assert!(n.same_matrices(&c));
            assert_eq!(n.trimmed().ranks(), c.ranks());
        }
    }

    #[test]
    fn constant_module_normalizes_to_degree_zero() {
        let r = Ring::plane(97);
        let m = LabeledFreeModule::standard(&r, "m", 3, 0);
        let n = normalize(&SimplicialModule::constant(&m, 4)).unwrap();
        assert_eq!(n.ranks(), vec![3, 0, 0, 0, 0]);
    }

    #[test]
    fn tensor_square_of_gamma() {
        let r = Ring::plane(97);
        let (k, l) = (gamma(&mult(&r, 0, "k"), 5).unwrap(), gamma(&mult(&r, 1, "l"), 5).unwrap());
        let d = diagonal_tensor(&[&k, &l]).unwrap();
        assert_eq!(d.ranks(), (0..=5).map(|n| (1 + n) * (1 + n)).collect::<Vec<_>>());
        assert_eq!(d.identity_violation(), None);
        // nondegenerate pairs: (1,1), then 3 in degree 1, 2 in degree 2
        assert_eq!(normalize(&d).unwrap().ranks(), vec![1, 3, 2, 0, 0, 0]);
    }

    #[test]
    fn eilenberg_zilber_maps() {
        let r = Ring::plane(97);
        let (k, l) = (gamma(&mult(&r, 0, "k"), 4).unwrap(), gamma(&mult(&r, 1, "l"), 4).unwrap());
        let ez = eilenberg_zilber(&k, &l).unwrap();
        assert_eq!(ez.tot.ranks()[..3], [1, 2, 1]);
        let round = ChainMap::compose(&ez.aw, &ez.shuffle).unwrap();
        assert!(round.is_identity());
        assert!(check_quasi_isomorphism(&ez.shuffle, 0..=3, 6).ok);
        assert!(check_quasi_isomorphism(&ez.aw, 0..=3, 6).ok);
    }

    #[test]
    fn eilenberg_zilber_on_koszul_square() {
        let r = Ring::plane(97);
        let p = gamma(&koszul_xy(&r), 4).unwrap();
        let ez = eilenberg_zilber(&p, &p).unwrap();
        assert!(ChainMap::compose(&ez.aw, &ez.shuffle).unwrap().is_identity());
        let h = homology_graded(&ez.diagonal, 8).unwrap();
        assert_eq!(h.totals(0..=4), vec![1, 2, 1, 0, 0]);
    }

    /// Conjugating every level by a unitriangular change of basis keeps a simplicial
    /// module but makes its degeneracies non-monomial.
    fn conjugated(a: &SimplicialModule) -> SimplicialModule {
        let ring = a.ring();
        let change = |m: &LabeledFreeModule, sign: i64| {
            let cols = (0..m.rank())
                .map(|c| {
                    let mut v = vec![(c as u32, ring.one())];
                    if c == 1 {
                        v.insert(0, (0, ring.int(sign)));
                    }
                    v
                })
                .collect();
            MapMatrix::new(m, m, cols).unwrap()
        };
        let g: Vec<MapMatrix> = a.levels().iter().map(|m| change(m, 1)).collect();
        let gi: Vec<MapMatrix> = a.levels().iter().map(|m| change(m, -1)).collect();
        let faces = (0..=a.n_max())
            .map(|n| a.faces(n).iter().map(|d| g[n - 1].after(&d.after(&gi[n]))).collect())
            .collect();
        let degs = (0..=a.n_max())
            .map(|n| a.degeneracies(n).iter().map(|s| g[n + 1].after(&s.after(&gi[n]))).collect())
            .collect();
        SimplicialModule::new(ring, a.levels().to_vec(), faces, degs).unwrap()
    }

    #[test]
    fn moore_complex_fallback() {
        let r = Ring::field_only(Field::prime(7).unwrap());
        let src = LabeledFreeModule::standard(&r, "a", 2, 0);
        let tgt = LabeledFreeModule::standard(&r, "b", 1, 0);
        let f = MapMatrix::new(&src, &tgt, vec![vec![(0, r.one())], vec![]]).unwrap();
        let a = gamma(&ChainComplex::two_term(&f, 1), 4).unwrap();
        let b = conjugated(&a);
        assert_eq!(b.identity_violation(), None);
        assert!(!b.has_monomial_degeneracies());
        let m = normalize(&b).unwrap();
        assert_eq!(m.ranks(), normalize(&a).unwrap().ranks());
        let h = homology_graded(&m, 0).unwrap();
        assert_eq!(h.totals(0..=2), vec![0, 1, 0]);
    }

    #[test]
    fn polynomial_ring_requires_monomial_degeneracies() {
        let r = Ring::plane(97);
        let a = conjugated(&gamma(&mult(&r, 0, "k"), 3).unwrap());
        assert!(normalize(&a).is_err());
    }

    #[test]
    fn pointwise_functor_ranks() {
        use crate::functors::FunctorTag;
        let r = Ring::plane(97);
        let gp = gamma(&koszul_xy(&r), 7).unwrap();
        let s3 = apply_pointwise_functor(&FunctorTag::sym(3), &gp);
        assert_eq!(s3.level(2).rank(), 56);
        assert_eq!(normalize(&s3).unwrap().ranks(), vec![1, 9, 37, 81, 97, 60, 15, 0]);
        let s2 = apply_pointwise_functor(&FunctorTag::sym(2), &gamma(&koszul_xy(&r), 5).unwrap());
        assert_eq!(normalize(&s2).unwrap().ranks(), vec![1, 5, 10, 9, 3, 0]);
        let gk = gamma(&mult(&r, 0, "k"), 4).unwrap();
        let l = apply_pointwise_functor(&FunctorTag::schur(), &gk);
        assert_eq!(l.identity_violation(), None);
        assert_eq!(normalize(&l).unwrap().ranks(), vec![0, 2, 4, 2, 0]);
        let s = apply_pointwise_functor(&FunctorTag::sym(3), &gk);
        assert_eq!(normalize(&s).unwrap().ranks(), vec![1, 3, 3, 1, 0]);
        let e1 = apply_pointwise_functor(&FunctorTag::ext(1), &gk);
        assert!(normalize(&e1).unwrap().same_matrices(&normalize(&gk).unwrap()));
    }

    #[test]
    fn derived_sym_cube_of_residue_field() {
        use crate::functors::FunctorTag;
        let r = Ring::plane(97);
        let gp = gamma(&koszul_xy(&r), 7).unwrap();
        let n = normalize(&apply_pointwise_functor(&FunctorTag::sym(3), &gp)).unwrap();
        let h = homology_graded(&n, 12).unwrap();
        assert_eq!(h.totals(0..=6), vec![1, 0, 1, 0, 1, 0, 0]);
    }
}
