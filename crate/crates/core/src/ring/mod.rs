//! Exact scalars, monomials and sparse multivariate polynomials.

mod monomial;
mod parse;
mod poly;
mod scalar;

pub use monomial::{monomial_compare, Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_poly;
pub use poly::{poly_arith, Poly, PolyOp, Ring, RingDescriptor, Term};
pub(crate) use poly::same_ring;
pub use scalar::{Field, Scalar};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn arb_poly(ring: Arc<Ring>) -> impl Strategy<Value = Poly> {
        prop::collection::vec((0u16..4, 0u16..4, -5i64..5), 0..5).prop_map(move |terms| {
            let raw = terms
                .into_iter()
                .map(|(a, b, c)| (Monomial::new(&[a, b]), ring.field().from_i64(c)))
                .collect();
            Poly::from_terms(&ring, raw)
        })
    }

    fn triple() -> impl Strategy<Value = (Poly, Poly, Poly)> {
        let r = Ring::plane(97);
        (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b), b.add(&a));
        }

        #[test]
        fn frobenius_in_characteristic_five(ta in prop::collection::vec((0u16..3, 0u16..3, 0i64..5), 0..4),
                                            tb in prop::collection::vec((0u16..3, 0u16..3, 0i64..5), 0..4)) {
            let r = Ring::new(Field::Prime(5), vec!["x".into(), "y".into()], MonomialOrder::Degrevlex).unwrap();
            let mk = |t: Vec<(u16, u16, i64)>| Poly::from_terms(&r, t.into_iter().map(|(a, b, c)| (Monomial::new(&[a, b]), r.field().from_i64(c))).collect());
            let (a, b) = (mk(ta), mk(tb));
            prop_assert_eq!(a.add(&b).pow(5), a.pow(5).add(&b.pow(5)));
        }

        #[test]
        fn orders_are_multiplicative(a in prop::array::uniform2(0u16..5), b in prop::array::uniform2(0u16..5), m in prop::array::uniform2(0u16..5)) {
            let (a, b, m) = (Monomial::new(&a), Monomial::new(&b), Monomial::new(&m));
            for order in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
                let before = order.compare(&a, &b);
                prop_assert_eq!(before, order.compare(&a.mul(&m), &b.mul(&m)));
                prop_assert_eq!(before.reverse(), order.compare(&b, &a));
                prop_assert_eq!(before == std::cmp::Ordering::Equal, a == b);
            }
        }

        #[test]
        fn degrevlex_refines_degree(a in prop::array::uniform3(0u16..5), b in prop::array::uniform3(0u16..5)) {
            let (a, b) = (Monomial::new(&a), Monomial::new(&b));
            if a.degree() > b.degree() {
                prop_assert_eq!(MonomialOrder::Degrevlex.compare(&a, &b), std::cmp::Ordering::Greater);
            }
        }
    }
}
