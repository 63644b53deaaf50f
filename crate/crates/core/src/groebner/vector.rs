use std::cmp::Ordering;
use std::sync::Arc;

use crate::linear::{normalize_poly_vec, PolyVec};
use crate::ring::{Monomial, Poly, Ring, Scalar};

/// One term `coef * mono * e_pos` of a module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub pos: u32,
    pub mono: Monomial,
    pub coef: Scalar,
}

/// Module element as terms sorted descending in the position-over-term order.
pub(crate) type MVec = Vec<MTerm>;

/// Position-over-term: smaller position is larger, then the ring order.
pub(crate) fn cmp_pot(ring: &Ring, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.cmp_monomials(a.1, b.1))
}

pub(crate) fn from_poly_vec(ring: &Ring, v: &[(u32, Poly)]) -> MVec {
    let mut out: MVec = v
        .iter()
        .flat_map(|(pos, p)| {
            p.terms().iter().map(move |(m, c)| MTerm {
                pos: *pos,
                mono: *m,
                coef: c.clone(),
            })
        })
        .collect();
    out.sort_by(|a, b| cmp_pot(ring, (b.pos, &b.mono), (a.pos, &a.mono)));
    out
}

pub(crate) fn to_poly_vec(ring: &Arc<Ring>, v: &[MTerm]) -> PolyVec {
    let mut out: PolyVec = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let pos = v[i].pos;
        let mut terms = Vec::new();
        while i < v.len() && v[i].pos == pos {
            terms.push((v[i].mono, v[i].coef.clone()));
            i += 1;
        }
        out.push((pos, Poly::from_terms(ring, terms)));
    }
    out.sort_by_key(|t| t.0);
    out
}

/// `a - c * m * b`, both sorted.
pub(crate) fn sub_mul(ring: &Ring, a: &[MTerm], c: &Scalar, m: &Monomial, b: &[MTerm]) -> MVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &MTerm| MTerm {
        pos: t.pos,
        mono: t.mono.mul(m),
        coef: -&(&t.coef * c),
    };
    while i < a.len() && j < b.len() {
        let bm = b[j].mono.mul(m);
        match cmp_pot(ring, (a[i].pos, &a[i].mono), (b[j].pos, &bm)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let coef = &a[i].coef - &(&b[j].coef * c);
                if !coef.is_zero() {
                    out.push(MTerm {
                        pos: a[i].pos,
                        mono: a[i].mono,
                        coef,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(scaled));
    out
}

pub(crate) fn scale(v: &mut [MTerm], c: &Scalar) {
    for t in v {
        t.coef = &t.coef * c;
    }
}

/// `a - c * m * b` on polynomial vectors (used for cofactors).
pub(crate) fn poly_vec_sub_mul(a: &[(u32, Poly)], c: &Scalar, m: &Monomial, b: &[(u32, Poly)]) -> PolyVec {
    let mut v: Vec<(u32, Poly)> = a.to_vec();
    let neg = -c;
    v.extend(b.iter().map(|(i, p)| (*i, p.mul_term(m, &neg))));
    normalize_poly_vec(v)
}

pub(crate) fn poly_vec_scale(a: &[(u32, Poly)], c: &Scalar) -> PolyVec {
    a.iter().map(|(i, p)| (*i, p.scale(c))).filter(|t| !t.1.is_zero()).collect()
}

/// Quotients `(index, m, c)` collected into a polynomial vector.
pub(crate) fn quotients_to_poly_vec(ring: &Arc<Ring>, q: &[(u32, Monomial, Scalar)]) -> PolyVec {
    normalize_poly_vec(
        q.iter()
            .map(|(i, m, c)| (*i, Poly::monomial(ring, *m, c.clone())))
            .collect(),
    )
}

/// `Σ c_i v_i` for polynomial coefficients over polynomial vectors.
pub(crate) fn combine(coeffs: &[(u32, Poly)], vecs: &[PolyVec]) -> PolyVec {
    let mut acc = Vec::new();
    for (i, c) in coeffs {
        for (r, p) in &vecs[*i as usize] {
            acc.push((*r, p.mul(c)));
        }
    }
    normalize_poly_vec(acc)
}
