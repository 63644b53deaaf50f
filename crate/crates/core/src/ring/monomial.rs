use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported number of ring variables.
pub const MAX_VARS: usize = 4;

/// Exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
        }
    }

    pub fn new(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] += other.exps[i];
        }
        m.degree += other.degree;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.nvars as usize {
            m.exps[i] -= self.exps[i];
        }
        m.degree -= self.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.degree = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending order for
    /// both supported monomial orders restricted to a single degree.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        let mut exps = vec![0u16; nvars];
        fill_degree(&mut exps, 0, d, &mut out);
        out
    }
}

fn fill_degree(exps: &mut [u16], i: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = remaining as u16;
        out.push(Monomial::new(exps));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[i] = e as u16;
        fill_degree(exps, i + 1, remaining - e, out);
    }
    exps[i] = 0;
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// Monomial orders. Variables are ordered `x_0 > x_1 > ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars, b.nvars);
        let n = a.nvars as usize;
        match self {
            MonomialOrder::Lex => a.exps[..n].cmp(&b.exps[..n]),
            MonomialOrder::Degrevlex => a.degree.cmp(&b.degree).then_with(|| {
                for i in (0..n).rev() {
                    if a.exps[i] != b.exps[i] {
                        // smaller exponent in the last differing variable wins
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Standalone comparison entry point.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Ordering {
    order.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::Degrevlex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(2, 3).len(), 4);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert!(Monomial::all_of_degree(0, 1).is_empty());
        let ms = Monomial::all_of_degree(2, 2);
        for w in ms.windows(2) {
            assert_eq!(MonomialOrder::Degrevlex.compare(&w[0], &w[1]), Ordering::Greater);
            assert_eq!(MonomialOrder::Lex.compare(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[1, 2]);
        let b = m(&[3, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[2, 0])));
        assert_eq!(m(&[1, 0]).lcm(&m(&[0, 1])), m(&[1, 1]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
    }
}
