use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Weakly monotone surjection `[n] -> [k]`, stored as its preimage block sizes.
///
/// The derived order compares block sizes lexicographically, which is the same as
/// comparing the sorted sets of jump positions. Precomposition with a codegeneracy
/// shifts jump positions monotonically, so it preserves this order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Surjection {
    blocks: Vec<u8>,
}

impl Surjection {
    pub fn new(blocks: Vec<u8>) -> Result<Surjection> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::Simplicial(format!("invalid surjection blocks {blocks:?}")));
        }
        Ok(Surjection { blocks })
    }

    pub fn identity(n: usize) -> Surjection {
        Surjection { blocks: vec![1; n + 1] }
    }

    /// From the list of values `sigma(0), ..., sigma(n)`; must be monotone and onto `[k]`.
    pub fn from_values(values: &[usize]) -> Result<Surjection> {
        let mut blocks: Vec<u8> = Vec::new();
        let mut prev: Option<usize> = None;
        for &v in values {
            match prev {
                None if v == 0 => blocks.push(1),
                Some(p) if v == p => *blocks.last_mut().unwrap() += 1,
                Some(p) if v == p + 1 => blocks.push(1),
                _ => return Err(Error::Simplicial(format!("{values:?} is not a monotone surjection"))),
            }
            prev = Some(v);
        }
        Surjection::new(blocks)
    }

    /// Source dimension `n`.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|&b| b as usize).sum::<usize>() - 1
    }

    /// Target dimension `k`.
    pub fn k(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[u8] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|&b| b == 1)
    }

    pub fn values(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n() + 1);
        for (j, &b) in self.blocks.iter().enumerate() {
            out.extend(std::iter::repeat_n(j, b as usize));
        }
        out
    }

    /// All surjections `[n] -> [k]`, in increasing order. There are `C(n, k)` of them.
    pub fn all(n: usize, k: usize) -> Vec<Surjection> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut blocks = vec![0u8; k + 1];
        fill(&mut blocks, 0, n + 1, &mut out);
        out
    }
}

fn fill(blocks: &mut [u8], i: usize, remaining: usize, out: &mut Vec<Surjection>) {
    let slots = blocks.len() - i;
    if slots == 1 {
        blocks[i] = remaining as u8;
        out.push(Surjection { blocks: blocks.to_vec() });
        return;
    }
    for b in 1..=remaining - (slots - 1) {
        blocks[i] = b as u8;
        fill(blocks, i + 1, remaining - b, out);
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{:?}", self.values())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_are_binomial() {
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(Surjection::all(n, k).len(), binom(n, k));
            }
        }
    }

    #[test]
    fn values_round_trip() {
        for s in Surjection::all(5, 2) {
            assert_eq!(Surjection::from_values(&s.values()).unwrap(), s);
            assert_eq!(s.n(), 5);
            assert_eq!(s.k(), 2);
        }
        assert!(Surjection::from_values(&[0, 2]).is_err());
        assert!(Surjection::from_values(&[1]).is_err());
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = Surjection::all(6, 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(Surjection::all(3, 3)[0].is_identity());
    }
}
