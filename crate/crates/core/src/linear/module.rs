use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::label::BasisLabel;
use crate::error::{Error, Result};
use crate::ring::{same_ring, Monomial, Ring};

struct ModuleData {
    ring: Arc<Ring>,
    basis: Vec<BasisLabel>,
    degrees: Vec<i32>,
    index: OnceLock<HashMap<BasisLabel, u32>>,
}

/// Finite free module with a sorted list of distinct, internally graded basis labels.
/// Cheap to clone.
#[derive(Clone)]
pub struct LabeledFreeModule(Arc<ModuleData>);

impl LabeledFreeModule {
    /// Sorts the labels; rejects duplicates.
    pub fn new(ring: &Arc<Ring>, mut basis: Vec<BasisLabel>) -> Result<LabeledFreeModule> {
        basis.sort();
        if let Some(w) = basis.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Shape(format!("duplicate basis label {}", w[0])));
        }
        Ok(Self::from_sorted(ring, basis))
    }

    /// Labels must already be strictly increasing.
    pub fn from_sorted(ring: &Arc<Ring>, basis: Vec<BasisLabel>) -> LabeledFreeModule {
        debug_assert!(basis.windows(2).all(|w| w[0] < w[1]), "basis not strictly sorted");
        let degrees = basis.iter().map(|l| l.degree()).collect();
        LabeledFreeModule(Arc::new(ModuleData {
            ring: ring.clone(),
            basis,
            degrees,
            index: OnceLock::new(),
        }))
    }

    pub fn zero(ring: &Arc<Ring>) -> LabeledFreeModule {
        Self::from_sorted(ring, Vec::new())
    }

    /// Rank-`n` module on atoms `{prefix}0, {prefix}1, ...` of the given degree.
    pub fn standard(ring: &Arc<Ring>, prefix: &str, n: usize, degree: i32) -> LabeledFreeModule {
        let width = n.saturating_sub(1).to_string().len();
        let labels = (0..n)
            .map(|i| BasisLabel::atom(&format!("{prefix}{i:0width$}"), degree))
            .collect();
        Self::new(ring, labels).expect("distinct atoms")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.0.ring
    }

    pub fn rank(&self) -> usize {
        self.0.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.basis.is_empty()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.0.basis
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.0.basis[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.0.degrees[i]
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        if self.rank() < 16 {
            return self.0.basis.iter().position(|l| l == label);
        }
        let map = self.0.index.get_or_init(|| {
            self.0
                .basis
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i as u32))
                .collect()
        });
        map.get(label).map(|&i| i as usize)
    }

    pub fn ptr_eq(&self, other: &LabeledFreeModule) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Tensor product with `TensorWord` labels, lexicographic in the factors.
    pub fn tensor(factors: &[&LabeledFreeModule]) -> LabeledFreeModule {
        let ring = factors.first().expect("at least one factor").ring().clone();
        let mut words: Vec<Vec<BasisLabel>> = vec![Vec::new()];
        for f in factors {
            let mut next = Vec::with_capacity(words.len() * f.rank());
            for w in &words {
                for l in f.basis() {
                    let mut w2 = w.clone();
                    w2.push(l.clone());
                    next.push(w2);
                }
            }
            words = next;
        }
        Self::from_sorted(&ring, words.into_iter().map(BasisLabel::TensorWord).collect())
    }

    /// Direct sum with `Summand` labels.
    pub fn direct_sum(parts: &[&LabeledFreeModule]) -> LabeledFreeModule {
        let ring = parts.first().expect("at least one summand").ring().clone();
        let mut labels = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            labels.extend(p.basis().iter().map(|l| BasisLabel::summand(i as u32, l.clone())));
        }
        Self::from_sorted(&ring, labels)
    }

    pub fn dual(&self) -> LabeledFreeModule {
        Self::from_sorted(self.ring(), self.basis().iter().map(|l| l.dual()).collect())
    }

    /// Basis of the internal-degree-`t` part over the base field: pairs
    /// (label index, monomial), in label order then descending monomial order.
    pub fn slice_basis(&self, t: i32) -> Vec<(u32, Monomial)> {
        let mut cache = MonomialCache::new(self.ring());
        let mut out = Vec::new();
        for (i, &d) in self.degrees().iter().enumerate() {
            if d <= t {
                for m in cache.of_degree((t - d) as u32).0.iter() {
                    out.push((i as u32, *m));
                }
            }
        }
        out
    }

    /// Dimension of the internal-degree-`t` part.
    pub fn slice_dim(&self, t: i32) -> usize {
        let n = self.ring().nvars();
        self.degrees()
            .iter()
            .filter(|&&d| d <= t)
            .map(|&d| count_monomials(n, (t - d) as u32))
            .sum()
    }
}

pub(crate) fn count_monomials(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    // C(d + n - 1, n - 1)
    let (top, k) = (d as usize + nvars - 1, nvars - 1);
    (0..k).fold(1usize, |acc, i| acc * (top - i) / (i + 1))
}

/// Per-degree lists of monomials sorted descending in the ring order, with indices.
pub(crate) struct MonomialCache {
    ring: Arc<Ring>,
    by_degree: HashMap<u32, (Vec<Monomial>, HashMap<Monomial, u32>)>,
}

impl MonomialCache {
    pub(crate) fn new(ring: &Arc<Ring>) -> Self {
        MonomialCache {
            ring: ring.clone(),
            by_degree: HashMap::new(),
        }
    }

    pub(crate) fn of_degree(&mut self, d: u32) -> &(Vec<Monomial>, HashMap<Monomial, u32>) {
        let ring = self.ring.clone();
        self.by_degree.entry(d).or_insert_with(|| {
            let mut ms = Monomial::all_of_degree(ring.nvars(), d);
            ms.sort_by(|a, b| ring.cmp_monomials(b, a));
            let idx = ms.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
            (ms, idx)
        })
    }
}

impl PartialEq for LabeledFreeModule {
    fn eq(&self, other: &LabeledFreeModule) -> bool {
        self.ptr_eq(other) || (same_ring(self.ring(), other.ring()) && self.basis() == other.basis())
    }
}

impl Eq for LabeledFreeModule {}

impl fmt::Debug for LabeledFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} {:?}", self.ring(), self.rank(), self.basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_labels() {
        let r = Ring::plane(97);
        let a = BasisLabel::atom("a", 0);
        assert!(LabeledFreeModule::new(&r, vec![a.clone(), a]).is_err());
    }

    #[test]
    fn slice_dims_count_monomials() {
        let r = Ring::plane(97);
        let m = LabeledFreeModule::standard(&r, "e", 1, 0);
        assert_eq!(m.slice_dim(3), 4);
        assert_eq!(m.slice_basis(3).len(), 4);
        assert_eq!(m.slice_dim(-1), 0);
        let shifted = LabeledFreeModule::standard(&r, "e", 2, 2);
        assert_eq!(shifted.slice_dim(1), 0);
        assert_eq!(shifted.slice_dim(3), 4);
    }

    #[test]
    fn tensor_and_sum_ranks() {
        let r = Ring::plane(97);
        let a = LabeledFreeModule::standard(&r, "a", 2, 0);
        let b = LabeledFreeModule::standard(&r, "b", 3, 1);
        let t = LabeledFreeModule::tensor(&[&a, &b]);
        assert_eq!(t.rank(), 6);
        assert!(t.degrees().iter().all(|&d| d == 1));
        assert_eq!(LabeledFreeModule::direct_sum(&[&a, &b]).rank(), 5);
        assert_eq!(a.dual().dual(), a);
        assert_eq!(t.index_of(&t.label(4).clone()), Some(4));
    }
}
