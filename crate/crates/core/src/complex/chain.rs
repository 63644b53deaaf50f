use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linear::{normalize_poly_vec, BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Ring;

/// Bounded chain complex `C_lo <- ... <- C_hi` with degree -1 differentials.
#[derive(Clone)]
pub struct ChainComplex {
    ring: Arc<Ring>,
    lo: i32,
    modules: Vec<LabeledFreeModule>,
    /// `diffs[i]` is `d_{lo+1+i} : C_{lo+1+i} -> C_{lo+i}`.
    diffs: Vec<MapMatrix>,
}

impl ChainComplex {
    /// `modules[i]` sits in degree `lo + i`; `diffs[i]` is the differential out of degree `lo + 1 + i`.
    /// Shapes and `d∘d = 0` are checked.
    pub fn new(ring: &Arc<Ring>, lo: i32, modules: Vec<LabeledFreeModule>, diffs: Vec<MapMatrix>) -> Result<ChainComplex> {
        let c = ChainComplex::unchecked(ring, lo, modules, diffs)?;
        if let Some(n) = c.first_nonzero_square() {
            return Err(Error::BrokenComplex(format!("d_{} ∘ d_{} is nonzero", n - 1, n)));
        }
        Ok(c)
    }

    pub(crate) fn unchecked(ring: &Arc<Ring>, lo: i32, modules: Vec<LabeledFreeModule>, diffs: Vec<MapMatrix>) -> Result<ChainComplex> {
        if diffs.len() + 1 != modules.len().max(1) {
            return Err(Error::Shape(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source() != &modules[i + 1] || d.target() != &modules[i] {
                return Err(Error::Shape(format!("differential out of degree {} has the wrong shape", lo + 1 + i as i32)));
            }
        }
        Ok(ChainComplex {
            ring: ring.clone(),
            lo,
            modules,
            diffs,
        })
    }

    /// One module in degree `n`.
    pub fn single(module: &LabeledFreeModule, n: i32) -> ChainComplex {
        ChainComplex::unchecked(module.ring(), n, vec![module.clone()], Vec::new()).expect("one module")
    }

    /// `source --f--> target` with the source in degree `n`.
    pub fn two_term(f: &MapMatrix, n: i32) -> ChainComplex {
        ChainComplex::unchecked(f.ring(), n - 1, vec![f.target().clone(), f.source().clone()], vec![f.clone()])
            .expect("two terms")
    }

    /// The ring in degree 0.
    pub fn unit(ring: &Arc<Ring>) -> ChainComplex {
        ChainComplex::single(&LabeledFreeModule::standard(ring, "u", 1, 0), 0)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn support(&self) -> RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn module(&self, n: i32) -> LabeledFreeModule {
        if self.support().contains(&n) {
            self.modules[(n - self.lo) as usize].clone()
        } else {
            LabeledFreeModule::zero(&self.ring)
        }
    }

    pub fn rank(&self, n: i32) -> usize {
        if self.support().contains(&n) {
            self.modules[(n - self.lo) as usize].rank()
        } else {
            0
        }
    }

    /// Ranks over the support.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `d_n : C_n -> C_{n-1}`, zero outside the stored range.
    pub fn differential(&self, n: i32) -> MapMatrix {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            MapMatrix::zero(&self.module(n), &self.module(n - 1))
        }
    }

    pub(crate) fn differential_ref(&self, n: i32) -> Option<&MapMatrix> {
        if n > self.lo && n <= self.hi() {
            Some(&self.diffs[(n - self.lo - 1) as usize])
        } else {
            None
        }
    }

    fn first_nonzero_square(&self) -> Option<i32> {
        (self.lo + 2..=self.hi()).find(|&n| {
            let dd = MapMatrix::compose(&self.differential(n - 1), &self.differential(n)).expect("shapes");
            !dd.is_zero()
        })
    }

    pub fn is_d_squared_zero(&self) -> bool {
        self.first_nonzero_square().is_none()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.diffs.iter().all(|d| d.is_homogeneous())
    }

    /// Differentials with the same entries and all modules of the same rank.
    pub fn same_matrices(&self, other: &ChainComplex) -> bool {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        (lo..=hi).all(|n| self.rank(n) == other.rank(n))
            && (lo + 1..=hi).all(|n| self.differential(n).same_entries(&other.differential(n)))
    }

    /// Drop zero modules at both ends (the zero complex keeps one zero module).
    pub fn trimmed(&self) -> ChainComplex {
        let nz: Vec<i32> = self.support().filter(|&n| self.rank(n) > 0).collect();
        match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => self.restricted(a, b),
            _ => ChainComplex::single(&LabeledFreeModule::zero(&self.ring), 0),
        }
    }

    /// Degrees `a..=b` only (brutal truncation).
    pub fn restricted(&self, a: i32, b: i32) -> ChainComplex {
        let modules = (a..=b).map(|n| self.module(n)).collect();
        let diffs = (a + 1..=b).map(|n| self.differential(n)).collect();
        ChainComplex::unchecked(&self.ring, a, modules, diffs).expect("restriction")
    }

    /// Euler characteristic of the ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.support()
            .map(|n| if n % 2 == 0 { self.rank(n) as i64 } else { -(self.rank(n) as i64) })
            .sum()
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainComplex[{}..={}] ranks {:?}", self.lo, self.hi(), self.ranks())
    }
}

/// `shift(C, s)_n = C_{n+s}` with differentials multiplied by `(-1)^s`.
pub fn shift(c: &ChainComplex, s: i32) -> ChainComplex {
    let diffs = if s.rem_euclid(2) == 1 {
        c.diffs.iter().map(|d| d.neg()).collect()
    } else {
        c.diffs.clone()
    };
    ChainComplex::unchecked(&c.ring, c.lo - s, c.modules.clone(), diffs).expect("same shapes")
}

/// `Tot(C ⊗ D)` with `d(c ⊗ d) = dc ⊗ d + (-1)^p c ⊗ dd` for `c` in degree `p`.
pub fn total_complex(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    total_complex_many(&[c, d])
}

/// Iterated total complex; the `i`-th differential carries the sign `(-1)^(p_1 + ... + p_{i-1})`.
pub fn total_complex_many(cs: &[&ChainComplex]) -> ChainComplex {
    let ring = cs[0].ring().clone();
    let lo: i32 = cs.iter().map(|c| c.lo()).sum();
    let hi: i32 = cs.iter().map(|c| c.hi()).sum();
    let blocks: Vec<Vec<Vec<i32>>> = (lo..=hi).map(|n| multidegrees(cs, n)).collect();
    let mut modules = Vec::new();
    for b in &blocks {
        let parts: Vec<LabeledFreeModule> = b
            .iter()
            .map(|p| LabeledFreeModule::tensor(&p.iter().zip(cs).map(|(&pi, c)| c.modules[(pi - c.lo) as usize].clone()).collect::<Vec<_>>().iter().collect::<Vec<_>>()))
            .collect();
        modules.push(summands(&ring, &parts));
    }
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (src_blocks, tgt_blocks) = (&blocks[(n - lo) as usize], &blocks[(n - lo - 1) as usize]);
        let src = &modules[(n - lo) as usize];
        let tgt = &modules[(n - lo - 1) as usize];
        let tgt_offsets = offsets(tgt_blocks, cs);
        let mut cols: Vec<PolyVec> = Vec::with_capacity(src.rank());
        for p in src_blocks {
            let block_rank: usize = p.iter().zip(cs).map(|(&pi, c)| c.rank(pi)).product();
            let mut block_cols: Vec<Vec<(u32, crate::ring::Poly)>> = vec![Vec::new(); block_rank];
            let mut sign_exp = 0;
            for i in 0..cs.len() {
                let mut q = p.clone();
                q[i] -= 1;
                if let Some(bi) = tgt_blocks.iter().position(|t| *t == q) {
                    let maps: Vec<MapMatrix> = (0..cs.len())
                        .map(|j| {
                            if j == i {
                                cs[j].differential(p[j])
                            } else {
                                MapMatrix::identity(&cs[j].module(p[j]))
                            }
                        })
                        .collect();
                    let t = MapMatrix::tensor_many(&maps.iter().collect::<Vec<_>>());
                    let t = if sign_exp % 2 == 1 { t.neg() } else { t };
                    let off = tgt_offsets[bi] as u32;
                    for (col, tc) in block_cols.iter_mut().zip(t.columns()) {
                        col.extend(tc.iter().map(|(r, x)| (r + off, x.clone())));
                    }
                }
                sign_exp += p[i];
            }
            cols.extend(block_cols.into_iter().map(normalize_poly_vec));
        }
        diffs.push(MapMatrix::new(src, tgt, cols).expect("valid total differential"));
    }
    ChainComplex::unchecked(&ring, lo, modules, diffs).expect("total complex shapes")
}

/// Multidegrees `(p_1, ..., p_k)` in the supports summing to `n`, lexicographic.
fn multidegrees(cs: &[&ChainComplex], n: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(cs.len());
    fn rec(cs: &[&ChainComplex], i: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if i == cs.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in cs[i].support() {
            cur.push(p);
            rec(cs, i + 1, left - p, cur, out);
            cur.pop();
        }
    }
    rec(cs, 0, n, &mut cur, &mut out);
    out
}

fn offsets(blocks: &[Vec<i32>], cs: &[&ChainComplex]) -> Vec<usize> {
    let mut acc = 0;
    blocks
        .iter()
        .map(|p| {
            let o = acc;
            acc += p.iter().zip(cs).map(|(&pi, c)| c.rank(pi)).product::<usize>();
            o
        })
        .collect()
}

/// Direct sum keeping block order, with `Summand` labels.
fn summands(ring: &Arc<Ring>, parts: &[LabeledFreeModule]) -> LabeledFreeModule {
    if parts.is_empty() {
        return LabeledFreeModule::zero(ring);
    }
    let labels: Vec<BasisLabel> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.basis().iter().map(move |l| BasisLabel::summand(i as u32, l.clone())))
        .collect();
    LabeledFreeModule::from_sorted(ring, labels)
}

/// Degreewise maps `C_n -> D_n` commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    maps: Vec<(i32, MapMatrix)>,
}

impl ChainMap {
    /// Missing degrees are zero maps. Commutation is checked.
    pub fn new(source: &ChainComplex, target: &ChainComplex, maps: Vec<(i32, MapMatrix)>) -> Result<ChainMap> {
        for (n, m) in &maps {
            if m.source() != &source.module(*n) || m.target() != &target.module(*n) {
                return Err(Error::Shape(format!("chain map component in degree {n} has the wrong shape")));
            }
        }
        let cm = ChainMap {
            source: source.clone(),
            target: target.clone(),
            maps,
        };
        if let Some(n) = cm.first_noncommuting_degree() {
            return Err(Error::BrokenComplex(format!("chain map does not commute with d in degree {n}")));
        }
        Ok(cm)
    }

    pub fn component(&self, n: i32) -> MapMatrix {
        self.maps
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| MapMatrix::zero(&self.source.module(n), &self.target.module(n)))
    }

    fn first_noncommuting_degree(&self) -> Option<i32> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        (lo..=hi + 1).find(|&n| {
            let a = self.target.differential(n).after(&self.component(n));
            let b = self.component(n - 1).after(&self.source.differential(n));
            !a.same_entries(&b)
        })
    }

    pub fn compose(g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        let lo = f.source.lo();
        let hi = f.source.hi();
        let maps = (lo..=hi)
            .map(|n| MapMatrix::compose(&g.component(n), &f.component(n)).map(|m| (n, m)))
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(&f.source, &g.target, maps)
    }

    /// Every component is an identity matrix (ignoring labels).
    pub fn is_identity(&self) -> bool {
        self.source.support().all(|n| {
            let m = self.component(n);
            m.nrows() == m.ncols() && m.same_entries(&MapMatrix::identity(m.source()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn mult(ring: &Arc<Ring>, var: usize, name: &str) -> ChainComplex {
        let src = LabeledFreeModule::standard(ring, &format!("{name}1"), 1, 1);
        let tgt = LabeledFreeModule::standard(ring, &format!("{name}0"), 1, 0);
        ChainComplex::two_term(&MapMatrix::scalar_map(&src, &tgt, ring.var(var)), 1)
    }

    #[test]
    fn koszul_total_complex() {
        let r = Ring::plane(97);
        let (k, l) = (mult(&r, 0, "k"), mult(&r, 1, "l"));
        let t = total_complex(&k, &l);
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert!(t.is_d_squared_zero());
        assert!(t.is_homogeneous());
    }

    #[test]
    fn unit_is_neutral() {
        let r = Ring::plane(97);
        let k = mult(&r, 0, "k");
        let t = total_complex(&k, &ChainComplex::unit(&r));
        assert!(t.same_matrices(&k));
    }

    #[test]
    fn shifts_compose() {
        let r = Ring::plane(97);
        let k = mult(&r, 0, "k");
        let s = shift(&k, -2);
        assert_eq!(s.support(), 2..=3);
        assert_eq!(s.differential(3), k.differential(1));
        let back = shift(&shift(&k, 2), -2);
        assert!(back.same_matrices(&k));
        assert_eq!(shift(&k, 1).differential(0), k.differential(1).neg());
    }

    #[test]
    fn triple_total_complex() {
        let r = Ring::plane(97);
        let k = mult(&r, 0, "k");
        let l = mult(&r, 1, "l");
        let p = total_complex(&k, &l);
        let t = total_complex_many(&[&p, &p, &p]);
        assert_eq!(t.ranks(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert!(t.is_d_squared_zero());
    }

    #[test]
    fn rejects_nonzero_square() {
        let r = Ring::plane(97);
        let a = LabeledFreeModule::standard(&r, "a", 1, 0);
        let f = MapMatrix::identity(&a);
        assert!(ChainComplex::new(&r, 0, vec![a.clone(), a.clone(), a.clone()], vec![f.clone(), f]).is_err());
    }
}
