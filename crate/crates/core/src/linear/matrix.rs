use std::fmt;
use std::sync::Arc;

use super::field::{FieldMatrix, SparseVec};
use super::module::{LabeledFreeModule, MonomialCache};
use crate::error::{Error, Result};
use crate::ring::{Poly, Ring, Scalar};

/// Sparse vector of polynomials, sorted by index, no zero entries.
pub type PolyVec = Vec<(u32, Poly)>;

/// Sort by index, merge duplicates, drop zeros.
pub fn normalize_poly_vec(mut v: Vec<(u32, Poly)>) -> PolyVec {
    v.sort_by_key(|t| t.0);
    let mut out: PolyVec = Vec::with_capacity(v.len());
    for (r, p) in v {
        match out.last_mut() {
            Some((lr, lp)) if *lr == r => *lp = lp.add(&p),
            _ => out.push((r, p)),
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
    }
    out
}

/// Homomorphism between labeled free modules, stored column-major.
#[derive(Clone, PartialEq, Eq)]
pub struct MapMatrix {
    source: LabeledFreeModule,
    target: LabeledFreeModule,
    cols: Vec<PolyVec>,
}

impl MapMatrix {
    /// Columns are normalized; indices are range checked.
    pub fn new(source: &LabeledFreeModule, target: &LabeledFreeModule, cols: Vec<Vec<(u32, Poly)>>) -> Result<MapMatrix> {
        if cols.len() != source.rank() {
            return Err(Error::Shape(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        let cols: Vec<PolyVec> = cols.into_iter().map(normalize_poly_vec).collect();
        for c in &cols {
            if let Some((r, _)) = c.iter().find(|(r, _)| *r as usize >= target.rank()) {
                return Err(Error::Shape(format!("row {r} out of range {}", target.rank())));
            }
        }
        Ok(MapMatrix {
            source: source.clone(),
            target: target.clone(),
            cols,
        })
    }

    /// Trusted constructor: columns already normalized and in range.
    pub(crate) fn from_normalized(source: &LabeledFreeModule, target: &LabeledFreeModule, cols: Vec<PolyVec>) -> MapMatrix {
        debug_assert_eq!(cols.len(), source.rank());
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)
            && c.iter().all(|(r, p)| (*r as usize) < target.rank() && !p.is_zero())));
        MapMatrix {
            source: source.clone(),
            target: target.clone(),
            cols,
        }
    }

    pub fn zero(source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
        MapMatrix::from_normalized(source, target, vec![Vec::new(); source.rank()])
    }

    pub fn identity(m: &LabeledFreeModule) -> MapMatrix {
        let one = m.ring().one();
        let cols = (0..m.rank()).map(|i| vec![(i as u32, one.clone())]).collect();
        MapMatrix::from_normalized(m, m, cols)
    }

    /// Rank-1 to rank-1 multiplication by `p`.
    pub fn scalar_map(source: &LabeledFreeModule, target: &LabeledFreeModule, p: Poly) -> MapMatrix {
        assert!(source.rank() == 1 && target.rank() == 1);
        let col = if p.is_zero() { Vec::new() } else { vec![(0, p)] };
        MapMatrix::from_normalized(source, target, vec![col])
    }

    pub fn source(&self) -> &LabeledFreeModule {
        &self.source
    }

    pub fn target(&self) -> &LabeledFreeModule {
        &self.target
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.source.ring()
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn column(&self, j: usize) -> &PolyVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[PolyVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<PolyVec> {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Poly {
        self.cols[c]
            .iter()
            .find(|(i, _)| *i as usize == r)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| self.ring().zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Same entries, ignoring labels.
    pub fn same_entries(&self, other: &MapMatrix) -> bool {
        self.nrows() == other.nrows() && self.cols == other.cols
    }

    /// Reattach the same entries to other modules of equal ranks.
    pub fn relabel(&self, source: &LabeledFreeModule, target: &LabeledFreeModule) -> Result<MapMatrix> {
        if source.rank() != self.ncols() || target.rank() != self.nrows() {
            return Err(Error::Shape("relabel with different ranks".into()));
        }
        Ok(MapMatrix::from_normalized(source, target, self.cols.clone()))
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &[(u32, Poly)]) -> PolyVec {
        let mut acc = Vec::new();
        for (j, x) in v {
            for (r, a) in &self.cols[*j as usize] {
                acc.push((*r, a.mul(x)));
            }
        }
        normalize_poly_vec(acc)
    }

    /// `g ∘ f`
    pub fn compose(g: &MapMatrix, f: &MapMatrix) -> Result<MapMatrix> {
        if f.target != g.source {
            return Err(Error::Shape(format!(
                "cannot compose: target of rank {} vs source of rank {}",
                f.target.rank(),
                g.source.rank()
            )));
        }
        let cols = f.cols.iter().map(|c| g.apply(c)).collect();
        Ok(MapMatrix::from_normalized(&f.source, &g.target, cols))
    }

    /// `self ∘ f`, panicking on shape mismatch.
    pub fn after(&self, f: &MapMatrix) -> MapMatrix {
        MapMatrix::compose(self, f).expect("composable maps")
    }

    pub fn add(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.combine(other, true)
    }

    fn combine(&self, other: &MapMatrix, negate: bool) -> Result<MapMatrix> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("adding maps with different shapes".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend(b.iter().map(|(r, p)| (*r, if negate { p.neg() } else { p.clone() })));
                normalize_poly_vec(v)
            })
            .collect();
        Ok(MapMatrix::from_normalized(&self.source, &self.target, cols))
    }

    pub fn scale(&self, c: &Scalar) -> MapMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, p)| (*r, p.scale(c))).filter(|t| !t.1.is_zero()).collect())
            .collect();
        MapMatrix::from_normalized(&self.source, &self.target, cols)
    }

    pub fn neg(&self) -> MapMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, p)| (*r, p.neg())).collect())
            .collect();
        MapMatrix::from_normalized(&self.source, &self.target, cols)
    }

    /// Kronecker product on `TensorWord` labels.
    pub fn tensor(f: &MapMatrix, g: &MapMatrix) -> MapMatrix {
        MapMatrix::tensor_many(&[f, g])
    }

    pub fn tensor_many(fs: &[&MapMatrix]) -> MapMatrix {
        let source = LabeledFreeModule::tensor(&fs.iter().map(|f| f.source()).collect::<Vec<_>>());
        let target = LabeledFreeModule::tensor(&fs.iter().map(|f| f.target()).collect::<Vec<_>>());
        let cols = tensor_columns(fs);
        MapMatrix::from_normalized(&source, &target, cols)
    }

    /// Kronecker product onto given modules whose ranks match the factors.
    pub(crate) fn tensor_many_onto(fs: &[&MapMatrix], source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
        debug_assert_eq!(source.rank(), fs.iter().map(|f| f.ncols()).product::<usize>());
        debug_assert_eq!(target.rank(), fs.iter().map(|f| f.nrows()).product::<usize>());
        MapMatrix::from_normalized(source, target, tensor_columns(fs))
    }

    /// Transpose between dual modules.
    pub fn dual(&self) -> MapMatrix {
        MapMatrix::from_normalized(&self.target.dual(), &self.source.dual(), self.transposed_columns())
    }

    /// Columns of the transpose (rows of `self`).
    pub fn transposed_columns(&self) -> Vec<PolyVec> {
        let mut out = vec![Vec::new(); self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for (r, p) in c {
                out[*r as usize].push((j as u32, p.clone()));
            }
        }
        out
    }

    /// Block diagonal map on `Summand` labels.
    pub fn direct_sum(fs: &[&MapMatrix]) -> MapMatrix {
        let source = LabeledFreeModule::direct_sum(&fs.iter().map(|f| f.source()).collect::<Vec<_>>());
        let target = LabeledFreeModule::direct_sum(&fs.iter().map(|f| f.target()).collect::<Vec<_>>());
        let mut cols = Vec::with_capacity(source.rank());
        let mut offset = 0u32;
        for f in fs {
            for c in &f.cols {
                cols.push(c.iter().map(|(r, p)| (r + offset, p.clone())).collect());
            }
            offset += f.nrows() as u32;
        }
        MapMatrix::from_normalized(&source, &target, cols)
    }

    /// Keep the given columns, in the given order, with a new source module.
    pub fn select_columns(&self, source: &LabeledFreeModule, cols: &[usize]) -> MapMatrix {
        let c = cols.iter().map(|&j| self.cols[j].clone()).collect();
        MapMatrix::from_normalized(source, &self.target, c)
    }

    /// Restrict rows through `row_map` (old row -> new row, or `None` to drop).
    pub fn select_rows(&self, target: &LabeledFreeModule, row_map: &[Option<u32>]) -> MapMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut v: PolyVec = c
                    .iter()
                    .filter_map(|(r, p)| row_map[*r as usize].map(|nr| (nr, p.clone())))
                    .collect();
                v.sort_by_key(|t| t.0);
                v
            })
            .collect();
        MapMatrix::from_normalized(&self.source, target, cols)
    }

    /// `deg(target r) + deg(entry) = deg(source c)` for every nonzero entry.
    pub fn is_homogeneous(&self) -> bool {
        self.first_inhomogeneity().is_none()
    }

    fn first_inhomogeneity(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, p) in col {
                let want = self.source.degree(c) - self.target.degree(*r as usize);
                match p.homogeneous_degree() {
                    Some(Some(d)) if d as i32 == want => {}
                    _ => return Some((*r as usize, c)),
                }
            }
        }
        None
    }

    /// The field matrix of the internal-degree-`t` part.
    pub fn graded_slice(&self, t: i32) -> Result<FieldMatrix> {
        if let Some((r, c)) = self.first_inhomogeneity() {
            return Err(Error::NotHomogeneous(format!(
                "entry ({r},{c}) = {} between labels of degree {} and {}",
                self.entry(r, c),
                self.target.degree(r),
                self.source.degree(c)
            )));
        }
        Ok(self.slice_unchecked(t, &mut MonomialCache::new(self.ring())))
    }

    pub(crate) fn slice_unchecked(&self, t: i32, cache: &mut MonomialCache) -> FieldMatrix {
        let field = self.ring().field();
        let mut row_offset = Vec::with_capacity(self.nrows() + 1);
        let mut total = 0usize;
        for &d in self.target.degrees() {
            row_offset.push(total);
            if d <= t {
                total += cache.of_degree((t - d) as u32).0.len();
            }
        }
        let nrows = total;
        let mut cols: Vec<SparseVec> = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            let dc = self.source.degree(c);
            if dc > t {
                continue;
            }
            let monos = cache.of_degree((t - dc) as u32).0.clone();
            for m in monos {
                let mut v: Vec<(u32, Scalar)> = Vec::new();
                for (r, p) in col {
                    let dr = self.target.degree(*r as usize);
                    for (mu, a) in p.terms() {
                        let prod = m.mul(mu);
                        let idx = cache.of_degree((t - dr) as u32).1[&prod];
                        v.push(((row_offset[*r as usize] as u32) + idx, a.clone()));
                    }
                }
                cols.push(super::field::normalize_sparse(v));
            }
        }
        FieldMatrix::from_columns(field, nrows, cols)
    }
}

fn tensor_columns(fs: &[&MapMatrix]) -> Vec<PolyVec> {
    let ring = fs[0].ring().clone();
    let target_ranks: Vec<u32> = fs.iter().map(|f| f.nrows() as u32).collect();
    let mut cols: Vec<PolyVec> = vec![vec![(0, ring.one())]];
    for (k, f) in fs.iter().enumerate() {
        let mut next = Vec::with_capacity(cols.len() * f.ncols());
        for acc in &cols {
            for fc in &f.cols {
                let mut v = Vec::with_capacity(acc.len() * fc.len());
                for (ra, pa) in acc {
                    for (rb, pb) in fc {
                        v.push((ra * target_ranks[k] + rb, pa.mul(pb)));
                    }
                }
                next.push(v);
            }
        }
        cols = next;
    }
    // rows come out sorted because both factors are sorted and indices are lexicographic
    cols
}

impl fmt::Debug for MapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MapMatrix {}x{}", self.nrows(), self.ncols())?;
        for r in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols()).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn rank1(r: &Arc<Ring>, name: &str, deg: i32) -> LabeledFreeModule {
        LabeledFreeModule::standard(r, name, 1, deg)
    }

    #[test]
    fn composing_multiplications() {
        let r = Ring::plane(97);
        let (a, b, c) = (rank1(&r, "a", 2), rank1(&r, "b", 1), rank1(&r, "c", 0));
        let fy = MapMatrix::scalar_map(&a, &b, r.var(1));
        let gx = MapMatrix::scalar_map(&b, &c, r.var(0));
        let h = MapMatrix::compose(&gx, &fy).unwrap();
        assert_eq!(h.entry(0, 0), r.var(0).mul(&r.var(1)));
        assert_eq!(MapMatrix::compose(&MapMatrix::identity(&b), &fy).unwrap(), fy);
        assert!(MapMatrix::compose(&fy, &gx).is_err());
    }

    #[test]
    fn tensor_of_multiplications() {
        let r = Ring::plane(97);
        let (a, b) = (rank1(&r, "a", 1), rank1(&r, "b", 0));
        let fx = MapMatrix::scalar_map(&a, &b, r.var(0));
        let fy = MapMatrix::scalar_map(&a, &b, r.var(1));
        let t = MapMatrix::tensor(&fx, &fy);
        assert_eq!(t.entry(0, 0), r.var(0).mul(&r.var(1)));
        let id = MapMatrix::tensor(&MapMatrix::identity(&a), &MapMatrix::identity(&b));
        assert_eq!(id, MapMatrix::identity(id.source()));
    }

    #[test]
    fn dual_transposes() {
        let r = Ring::plane(97);
        let src = LabeledFreeModule::standard(&r, "p", 2, 1);
        let tgt = rank1(&r, "q", 0);
        let f = MapMatrix::new(&src, &tgt, vec![vec![(0, r.var(0))], vec![(0, r.var(1))]]).unwrap();
        let d = f.dual();
        assert_eq!((d.nrows(), d.ncols()), (2, 1));
        assert_eq!(d.entry(1, 0), r.var(1));
        assert_eq!(d.dual(), f);
        assert!(d.is_homogeneous());
    }

    #[test]
    fn slices() {
        let r = Ring::plane(97);
        let (a, b) = (rank1(&r, "a", 1), rank1(&r, "b", 0));
        let fx = MapMatrix::scalar_map(&a, &b, r.var(0));
        let s = fx.graded_slice(1).unwrap();
        assert_eq!((s.nrows(), s.ncols()), (2, 1));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.column(0), &vec![(0, r.field().one())]);
        let s0 = fx.graded_slice(0).unwrap();
        assert_eq!(s0.ncols(), 0);
        let bad = MapMatrix::scalar_map(&a, &b, r.var(0).add(&r.one()));
        assert!(matches!(bad.graded_slice(1), Err(Error::NotHomogeneous(_))));
    }
}
