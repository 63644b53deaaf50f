use super::basic::{ext_module, ext_product, subsets, transpose_columns};
use crate::linear::{normalize_poly_vec, BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Poly;

/// Standard tableaux `(i, j, k)` with `i < j`, `i <= k`, lexicographic.
fn tableaux(r: usize) -> Vec<[u32; 3]> {
    let r = r as u32;
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for k in i..r {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Dense lookup `(i, j, k) -> tableau position`.
struct TableauIndex {
    r: usize,
    pos: Vec<u32>,
}

impl TableauIndex {
    fn new(r: usize) -> TableauIndex {
        let mut pos = vec![u32::MAX; r * r * r];
        for (n, t) in tableaux(r).iter().enumerate() {
            pos[(t[0] as usize * r + t[1] as usize) * r + t[2] as usize] = n as u32;
        }
        TableauIndex { r, pos }
    }

    fn get(&self, t: [u32; 3]) -> u32 {
        self.pos[(t[0] as usize * self.r + t[1] as usize) * self.r + t[2] as usize]
    }

    /// `(a ∧ b) ⊗ c` with `a < b` as a combination of tableaux.
    fn straighten(&self, a: u32, b: u32, c: u32, p: &Poly, out: &mut PolyVec) {
        if a <= c {
            out.push((self.get([a, b, c]), p.clone()));
        } else {
            // c < a < b: (a∧b)⊗c = (c∧b)⊗a − (c∧a)⊗b
            out.push((self.get([c, b, a]), p.clone()));
            out.push((self.get([c, a, b]), p.neg()));
        }
    }
}

fn tableau_labels(v: &LabeledFreeModule, wrap: fn(Box<[BasisLabel; 3]>) -> BasisLabel) -> Vec<BasisLabel> {
    tableaux(v.rank())
        .iter()
        .map(|t| wrap(Box::new(t.map(|i| v.label(i as usize).clone()))))
        .collect()
}

pub(crate) fn schur_module(v: &LabeledFreeModule) -> LabeledFreeModule {
    LabeledFreeModule::from_sorted(v.ring(), tableau_labels(v, BasisLabel::SchurTableau))
}

pub(crate) fn coschur_module(v: &LabeledFreeModule) -> LabeledFreeModule {
    LabeledFreeModule::from_sorted(v.ring(), tableau_labels(v, BasisLabel::CoSchurTableau))
}

/// `Λ²f ⊗ f` on tableaux, straightened in the target.
fn schur_columns(cols: &[PolyVec], n_src: usize, n_tgt: usize, one: &Poly) -> Vec<PolyVec> {
    let idx = TableauIndex::new(n_tgt);
    tableaux(n_src)
        .iter()
        .map(|&[i, j, k]| {
            let wedge = ext_product(&[&cols[i as usize], &cols[j as usize]], one);
            let mut out = Vec::new();
            for (ab, p) in &wedge {
                for (c, q) in &cols[k as usize] {
                    idx.straighten(ab[0], ab[1], *c, &p.mul(q), &mut out);
                }
            }
            normalize_poly_vec(out)
        })
        .collect()
}

pub(crate) fn schur_map(f: &MapMatrix, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
    let cols = schur_columns(f.columns(), f.ncols(), f.nrows(), &f.ring().one());
    MapMatrix::new(source, target, cols).expect("L31 shapes")
}

/// Co-Schur functor as the dual of the Schur functor of the dual.
pub(crate) fn coschur_map(f: &MapMatrix, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
    let s = schur_columns(&f.transposed_columns(), f.nrows(), f.ncols(), &f.ring().one());
    MapMatrix::new(source, target, transpose_columns(&s, source.rank())).expect("coL31 shapes")
}

/// Quotient map `Λ²V ⊗ V -> L³₁V` killing the image of `Λ³V`.
pub fn straightening_map(v: &LabeledFreeModule) -> MapMatrix {
    let r = v.rank();
    let idx = TableauIndex::new(r);
    let one = v.ring().one();
    let mut cols = Vec::new();
    for ab in subsets(r, 2) {
        for c in 0..r as u32 {
            let mut out = Vec::new();
            idx.straighten(ab[0], ab[1], c, &one, &mut out);
            cols.push(normalize_poly_vec(out));
        }
    }
    let source = LabeledFreeModule::tensor(&[&ext_module(v, 2), v]);
    MapMatrix::new(&source, &schur_module(v), cols).expect("straightening shapes")
}

/// Natural map `coL³₁V -> L³₁V`, the composite of the inclusion into `Λ²V ⊗ V` and the
/// straightening quotient. Invertible when 3 is invertible in the base ring.
pub fn schur_comparison(v: &LabeledFreeModule) -> MapMatrix {
    let q = straightening_map(v);
    let qt = MapMatrix::new(&coschur_module(v), q.source(), q.transposed_columns()).expect("transpose shapes");
    q.after(&qt)
}
