//! Sparse linear algebra over the coefficient field.
//!
//! Public types hold [`Scalar`] entries; elimination converts to a native
//! representation (`u32` residues or big rationals) internally.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{Field, Scalar};

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(u32, Scalar)>;

trait Arith: Clone {
    type E: Clone;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn lower(&self, e: &Self::E) -> Scalar;
    fn is_zero(&self, e: &Self::E) -> bool;
    fn one(&self) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// `a - c * b`
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
}

#[derive(Clone)]
struct PrimeArith {
    p: u64,
}

impl Arith for PrimeArith {
    type E = u32;
    fn lift(&self, s: &Scalar) -> u32 {
        s.residue().expect("prime field scalar")
    }
    fn lower(&self, e: &u32) -> Scalar {
        Scalar::Mod {
            value: *e,
            modulus: self.p as u32,
        }
    }
    fn is_zero(&self, e: &u32) -> bool {
        *e == 0
    }
    fn one(&self) -> u32 {
        1
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        ((self.p - *a as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        let mut base = *a as u64;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc as u32
    }
    fn sub_mul(&self, a: &u32, c: &u32, b: &u32) -> u32 {
        let cb = (*c as u64 * *b as u64) % self.p;
        ((*a as u64 + self.p - cb) % self.p) as u32
    }
}

#[derive(Clone)]
struct RatArith;

impl Arith for RatArith {
    type E = BigRational;
    fn lift(&self, s: &Scalar) -> BigRational {
        s.as_rational().expect("rational scalar").clone()
    }
    fn lower(&self, e: &BigRational) -> Scalar {
        Scalar::Rational(Box::new(e.clone()))
    }
    fn is_zero(&self, e: &BigRational) -> bool {
        e.is_zero()
    }
    fn one(&self) -> BigRational {
        BigRational::from_integer(BigInt::one())
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
}

type Sv<E> = Vec<(u32, E)>;

/// `v - c * w` for sorted sparse vectors.
fn axpy<A: Arith>(ar: &A, v: &Sv<A::E>, c: &A::E, w: &Sv<A::E>) -> Sv<A::E> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() && j < w.len() {
        let (ri, rj) = (v[i].0, w[j].0);
        if ri < rj {
            out.push(v[i].clone());
            i += 1;
        } else if rj < ri {
            out.push((rj, ar.neg(&ar.mul(c, &w[j].1))));
            j += 1;
        } else {
            let x = ar.sub_mul(&v[i].1, c, &w[j].1);
            if !ar.is_zero(&x) {
                out.push((ri, x));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(v[i..].iter().cloned());
    out.extend(w[j..].iter().map(|(r, x)| (*r, ar.neg(&ar.mul(c, x)))));
    out
}

fn scale<A: Arith>(ar: &A, v: &Sv<A::E>, c: &A::E) -> Sv<A::E> {
    v.iter().map(|(r, x)| (*r, ar.mul(x, c))).collect()
}

/// Echelon form with leading-index pivots: each stored vector is monic at its
/// smallest index, and no two share that index.
#[derive(Clone)]
struct Ech<A: Arith> {
    ar: A,
    pivot_of: Vec<u32>,
    vecs: Vec<Sv<A::E>>,
    combos: Option<Vec<Sv<A::E>>>,
    inserted: u32,
}

const NO_PIVOT: u32 = u32::MAX;

impl<A: Arith> Ech<A> {
    fn new(ar: A, track: bool) -> Self {
        Ech {
            ar,
            pivot_of: Vec::new(),
            vecs: Vec::new(),
            combos: track.then(Vec::new),
            inserted: 0,
        }
    }

    fn pivot(&self, r: u32) -> Option<usize> {
        match self.pivot_of.get(r as usize) {
            Some(&p) if p != NO_PIVOT => Some(p as usize),
            _ => None,
        }
    }

    /// Reduce until zero or until the leading index is not a pivot.
    fn reduce(&self, mut v: Sv<A::E>, mut combo: Option<Sv<A::E>>) -> (Sv<A::E>, Option<Sv<A::E>>) {
        while let Some((r, c)) = v.first().cloned() {
            let Some(p) = self.pivot(r) else { break };
            v = axpy(&self.ar, &v, &c, &self.vecs[p]);
            if let (Some(cb), Some(all)) = (combo.as_mut(), self.combos.as_ref()) {
                *cb = axpy(&self.ar, cb, &c, &all[p]);
            }
        }
        (v, combo)
    }

    /// Insert a vector. Returns the kernel relation (as a combination of inserted
    /// vectors) when it is dependent, with tracking enabled.
    fn insert(&mut self, v: Sv<A::E>) -> Result<(), Option<Sv<A::E>>> {
        let id = self.inserted;
        self.inserted += 1;
        let combo = self.combos.as_ref().map(|_| vec![(id, self.ar.one())]);
        let (v, combo) = self.reduce(v, combo);
        let Some((r, lead)) = v.first().cloned() else {
            return Err(combo);
        };
        let inv = self.ar.inv(&lead);
        let idx = self.vecs.len() as u32;
        if self.pivot_of.len() <= r as usize {
            self.pivot_of.resize(r as usize + 1, NO_PIVOT);
        }
        self.pivot_of[r as usize] = idx;
        self.vecs.push(scale(&self.ar, &v, &inv));
        if let (Some(all), Some(cb)) = (self.combos.as_mut(), combo) {
            all.push(scale(&self.ar, &cb, &inv));
        }
        Ok(())
    }

    fn contains(&self, v: Sv<A::E>) -> bool {
        self.reduce(v, None).0.is_empty()
    }

    /// Coefficients over inserted vectors expressing `v`, if it lies in the span.
    fn express(&self, v: Sv<A::E>) -> Option<Sv<A::E>> {
        let (rest, combo) = self.reduce(v, Some(Vec::new()));
        if rest.is_empty() {
            combo.map(|c| c.iter().map(|(i, x)| (*i, self.ar.neg(x))).collect())
        } else {
            None
        }
    }
}

#[derive(Clone)]
enum EchKind {
    Prime(Ech<PrimeArith>),
    Rational(Ech<RatArith>),
}

/// Incrementally built column space over a field.
#[derive(Clone)]
pub struct Echelon {
    kind: EchKind,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon::build(field, false)
    }

    /// Variant that records how each stored vector arose from inserted ones,
    /// enabling [`Echelon::express`] and kernel relations.
    pub fn tracking(field: Field) -> Echelon {
        Echelon::build(field, true)
    }

    fn build(field: Field, track: bool) -> Echelon {
        let kind = match field {
            Field::Prime(p) => EchKind::Prime(Ech::new(PrimeArith { p: p as u64 }, track)),
            Field::Rationals => EchKind::Rational(Ech::new(RatArith, track)),
        };
        Echelon { kind }
    }

    pub fn rank(&self) -> usize {
        match &self.kind {
            EchKind::Prime(e) => e.vecs.len(),
            EchKind::Rational(e) => e.vecs.len(),
        }
    }

    /// Returns true if the vector was independent of those already inserted.
    pub fn insert(&mut self, v: &[(u32, Scalar)]) -> bool {
        self.insert_relation(v).is_none()
    }

    /// Inserts; on dependence returns the relation among inserted vectors
    /// (indexed by insertion order) when tracking, or an empty vector otherwise.
    pub fn insert_relation(&mut self, v: &[(u32, Scalar)]) -> Option<SparseVec> {
        fn go<A: Arith>(e: &mut Ech<A>, v: &[(u32, Scalar)]) -> Option<SparseVec> {
            let lifted = v.iter().map(|(r, s)| (*r, e.ar.lift(s))).collect();
            match e.insert(lifted) {
                Ok(()) => None,
                Err(rel) => Some(
                    rel.unwrap_or_default()
                        .iter()
                        .map(|(i, x)| (*i, e.ar.lower(x)))
                        .collect(),
                ),
            }
        }
        match &mut self.kind {
            EchKind::Prime(e) => go(e, v),
            EchKind::Rational(e) => go(e, v),
        }
    }

    pub fn contains(&self, v: &[(u32, Scalar)]) -> bool {
        fn go<A: Arith>(e: &Ech<A>, v: &[(u32, Scalar)]) -> bool {
            e.contains(v.iter().map(|(r, s)| (*r, e.ar.lift(s))).collect())
        }
        match &self.kind {
            EchKind::Prime(e) => go(e, v),
            EchKind::Rational(e) => go(e, v),
        }
    }

    /// Write `v` as a combination of the inserted vectors (indexed by insertion
    /// order). Requires tracking.
    pub fn express(&self, v: &[(u32, Scalar)]) -> Option<SparseVec> {
        fn go<A: Arith>(e: &Ech<A>, v: &[(u32, Scalar)]) -> Option<SparseVec> {
            assert!(e.combos.is_some(), "express needs a tracking echelon");
            let mut c = e.express(v.iter().map(|(r, s)| (*r, e.ar.lift(s))).collect())?;
            c.sort_by_key(|t| t.0);
            Some(c.iter().map(|(i, x)| (*i, e.ar.lower(x))).collect())
        }
        match &self.kind {
            EchKind::Prime(e) => go(e, v),
            EchKind::Rational(e) => go(e, v),
        }
    }
}

/// Sparse column-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl FieldMatrix {
    pub fn zero(field: Field, nrows: usize, ncols: usize) -> FieldMatrix {
        FieldMatrix {
            field,
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    /// Columns must be sorted by row with no zero entries and rows in range.
    pub fn from_columns(field: Field, nrows: usize, cols: Vec<SparseVec>) -> FieldMatrix {
        debug_assert!(cols.iter().all(|c| {
            c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|(r, x)| (*r as usize) < nrows && !x.is_zero())
        }));
        FieldMatrix { field, nrows, cols }
    }

    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> FieldMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let s = field.from_i64(x);
                if !s.is_zero() {
                    cols[c].push((r as u32, s));
                }
            }
        }
        FieldMatrix { field, nrows, cols }
    }

    pub fn identity(field: Field, n: usize) -> FieldMatrix {
        FieldMatrix {
            field,
            nrows: n,
            cols: (0..n).map(|i| vec![(i as u32, field.one())]).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.cols[c]
            .iter()
            .find(|(i, _)| *i as usize == r)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field);
        for c in &self.cols {
            e.insert(c);
        }
        e.rank()
    }

    /// Basis of the null space, as sparse vectors indexed by column.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut e = Echelon::tracking(self.field);
        let mut out = Vec::new();
        for c in &self.cols {
            if let Some(rel) = e.insert_relation(c) {
                let mut rel = rel;
                rel.sort_by_key(|t| t.0);
                out.push(rel);
            }
        }
        out
    }

    /// `self * v`
    pub fn apply(&self, v: &[(u32, Scalar)]) -> SparseVec {
        let mut acc: Vec<(u32, Scalar)> = Vec::new();
        for (j, x) in v {
            for (r, a) in &self.cols[*j as usize] {
                acc.push((*r, a * x));
            }
        }
        normalize_sparse(acc)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.ncols(), other.nrows, "shape mismatch in field matrix product");
        FieldMatrix {
            field: self.field,
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (r, x) in c {
                cols[*r as usize].push((j as u32, x.clone()));
            }
        }
        FieldMatrix {
            field: self.field,
            nrows: self.cols.len(),
            cols,
        }
    }
}

/// Sort by index, merge duplicates, drop zeros.
pub fn normalize_sparse(mut v: Vec<(u32, Scalar)>) -> SparseVec {
    v.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (r, x) in v {
        match out.last_mut() {
            Some((lr, lx)) if *lr == r => *lx = &*lx + &x,
            _ => out.push((r, x)),
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
    }
    out
}
