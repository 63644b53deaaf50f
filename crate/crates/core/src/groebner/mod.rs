//! Gröbner bases of submodules of free modules over `k[x, ...]` in the
//! position-over-term order, Schreyer syzygies, and standard-monomial counting.

mod vector;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linear::{normalize_poly_vec, BasisLabel, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::{Monomial, Poly, Ring, Scalar};
use vector::{
    cmp_pot, combine, from_poly_vec, poly_vec_scale, poly_vec_sub_mul, quotients_to_poly_vec, scale, sub_mul,
    to_poly_vec, MTerm, MVec,
};

/// Reduced Gröbner basis of the submodule generated by `inputs`, with every basis
/// element written as a combination of the inputs.
#[derive(Clone)]
pub struct ModuleGB {
    ambient: LabeledFreeModule,
    inputs: Vec<PolyVec>,
    basis: Vec<MVec>,
    cofactors: Vec<PolyVec>,
    by_pos: Vec<Vec<usize>>,
}

struct Builder<'a> {
    ring: &'a Arc<Ring>,
    basis: Vec<MVec>,
    cofactors: Vec<PolyVec>,
    live: Vec<bool>,
    by_pos: Vec<Vec<usize>>,
    pairs: BTreeSet<(u32, usize, usize)>,
}

impl<'a> Builder<'a> {
    fn new(ring: &'a Arc<Ring>, rank: usize) -> Self {
        Builder {
            ring,
            basis: Vec::new(),
            cofactors: Vec::new(),
            live: Vec::new(),
            by_pos: vec![Vec::new(); rank],
            pairs: BTreeSet::new(),
        }
    }

    fn lead(&self, i: usize) -> &MTerm {
        &self.basis[i][0]
    }

    fn find_reducer(&self, t: &MTerm, skip: Option<usize>) -> Option<usize> {
        self.by_pos[t.pos as usize]
            .iter()
            .copied()
            .find(|&k| self.live[k] && Some(k) != skip && self.basis[k][0].mono.divides(&t.mono))
    }

    /// Reduce every term from index `start` on; returns the remainder and its cofactor.
    fn reduce(&self, mut v: MVec, mut cof: PolyVec, start: usize, skip: Option<usize>) -> (MVec, PolyVec) {
        let mut i = start;
        while i < v.len() {
            match self.find_reducer(&v[i], skip) {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g[0].mono.quotient_of(&v[i].mono).expect("divides");
                    let c = v[i].coef.clone();
                    let tail = sub_mul(self.ring, &v[i..], &c, &m, g);
                    v.truncate(i);
                    v.extend(tail);
                    cof = poly_vec_sub_mul(&cof, &c, &m, &self.cofactors[k]);
                }
                None => i += 1,
            }
        }
        (v, cof)
    }

    fn push(&mut self, mut v: MVec, mut cof: PolyVec) {
        let inv = v[0].coef.inv().expect("nonzero leading coefficient");
        scale(&mut v, &inv);
        cof = poly_vec_scale(&cof, &inv);
        let n = self.basis.len();
        let (pos, lm) = (v[0].pos, v[0].mono);
        // Buchberger's chain criterion on pending pairs
        let doomed: Vec<_> = self
            .pairs
            .iter()
            .filter(|&&(_, i, j)| {
                if self.lead(i).pos != pos {
                    return false;
                }
                let l = self.lead(i).mono.lcm(&self.lead(j).mono);
                lm.divides(&l) && self.lead(i).mono.lcm(&lm) != l && self.lead(j).mono.lcm(&lm) != l
            })
            .copied()
            .collect();
        for p in doomed {
            self.pairs.remove(&p);
        }
        self.basis.push(v);
        self.cofactors.push(cof);
        self.live.push(true);
        for &i in &self.by_pos[pos as usize] {
            let l = self.basis[i][0].mono.lcm(&lm);
            self.pairs.insert((l.degree(), i, n));
        }
        self.by_pos[pos as usize].push(n);
    }

    fn s_vector(&self, i: usize, j: usize) -> (MVec, PolyVec) {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let l = gi[0].mono.lcm(&gj[0].mono);
        let mi = gi[0].mono.quotient_of(&l).expect("lcm");
        let mj = gj[0].mono.quotient_of(&l).expect("lcm");
        let minus_one = -&self.ring.field().one();
        let one = self.ring.field().one();
        let a = sub_mul(self.ring, &[], &minus_one, &mi, gi);
        let s = sub_mul(self.ring, &a, &one, &mj, gj);
        let ca = poly_vec_sub_mul(&[], &minus_one, &mi, &self.cofactors[i]);
        let cs = poly_vec_sub_mul(&ca, &one, &mj, &self.cofactors[j]);
        (s, cs)
    }

    fn add(&mut self, v: MVec, cof: PolyVec) {
        let (r, c) = self.reduce(v, cof, 0, None);
        if !r.is_empty() {
            self.push(r, c);
        }
    }

    fn run(&mut self) {
        while let Some((_, i, j)) = self.pairs.pop_first() {
            let (s, c) = self.s_vector(i, j);
            self.add(s, c);
        }
    }

    /// Drop redundant leading terms, then tail-reduce.
    fn finish(mut self) -> (Vec<MVec>, Vec<PolyVec>) {
        let n = self.basis.len();
        for i in 0..n {
            let li = self.lead(i).clone();
            let redundant = (0..n).any(|j| {
                j != i
                    && self.live[j]
                    && self.lead(j).pos == li.pos
                    && self.lead(j).mono.divides(&li.mono)
                    && (self.lead(j).mono != li.mono || j < i)
            });
            if redundant {
                self.live[i] = false;
            }
        }
        for i in 0..n {
            if !self.live[i] {
                continue;
            }
            let v = std::mem::take(&mut self.basis[i]);
            let c = std::mem::take(&mut self.cofactors[i]);
            let (v, c) = self.reduce(v, c, 1, Some(i));
            self.basis[i] = v;
            self.cofactors[i] = c;
        }
        let ring = self.ring;
        let mut kept: Vec<(MVec, PolyVec)> = self
            .basis
            .into_iter()
            .zip(self.cofactors)
            .zip(self.live)
            .filter(|(_, l)| *l)
            .map(|(p, _)| p)
            .collect();
        kept.sort_by(|a, b| cmp_pot(ring, (b.0[0].pos, &b.0[0].mono), (a.0[0].pos, &a.0[0].mono)));
        kept.into_iter().unzip()
    }
}

/// Reduced Gröbner basis of the submodule of `ambient` generated by `gens`.
pub fn buchberger(ambient: &LabeledFreeModule, gens: &[PolyVec]) -> Result<ModuleGB> {
    ModuleGB::new(ambient, gens)
}

impl ModuleGB {
    pub fn new(ambient: &LabeledFreeModule, gens: &[PolyVec]) -> Result<ModuleGB> {
        let ring = ambient.ring();
        let mut inputs = Vec::with_capacity(gens.len());
        for g in gens {
            let g = normalize_poly_vec(g.clone());
            if let Some((r, _)) = g.iter().find(|(r, _)| *r as usize >= ambient.rank()) {
                return Err(Error::Shape(format!("entry {r} outside ambient rank {}", ambient.rank())));
            }
            inputs.push(g);
        }
        let mut b = Builder::new(ring, ambient.rank());
        for (i, g) in inputs.iter().enumerate() {
            b.add(from_poly_vec(ring, g), vec![(i as u32, ring.one())]);
        }
        b.run();
        let (basis, cofactors) = b.finish();
        let mut by_pos = vec![Vec::new(); ambient.rank()];
        for (k, v) in basis.iter().enumerate() {
            by_pos[v[0].pos as usize].push(k);
        }
        Ok(ModuleGB {
            ambient: ambient.clone(),
            inputs,
            basis,
            cofactors,
            by_pos,
        })
    }

    /// Gröbner basis of an ideal of the ring.
    pub fn ideal(ring: &Arc<Ring>, gens: &[Poly]) -> ModuleGB {
        let ambient = LabeledFreeModule::standard(ring, "1", 1, 0);
        let gens: Vec<PolyVec> = gens.iter().map(|p| vec![(0, p.clone())]).collect();
        ModuleGB::new(&ambient, &gens).expect("rank one")
    }

    pub fn ambient(&self) -> &LabeledFreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ambient.ring()
    }

    pub fn inputs(&self) -> &[PolyVec] {
        &self.inputs
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The basis elements, monic, sorted by decreasing leading term.
    pub fn generators(&self) -> Vec<PolyVec> {
        self.basis.iter().map(|v| to_poly_vec(self.ring(), v)).collect()
    }

    /// Leading (position, monomial) of each basis element.
    pub fn leading_terms(&self) -> Vec<(u32, Monomial)> {
        self.basis.iter().map(|v| (v[0].pos, v[0].mono)).collect()
    }

    /// Basis element `k` as a combination of the inputs.
    pub fn cofactor(&self, k: usize) -> &PolyVec {
        &self.cofactors[k]
    }

    fn view(&self) -> Builder<'_> {
        Builder {
            ring: self.ambient.ring(),
            basis: self.basis.clone(),
            cofactors: self.cofactors.clone(),
            live: vec![true; self.basis.len()],
            by_pos: self.by_pos.clone(),
            pairs: BTreeSet::new(),
        }
    }

    /// Full division with quotients over the basis elements.
    fn divide(&self, v: &[(u32, Poly)]) -> (MVec, Vec<(u32, Monomial, Scalar)>) {
        let ring = self.ring();
        let mut v = from_poly_vec(ring, v);
        let mut quotients = Vec::new();
        let mut i = 0;
        while i < v.len() {
            let t = &v[i];
            let hit = self.by_pos[t.pos as usize]
                .iter()
                .copied()
                .find(|&k| self.basis[k][0].mono.divides(&t.mono));
            match hit {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g[0].mono.quotient_of(&t.mono).expect("divides");
                    let c = t.coef.clone();
                    let tail = sub_mul(ring, &v[i..], &c, &m, g);
                    v.truncate(i);
                    v.extend(tail);
                    quotients.push((k as u32, m, c));
                }
                None => i += 1,
            }
        }
        (v, quotients)
    }

    /// Unique remainder of `v`; zero iff `v` lies in the submodule.
    pub fn normal_form(&self, v: &[(u32, Poly)]) -> PolyVec {
        to_poly_vec(self.ring(), &self.divide(v).0)
    }

    pub fn contains(&self, v: &[(u32, Poly)]) -> bool {
        self.divide(v).0.is_empty()
    }

    /// Coefficients `c` over the inputs with `v = Σ c_i inputs[i]`, if `v` is in the submodule.
    pub fn express(&self, v: &[(u32, Poly)]) -> Option<PolyVec> {
        let (r, q) = self.divide(v);
        if !r.is_empty() {
            return None;
        }
        let over_basis = quotients_to_poly_vec(self.ring(), &q);
        Some(combine(&over_basis, &self.cofactors))
    }

    /// Buchberger criterion: every S-vector reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let b = self.view();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.basis[i][0].pos != self.basis[j][0].pos {
                    continue;
                }
                let (s, _) = b.s_vector(i, j);
                if !self.divide(&to_poly_vec(self.ring(), &s)).0.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic, no leading term divides another term of the basis.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, v)| {
            v[0].coef.is_one()
                && self.basis.iter().enumerate().all(|(j, w)| {
                    i == j || w.iter().all(|t| !(t.pos == v[0].pos && v[0].mono.divides(&t.mono)))
                })
        })
    }

    /// Degree of each input (label degree plus leading monomial degree).
    pub fn input_degrees(&self) -> Vec<i32> {
        self.inputs.iter().map(|g| vector_degree(&self.ambient, g)).collect()
    }

    /// Generators of the kernel of `free module on the inputs -> ambient` (Schreyer).
    pub fn syzygy_generators(&self) -> Vec<PolyVec> {
        let ring = self.ring();
        let b = self.view();
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.basis[i][0].pos != self.basis[j][0].pos {
                    continue;
                }
                let (s, cof) = b.s_vector(i, j);
                let (r, q) = self.divide(&to_poly_vec(ring, &s));
                debug_assert!(r.is_empty());
                let over_basis = quotients_to_poly_vec(ring, &q);
                let syz = normalize_poly_vec(
                    cof.into_iter()
                        .chain(combine(&over_basis, &self.cofactors).into_iter().map(|(k, p)| (k, p.neg())))
                        .collect(),
                );
                if !syz.is_empty() {
                    out.push(syz);
                }
            }
        }
        for (i, g) in self.inputs.iter().enumerate() {
            let (_, q) = self.divide(g);
            let over_basis = quotients_to_poly_vec(ring, &q);
            let mut syz = vec![(i as u32, ring.one())];
            syz.extend(combine(&over_basis, &self.cofactors).into_iter().map(|(k, p)| (k, p.neg())));
            let syz = normalize_poly_vec(syz);
            if !syz.is_empty() {
                out.push(syz);
            }
        }
        out.sort_by(cmp_poly_vec);
        out.dedup();
        out
    }

    /// Reduced Gröbner basis of the syzygy module, inside the free module on the inputs.
    pub fn syzygies(&self) -> ModuleGB {
        let source = graded_free_module(self.ring(), "s", &self.input_degrees());
        ModuleGB::new(&source, &self.syzygy_generators()).expect("syzygies live in the source")
    }
}

fn cmp_poly_vec(a: &PolyVec, b: &PolyVec) -> std::cmp::Ordering {
    let key = |v: &PolyVec| v.iter().map(|(i, p)| (*i, p.to_string())).collect::<Vec<_>>();
    key(a).cmp(&key(b))
}

/// Label degree plus polynomial degree of the leading nonzero entry (0 for the zero vector).
pub fn vector_degree(ambient: &LabeledFreeModule, v: &[(u32, Poly)]) -> i32 {
    v.first()
        .map(|(r, p)| ambient.degree(*r as usize) + p.degree().unwrap_or(0) as i32)
        .unwrap_or(0)
}

/// Free module on atoms `{prefix}i` with the given degrees, in index order.
pub fn graded_free_module(ring: &Arc<Ring>, prefix: &str, degrees: &[i32]) -> LabeledFreeModule {
    let width = degrees.len().saturating_sub(1).to_string().len();
    let labels = degrees
        .iter()
        .enumerate()
        .map(|(i, d)| BasisLabel::atom(&format!("{prefix}{i:0width$}"), *d))
        .collect();
    LabeledFreeModule::new(ring, labels).expect("distinct atoms")
}

/// Generators of the kernel of `f` as vectors in its source.
pub fn kernel(f: &MapMatrix) -> Vec<PolyVec> {
    if f.nrows() == 0 {
        let one = f.ring().one();
        return (0..f.ncols()).map(|i| vec![(i as u32, one.clone())]).collect();
    }
    let gb = ModuleGB::new(f.target(), f.columns()).expect("columns lie in the target");
    gb.syzygy_generators()
}

impl fmt::Debug for ModuleGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GB{:?}", self.generators())
    }
}

/// Finitely presented module `R^n / relations`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generator_count: usize,
    pub relations: ModuleGB,
    pub finite_dim: Option<usize>,
}

impl Presentation {
    pub fn new(relations: ModuleGB) -> Presentation {
        let generator_count = relations.ambient().rank();
        let finite_dim = standard_monomial_count(&relations);
        Presentation {
            generator_count,
            relations,
            finite_dim,
        }
    }

    /// `ker / im` where `kernel_gens` generate a submodule of `ambient` containing `image`.
    /// Generators killed by a relation with a unit entry are eliminated first.
    pub fn subquotient(ambient: &LabeledFreeModule, kernel_gens: &[PolyVec], image: &[PolyVec]) -> Result<Presentation> {
        let ring = ambient.ring();
        let zgb = ModuleGB::new(ambient, kernel_gens)?;
        let mut relations = zgb.syzygy_generators();
        for b in image {
            match zgb.express(b) {
                Some(c) => relations.push(c),
                None => {
                    return Err(Error::BrokenComplex(
                        "a boundary is not a cycle; the differentials do not compose to zero".into(),
                    ))
                }
            }
        }
        let mut degrees = zgb.input_degrees();
        prune_units(&mut relations, &mut degrees);
        let module = graded_free_module(ring, "g", &degrees);
        Ok(Presentation::new(ModuleGB::new(&module, &relations)?))
    }

    pub fn is_zero(&self) -> bool {
        self.finite_dim == Some(0)
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.relations.ambient().degrees()
    }

    /// Number of standard monomials of internal degree `t`.
    pub fn hilbert(&self, t: i32) -> usize {
        let ring = self.relations.ring();
        let mut count = 0;
        for (p, &d) in self.generator_degrees().iter().enumerate() {
            if d > t {
                continue;
            }
            let leads: Vec<Monomial> = self.relations.by_pos[p].iter().map(|&k| self.relations.basis[k][0].mono).collect();
            count += Monomial::all_of_degree(ring.nvars(), (t - d) as u32)
                .iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count();
        }
        count
    }
}

/// `(finite, dim)` of a presentation, counting standard monomials.
pub fn quotient_dim(pres: &Presentation) -> (bool, Option<usize>) {
    (pres.finite_dim.is_some(), pres.finite_dim)
}

fn standard_monomial_count(gb: &ModuleGB) -> Option<usize> {
    let n = gb.ring().nvars();
    let mut total = 0usize;
    for p in 0..gb.ambient().rank() {
        let leads: Vec<Monomial> = gb.by_pos[p].iter().map(|&k| gb.basis[k][0].mono).collect();
        let mut bounds = vec![0u16; n];
        for (v, b) in bounds.iter_mut().enumerate() {
            *b = leads
                .iter()
                .filter(|m| m.degree() == m.exps()[v] as u32)
                .map(|m| m.exps()[v])
                .min()?;
        }
        if leads.iter().any(|m| m.is_one()) {
            continue;
        }
        let mut exps = vec![0u16; n];
        loop {
            let m = Monomial::new(&exps);
            if !leads.iter().any(|l| l.divides(&m)) {
                total += 1;
            }
            let mut v = 0;
            while v < n {
                exps[v] += 1;
                if exps[v] < bounds[v] {
                    break;
                }
                exps[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
    }
    Some(total)
}

/// Repeatedly use a relation with a constant entry to eliminate that generator.
fn prune_units(relations: &mut Vec<PolyVec>, degrees: &mut Vec<i32>) {
    relations.retain(|r| !r.is_empty());
    loop {
        let hit = relations.iter().enumerate().find_map(|(ri, r)| {
            r.iter()
                .find(|(_, p)| p.is_constant() && !p.is_zero())
                .map(|(p, c)| (ri, *p, c.constant_value().expect("constant")))
        });
        let Some((ri, pos, c)) = hit else { break };
        let r = relations.swap_remove(ri);
        let inv = c.inv().expect("nonzero");
        for rel in relations.iter_mut() {
            if let Some((_, e)) = rel.iter().find(|(i, _)| *i == pos) {
                let factor = e.scale(&inv);
                let mut v = rel.clone();
                v.extend(r.iter().map(|(i, p)| (*i, p.mul(&factor).neg())));
                *rel = normalize_poly_vec(v);
            }
        }
        for rel in relations.iter_mut() {
            debug_assert!(rel.iter().all(|(i, _)| *i != pos));
            for (i, _) in rel.iter_mut() {
                if *i > pos {
                    *i -= 1;
                }
            }
        }
        degrees.remove(pos as usize);
        relations.retain(|r| !r.is_empty());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use proptest::prelude::*;

    fn r() -> Arc<Ring> {
        Ring::plane(97)
    }

    fn p(ring: &Arc<Ring>, s: &str) -> Poly {
        parse_poly(ring, s).unwrap()
    }

    fn ideal_dim(ring: &Arc<Ring>, gens: &[&str]) -> Option<usize> {
        let gb = ModuleGB::ideal(ring, &gens.iter().map(|s| p(ring, s)).collect::<Vec<_>>());
        Presentation::new(gb).finite_dim
    }

    #[test]
    fn maximal_ideal_basis() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[ring.var(0), ring.var(1)]);
        assert_eq!(gb.generators(), vec![vec![(0, ring.var(0))], vec![(0, ring.var(1))]]);
        assert!(gb.is_reduced() && gb.is_groebner());
    }

    #[test]
    fn quotient_by_x2_plus_y() {
        let ring = r();
        assert_eq!(ideal_dim(&ring, &["x^2+y", "y^2"]), Some(4));
        let gb = ModuleGB::ideal(&ring, &[p(&ring, "x^2+y"), p(&ring, "y^2")]);
        assert!(gb.is_groebner());
        assert!(gb.contains(&[(0, p(&ring, "y+x^2"))]));
        assert!(gb.normal_form(&[(0, p(&ring, "y+x^2"))]).is_empty());
    }

    #[test]
    fn coordinate_submodule_is_its_own_basis() {
        let ring = r();
        let amb = LabeledFreeModule::standard(&ring, "e", 2, 0);
        let gens = vec![vec![(0, ring.var(0))], vec![(1, ring.var(0))]];
        assert_eq!(ModuleGB::new(&amb, &gens).unwrap().generators(), gens);
    }

    #[test]
    fn normal_forms() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[ring.var(0), ring.var(1)]);
        assert!(gb.normal_form(&[(0, p(&ring, "x^2"))]).is_empty());
        assert_eq!(gb.normal_form(&[(0, ring.one())]), vec![(0, ring.one())]);
    }

    #[test]
    fn koszul_syzygy() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[ring.var(0), ring.var(1)]);
        let syz = gb.syzygies();
        assert_eq!(syz.len(), 1);
        let g = &syz.generators()[0];
        assert_eq!(g, &vec![(0, ring.var(1)), (1, ring.var(0).neg())]);
    }

    #[test]
    fn regular_element_has_no_syzygies() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[p(&ring, "x^2+y")]);
        assert!(gb.syzygies().is_empty());
    }

    #[test]
    fn syzygies_of_redundant_generators() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[ring.var(0), ring.var(1), p(&ring, "x+y")]);
        let syz = gb.syzygies();
        let v = vec![(0, ring.one()), (1, ring.one()), (2, ring.int(-1))];
        assert!(syz.contains(&v));
        // R^3/syz is the ideal (x, y) itself, generated in degree 1
        let pres = Presentation::new(syz);
        assert_eq!(pres.finite_dim, None);
        assert_eq!(pres.hilbert(0), 0);
        assert_eq!(pres.hilbert(1), 2);
        assert_eq!(pres.hilbert(3), 4);
    }

    #[test]
    fn quotient_dims() {
        let ring = r();
        assert_eq!(ideal_dim(&ring, &["x", "y"]), Some(1));
        assert_eq!(ideal_dim(&ring, &["x"]), None);
        assert_eq!(ideal_dim(&ring, &["x^2", "x*y", "y^2"]), Some(3));
        assert_eq!(ideal_dim(&ring, &["1"]), Some(0));
    }

    #[test]
    fn express_recovers_combination() {
        let ring = r();
        let gb = ModuleGB::ideal(&ring, &[p(&ring, "x^2+y"), p(&ring, "y^2")]);
        let v = vec![(0, p(&ring, "x^3*y+x*y^2+y^3"))];
        let c = gb.express(&v).unwrap();
        assert_eq!(combine(&c, gb.inputs()), v);
    }

    #[test]
    fn subquotient_of_koszul() {
        // H_0 of R^2 -(x,y)-> R is R/(x,y)
        let ring = r();
        let amb = LabeledFreeModule::standard(&ring, "e", 1, 0);
        let pres = Presentation::subquotient(&amb, &[vec![(0, ring.one())]], &[vec![(0, ring.var(0))], vec![(0, ring.var(1))]]).unwrap();
        assert_eq!(quotient_dim(&pres), (true, Some(1)));
        assert_eq!(pres.generator_count, 1);
        assert!(Presentation::subquotient(&amb, &[vec![(0, ring.var(0))]], &[vec![(0, ring.var(1))]]).is_err());
    }

    #[test]
    fn units_are_pruned() {
        let ring = r();
        let amb = LabeledFreeModule::standard(&ring, "e", 2, 0);
        // <e0, e1> / <e0 - e1, x e0>  ≅ R/(x)
        let pres = Presentation::subquotient(
            &amb,
            &[vec![(0, ring.one())], vec![(1, ring.one())]],
            &[vec![(0, ring.one()), (1, ring.int(-1))], vec![(0, ring.var(0))]],
        )
        .unwrap();
        assert_eq!(pres.generator_count, 1);
        assert_eq!(pres.relations.generators(), vec![vec![(0, ring.var(0))]]);
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(u16, u16, i64)>> {
        prop::collection::vec((0u16..3, 0u16..3, -3i64..4), 0..4)
    }

    fn build(ring: &Arc<Ring>, t: &[(u16, u16, i64)]) -> Poly {
        Poly::from_terms(
            ring,
            t.iter().map(|&(a, b, c)| (Monomial::new(&[a, b]), ring.field().from_i64(c))).collect(),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn buchberger_properties(gens in prop::collection::vec((arb_poly(), arb_poly()), 1..4), probe in (arb_poly(), arb_poly())) {
            let ring = r();
            let amb = LabeledFreeModule::standard(&ring, "e", 2, 0);
            let gens: Vec<PolyVec> = gens.iter().map(|(a, b)| normalize_poly_vec(vec![(0, build(&ring, a)), (1, build(&ring, b))])).collect();
            let gb = ModuleGB::new(&amb, &gens).unwrap();
            prop_assert!(gb.is_groebner());
            prop_assert!(gb.is_reduced());
            let v = normalize_poly_vec(vec![(0, build(&ring, &probe.0)), (1, build(&ring, &probe.1))]);
            let nf = gb.normal_form(&v);
            prop_assert_eq!(gb.normal_form(&nf), nf.clone());
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
            let f = MapMatrix::new(&graded_free_module(&ring, "s", &vec![0; gens.len()]), &amb, gens.clone()).unwrap();
            let syz = gb.syzygies();
            for s in syz.generators() {
                prop_assert!(f.apply(&s).is_empty());
            }
            // random kernel elements built from syzygy generators reduce to zero
            let gs = gb.syzygy_generators();
            if !gs.is_empty() {
                let k = combine(&[(0, build(&ring, &probe.0))], &gs);
                prop_assert!(syz.contains(&k));
            }
        }
    }
}
