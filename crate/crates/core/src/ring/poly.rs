use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A coefficient field together with a (possibly empty) list of variables and a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>> {
        if vars.len() > MAX_VARS {
            return Err(Error::Config(format!("at most {MAX_VARS} variables are supported")));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Config(format!("bad variable name {v:?}")));
            }
            if v.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(Error::Config(format!("variable name {v:?} starts with a digit")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Config(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(Ring { field, vars, order }))
    }

    /// The bare field, no variables.
    pub fn field_only(field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            vars: Vec::new(),
            order: MonomialOrder::Degrevlex,
        })
    }

    /// `F_p[x, y]` with degrevlex.
    pub fn plane(p: u32) -> Arc<Ring> {
        Ring::new(
            Field::Prime(p),
            vec!["x".into(), "y".into()],
            MonomialOrder::Degrevlex,
        )
        .expect("valid ring")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_field(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn zero(self: &Arc<Self>) -> Poly {
        Poly {
            ring: self.clone(),
            terms: SmallVec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Poly {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> Poly {
        Poly::monomial(self, Monomial::one(self.nvars()), c)
    }

    pub fn int(self: &Arc<Self>, n: i64) -> Poly {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly {
        assert!(i < self.nvars());
        Poly::monomial(self, Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Option<Poly> {
        self.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub type Term = (Monomial, Scalar);

/// Sparse polynomial; terms sorted descending in the ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: SmallVec<[Term; 1]>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Scalar) -> Poly {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut terms = SmallVec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms; sorts, merges and drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut raw: Vec<Term>) -> Poly {
        raw.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut terms: SmallVec<[Term; 1]> = SmallVec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => terms.push((m, c)),
            }
            if terms.last().is_some_and(|t| t.1.is_zero()) {
                terms.pop();
            }
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(self.ring.field().zero())
        } else if self.is_unit() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn homogeneous_degree(&self) -> Option<Option<u32>> {
        let mut it = self.terms.iter().map(|t| t.0.degree());
        match it.next() {
            None => Some(None),
            Some(d) => it.all(|e| e == d).then_some(Some(d)),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Coefficient of a monomial.
    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::Descriptor(format!(
                "operands live in different rings ({} vs {})",
                describe_ring(&self.ring),
                describe_ring(&other.ring)
            )))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    /// Unchecked sum; rings must agree.
    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if other.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut terms: SmallVec<[Term; 1]> = SmallVec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &Scalar| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().map(|t| (t.0, sign(&t.1))));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiply by `c * m`; preserves term order for monomial orders.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(&self.ring, raw)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Evaluate at a point of the base field.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                v = &v * &x.pow(e as u32);
            }
            acc = &acc + &v;
        }
        acc
    }
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Poly, b: &Poly, op: PolyOp) -> Result<Poly> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
    }
}

fn describe_ring(r: &Ring) -> String {
    if r.vars.is_empty() {
        format!("{}", r.field)
    } else {
        format!("{}[{}]", r.field, r.vars.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", describe_ring(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.ring.vars.iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The base coefficient world: a ring plus an optional regular sequence generating `I`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingDescriptor {
    ring: Arc<Ring>,
    regular_sequence: Option<Vec<Poly>>,
}

impl RingDescriptor {
    pub fn new(ring: Arc<Ring>, regular_sequence: Option<Vec<Poly>>) -> Result<RingDescriptor> {
        if let Some(seq) = &regular_sequence {
            if seq.is_empty() || seq.len() > 2 {
                return Err(Error::Config(format!(
                    "regular sequence must have length 1 or 2, got {}",
                    seq.len()
                )));
            }
            for f in seq {
                if !same_ring(f.ring(), &ring) {
                    return Err(Error::Descriptor("sequence element from another ring".into()));
                }
                if f.is_zero() {
                    return Err(Error::Config("regular sequence entry is zero".into()));
                }
                if f.is_unit() {
                    return Err(Error::Config(format!("regular sequence entry {f} is a unit")));
                }
            }
        }
        Ok(RingDescriptor {
            ring,
            regular_sequence,
        })
    }

    /// `F_p[x,y]` with `I = (x, y)`.
    pub fn default_plane(p: u32) -> RingDescriptor {
        let ring = Ring::plane(p);
        let seq = vec![ring.var(0), ring.var(1)];
        RingDescriptor::new(ring, Some(seq)).expect("valid default")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn regular_sequence(&self) -> Option<&[Poly]> {
        self.regular_sequence.as_deref()
    }
}
