use std::fmt;
use std::sync::Arc;

use crate::simplicial::Surjection;

/// Basis labels of constructed free modules.
///
/// The derived order is the structural recursive order used for every tie-break:
/// variants compare in declaration order, then fields left to right, with child
/// lists compared lexicographically. Module bases are always kept sorted in it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Atom { name: Arc<str>, degree: i32 },
    /// Copy of a chain-complex generator indexed by a surjection. Inner label
    /// compares first so that degeneracies act order-preservingly.
    GammaCopy { inner: Box<BasisLabel>, surj: Surjection },
    TensorWord(Vec<BasisLabel>),
    /// Sorted multiset.
    SymMonomial(Vec<BasisLabel>),
    /// Strictly increasing.
    WedgeSet(Vec<BasisLabel>),
    /// Sorted multiset, divided-power basis.
    DividedMonomial(Vec<BasisLabel>),
    /// `(i ^ j) (x) k` with `i < j` and `i <= k`.
    SchurTableau(Box<[BasisLabel; 3]>),
    /// Dual basis element to a tableau of the dual module.
    CoSchurTableau(Box<[BasisLabel; 3]>),
    Dual(Box<BasisLabel>),
    Summand { index: u32, inner: Box<BasisLabel> },
}

impl BasisLabel {
    pub fn atom(name: &str, degree: i32) -> BasisLabel {
        BasisLabel::Atom {
            name: Arc::from(name),
            degree,
        }
    }

    pub fn gamma(inner: BasisLabel, surj: Surjection) -> BasisLabel {
        BasisLabel::GammaCopy {
            inner: Box::new(inner),
            surj,
        }
    }

    pub fn summand(index: u32, inner: BasisLabel) -> BasisLabel {
        BasisLabel::Summand {
            index,
            inner: Box::new(inner),
        }
    }

    /// Dual label; dualizing twice returns the original.
    pub fn dual(&self) -> BasisLabel {
        match self {
            BasisLabel::Dual(inner) => (**inner).clone(),
            other => BasisLabel::Dual(Box::new(other.clone())),
        }
    }

    /// Internal degree, summed over children (negated under `Dual`).
    pub fn degree(&self) -> i32 {
        match self {
            BasisLabel::Atom { degree, .. } => *degree,
            BasisLabel::GammaCopy { inner, .. } => inner.degree(),
            BasisLabel::TensorWord(v)
            | BasisLabel::SymMonomial(v)
            | BasisLabel::WedgeSet(v)
            | BasisLabel::DividedMonomial(v) => v.iter().map(|l| l.degree()).sum(),
            BasisLabel::SchurTableau(t) | BasisLabel::CoSchurTableau(t) => t.iter().map(|l| l.degree()).sum(),
            BasisLabel::Dual(inner) => -inner.degree(),
            BasisLabel::Summand { inner, .. } => inner.degree(),
        }
    }

    /// Checks the shape constraints of multiset, wedge and tableau labels.
    pub fn is_well_formed(&self) -> bool {
        match self {
            BasisLabel::Atom { .. } => true,
            BasisLabel::GammaCopy { inner, .. } | BasisLabel::Dual(inner) | BasisLabel::Summand { inner, .. } => {
                inner.is_well_formed()
            }
            BasisLabel::TensorWord(v) => v.iter().all(|l| l.is_well_formed()),
            BasisLabel::SymMonomial(v) | BasisLabel::DividedMonomial(v) => {
                v.windows(2).all(|w| w[0] <= w[1]) && v.iter().all(|l| l.is_well_formed())
            }
            BasisLabel::WedgeSet(v) => v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|l| l.is_well_formed()),
            BasisLabel::SchurTableau(t) | BasisLabel::CoSchurTableau(t) => {
                t[0] < t[1] && t[0] <= t[2] && t.iter().all(|l| l.is_well_formed())
            }
        }
    }
}

fn join(f: &mut fmt::Formatter<'_>, items: &[BasisLabel], sep: &str) -> fmt::Result {
    for (i, l) in items.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Atom { name, .. } => write!(f, "{name}"),
            BasisLabel::GammaCopy { inner, surj } => write!(f, "{inner}@{:?}", surj.blocks()),
            BasisLabel::TensorWord(v) => {
                write!(f, "(")?;
                join(f, v, "⊗")?;
                write!(f, ")")
            }
            BasisLabel::SymMonomial(v) => {
                write!(f, "[")?;
                join(f, v, "·")?;
                write!(f, "]")
            }
            BasisLabel::WedgeSet(v) => {
                write!(f, "{{")?;
                join(f, v, "∧")?;
                write!(f, "}}")
            }
            BasisLabel::DividedMonomial(v) => {
                write!(f, "<")?;
                join(f, v, "·")?;
                write!(f, ">")
            }
            BasisLabel::SchurTableau(t) => write!(f, "({}∧{})⊗{}", t[0], t[1], t[2]),
            BasisLabel::CoSchurTableau(t) => write!(f, "co({}∧{})⊗{}", t[0], t[1], t[2]),
            BasisLabel::Dual(inner) => write!(f, "{inner}*"),
            BasisLabel::Summand { index, inner } => write!(f, "{inner}#{index}"),
        }
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_are_recursive() {
        let a = BasisLabel::atom("a", 1);
        let b = BasisLabel::atom("b", 2);
        let t = BasisLabel::TensorWord(vec![a.clone(), b.clone()]);
        assert_eq!(t.degree(), 3);
        assert_eq!(t.dual().degree(), -3);
        assert_eq!(t.dual().dual(), t);
        let s = BasisLabel::SymMonomial(vec![a.clone(), a.clone(), b.clone()]);
        assert_eq!(s.degree(), 4);
    }

    #[test]
    fn shape_checks() {
        let a = BasisLabel::atom("a", 0);
        let b = BasisLabel::atom("b", 0);
        assert!(BasisLabel::WedgeSet(vec![a.clone(), b.clone()]).is_well_formed());
        assert!(!BasisLabel::WedgeSet(vec![a.clone(), a.clone()]).is_well_formed());
        assert!(!BasisLabel::SymMonomial(vec![b.clone(), a.clone()]).is_well_formed());
        assert!(BasisLabel::SchurTableau(Box::new([a.clone(), b.clone(), a.clone()])).is_well_formed());
        assert!(!BasisLabel::SchurTableau(Box::new([b.clone(), b.clone(), a.clone()])).is_well_formed());
    }

    #[test]
    fn gamma_order_puts_inner_first() {
        let a = BasisLabel::atom("a", 0);
        let b = BasisLabel::atom("b", 0);
        let s = Surjection::all(2, 1);
        assert!(BasisLabel::gamma(a.clone(), s[1].clone()) < BasisLabel::gamma(b, s[0].clone()));
        assert!(BasisLabel::gamma(a.clone(), s[0].clone()) < BasisLabel::gamma(a, s[1].clone()));
    }
}
