//! Polynomial functors on free modules and maps, cross-effects and Cauchy filtration maps.

mod basic;
mod cauchy;
mod cross;
mod schur;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{LabeledFreeModule, MapMatrix};

pub(crate) use basic::{ext_module, multiset_rank, multisets, subset_rank, subsets, sym_module};
pub use cauchy::{cauchy_det_map, cauchy_m21_map, sym_multiplication_map};
pub(crate) use cross::field_columns;
pub use cross::{cross_effect, delta_map, induced_map, plus_map, CrossEffect, EpsilonMap};
pub use schur::{schur_comparison, straightening_map};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FunctorKind {
    Sym,
    Ext,
    Div,
    TensorPow,
    SchurL31,
    CoSchurL31,
}

/// A polynomial functor of a single free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FunctorTag {
    pub kind: FunctorKind,
    pub arity: usize,
}

impl FunctorTag {
    pub fn new(kind: FunctorKind, arity: usize) -> Result<FunctorTag> {
        let ok = match kind {
            FunctorKind::SchurL31 | FunctorKind::CoSchurL31 => arity == 3,
            _ => arity >= 1,
        };
        if !ok {
            return Err(Error::Config(format!("{kind:?} does not exist in arity {arity}")));
        }
        Ok(FunctorTag { kind, arity })
    }

    pub fn sym(l: usize) -> FunctorTag {
        FunctorTag::new(FunctorKind::Sym, l).expect("arity")
    }

    pub fn ext(l: usize) -> FunctorTag {
        FunctorTag::new(FunctorKind::Ext, l).expect("arity")
    }

    pub fn div(l: usize) -> FunctorTag {
        FunctorTag::new(FunctorKind::Div, l).expect("arity")
    }

    pub fn tensor_pow(l: usize) -> FunctorTag {
        FunctorTag::new(FunctorKind::TensorPow, l).expect("arity")
    }

    pub fn schur() -> FunctorTag {
        FunctorTag::new(FunctorKind::SchurL31, 3).expect("arity")
    }

    pub fn coschur() -> FunctorTag {
        FunctorTag::new(FunctorKind::CoSchurL31, 3).expect("arity")
    }

    /// Polynomial degree.
    pub fn degree(&self) -> usize {
        self.arity
    }

    /// Rank of the functor applied to a free module of rank `r`.
    pub fn rank_on(&self, r: usize) -> usize {
        let l = self.arity;
        match self.kind {
            FunctorKind::Sym | FunctorKind::Div => binom((r + l).saturating_sub(1), l),
            FunctorKind::Ext => binom(r, l),
            FunctorKind::TensorPow => r.saturating_pow(l as u32),
            FunctorKind::SchurL31 | FunctorKind::CoSchurL31 => r * (r * r).saturating_sub(1) / 3,
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FunctorKind::Sym => write!(f, "Sym^{}", self.arity),
            FunctorKind::Ext => write!(f, "Λ^{}", self.arity),
            FunctorKind::Div => write!(f, "D^{}", self.arity),
            FunctorKind::TensorPow => write!(f, "⊗^{}", self.arity),
            FunctorKind::SchurL31 => write!(f, "L^3_1"),
            FunctorKind::CoSchurL31 => write!(f, "coL^3_1"),
        }
    }
}

/// Functor from free modules to free modules, given by explicit matrices.
pub trait Functor: Sync {
    fn on_module(&self, v: &LabeledFreeModule) -> LabeledFreeModule;

    /// `F(f)` with precomputed `F(source)` and `F(target)`.
    fn on_map_onto(&self, f: &MapMatrix, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix;

    fn name(&self) -> String;

    fn on_map(&self, f: &MapMatrix) -> MapMatrix {
        self.on_map_onto(f, &self.on_module(f.source()), &self.on_module(f.target()))
    }
}

impl Functor for FunctorTag {
    fn on_module(&self, v: &LabeledFreeModule) -> LabeledFreeModule {
        match self.kind {
            FunctorKind::Sym => basic::sym_module(v, self.arity),
            FunctorKind::Ext => basic::ext_module(v, self.arity),
            FunctorKind::Div => basic::div_module(v, self.arity),
            FunctorKind::TensorPow => LabeledFreeModule::tensor(&vec![v; self.arity]),
            FunctorKind::SchurL31 => schur::schur_module(v),
            FunctorKind::CoSchurL31 => schur::coschur_module(v),
        }
    }

    fn on_map_onto(&self, f: &MapMatrix, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
        match self.kind {
            FunctorKind::Sym => basic::sym_map(f, self.arity, source, target),
            FunctorKind::Ext => basic::ext_map(f, self.arity, source, target),
            FunctorKind::Div => basic::div_map(f, self.arity, source, target),
            FunctorKind::TensorPow => MapMatrix::tensor_many_onto(&vec![f; self.arity], source, target),
            FunctorKind::SchurL31 => schur::schur_map(f, source, target),
            FunctorKind::CoSchurL31 => schur::coschur_map(f, source, target),
        }
    }

    fn name(&self) -> String {
        self.to_string()
    }
}

/// Pointwise tensor product `V ↦ F_1(V) ⊗ ... ⊗ F_m(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product(pub Vec<FunctorTag>);

impl Functor for Product {
    fn on_module(&self, v: &LabeledFreeModule) -> LabeledFreeModule {
        let parts: Vec<LabeledFreeModule> = self.0.iter().map(|f| f.on_module(v)).collect();
        LabeledFreeModule::tensor(&parts.iter().collect::<Vec<_>>())
    }

    fn on_map_onto(&self, f: &MapMatrix, source: &LabeledFreeModule, target: &LabeledFreeModule) -> MapMatrix {
        let parts: Vec<MapMatrix> = self.0.iter().map(|t| t.on_map(f)).collect();
        MapMatrix::tensor_many_onto(&parts.iter().collect::<Vec<_>>(), source, target)
    }

    fn name(&self) -> String {
        self.0.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("⊗")
    }
}

/// `F(f)` for a functor tag.
pub fn functor_on_map(tag: FunctorTag, f: &MapMatrix) -> MapMatrix {
    tag.on_map(f)
}

pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests;
