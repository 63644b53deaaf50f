use rayon::prelude::*;

use super::Functor;
use crate::error::{Error, Result};
use crate::linear::{normalize_sparse, BasisLabel, Echelon, LabeledFreeModule, MapMatrix, SparseVec};
use crate::ring::{Field, Scalar};

/// `cr_k(F)(V_1, ..., V_k)` as the image of the cross-effect idempotent on `F(V_1 ⊕ ... ⊕ V_k)`.
#[derive(Clone)]
pub struct CrossEffect {
    pub args: Vec<LabeledFreeModule>,
    /// `F(V_1 ⊕ ... ⊕ V_k)`.
    pub ambient: LabeledFreeModule,
    /// Basis: the pivot columns of the idempotent, labelled like the ambient columns.
    pub module: LabeledFreeModule,
    /// `cr_k -> F(⊕ V_i)`.
    pub inclusion: MapMatrix,
    idempotent: Vec<SparseVec>,
    coords: Echelon,
}

impl CrossEffect {
    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// Coordinates of an element of the image.
    pub fn coordinates(&self, v: &[(u32, Scalar)]) -> Option<SparseVec> {
        self.coords.express(v)
    }

    /// Coordinates of the idempotent applied to an arbitrary ambient vector.
    pub fn project(&self, v: &[(u32, Scalar)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, x) in v {
            acc.extend(self.idempotent[*i as usize].iter().map(|(r, y)| (*r, y * x)));
        }
        self.coords.express(&normalize_sparse(acc)).expect("idempotent image")
    }
}

pub(crate) fn field_columns(m: &MapMatrix) -> Vec<SparseVec> {
    m.columns()
        .iter()
        .map(|c| c.iter().map(|(r, p)| (*r, p.constant_value().expect("constant entries"))).collect())
        .collect()
}

fn require_field(m: &LabeledFreeModule) -> Result<Field> {
    if m.ring().nvars() > 0 {
        return Err(Error::NotAField("cross-effects are computed over the base field".into()));
    }
    Ok(m.ring().field())
}

/// Projection of `⊕ V_i` onto the summands in `keep`.
fn summand_projection(sum: &LabeledFreeModule, keep: &[bool]) -> MapMatrix {
    let one = sum.ring().one();
    let cols = sum
        .basis()
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            BasisLabel::Summand { index, .. } if keep[*index as usize] => vec![(i as u32, one.clone())],
            _ => Vec::new(),
        })
        .collect();
    MapMatrix::new(sum, sum, cols).expect("projection shapes")
}

pub fn cross_effect(f: &dyn Functor, args: &[LabeledFreeModule]) -> Result<CrossEffect> {
    let first = args.first().ok_or_else(|| Error::Config("cross-effect of no arguments".into()))?;
    let field = require_field(first)?;
    let k = args.len();
    let sum = LabeledFreeModule::direct_sum(&args.iter().collect::<Vec<_>>());
    let ambient = f.on_module(&sum);
    let terms: Vec<(bool, Vec<SparseVec>)> = (0u32..1 << k)
        .into_par_iter()
        .map(|mask| {
            let keep: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            let m = f.on_map_onto(&summand_projection(&sum, &keep), &ambient, &ambient);
            ((k - mask.count_ones() as usize) % 2 == 1, field_columns(&m))
        })
        .collect();
    let minus_one = field.from_i64(-1);
    let idempotent: Vec<SparseVec> = (0..ambient.rank())
        .map(|c| {
            let mut acc = Vec::new();
            for (neg, cols) in &terms {
                if *neg {
                    acc.extend(cols[c].iter().map(|(r, x)| (*r, x * &minus_one)));
                } else {
                    acc.extend(cols[c].iter().cloned());
                }
            }
            normalize_sparse(acc)
        })
        .collect();
    let mut pivots = Echelon::new(field);
    let mut coords = Echelon::tracking(field);
    let mut chosen = Vec::new();
    for (c, col) in idempotent.iter().enumerate() {
        if pivots.insert(col) {
            coords.insert(col);
            chosen.push(c);
        }
    }
    let module = LabeledFreeModule::from_sorted(ambient.ring(), chosen.iter().map(|&c| ambient.label(c).clone()).collect());
    let ring = ambient.ring().clone();
    let inclusion = MapMatrix::new(
        &module,
        &ambient,
        chosen
            .iter()
            .map(|&c| idempotent[c].iter().map(|(r, x)| (*r, ring.constant(x.clone()))).collect())
            .collect(),
    )?;
    Ok(CrossEffect {
        args: args.to_vec(),
        ambient,
        module,
        inclusion,
        idempotent,
        coords,
    })
}

/// A map between cross-effects together with its source and target.
pub struct EpsilonMap {
    pub source: CrossEffect,
    pub target: CrossEffect,
    pub map: MapMatrix,
}

/// Arguments repeated according to `eps`, and for each copy the argument it came from.
fn expand(args: &[LabeledFreeModule], eps: &[usize]) -> Result<(Vec<LabeledFreeModule>, Vec<u32>)> {
    if eps.len() != args.len() || eps.contains(&0) {
        return Err(Error::Config(format!("malformed ε {eps:?} for {} arguments", args.len())));
    }
    let mut copies = Vec::new();
    let mut origin = Vec::new();
    for (i, (a, &e)) in args.iter().zip(eps).enumerate() {
        for _ in 0..e {
            copies.push(a.clone());
            origin.push(i as u32);
        }
    }
    Ok((copies, origin))
}

/// Summand-wise map between direct sums: `Summand(c, x)` on the source side is tied to
/// `Summand(origin[c], x)` on the other side.
fn summand_map(copies: &LabeledFreeModule, sums: &LabeledFreeModule, origin: &[u32], diagonal: bool) -> MapMatrix {
    let one = copies.ring().one();
    let pair = |l: &BasisLabel| match l {
        BasisLabel::Summand { index, inner } => BasisLabel::summand(origin[*index as usize], (**inner).clone()),
        _ => unreachable!("direct sum labels"),
    };
    if diagonal {
        let mut cols = vec![Vec::new(); sums.rank()];
        for (i, l) in copies.basis().iter().enumerate() {
            let j = sums.index_of(&pair(l)).expect("matching summand");
            cols[j].push((i as u32, one.clone()));
        }
        MapMatrix::new(sums, copies, cols).expect("diagonal shapes")
    } else {
        let cols = copies
            .basis()
            .iter()
            .map(|l| vec![(sums.index_of(&pair(l)).expect("matching summand") as u32, one.clone())])
            .collect();
        MapMatrix::new(copies, sums, cols).expect("sum shapes")
    }
}

/// Map between cross-effects induced by `map : F(⊕ V_i) -> G(⊕ W_j)`: include, apply, then project.
pub fn induced_map(map: &MapMatrix, from: &CrossEffect, to: &CrossEffect) -> Result<MapMatrix> {
    let fm = field_columns(map);
    let ring = to.module.ring().clone();
    let cols = field_columns(&from.inclusion)
        .iter()
        .map(|v| {
            let mut acc = Vec::new();
            for (i, x) in v {
                acc.extend(fm[*i as usize].iter().map(|(r, y)| (*r, y * x)));
            }
            to.project(&normalize_sparse(acc)).into_iter().map(|(r, x)| (r, ring.constant(x))).collect()
        })
        .collect();
    MapMatrix::new(&from.module, &to.module, cols)
}

/// `Δ_ε : cr_k(F)(V_1..V_k) -> cr_l(F)(V_1^{ε_1}, ..., V_k^{ε_k})`, induced by the diagonals.
pub fn delta_map(f: &dyn Functor, args: &[LabeledFreeModule], eps: &[usize]) -> Result<EpsilonMap> {
    let (copies, origin) = expand(args, eps)?;
    let source = cross_effect(f, args)?;
    let target = cross_effect(f, &copies)?;
    let sum = LabeledFreeModule::direct_sum(&args.iter().collect::<Vec<_>>());
    let big = LabeledFreeModule::direct_sum(&copies.iter().collect::<Vec<_>>());
    let fd = f.on_map_onto(&summand_map(&big, &sum, &origin, true), &source.ambient, &target.ambient);
    let map = induced_map(&fd, &source, &target)?;
    Ok(EpsilonMap { source, target, map })
}

/// `+_ε : cr_l(F)(V_1^{ε_1}, ..., V_k^{ε_k}) -> cr_k(F)(V_1..V_k)`, induced by the sums.
pub fn plus_map(f: &dyn Functor, args: &[LabeledFreeModule], eps: &[usize]) -> Result<EpsilonMap> {
    let (copies, origin) = expand(args, eps)?;
    let source = cross_effect(f, &copies)?;
    let target = cross_effect(f, args)?;
    let sum = LabeledFreeModule::direct_sum(&args.iter().collect::<Vec<_>>());
    let big = LabeledFreeModule::direct_sum(&copies.iter().collect::<Vec<_>>());
    let fp = f.on_map_onto(&summand_map(&big, &sum, &origin, false), &source.ambient, &target.ambient);
    let map = induced_map(&fp, &source, &target)?;
    Ok(EpsilonMap { source, target, map })
}
