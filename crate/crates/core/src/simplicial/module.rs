use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linear::{normalize_poly_vec, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Ring;

/// Simplicial module truncated at `n_max`: levels `0..=n_max`, faces out of levels
/// `1..=n_max`, degeneracies out of levels `0..n_max`.
#[derive(Clone)]
pub struct SimplicialModule {
    ring: Arc<Ring>,
    levels: Vec<LabeledFreeModule>,
    /// `faces[n][i] = d_i : A_n -> A_{n-1}`; `faces[0]` is empty.
    faces: Vec<Vec<MapMatrix>>,
    /// `degeneracies[n][j] = s_j : A_n -> A_{n+1}`; `degeneracies[n_max]` is empty.
    degeneracies: Vec<Vec<MapMatrix>>,
}

impl SimplicialModule {
    pub fn new(
        ring: &Arc<Ring>,
        levels: Vec<LabeledFreeModule>,
        faces: Vec<Vec<MapMatrix>>,
        degeneracies: Vec<Vec<MapMatrix>>,
    ) -> Result<SimplicialModule> {
        let n_max = levels.len().checked_sub(1).ok_or_else(|| Error::Simplicial("no levels".into()))?;
        if faces.len() != n_max + 1 || degeneracies.len() != n_max + 1 {
            return Err(Error::Simplicial("structure maps do not match the number of levels".into()));
        }
        for n in 0..=n_max {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            let want_degs = if n == n_max { 0 } else { n + 1 };
            if faces[n].len() != want_faces || degeneracies[n].len() != want_degs {
                return Err(Error::Simplicial(format!("wrong number of structure maps at level {n}")));
            }
            for d in &faces[n] {
                if d.source() != &levels[n] || d.target() != &levels[n - 1] {
                    return Err(Error::Simplicial(format!("face out of level {n} has the wrong shape")));
                }
            }
            for s in &degeneracies[n] {
                if s.source() != &levels[n] || s.target() != &levels[n + 1] {
                    return Err(Error::Simplicial(format!("degeneracy out of level {n} has the wrong shape")));
                }
            }
        }
        Ok(SimplicialModule {
            ring: ring.clone(),
            levels,
            faces,
            degeneracies,
        })
    }

    /// Constant simplicial module on `m`: all structure maps are identities.
    pub fn constant(m: &LabeledFreeModule, n_max: usize) -> SimplicialModule {
        let id = MapMatrix::identity(m);
        SimplicialModule {
            ring: m.ring().clone(),
            levels: vec![m.clone(); n_max + 1],
            faces: (0..=n_max).map(|n| if n == 0 { Vec::new() } else { vec![id.clone(); n + 1] }).collect(),
            degeneracies: (0..=n_max).map(|n| if n == n_max { Vec::new() } else { vec![id.clone(); n + 1] }).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &LabeledFreeModule {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[LabeledFreeModule] {
        &self.levels
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.rank()).collect()
    }

    pub fn face(&self, n: usize, i: usize) -> &MapMatrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &MapMatrix {
        &self.degeneracies[n][j]
    }

    pub fn faces(&self, n: usize) -> &[MapMatrix] {
        &self.faces[n]
    }

    pub fn degeneracies(&self, n: usize) -> &[MapMatrix] {
        &self.degeneracies[n]
    }

    /// Every degeneracy sends each basis element to a basis element with coefficient 1.
    pub fn has_monomial_degeneracies(&self) -> bool {
        self.degeneracies.iter().flatten().all(|s| monomial_index_map(s).is_some())
    }

    /// First violated simplicial identity within the truncation window, if any.
    pub fn identity_violation(&self) -> Option<String> {
        let n_max = self.n_max();
        let mut checks: Vec<(String, Box<dyn Fn() -> bool + Sync + '_>)> = Vec::new();
        for n in 2..=n_max {
            for j in 1..=n {
                for i in 0..j {
                    checks.push((
                        format!("d_{i} d_{j} = d_{} d_{i} on level {n}", j - 1),
                        Box::new(move || self.faces[n - 1][i].after(&self.faces[n][j]) == self.faces[n - 1][j - 1].after(&self.faces[n][i])),
                    ));
                }
            }
        }
        for n in 0..n_max.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    checks.push((
                        format!("s_{i} s_{j} = s_{} s_{i} on level {n}", j + 1),
                        Box::new(move || {
                            self.degeneracies[n + 1][i].after(&self.degeneracies[n][j])
                                == self.degeneracies[n + 1][j + 1].after(&self.degeneracies[n][i])
                        }),
                    ));
                }
            }
        }
        for n in 0..n_max {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    checks.push((
                        format!("d_{i} s_{j} on level {n}"),
                        Box::new(move || {
                            let lhs = self.faces[n + 1][i].after(&self.degeneracies[n][j]);
                            let rhs = if i == j || i == j + 1 {
                                MapMatrix::identity(&self.levels[n])
                            } else if i < j {
                                self.degeneracies[n - 1][j - 1].after(&self.faces[n][i])
                            } else {
                                self.degeneracies[n - 1][j].after(&self.faces[n][i - 1])
                            };
                            lhs == rhs
                        }),
                    ));
                }
            }
        }
        checks.par_iter().find_first(|(_, ok)| !ok()).map(|(name, _)| name.clone())
    }

    /// Levels with differential `Σ (-1)^i d_i`.
    pub fn unnormalized(&self) -> ChainComplex {
        let diffs = (1..=self.n_max())
            .map(|n| MapMatrix::new(&self.levels[n], &self.levels[n - 1], alternating_sum(&self.faces[n], None)).expect("face shapes"))
            .collect();
        ChainComplex::new(&self.ring, 0, self.levels.clone(), diffs).expect("alternating face sums square to zero")
    }
}

/// Columns of `Σ (-1)^i d_i`, restricted to `columns` when given.
pub(crate) fn alternating_sum(faces: &[MapMatrix], columns: Option<&[u32]>) -> Vec<PolyVec> {
    let src = faces[0].source();
    let cols: Vec<u32> = match columns {
        Some(c) => c.to_vec(),
        None => (0..src.rank() as u32).collect(),
    };
    cols.iter()
        .map(|&c| {
            let mut v = Vec::new();
            for (i, d) in faces.iter().enumerate() {
                for (r, p) in d.column(c as usize) {
                    v.push((*r, if i % 2 == 0 { p.clone() } else { p.neg() }));
                }
            }
            normalize_poly_vec(v)
        })
        .collect()
}

/// Column -> row index map of a basis-monomial matrix.
pub(crate) fn monomial_index_map(m: &MapMatrix) -> Option<Vec<u32>> {
    m.columns()
        .iter()
        .map(|c| match c.as_slice() {
            [(r, p)] if p.is_constant() && p.constant_value().is_some_and(|v| v.is_one()) => Some(*r),
            _ => None,
        })
        .collect()
}

/// Level-wise tensor product (the diagonal of the multi-simplicial tensor product).
pub fn diagonal_tensor(factors: &[&SimplicialModule]) -> Result<SimplicialModule> {
    let first = factors.first().ok_or_else(|| Error::Simplicial("no factors".into()))?;
    let n_max = first.n_max();
    if factors.iter().any(|a| a.n_max() != n_max) {
        return Err(Error::Simplicial("factors have different truncation degrees".into()));
    }
    if factors.len() == 1 {
        return Ok((*first).clone());
    }
    let levels: Vec<LabeledFreeModule> = (0..=n_max)
        .into_par_iter()
        .map(|n| LabeledFreeModule::tensor(&factors.iter().map(|a| a.level(n)).collect::<Vec<_>>()))
        .collect();
    let tensor_at = |maps: Vec<&MapMatrix>, src: &LabeledFreeModule, tgt: &LabeledFreeModule| {
        MapMatrix::tensor_many_onto(&maps, src, tgt)
    };
    let faces: Vec<Vec<MapMatrix>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| tensor_at(factors.iter().map(|a| a.face(n, i)).collect(), &levels[n], &levels[n - 1]))
                .collect()
        })
        .collect();
    let degeneracies: Vec<Vec<MapMatrix>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            if n == n_max {
                return Vec::new();
            }
            (0..=n)
                .map(|j| tensor_at(factors.iter().map(|a| a.degeneracy(n, j)).collect(), &levels[n], &levels[n + 1]))
                .collect()
        })
        .collect();
    SimplicialModule::new(first.ring(), levels, faces, degeneracies)
}

impl fmt::Debug for SimplicialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialModule(n_max {}, ranks {:?})", self.n_max(), self.ranks())
    }
}
