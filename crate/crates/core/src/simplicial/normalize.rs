use rayon::prelude::*;

use super::module::{alternating_sum, monomial_index_map, SimplicialModule};
use crate::complex::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linear::{BasisLabel, Echelon, FieldMatrix, LabeledFreeModule, MapMatrix, PolyVec};
use crate::ring::Poly;

/// Normalized complex together with the nondegenerate basis indices of each level.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub complex: ChainComplex,
    /// Sorted nondegenerate indices of level `n`.
    pub nondegenerate: Vec<Vec<u32>>,
    /// Level index -> position in the normalized module, `None` for degenerate elements.
    pub position: Vec<Vec<Option<u32>>>,
}

impl Normalization {
    pub fn is_nondegenerate(&self, n: usize, i: u32) -> bool {
        self.position[n][i as usize].is_some()
    }

    /// Image of a level-`n` vector in the normalized module (degenerate coordinates dropped).
    pub fn project(&self, n: usize, v: &[(u32, Poly)]) -> PolyVec {
        v.iter()
            .filter_map(|(i, p)| self.position[n][*i as usize].map(|j| (j, p.clone())))
            .collect()
    }
}

/// Normalized chain complex of `a`.
///
/// With basis-monomial degeneracies this is the coordinate complement of the degenerate
/// basis elements with differential `Σ (-1)^i d_i`. Otherwise, over a field, the Moore
/// complex `∩_{i≥1} ker d_i` with differential `d_0` is returned; over a polynomial ring
/// the input is rejected.
pub fn normalize(a: &SimplicialModule) -> Result<ChainComplex> {
    if a.has_monomial_degeneracies() {
        Ok(normalize_with_data(a)?.complex)
    } else if a.ring().nvars() == 0 {
        moore_complex(a)
    } else {
        Err(Error::Simplicial(
            "degeneracies are not basis-monomial; normalization over a polynomial ring needs them".into(),
        ))
    }
}

pub fn normalize_with_data(a: &SimplicialModule) -> Result<Normalization> {
    let n_max = a.n_max();
    let per_level: Vec<(Vec<u32>, Vec<Option<u32>>)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let rank = a.level(n).rank();
            let mut degenerate = vec![false; rank];
            if n > 0 {
                for s in a.degeneracies(n - 1) {
                    let map = monomial_index_map(s).ok_or_else(|| {
                        Error::Simplicial(format!("degeneracy into level {n} is not basis-monomial"))
                    })?;
                    for r in map {
                        degenerate[r as usize] = true;
                    }
                }
            }
            let mut nd = Vec::new();
            let mut pos = vec![None; rank];
            for i in 0..rank {
                if !degenerate[i] {
                    pos[i] = Some(nd.len() as u32);
                    nd.push(i as u32);
                }
            }
            Ok((nd, pos))
        })
        .collect::<Result<_>>()?;
    let (nondegenerate, position): (Vec<_>, Vec<_>) = per_level.into_iter().unzip();
    let modules: Vec<LabeledFreeModule> = (0..=n_max)
        .map(|n| {
            let labels = nondegenerate[n].iter().map(|&i| a.level(n).label(i as usize).clone()).collect();
            LabeledFreeModule::from_sorted(a.ring(), labels)
        })
        .collect();
    let diffs: Vec<MapMatrix> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let full = alternating_sum(a.faces(n), Some(&nondegenerate[n]));
            let cols = full
                .into_iter()
                .map(|c| c.into_iter().filter_map(|(r, p)| position[n - 1][r as usize].map(|j| (j, p))).collect())
                .collect();
            MapMatrix::new(&modules[n], &modules[n - 1], cols).expect("normalized differential")
        })
        .collect();
    let complex = ChainComplex::new(a.ring(), 0, modules, diffs)?;
    Ok(Normalization {
        complex,
        nondegenerate,
        position,
    })
}

/// Normalization of a level-wise map `maps[n] : A_n -> B_n` between simplicial modules.
pub fn normalize_map(na: &Normalization, nb: &Normalization, maps: &[MapMatrix]) -> Result<ChainMap> {
    let comps = maps
        .par_iter()
        .enumerate()
        .map(|(n, m)| {
            let cols: Vec<PolyVec> = na.nondegenerate[n].iter().map(|&c| nb.project(n, m.column(c as usize))).collect();
            let src = na.complex.module(n as i32);
            let tgt = nb.complex.module(n as i32);
            MapMatrix::new(&src, &tgt, cols).map(|m| (n as i32, m))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::new(&na.complex, &nb.complex, comps)
}

/// Moore complex over a field: `∩_{i≥1} ker d_i`, graded by internal degree, with differential `d_0`.
type FieldVec = Vec<(u32, crate::ring::Scalar)>;

fn moore_complex(a: &SimplicialModule) -> Result<ChainComplex> {
    let ring = a.ring();
    let field = ring.field();
    let to_field = |v: &PolyVec| -> Vec<(u32, crate::ring::Scalar)> {
        v.iter().map(|(r, p)| (*r, p.constant_value().expect("field ring"))).collect()
    };
    // kernel bases, kept per internal degree so that labels carry degrees
    let mut bases: Vec<Vec<(i32, FieldVec)>> = Vec::new();
    for n in 0..=a.n_max() {
        let level = a.level(n);
        let mut degrees: Vec<i32> = level.degrees().to_vec();
        degrees.sort();
        degrees.dedup();
        let mut basis = Vec::new();
        for t in degrees {
            let cols: Vec<u32> = (0..level.rank() as u32).filter(|&i| level.degree(i as usize) == t).collect();
            let mut stacked: Vec<Vec<(u32, crate::ring::Scalar)>> = Vec::new();
            let mut nrows = 0;
            let faces: Vec<&MapMatrix> = if n == 0 { Vec::new() } else { a.faces(n)[1..].iter().collect() };
            for &c in &cols {
                let mut v = Vec::new();
                let mut off = 0;
                for d in &faces {
                    v.extend(to_field(d.column(c as usize)).into_iter().map(|(r, x)| (r + off, x)));
                    off += d.nrows() as u32;
                }
                nrows = off as usize;
                stacked.push(v);
            }
            let m = FieldMatrix::from_columns(field, nrows, stacked);
            for k in m.kernel() {
                basis.push((t, k.into_iter().map(|(j, x)| (cols[j as usize], x)).collect()));
            }
        }
        bases.push(basis);
    }
    let modules: Vec<LabeledFreeModule> = bases
        .iter()
        .enumerate()
        .map(|(n, b)| {
            let width = b.len().saturating_sub(1).to_string().len();
            let labels = b
                .iter()
                .enumerate()
                .map(|(i, (t, _))| BasisLabel::atom(&format!("z{n}.{i:0width$}"), *t))
                .collect();
            LabeledFreeModule::new(ring, labels).expect("distinct")
        })
        .collect();
    let mut diffs = Vec::new();
    for n in 1..=a.n_max() {
        let mut ech = Echelon::tracking(field);
        for (_, v) in &bases[n - 1] {
            ech.insert(v);
        }
        let d0 = a.face(n, 0);
        let mut cols = Vec::new();
        for (_, v) in &bases[n] {
            let mut img = Vec::new();
            for (c, x) in v {
                img.extend(to_field(d0.column(*c as usize)).into_iter().map(|(r, y)| (r, &y * x)));
            }
            let img = crate::linear::normalize_sparse(img);
            let coords = ech
                .express(&img)
                .ok_or_else(|| Error::Simplicial("d_0 leaves the Moore complex".into()))?;
            cols.push(coords.into_iter().map(|(j, x)| (j, ring.constant(x))).collect());
        }
        diffs.push(MapMatrix::new(&modules[n], &modules[n - 1], cols)?);
    }
    ChainComplex::new(ring, 0, modules, diffs)
}
