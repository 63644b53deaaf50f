use rayon::prelude::*;

use super::module::{diagonal_tensor, monomial_index_map, SimplicialModule};
use super::normalize::{normalize_with_data, Normalization};
use crate::complex::{total_complex, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linear::{normalize_poly_vec, MapMatrix, PolyVec};

/// The complexes and maps of the Eilenberg-Zilber comparison for a pair.
pub struct EilenbergZilber {
    /// `Tot(NA ⊗ NB)` restricted to degrees `0..=n_max`.
    pub tot: ChainComplex,
    /// `NΔ(A ⊗ B)`.
    pub diagonal: ChainComplex,
    pub shuffle: ChainMap,
    pub aw: ChainMap,
}

/// Offsets of the `(p, q)` blocks of `Tot(NA ⊗ NB)_n`, by `p`.
fn block_offsets(na: &ChainComplex, nb: &ChainComplex, n: usize) -> Vec<Option<usize>> {
    let mut acc = 0;
    (0..=n)
        .map(|p| {
            let q = n - p;
            if na.support().contains(&(p as i32)) && nb.support().contains(&(q as i32)) {
                let o = acc;
                acc += na.rank(p as i32) * nb.rank(q as i32);
                Some(o)
            } else {
                None
            }
        })
        .collect()
}

/// All `(p, q)`-shuffles as `(μ, ν, sign)`.
fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    let n = p + q;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let mu: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let nu: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let inversions: usize = mu.iter().map(|m| nu.iter().filter(|v| *v < m).count()).sum();
        out.push((mu, nu, inversions % 2 == 1));
    }
    out
}

/// Apply `s_{idx[last]} ... s_{idx[0]}` to basis element `i` of level `n`.
fn degenerate(maps: &[Vec<Vec<u32>>], n: usize, i: u32, idx: &[usize]) -> u32 {
    idx.iter().enumerate().fold(i, |acc, (step, &j)| maps[n + step][j][acc as usize])
}

fn index_maps(a: &SimplicialModule) -> Result<Vec<Vec<Vec<u32>>>> {
    (0..=a.n_max())
        .map(|n| {
            a.degeneracies(n)
                .iter()
                .map(|s| monomial_index_map(s).ok_or_else(|| Error::Simplicial("degeneracies must be basis-monomial".into())))
                .collect()
        })
        .collect()
}

/// Shuffle map `Tot(NA ⊗ NB) -> NΔ(A ⊗ B)` and Alexander-Whitney map back, both checked to be chain maps.
pub fn eilenberg_zilber(a: &SimplicialModule, b: &SimplicialModule) -> Result<EilenbergZilber> {
    let n_max = a.n_max();
    let na = normalize_with_data(a)?;
    let nb = normalize_with_data(b)?;
    let delta = diagonal_tensor(&[a, b])?;
    let nd = normalize_with_data(&delta)?;
    let tot = total_complex(&na.complex, &nb.complex).restricted(0, n_max as i32);
    let shuffle = shuffle_components(a, b, &na, &nb, &nd, &tot)?;
    let aw = aw_components(a, b, &na, &nb, &nd, &tot)?;
    Ok(EilenbergZilber {
        shuffle: ChainMap::new(&tot, &nd.complex, shuffle)?,
        aw: ChainMap::new(&nd.complex, &tot, aw)?,
        tot,
        diagonal: nd.complex,
    })
}

fn shuffle_components(
    a: &SimplicialModule,
    b: &SimplicialModule,
    na: &Normalization,
    nb: &Normalization,
    nd: &Normalization,
    tot: &ChainComplex,
) -> Result<Vec<(i32, MapMatrix)>> {
    let ring = a.ring();
    let (ia, ib) = (index_maps(a)?, index_maps(b)?);
    (0..=a.n_max())
        .into_par_iter()
        .map(|n| {
            let mut cols: Vec<PolyVec> = Vec::with_capacity(tot.rank(n as i32));
            let width_b = b.level(n).rank() as u32;
            for p in 0..=n {
                let q = n - p;
                let sh = shuffles(p, q);
                for &x in &na.nondegenerate[p] {
                    for &y in &nb.nondegenerate[q] {
                        let mut v = Vec::new();
                        for (mu, nu, odd) in &sh {
                            let xa = degenerate(&ia, p, x, nu);
                            let yb = degenerate(&ib, q, y, mu);
                            if let Some(j) = nd.position[n][(xa * width_b + yb) as usize] {
                                v.push((j, if *odd { ring.int(-1) } else { ring.one() }));
                            }
                        }
                        cols.push(normalize_poly_vec(v));
                    }
                }
            }
            MapMatrix::new(&tot.module(n as i32), &nd.complex.module(n as i32), cols).map(|m| (n as i32, m))
        })
        .collect()
}

fn aw_components(
    a: &SimplicialModule,
    b: &SimplicialModule,
    na: &Normalization,
    nb: &Normalization,
    nd: &Normalization,
    tot: &ChainComplex,
) -> Result<Vec<(i32, MapMatrix)>> {
    (0..=a.n_max())
        .into_par_iter()
        .map(|n| {
            // front faces d_{p+1} ... d_n of A and back faces d_0^p of B, projected to N
            let mut front: Vec<MapMatrix> = Vec::with_capacity(n + 1);
            let mut acc = MapMatrix::identity(a.level(n));
            for p in (0..=n).rev() {
                front.push(acc.clone());
                if p > 0 {
                    acc = a.face(p, p).after(&acc);
                }
            }
            front.reverse();
            let mut back: Vec<MapMatrix> = Vec::with_capacity(n + 1);
            let mut acc = MapMatrix::identity(b.level(n));
            for p in 0..=n {
                back.push(acc.clone());
                if p < n {
                    acc = b.face(n - p, 0).after(&acc);
                }
            }
            let offsets = block_offsets(&na.complex, &nb.complex, n);
            let width_b = b.level(n).rank() as u32;
            let cols: Vec<PolyVec> = nd.nondegenerate[n]
                .iter()
                .map(|&z| {
                    let (x, y) = (z / width_b, z % width_b);
                    let mut v = Vec::new();
                    for p in 0..=n {
                        let Some(off) = offsets[p] else { continue };
                        let rb = nb.complex.rank((n - p) as i32) as u32;
                        let fa = na.project(p, front[p].column(x as usize));
                        let fb = nb.project(n - p, back[p].column(y as usize));
                        for (i, s) in &fa {
                            for (j, t) in &fb {
                                v.push((off as u32 + i * rb + j, s.mul(t)));
                            }
                        }
                    }
                    normalize_poly_vec(v)
                })
                .collect();
            MapMatrix::new(&nd.complex.module(n as i32), &tot.module(n as i32), cols).map(|m| (n as i32, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_counts_and_signs() {
        let s = shuffles(1, 1);
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().filter(|t| t.2).count(), 1);
        assert_eq!(shuffles(2, 3).len(), 10);
        assert!(shuffles(0, 3).iter().all(|t| !t.2));
    }
}
