use super::chain::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linear::{normalize_poly_vec, LabeledFreeModule, MapMatrix, PolyVec};

/// Kernel basis of a map sending each basis element to a basis element or to zero.
struct MonomialKernel {
    module: LabeledFreeModule,
    /// Source basis vectors `b` paired with the fibre minimum they are measured against.
    basis: Vec<(u32, Option<u32>)>,
    /// Source index -> kernel coordinate; `None` for fibre minima.
    position: Vec<Option<u32>>,
}

fn monomial_kernel_of(m: &MapMatrix) -> Result<MonomialKernel> {
    let mut fibre_min: Vec<Option<u32>> = vec![None; m.nrows()];
    let mut image = Vec::with_capacity(m.ncols());
    for col in m.columns() {
        match col.as_slice() {
            [] => image.push(None),
            [(r, p)] if p.constant_value().is_some_and(|c| c.is_one()) => image.push(Some(*r)),
            _ => return Err(Error::Shape("map does not send basis elements to basis elements".into())),
        }
    }
    let mut basis = Vec::new();
    let mut position = vec![None; m.ncols()];
    for (j, im) in image.iter().enumerate() {
        match im {
            None => {
                position[j] = Some(basis.len() as u32);
                basis.push((j as u32, None));
            }
            Some(r) => match fibre_min[*r as usize] {
                None => fibre_min[*r as usize] = Some(j as u32),
                Some(b0) => {
                    position[j] = Some(basis.len() as u32);
                    basis.push((j as u32, Some(b0)));
                }
            },
        }
    }
    let labels = basis.iter().map(|(b, _)| m.source().label(*b as usize).clone()).collect();
    Ok(MonomialKernel {
        module: LabeledFreeModule::from_sorted(m.ring(), labels),
        basis,
        position,
    })
}

/// Kernel subcomplex of a chain map whose components send basis elements to basis elements
/// (coefficient 1) or to zero. Degree `k` has basis `b` for `φ(b) = 0` and `b - b_0` for
/// every other member of a fibre with least element `b_0`.
pub fn monomial_kernel(phi: &ChainMap) -> Result<ChainComplex> {
    let c = &phi.source;
    let support: Vec<i32> = c.support().collect();
    let kernels = support
        .iter()
        .map(|&k| monomial_kernel_of(&phi.component(k)))
        .collect::<Result<Vec<_>>>()?;
    let mut diffs = Vec::new();
    for i in 1..support.len() {
        let d = c.differential(support[i]);
        let (src, tgt) = (&kernels[i], &kernels[i - 1]);
        let cols: Vec<PolyVec> = src
            .basis
            .iter()
            .map(|&(b, b0)| {
                let mut v: PolyVec = d.column(b as usize).clone();
                if let Some(b0) = b0 {
                    v.extend(d.column(b0 as usize).iter().map(|(r, p)| (*r, p.neg())));
                }
                // fibre minima are determined by the other coordinates
                normalize_poly_vec(v.into_iter().filter_map(|(r, p)| tgt.position[r as usize].map(|j| (j, p))).collect())
            })
            .collect();
        diffs.push(MapMatrix::new(&src.module, &tgt.module, cols)?);
    }
    ChainComplex::new(c.ring(), c.lo(), kernels.into_iter().map(|k| k.module).collect(), diffs)
}
