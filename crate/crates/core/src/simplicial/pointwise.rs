use rayon::prelude::*;

use super::module::SimplicialModule;
use crate::functors::Functor;
use crate::linear::{LabeledFreeModule, MapMatrix};

/// `F` applied levelwise to a simplicial module.
pub fn apply_pointwise_functor(f: &dyn Functor, a: &SimplicialModule) -> SimplicialModule {
    let n_max = a.n_max();
    let levels: Vec<LabeledFreeModule> = a.levels().par_iter().map(|m| f.on_module(m)).collect();
    let faces: Vec<Vec<MapMatrix>> = (0..=n_max)
        .into_par_iter()
        .map(|n| a.faces(n).par_iter().map(|d| f.on_map_onto(d, &levels[n], &levels[n - 1])).collect())
        .collect();
    let degeneracies: Vec<Vec<MapMatrix>> = (0..=n_max)
        .into_par_iter()
        .map(|n| a.degeneracies(n).par_iter().map(|s| f.on_map_onto(s, &levels[n], &levels[n + 1])).collect())
        .collect();
    SimplicialModule::new(a.ring(), levels, faces, degeneracies).expect("functor preserves shapes")
}
