//! Exact homological algebra over small polynomial rings: Dold-Kan, polynomial
//! functors on simplicial modules, Koszul complexes, cross-effects.

pub mod complex;
pub mod error;
pub mod functors;
pub mod groebner;
pub mod koszul;
pub mod linear;
pub mod ring;
pub mod scenarios;
pub mod simplicial;

pub use error::{Error, Result};
