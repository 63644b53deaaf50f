//! Bounded chain complexes, total complexes, and the graded and Gröbner homology engines.

mod chain;
mod homology;
mod kernel;

pub use chain::{shift, total_complex, total_complex_many, ChainComplex, ChainMap};
pub use homology::{
    check_quasi_isomorphism, engines_agree, homology_graded, homology_graded_with, homology_groebner, DegreeHomology,
    HomologyOptions, HomologyReport, QuasiIsoCheck,
};
pub use kernel::monomial_kernel;
