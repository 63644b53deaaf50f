//! Labeled free modules, polynomial matrices between them, and field linear algebra.

mod field;
mod label;
mod matrix;
mod module;

pub use field::{normalize_sparse, Echelon, FieldMatrix, SparseVec};
pub use label::BasisLabel;
pub use matrix::{normalize_poly_vec, MapMatrix, PolyVec};
pub use module::LabeledFreeModule;
pub(crate) use module::MonomialCache;
