//! Lie algebras: structure constants, derivations, basis changes and the
//! catalog of four-dimensional algebras.

pub mod algebra;
pub mod catalog;
pub mod io;

pub use algebra::{format_combination, DerivationSpace, JacobiFailure, JacobiReport, LieAlgebra};
pub use catalog::{catalog_get, families_matching, parse_catalog_id, recognize, table_brackets, CatalogId, Family, Params};
pub use io::{lie_algebra_to_json, parse_lie_algebra, LieAlgebraFile};
