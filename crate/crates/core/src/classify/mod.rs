//! Isomorphism, invariants, the two-dimensional classification and the
//! finite-field census.

pub mod canonical;
pub mod census;
pub mod dim2;
pub mod iso;

pub use census::{associative_products, census, Census, CensusClass};
pub use dim2::{classify_dim2, dim2_constraints, ClassKind, ClassLabel, ParamTable, ZeroCubedType};
pub use iso::{are_isomorphic, automorphism_group, fingerprint, search_in, search_isomorphism, Fingerprint};
