//! Homological layer: polynomial matrices, finite-length modules presented by
//! commuting variable actions, chain complexes with scalar and Groebner
//! homology routes, and minimal free resolutions.

pub mod complex;
pub mod flmodule;
pub mod polymatrix;
pub mod resolution;

pub use complex::{
    koszul_complex, kron_right, subquotient_length, tensored_homology_length, ChainComplex,
    ScalarComplex,
};
pub use flmodule::FiniteLengthModule;
pub use polymatrix::PolyMatrix;
pub use resolution::{
    free_resolution, minimal_generators, presentation_of, span_trim, Resolution,
};
#[doc(hidden)]
pub use resolution::minimal_split as minimal_split_probe;
