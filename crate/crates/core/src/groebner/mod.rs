//! Completion-based machinery: term orders over free modules, the Buchberger
//! engine, kernel (syzygy) generation, and quotient queries.

pub mod engine;
pub mod modvec;
pub mod queries;
pub mod syzygy;

pub use engine::{
    ideal_basis, module_groebner, reduce_mod_ideal, Budget, GbStats, GroebnerBasis, IncrementalGb,
};
pub use modvec::{MTerm, ModOrder, ModVec};
pub use queries::{
    basis_positions, coords, is_regular_element, multiplication_matrices, quotient_length,
    ring_dimension, socle, std_monomials, windowed_quotient_dim, windowed_quotient_stable,
    SocleInfo,
};
pub use syzygy::{kernel_generators, KernelRun};
