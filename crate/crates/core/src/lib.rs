//! Computational kernel for exact verification of finite homological
//! invariants: lengths, ranks, Euler characteristics and Frobenius-twisted
//! lengths of modules presented over small quotient rings of polynomial
//! rings in prime characteristic.
//!
//! Layering, bottom to top:
//!
//! * [`exactlin`]: dense linear algebra over GF(p).
//! * [`polyring`]: weighted-grevlex monomials and polynomial arithmetic.
//! * [`groebner`]: Buchberger engine for submodules of free modules over a
//!   quotient ring, with length, socle, colon and syzygy queries.
//! * [`homology`]: chain complexes, Tor via scalar substitution, free
//!   resolutions, Frobenius twists and base change.
//! * [`fixtures`]: the specific rings, modules and maps under verification,
//!   loaded from audited text assets.

pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod groebner;
pub mod homology;
pub mod polyring;

pub use error::{Error, Result};
