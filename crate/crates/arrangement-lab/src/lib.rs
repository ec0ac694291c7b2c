//! Exact invariants of complex hyperplane arrangement complements.
//!
//! The library computes, over exact rational arithmetic: the intersection
//! poset and its Möbius function, characteristic polynomials and Betti
//! numbers (by two independent routes), generic hyperplanes and sections,
//! the projective closure with its dense edges at infinity, nonresonance of
//! diagonalizable local systems, and the dimension-level certificates for
//! twisted-homology vanishing, Hurewicz surjectivity, Euler positivity, and
//! higher-homotopy non-vanishing.

pub mod arrangement;
pub mod at_infinity;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod linalg;
pub mod local_system;
pub mod oracle;
pub mod os_algebra;
pub mod poset;
pub mod rat;
pub mod report;

pub use arrangement::{Arrangement, GenericityVerdict, Hyperplane};
pub use error::{Error, Result};
pub use local_system::LocalSystem;
pub use rat::Rat;
