//! Exact-arithmetic engine for finite-dimensional Leibniz algebras.
//!
//! Everything runs over the rationals with no rounding anywhere: structure
//! constants, derivation spaces, annihilators, central series, second
//! cohomology. The `families` module constructs the naturally graded
//! p-filiform non-Lie algebras and their maximal solvable extensions from
//! their multiplication tables, and the remaining modules verify the
//! structural claims about them (derivation shapes, completeness,
//! cohomological rigidity) by direct computation.

pub mod algebra;
pub mod cohomology;
pub mod derivations;
pub mod error;
pub mod families;
pub mod isomorphism;
pub mod matrix;
pub mod sample;
pub mod scalar;
pub mod solve;
pub mod subspace;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::Subspace;
