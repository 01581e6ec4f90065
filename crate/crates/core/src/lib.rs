//! Star-transforms of finite acyclic graded free complexes.
//!
//! Given a resolution `F` of `R/M` and a homogeneous system of parameters
//! `x_1..x_n` with `Im φ_n ⊆ (x)F_{n-1}`, the crate builds the complex `∗F`
//! resolving `R/(M : (x))`, and checks every step with a Gröbner-basis
//! kernel over exact coefficients.

pub mod complex;
pub mod corpus;
pub mod error;
pub mod format;
pub mod groebner;
pub mod poly;
pub mod transform;
pub mod verify;

pub use complex::{FreeComplex, KoszulIndex, SopData};
pub use error::{Error, Result};
pub use groebner::{BaseRing, GradedFreeModule, ModuleVector, QuotientRingSpec, Submodule};
pub use poly::{Field, PolyMatrix, PolyRing, Polynomial, Scalar};
