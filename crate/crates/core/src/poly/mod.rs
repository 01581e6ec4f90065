//! Exact arithmetic: field scalars, weighted monomials, sparse polynomials,
//! term orders and polynomial matrices.

mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod ring;
mod scalar;

pub use matrix::{Grading, PolyMatrix};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::{poly_arith, Homogeneity, PolyOp, Polynomial};
pub use ring::{ModuleOrder, MonomialOrder, PolyRing, RingOrder};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
