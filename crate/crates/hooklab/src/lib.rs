//! Exact enumeration and identity checking for hook-length formulas, excited
//! diagrams and factorial Grothendieck polynomials.
//!
//! Formulas are generic over the scalar through [`arith::Ring`] and
//! [`arith::Field`]; exact rationals are the default instantiation.

pub mod arith;
pub mod diagrams;
pub mod error;
pub mod grothendieck;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{HookError, Result};
pub use shapes::{Cell, Partition, SkewShape};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Polynomial in one formal variable with rational coefficients.
pub type Poly = arith::UniPoly;
