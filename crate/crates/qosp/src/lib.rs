//! Exact computer algebra for the rank-one quantized orthosymplectic pair.
//!
//! The crate implements the quantized enveloping superalgebra of osp(1,2),
//! its dual quantum supergroup of 2x2 matrices, the Hopf pairing between
//! them, and the machinery built on top: one-sided module actions, matrix
//! elements of the irreducible comodules, primitive elements, invariant
//! vectors of twisted-primitive elements, spherical functions, and the
//! identification of those objects with little q-Jacobi, dual q-Krawtchouk,
//! and Askey-Wilson polynomials.
//!
//! All arithmetic is exact, over Q(i)(t^(1/2)) extended by square roots of
//! cyclotomic values of t^-2; see [`scalar`].  A fixed-point complex backend
//! evaluates any identity at a numeric q for independent confirmation.

pub mod action;
pub mod algebra;
pub mod error;
pub mod comodule;
pub mod half;
pub mod hopf;
pub mod invariant;
pub mod linalg;
pub mod symrat;
pub mod parse;
pub mod qpoly;
pub mod scalar;
pub mod spherical;

pub use error::{Error, Result};
pub use scalar::{Gauss, RatFunc, Scalar};
