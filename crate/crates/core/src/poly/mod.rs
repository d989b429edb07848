//! Exact polynomial arithmetic.

mod det;
mod monomial;
mod polynomial;
mod rational;

pub use det::{det, det_bareiss, det_laplace, det_laplace_with, det_poly, Ring, LAPLACE_MAX};
pub use monomial::MultiIndex;
pub use polynomial::{Family, SparsePolynomial};
pub use rational::{ParseRationalError, Rational};
