//! Exact scalar arithmetic: rationals, polynomials and rational functions in `u`.

mod poly;
mod ratfunc;
mod rational;

pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rational::{binomial, Rational};
