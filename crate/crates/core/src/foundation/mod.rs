//! Exact arithmetic: rationals, multivariate polynomials, rational
//! functions, dense matrices and seeded generic points.

pub mod generic;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use generic::{generic_point, generic_rank};
pub use matrix::{quotient_dim, ExactMatrix, FnMatrix, Matrix, RankKernelImage};
pub use poly::{gcd, Monomial, Poly};
pub use ratfun::{Field, RatFun};
pub use rational::{format_rational, frac, parse_rational, rat, Rational};
