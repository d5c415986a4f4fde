//! Exact arithmetic substrate: big rationals, binomials, Krawtchouk
//! polynomials and homogeneous bivariate polynomial substitution.

mod combinatorics;
mod poly;
mod rational;

pub use combinatorics::{
    binomial, krawtchouk, krawtchouk_like, krawtchouk_like_matrix, krawtchouk_matrix, PascalTable,
};
pub use poly::{HomogeneousPoly, Substitution};
pub use rational::Rational;
