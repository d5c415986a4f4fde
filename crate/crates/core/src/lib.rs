//! Exact quantum weight enumerators.
//!
//! This crate computes the Shor-Laflamme, unitary and shadow enumerators of
//! multipartite operators, the exact polynomial transforms relating them
//! (quantum MacWilliams identity, shadow identity), and uses them to decide
//! the non-existence of absolutely maximally entangled (AME) states and of
//! quantum error-correcting codes:
//!
//! - [`exactmath`]: big rationals, binomials, Krawtchouk polynomials and
//!   homogeneous bivariate polynomial substitution.
//! - [`enumerators`]: tagged enumerator vectors and the transforms between them.
//! - [`ame`]: Scott bound, shadow-coefficient and mixed-dimension shadow
//!   inequality checks for AME states, plus grid scans.
//! - [`qecclp`]: the linear-programming bound for `((n,K,d))_D` codes, solved
//!   with an exact rational simplex.
//! - [`states`]: a dense complex backend that measures the same enumerators
//!   on explicit states and operators.
//! - [`cli`]: the `qweight` command-line surface.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod ame;
pub mod cli;
pub mod enumerators;
pub mod error;
pub mod exactmath;
pub mod qecclp;
pub mod states;

pub use error::{Error, Result};
pub use exactmath::{HomogeneousPoly, Rational};
