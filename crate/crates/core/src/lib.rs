//! Exact combinatorics for binomial-Stirling-Eulerian polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] holds permutations, their statistics and the enumerated classes,
//! * [`poly`] is a sparse multivariate Laurent polynomial ring over `BigRational`,
//! * [`grammar`] implements the formal derivative of a context-free grammar,
//! * [`gamma`] extracts and builds gamma-expansions,
//! * [`bijection`] is the bar-decomposition involution on PRW permutations,
//! * [`action`] is the modified Foata-Strehl group action and its orbits,
//! * [`identity`] builds the enumerators and runs the verification registry.

pub mod action;
pub mod bijection;
mod error;
pub mod gamma;
pub mod grammar;
pub mod identity;
pub mod perm;
pub mod poly;

pub use error::{Error, Result};
pub use gamma::{GammaExpansion, GammaInterp};
pub use grammar::{Grammar, Label, LabelWord};
pub use identity::{CheckReport, EnumeratorKind, Verdict};
pub use perm::{PermClass, Permutation, StatProfile};
pub use poly::{Monomial, MultiPoly, Rational};
