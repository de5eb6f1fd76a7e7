//! Exact computational engine for lowest weight representations of rational
//! Cherednik algebras attached to the complex reflection groups `S_n`,
//! `G(l,1,n) = S_n ⋉ (Z/lZ)^n` and `Z/lZ`.
//!
//! Everything is computed over the rationals or a cyclotomic field `Q(e_l)`,
//! with no floating point anywhere. The main objects are:
//!
//! - [`scalar::Scalar`]: exact field elements,
//! - [`group::Group`]: a reflection group with its reflection data,
//! - [`poly::Poly`]: sparse multivariate polynomials, the carrier of the
//!   polynomial representation,
//! - [`dunkl::DunklContext`]: Dunkl operators and the grading element,
//! - [`modules::GradedQuotient`]: graded quotients of the polynomial
//!   representation (submodule closures, Gram radicals, Hilbert series),
//! - [`singular`]: closed-form singular vectors and parameter loci,
//! - [`rank1`]: the rank one classification and its brute-force cross check.
//!
//! The `cherednik` binary exposes the same functionality as subcommands; the
//! `examples/` directory has one runnable program per capability.

#![forbid(unsafe_code)]
// matrix and permutation code indexes several containers per loop
#![allow(clippy::needless_range_loop)]

pub mod characters;
pub mod dunkl;
pub mod group;
pub mod linalg;
pub mod modules;
pub mod param_poly;
pub mod poly;
pub mod rank1;
pub mod report;
pub mod scalar;
pub mod series;
pub mod singular;
pub mod support;

use thiserror::Error;

/// Errors split into the two categories the command line surface cares about:
/// bad inputs (usage) versus violated internal invariants (integrity).
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input or unsupported request.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal invariant failed; this signals a bug, not a bad input.
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

pub use dunkl::DunklContext;
pub use group::{Group, GroupElement, Params, Reflection};
pub use modules::GradedQuotient;
pub use poly::{Monomial, Poly};
pub use scalar::{Rat, Scalar};
