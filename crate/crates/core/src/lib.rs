//! Symbolic and numeric calculus on the enveloping algebra of `u(2)` with
//! deformation parameter `hbar`.
//!
//! The exact layer ([`scalar`], [`weyl`], [`oracle`], [`derivative`],
//! [`central::poly`], [`central::psi`]) works with `hbar` as a formal
//! variable. The numeric layer ([`central::function`], [`lattice`],
//! [`models`]) specializes it to a double.

pub mod central;
pub mod cli;
pub mod derivative;
pub mod error;
pub mod expr;
pub mod lattice;
pub mod linalg;
pub mod models;
pub mod numfmt;
pub mod oracle;
pub mod scalar;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::{FieldValue, GaussRational, Scalar};
pub use weyl::{Generator, Monomial, WeylElement};
