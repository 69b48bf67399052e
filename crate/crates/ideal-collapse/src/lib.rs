//! Exact computer algebra for collapsing a finitely generated polynomial
//! ideal over a non-algebraically-closed field into a single polynomial with
//! the same zero locus.
//!
//! The pieces: [`fields`] for exact arithmetic in F_p, F_{p^k}, and Q;
//! [`polys`] for sparse multivariate and dense univariate polynomials;
//! [`witness`] for root-free monic witness polynomials; [`collapse`] for the
//! pairwise combination with cofactor certificates and the chain fold;
//! [`locus`] for the brute-force zero-locus oracle; [`remark`] for
//! monicization by shear and specialization; [`cli`] for the text format and
//! command-line surface.

pub mod cli;
pub mod collapse;
pub mod error;
pub mod fields;
pub mod locus;
pub mod polys;
pub mod remark;
pub mod witness;

pub use error::{Error, Result};
