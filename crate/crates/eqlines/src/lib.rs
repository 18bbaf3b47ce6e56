//! Exact-arithmetic library for semidefinite bounds on equiangular lines.
//!
//! The crate evaluates (multivariate) Gegenbauer polynomials, assembles the
//! alternative and switching-reduced semidefinite constraint matrices of
//! spherical s-distance sets, verifies the explicit four-point dual
//! certificate with rational arithmetic only, isolates the maximum root of
//! the certificate quartic by Sturm sequences, and audits concrete line
//! configurations (distance distributions, rank-1 structure, derived-code
//! strongly regular graphs).

pub mod certificate;
pub mod constraints;
pub mod constructions;
pub mod distributions;
pub mod exactmath;
pub mod gegenbauer;
pub mod gram;

pub use exactmath::{Rat, RatMatrix, UniPoly};
