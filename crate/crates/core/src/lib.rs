//! Exact computations with determinantal ideals of monomial curves.
//!
//! The crate provides a small Gröbner-basis kernel over `Q` and `F_p` and,
//! on top of it, constructions and certificates for height-two ideals
//! generated by the 2x2 minors of a 2x3 matrix: primality via toric kernels,
//! Artinian lengths, standard-base checks, colon ideals and Hilbert-Burch
//! presentations, and seeded generic specializations.

pub mod coeff;
pub mod constructions;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod poly;
pub mod report;
pub mod repro;
pub mod rng;

pub use error::{Error, Result};
