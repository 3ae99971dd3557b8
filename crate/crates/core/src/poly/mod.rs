//! Sparse multivariate polynomials over exact fields.

mod context;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use context::RingContext;
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::{Polynomial, Term, WeightedDegree};
