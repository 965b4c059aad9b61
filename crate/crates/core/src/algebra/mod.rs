//! Polynomial arithmetic over GF(2) with graded generators.

mod generators;
mod lucas;
mod monomial;
mod poly;
mod series;

pub use generators::{Generator, GeneratorTable, SwLabel, MAX_GENERATORS};
pub use lucas::{alpha, lucas_binom};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::{poly_mul, Poly, PolyDisplay};
pub use series::GradedSeries;
