//! Dual Stiefel-Whitney classes over GF(2) and the lower bounds they give for
//! the dimension of totally skew embeddings.
//!
//! ```
//! use skewbound::{bound, catalog};
//!
//! let g = catalog::grassmannian(3, 7).unwrap();
//! let report = bound::bound(&g).unwrap();
//! assert_eq!(report.kmax, 9);
//! assert_eq!(report.lower_bound, 43);
//! ```

pub mod algebra;
pub mod bound;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod quotient;
pub mod steenrod;
pub mod symmetric;

pub use algebra::{GeneratorTable, GradedSeries, Monomial, Poly};
pub use bound::{BoundReport, BoundSource, JCriterion};
pub use catalog::{Atom, ManifoldData};
pub use error::{Error, Result};
pub use quotient::{QuotientRing, RingPresentation};
