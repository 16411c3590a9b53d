//! Bifiltered chain complexes over F₂[U, U⁻¹] modelling knot Floer
//! complexes, and the concordance invariants computed from them.

pub mod algebra;
pub mod catalogue;
pub mod complex;
pub mod error;
pub mod format;
pub mod harness;
pub mod invariants;
pub mod reduce;
pub mod region;
pub mod slice;
pub mod validate;

pub use complex::{Arrow, CfkComplex, Generator};
pub use error::CfkError;
pub use invariants::{report, InvariantReport, PLFunction, Rational, ReportOptions};
pub use reduce::{reduce, split_unknot_summand, ReductionTrace, Split};
pub use region::{region_complex, Region};
pub use validate::{validate, violations, Level, Violation};
