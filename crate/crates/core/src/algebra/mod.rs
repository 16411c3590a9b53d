//! Exact linear algebra over F₂ and F₂[w].

pub mod chain;
pub mod f2;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use chain::{FreeChainModule, GradedHomology, Grading, SparseVector, Tracking};
pub use f2::{membership_solve, membership_solve_truncated, BitVector, Echelon};
pub use matrix::PolyMatrix;
pub use poly::FieldPoly;
pub use snf::{rank_over_fraction_field, snf, SnfResult};
