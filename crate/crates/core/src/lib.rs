//! Exact computations with finite-dimensional (right) Leibniz algebras and
//! their bimodule representations over the rationals.

pub mod algebra;
pub mod catalog;
pub mod decompose;
pub mod error;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod sl2;

pub use algebra::{LeibnizAlgebra, SeriesKind, SeriesReport, Simplicity, StructureReport};
pub use decompose::{decompose, DecompositionResult, Verdict};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Subspace, Vector};
pub use rep::{DichotomyVerdict, Equivalence, Irreducibility, LambdaVariant, Representation};
