//! Toolkit for logically-geometric types over finite algebras.
//!
//! * [`term`], [`algebra`], [`automorphism`]: free-algebra terms, finite
//!   algebras given by tables, points, and automorphism search.
//! * [`formula`]: the multi-sorted formula language with substitution nodes.
//! * [`semantics`]: the value sets of formulas, logical kernels, bounded
//!   kernel comparison and Ehrenfeucht–Fraïssé games.
//! * [`translate`]: compilation of multi-sorted formulas into one-sorted
//!   first-order formulas, with a first-order evaluator.
//! * [`zlattice`]: exact integer matrices, Smith normal form and the
//!   automorphism-extension certificate for free abelian groups.
//! * [`freeword`]: free semigroups, the free group of rank two and `S3`.
//! * [`text`]: the line-based and s-expression file formats.
//! * [`random`]: seeded generators for tests and benchmarks.

pub mod algebra;
pub mod automorphism;
pub mod error;
pub mod exec;
pub mod formula;
pub mod freeword;
pub mod library;
pub mod random;
pub mod semantics;
pub mod term;
pub mod text;
pub mod translate;
pub mod zlattice;

pub use algebra::{FiniteAlgebra, OpSymbol, Point, Signature};
pub use error::AlgebraError;
pub use exec::Execution;
pub use formula::{FormulaError, Kind, MsFormula};
pub use term::{Sort, Substitution, Term, Var};
