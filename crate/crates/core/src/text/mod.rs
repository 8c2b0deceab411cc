//! Plain-text formats.
//!
//! * Algebras: `algebra <name>`, `size <m>`, `op <name> <arity>` and
//!   `table <name>: v0 v1 …` lines, tables row-major in lexicographic
//!   argument order, `#` starting a comment.
//! * Formulas: s-expressions preceded by their sort, as in
//!   `(sort x1 x2) (exists x2 (eq x1 (+ x2 x2)))`. Constants are written as
//!   applications, `(0)`; `(forall x f)` is read as `(not (exists x (not f)))`.
//! * Substitution pools: a sequence of `(map (sort <codomain vars>) ((y t) …))`.
//! * Points: `x1=1 x2=3`, or bare values `1 3` for the sort `x1 … xn`.
//! * Matrices and vector lists: one row per line, integers separated by spaces.
//! * Word lists: words separated by commas, letters by spaces.

mod algebra;
mod formula;
mod misc;
mod sexpr;

use thiserror::Error;

pub use algebra::{parse_algebra, print_algebra};
pub use formula::{parse_formula, parse_pool, parse_term, print_pool};
pub use misc::{parse_fwords, parse_matrix, parse_point, parse_sgwords, parse_vectors, print_vectors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{}{message}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Validation { line: Option<usize>, message: String },
}

impl TextError {
    pub(crate) fn syntax(line: usize, col: usize, message: impl Into<String>) -> Self {
        TextError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    pub(crate) fn validation(line: Option<usize>, message: impl ToString) -> Self {
        TextError::Validation {
            line,
            message: message.to_string(),
        }
    }
}
