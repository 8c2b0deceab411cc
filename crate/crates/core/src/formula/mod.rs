//! The multi-sorted formula language.
//!
//! Every formula carries its sort. Equalities live in the sort of their
//! terms, `¬`, `∧`, `∨` and `∃x` preserve the sort, and a substitution node
//! `s_* v` turns a formula of sort `dom(s)` into one of sort `cod(s)`.
//! Constructors check these rules and reject ill-sorted input; there is no
//! way to build an ill-sorted [`MsFormula`].

pub(crate) mod enumerate;
mod generators;
mod order;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Signature;
use crate::error::AlgebraError;
use crate::term::{Sort, Substitution, Term, Var};

pub use enumerate::{enumerate_formulas, enumerate_terms, FormulaStream};
pub use generators::{presentation_formula, proper_extension_formula};
pub use order::EnumerationOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("sort mismatch: expected {expected}, found {found}")]
    SortMismatch { expected: Sort, found: Sort },
    #[error("variable `{var}` is not in {sort}")]
    VariableNotInSort { var: Var, sort: Sort },
    #[error("sorts {0} and {1} overlap")]
    SortOverlap(Sort, Sort),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable `{0}` already belongs to the sort")]
    VariableClash(Var),
    #[error("empty sort")]
    EmptySort,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The shape of a formula node. Children are themselves sorted formulas.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Eq(Term, Term),
    Not(Box<MsFormula>),
    And(Box<MsFormula>, Box<MsFormula>),
    Or(Box<MsFormula>, Box<MsFormula>),
    Exists(Var, Box<MsFormula>),
    Subst(Arc<Substitution>, Box<MsFormula>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MsFormula {
    sort: Sort,
    kind: Kind,
}

impl MsFormula {
    pub fn eq(sort: Sort, lhs: Term, rhs: Term) -> Result<Self, FormulaError> {
        for t in [&lhs, &rhs] {
            if let Some(var) = t.var_outside(&sort) {
                return Err(FormulaError::VariableNotInSort { var, sort });
            }
        }
        Ok(MsFormula {
            sort,
            kind: Kind::Eq(lhs, rhs),
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        MsFormula {
            sort: self.sort.clone(),
            kind: Kind::Not(Box::new(self)),
        }
    }

    pub fn and(lhs: Self, rhs: Self) -> Result<Self, FormulaError> {
        same_sort(&lhs, &rhs)?;
        Ok(MsFormula {
            sort: lhs.sort.clone(),
            kind: Kind::And(Box::new(lhs), Box::new(rhs)),
        })
    }

    pub fn or(lhs: Self, rhs: Self) -> Result<Self, FormulaError> {
        same_sort(&lhs, &rhs)?;
        Ok(MsFormula {
            sort: lhs.sort.clone(),
            kind: Kind::Or(Box::new(lhs), Box::new(rhs)),
        })
    }

    /// `∃x body`; `x` must belong to the sort of `body`.
    pub fn exists(var: Var, body: Self) -> Result<Self, FormulaError> {
        if !body.sort.contains(&var) {
            return Err(FormulaError::VariableNotInSort { var, sort: body.sort });
        }
        Ok(MsFormula {
            sort: body.sort.clone(),
            kind: Kind::Exists(var, Box::new(body)),
        })
    }

    /// `s_* body`, of sort `s.codomain()`; `body` must have sort `s.domain()`.
    pub fn subst(s: impl Into<Arc<Substitution>>, body: Self) -> Result<Self, FormulaError> {
        let s = s.into();
        if s.domain() != &body.sort {
            return Err(FormulaError::SortMismatch {
                expected: s.domain().clone(),
                found: body.sort,
            });
        }
        Ok(MsFormula {
            sort: s.codomain().clone(),
            kind: Kind::Subst(s, Box::new(body)),
        })
    }

    /// `∀x body` as `¬∃x¬ body`.
    pub fn forall(var: Var, body: Self) -> Result<Self, FormulaError> {
        Ok(MsFormula::exists(var, body.not())?.not())
    }

    /// `lhs ⇒ rhs` as `¬lhs ∨ rhs`.
    pub fn implies(lhs: Self, rhs: Self) -> Result<Self, FormulaError> {
        MsFormula::or(lhs.not(), rhs)
    }

    /// Right-associated conjunction; `None` for an empty list.
    pub fn conjunction(parts: impl IntoIterator<Item = Self>) -> Result<Option<Self>, FormulaError> {
        fold_right(parts, MsFormula::and)
    }

    /// Right-associated disjunction; `None` for an empty list.
    pub fn disjunction(parts: impl IntoIterator<Item = Self>) -> Result<Option<Self>, FormulaError> {
        fold_right(parts, MsFormula::or)
    }

    pub fn sort(&self) -> &Sort {
        &self.sort
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// 0 for equalities, one more than the body for `¬`, `∃` and `s_*`, and
    /// `n1 + n2 + 1` for `∧`/`∨`.
    pub fn length(&self) -> usize {
        match &self.kind {
            Kind::Eq(..) => 0,
            Kind::Not(f) | Kind::Exists(_, f) | Kind::Subst(_, f) => f.length() + 1,
            Kind::And(a, b) | Kind::Or(a, b) => a.length() + b.length() + 1,
        }
    }

    /// Largest term depth occurring in an equality.
    pub fn term_depth(&self) -> usize {
        match &self.kind {
            Kind::Eq(l, r) => l.depth().max(r.depth()),
            Kind::Not(f) | Kind::Exists(_, f) | Kind::Subst(_, f) => f.term_depth(),
            Kind::And(a, b) | Kind::Or(a, b) => a.term_depth().max(b.term_depth()),
        }
    }

    /// Checks operation names and arities of every term against `sig`,
    /// including the images of substitution nodes.
    pub fn check_signature(&self, sig: &Signature) -> Result<(), FormulaError> {
        match &self.kind {
            Kind::Eq(l, r) => {
                sig.check_term(l)?;
                sig.check_term(r)?;
            }
            Kind::Not(f) | Kind::Exists(_, f) => f.check_signature(sig)?,
            Kind::Subst(s, f) => {
                for t in s.images() {
                    sig.check_term(t)?;
                }
                f.check_signature(sig)?;
            }
            Kind::And(a, b) | Kind::Or(a, b) => {
                a.check_signature(sig)?;
                b.check_signature(sig)?;
            }
        }
        Ok(())
    }

    /// Re-derives the sort discipline from scratch. Always true for values
    /// built through the constructors; used to validate deserialized input.
    pub fn is_well_formed(&self) -> bool {
        match &self.kind {
            Kind::Eq(l, r) => l.var_outside(&self.sort).is_none() && r.var_outside(&self.sort).is_none(),
            Kind::Not(f) => f.sort == self.sort && f.is_well_formed(),
            Kind::And(a, b) | Kind::Or(a, b) => {
                a.sort == self.sort && b.sort == self.sort && a.is_well_formed() && b.is_well_formed()
            }
            Kind::Exists(x, f) => f.sort == self.sort && self.sort.contains(x) && f.is_well_formed(),
            Kind::Subst(s, f) => s.codomain() == &self.sort && s.domain() == &f.sort && f.is_well_formed(),
        }
    }

    /// `(sort ...) formula`, the file representation.
    pub fn to_document(&self) -> String {
        format!("{} {}", self.sort, self)
    }
}

fn same_sort(a: &MsFormula, b: &MsFormula) -> Result<(), FormulaError> {
    if a.sort != b.sort {
        return Err(FormulaError::SortMismatch {
            expected: a.sort.clone(),
            found: b.sort.clone(),
        });
    }
    Ok(())
}

fn fold_right(
    parts: impl IntoIterator<Item = MsFormula>,
    join: fn(MsFormula, MsFormula) -> Result<MsFormula, FormulaError>,
) -> Result<Option<MsFormula>, FormulaError> {
    let mut parts: Vec<MsFormula> = parts.into_iter().collect();
    let Some(mut acc) = parts.pop() else {
        return Ok(None);
    };
    while let Some(f) = parts.pop() {
        acc = join(f, acc)?;
    }
    Ok(Some(acc))
}

impl fmt::Display for MsFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Eq(l, r) => write!(f, "(eq {l} {r})"),
            Kind::Not(b) => write!(f, "(not {b})"),
            Kind::And(a, b) => write!(f, "(and {a} {b})"),
            Kind::Or(a, b) => write!(f, "(or {a} {b})"),
            Kind::Exists(x, b) => write!(f, "(exists {x} {b})"),
            Kind::Subst(s, b) => write!(f, "(subst {s} {b})"),
        }
    }
}
