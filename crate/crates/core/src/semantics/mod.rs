//! Value sets of multi-sorted formulas in finite algebras.
//!
//! `Val(u)` is the set of points of `sort(u)` satisfying `u`. Equalities
//! compare term values; `∃x` ranges `x` over the whole carrier while the other
//! coordinates stay fixed; connectives are set operations; and a point `μ`
//! satisfies `s_* v` exactly when `μ ∘ s` satisfies `v`.

mod bounded;
mod ef;

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, Point};
use crate::error::AlgebraError;
use crate::exec::Execution;
use crate::formula::{FormulaError, Kind, MsFormula};
use crate::term::Sort;

pub use bounded::{bounded_lker_eq, bounded_lker_eq_by_enumeration, Bounds, Comparison, FormulaClasses};
pub use ef::{ef_equivalent, ef_equivalent_with};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("sort mismatch: expected {expected}, found {found}")]
    SortMismatch { expected: Sort, found: Sort },
    #[error("tuples of different lengths: {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("algebras `{0}` and `{1}` have different signatures")]
    SignatureMismatch(String, String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

fn check_point(h: &FiniteAlgebra, u: &MsFormula, p: &Point) -> Result<(), SemanticsError> {
    if u.sort() != p.sort() {
        return Err(SemanticsError::SortMismatch {
            expected: u.sort().clone(),
            found: p.sort().clone(),
        });
    }
    h.check_point(p)?;
    u.check_signature(h.signature())?;
    Ok(())
}

/// Truth of `f` at the coordinates `env` (aligned with `f.sort()`).
/// The signature must already have been checked.
pub(crate) fn holds(h: &FiniteAlgebra, f: &MsFormula, env: &[usize]) -> bool {
    let eval = |t| h.eval_at(t, f.sort(), env).expect("checked term");
    match f.kind() {
        Kind::Eq(l, r) => eval(l) == eval(r),
        Kind::Not(b) => !holds(h, b, env),
        Kind::And(a, b) => holds(h, a, env) && holds(h, b, env),
        Kind::Or(a, b) => holds(h, a, env) || holds(h, b, env),
        Kind::Exists(x, b) => {
            let i = f.sort().index_of(x).expect("bound variable in sort");
            let mut env = env.to_vec();
            (0..h.size()).any(|v| {
                env[i] = v;
                holds(h, b, &env)
            })
        }
        Kind::Subst(s, b) => {
            let pulled: Vec<usize> = s.images().iter().map(eval).collect();
            holds(h, b, &pulled)
        }
    }
}

/// Whether the point `p` belongs to `Val(u)` in `h`.
pub fn val_member(h: &FiniteAlgebra, u: &MsFormula, p: &Point) -> Result<bool, SemanticsError> {
    check_point(h, u, p)?;
    Ok(holds(h, u, p.values()))
}

/// Whether `u` belongs to the logical kernel of `p`; the same relation as
/// [`val_member`] read from the point's side.
pub fn lker_member(h: &FiniteAlgebra, u: &MsFormula, p: &Point) -> Result<bool, SemanticsError> {
    val_member(h, u, p)
}

/// Index of the coordinates `values` among all points of their sort, in
/// lexicographic order with the first variable most significant.
pub fn point_index(size: usize, values: &[usize]) -> usize {
    values.iter().fold(0, |acc, &v| acc * size + v)
}

/// Coordinates of the point with the given index.
pub fn point_at(size: usize, arity: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % size;
        index /= size;
    }
    out
}

/// A materialized value set: one membership flag per point of the sort.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValSet {
    sort: Sort,
    size: usize,
    members: Vec<bool>,
}

impl ValSet {
    pub fn sort(&self) -> &Sort {
        &self.sort
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.sort() == &self.sort
            && p.values().iter().all(|&v| v < self.size)
            && self.members[point_index(self.size, p.values())]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Membership flags indexed by [`point_index`].
    pub fn flags(&self) -> &[bool] {
        &self.members
    }

    /// Points of the set in index order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| Point::new(self.sort.clone(), point_at(self.size, self.sort.len(), i)).expect("sort arity"))
    }
}

/// `Val(u)` in `h`, evaluated point by point.
pub fn val_set(h: &FiniteAlgebra, u: &MsFormula) -> Result<ValSet, SemanticsError> {
    val_set_with(h, u, Execution::default())
}

pub fn val_set_with(h: &FiniteAlgebra, u: &MsFormula, exec: Execution) -> Result<ValSet, SemanticsError> {
    u.check_signature(h.signature())?;
    let arity = u.sort().len();
    let members = exec.map_range(u.sort().point_count(h.size()), |i| {
        holds(h, u, &point_at(h.size(), arity, i))
    });
    Ok(ValSet {
        sort: u.sort().clone(),
        size: h.size(),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::cyclic_group;
    use crate::term::{Substitution, Term, Var};

    fn x(i: usize) -> Term {
        Term::Var(Var::indexed("x", i))
    }

    fn plus(a: Term, b: Term) -> Term {
        Term::app("+", vec![a, b])
    }

    #[test]
    fn reflexivity() {
        let z4 = cyclic_group(4);
        let u = MsFormula::eq(Sort::numbered("x", 1), x(1), x(1)).unwrap();
        for a in 0..4 {
            assert!(val_member(&z4, &u, &Point::tuple(&[a])).unwrap());
        }
    }

    #[test]
    fn doubles_in_z4() {
        let z4 = cyclic_group(4);
        let xs = Sort::numbered("x", 2);
        let u = MsFormula::exists(Var::new("x2"), MsFormula::eq(xs, x(1), plus(x(2), x(2))).unwrap()).unwrap();
        // the point fixes x2 too; its value is irrelevant under ∃x2
        assert!(!val_member(&z4, &u, &Point::tuple(&[1, 0])).unwrap());
        assert!(val_member(&z4, &u, &Point::tuple(&[2, 3])).unwrap());
    }

    #[test]
    fn substitution_pulls_back() {
        let z4 = cyclic_group(4);
        let ys = Sort::numbered("y", 1);
        let body = MsFormula::eq(ys.clone(), Term::var("y1"), Term::constant("0")).unwrap();
        let s = Substitution::new(ys, Sort::numbered("x", 1), vec![plus(x(1), x(1))]).unwrap();
        let u = MsFormula::subst(s, body).unwrap();
        assert!(val_member(&z4, &u, &Point::tuple(&[2])).unwrap());
        assert!(!val_member(&z4, &u, &Point::tuple(&[1])).unwrap());
    }

    #[test]
    fn negation_is_exclusive() {
        let z4 = cyclic_group(4);
        let u = MsFormula::eq(Sort::numbered("x", 1), x(1), plus(x(1), x(1))).unwrap();
        for a in 0..4 {
            let p = Point::tuple(&[a]);
            assert_ne!(
                lker_member(&z4, &u, &p).unwrap(),
                lker_member(&z4, &u.clone().not(), &p).unwrap()
            );
        }
    }

    #[test]
    fn sort_and_signature_errors() {
        let z4 = cyclic_group(4);
        let u = MsFormula::eq(Sort::numbered("x", 1), x(1), x(1)).unwrap();
        assert!(matches!(
            val_member(&z4, &u, &Point::tuple(&[1, 2])),
            Err(SemanticsError::SortMismatch { .. })
        ));
        assert!(val_member(&z4, &u, &Point::tuple(&[7])).is_err());
        let bad = MsFormula::eq(Sort::numbered("x", 1), Term::app("*", vec![x(1), x(1)]), x(1)).unwrap();
        assert!(val_member(&z4, &bad, &Point::tuple(&[1])).is_err());
    }

    #[test]
    fn materialized_set_matches_predicate() {
        let z4 = cyclic_group(4);
        let xs = Sort::numbered("x", 2);
        let u = MsFormula::eq(xs, x(2), plus(x(1), x(1))).unwrap();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let set = val_set_with(&z4, &u, exec).unwrap();
            assert_eq!(set.len(), 4);
            for p in set.points() {
                assert!(val_member(&z4, &u, &p).unwrap());
                assert_eq!(p.values()[1], 2 * p.values()[0] % 4);
            }
        }
    }

    #[test]
    fn point_indexing_round_trips() {
        for i in 0..27 {
            assert_eq!(point_index(3, &point_at(3, 3, i)), i);
        }
        assert_eq!(point_at(4, 2, 6), vec![1, 2]);
    }
}
