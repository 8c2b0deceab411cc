//! Compilation of multi-sorted formulas into one-sorted first-order formulas.
//!
//! The target language has the sort variables as free variables and a
//! separate supply of bound ("tilde") variables. Equalities are kept,
//! connectives map to themselves, `∃x v` becomes `∃x̃ ṽ` with `x` renamed to a
//! fresh `x̃`, and a substitution node `s_* v` disappears: every domain
//! variable `y` of `v` is replaced by the term `s(y)`, all at once.
//!
//! Each quantifier gets its own tilde variable, numbered by a depth-first
//! counter, so nested quantifiers over the same variable never collide.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, Point};
use crate::error::AlgebraError;
use crate::formula::{Kind, MsFormula};
use crate::term::{Term, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("ill-formed formula: {0}")]
    IllFormedFormula(String),
    #[error("no value assigned to free variable `{0}`")]
    MissingAssignment(Var),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A variable of the one-sorted language.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoVar {
    Free(Var),
    /// The `index`-th tilde copy, made for a quantifier over `base`.
    Bound {
        base: Var,
        index: usize,
    },
}

impl FoVar {
    pub fn is_bound(&self) -> bool {
        matches!(self, FoVar::Bound { .. })
    }
}

impl fmt::Display for FoVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoVar::Free(v) => write!(f, "{v}"),
            FoVar::Bound { base, index } => write!(f, "~{base}_{index}"),
        }
    }
}

pub type FoTerm = Term<FoVar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FoFormula {
    Eq(FoTerm, FoTerm),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Exists(FoVar, Box<FoFormula>),
}

impl FoFormula {
    /// Free variables of the formula that are not quantified anywhere above
    /// their occurrence.
    pub fn free_vars(&self) -> BTreeSet<FoVar> {
        fn walk(f: &FoFormula, bound: &mut Vec<FoVar>, out: &mut BTreeSet<FoVar>) {
            match f {
                FoFormula::Eq(l, r) => {
                    for t in [l, r] {
                        t.for_each_var(&mut |v| {
                            if !bound.contains(v) {
                                out.insert(v.clone());
                            }
                        });
                    }
                }
                FoFormula::Not(b) => walk(b, bound, out),
                FoFormula::And(a, b) | FoFormula::Or(a, b) => {
                    walk(a, bound, out);
                    walk(b, bound, out);
                }
                FoFormula::Exists(v, b) => {
                    bound.push(v.clone());
                    walk(b, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Whether quantifiers bind only tilde variables, each tilde variable
    /// is bound by exactly one quantifier, and every tilde occurrence sits
    /// under its quantifier.
    pub fn has_tilde_discipline(&self) -> bool {
        fn quantified(f: &FoFormula, out: &mut Vec<FoVar>) {
            match f {
                FoFormula::Eq(..) => {}
                FoFormula::Not(b) => quantified(b, out),
                FoFormula::And(a, b) | FoFormula::Or(a, b) => {
                    quantified(a, out);
                    quantified(b, out);
                }
                FoFormula::Exists(v, b) => {
                    out.push(v.clone());
                    quantified(b, out);
                }
            }
        }
        let mut qs = Vec::new();
        quantified(self, &mut qs);
        let distinct: BTreeSet<_> = qs.iter().collect();
        qs.iter().all(FoVar::is_bound) && distinct.len() == qs.len() && self.free_vars().iter().all(|v| !v.is_bound())
    }

    pub fn quantifier_count(&self) -> usize {
        match self {
            FoFormula::Eq(..) => 0,
            FoFormula::Not(b) => b.quantifier_count(),
            FoFormula::And(a, b) | FoFormula::Or(a, b) => a.quantifier_count() + b.quantifier_count(),
            FoFormula::Exists(_, b) => 1 + b.quantifier_count(),
        }
    }

    fn check_signature(&self, h: &FiniteAlgebra) -> Result<(), AlgebraError> {
        match self {
            FoFormula::Eq(l, r) => {
                h.signature().check_term(l)?;
                h.signature().check_term(r)
            }
            FoFormula::Not(b) | FoFormula::Exists(_, b) => b.check_signature(h),
            FoFormula::And(a, b) | FoFormula::Or(a, b) => {
                a.check_signature(h)?;
                b.check_signature(h)
            }
        }
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoFormula::Eq(l, r) => write!(f, "(eq {l} {r})"),
            FoFormula::Not(b) => write!(f, "(not {b})"),
            FoFormula::And(a, b) => write!(f, "(and {a} {b})"),
            FoFormula::Or(a, b) => write!(f, "(or {a} {b})"),
            FoFormula::Exists(v, b) => write!(f, "(exists {v} {b})"),
        }
    }
}

struct Translator {
    counter: usize,
}

impl Translator {
    fn go(&mut self, u: &MsFormula, env: &HashMap<Var, FoTerm>) -> FoFormula {
        let rename = |t: &Term| -> FoTerm {
            t.substitute(&mut |v: &Var| Ok::<_, ()>(env[v].clone()))
                .expect("variables of a well-formed formula are in its sort")
        };
        match u.kind() {
            Kind::Eq(l, r) => FoFormula::Eq(rename(l), rename(r)),
            Kind::Not(b) => FoFormula::Not(Box::new(self.go(b, env))),
            Kind::And(a, b) => {
                let a = self.go(a, env);
                FoFormula::And(Box::new(a), Box::new(self.go(b, env)))
            }
            Kind::Or(a, b) => {
                let a = self.go(a, env);
                FoFormula::Or(Box::new(a), Box::new(self.go(b, env)))
            }
            Kind::Exists(x, b) => {
                self.counter += 1;
                let tilde = FoVar::Bound {
                    base: x.clone(),
                    index: self.counter,
                };
                let mut inner = env.clone();
                inner.insert(x.clone(), Term::Var(tilde.clone()));
                FoFormula::Exists(tilde, Box::new(self.go(b, &inner)))
            }
            Kind::Subst(s, b) => {
                let inner = s
                    .domain()
                    .vars()
                    .iter()
                    .cloned()
                    .zip(s.images().iter().map(rename))
                    .collect();
                self.go(b, &inner)
            }
        }
    }
}

/// The one-sorted translation `ũ` of `u`.
pub fn translate(u: &MsFormula) -> Result<FoFormula, TranslateError> {
    if !u.is_well_formed() {
        return Err(TranslateError::IllFormedFormula(u.to_string()));
    }
    let env = u
        .sort()
        .vars()
        .iter()
        .map(|v| (v.clone(), Term::Var(FoVar::Free(v.clone()))))
        .collect();
    Ok(Translator { counter: 0 }.go(u, &env))
}

fn sat(h: &FiniteAlgebra, f: &FoFormula, env: &mut HashMap<FoVar, usize>) -> bool {
    match f {
        FoFormula::Eq(l, r) => {
            let eval = |t| {
                h.eval_with(t, &|v: &FoVar| env.get(v).copied())
                    .expect("checked formula")
            };
            eval(l) == eval(r)
        }
        FoFormula::Not(b) => !sat(h, b, env),
        FoFormula::And(a, b) => sat(h, a, env) && sat(h, b, env),
        FoFormula::Or(a, b) => sat(h, a, env) || sat(h, b, env),
        FoFormula::Exists(v, b) => {
            let saved = env.get(v).copied();
            let found = (0..h.size()).any(|x| {
                env.insert(v.clone(), x);
                sat(h, b, env)
            });
            match saved {
                Some(x) => env.insert(v.clone(), x),
                None => env.remove(v),
            };
            found
        }
    }
}

/// Satisfaction of `f` in `h` with free variables taken from the point `p`.
pub fn fo_sat(h: &FiniteAlgebra, f: &FoFormula, p: &Point) -> Result<bool, TranslateError> {
    f.check_signature(h)?;
    h.check_point(p)?;
    let mut env = HashMap::new();
    for v in f.free_vars() {
        let value = match &v {
            FoVar::Free(x) => p.value(x),
            FoVar::Bound { .. } => None,
        };
        match (value, &v) {
            (Some(value), _) => {
                env.insert(v, value);
            }
            (None, FoVar::Free(x)) => return Err(TranslateError::MissingAssignment(x.clone())),
            (None, FoVar::Bound { base, index }) => {
                return Err(TranslateError::MissingAssignment(Var::new(format!("~{base}_{index}"))))
            }
        }
    }
    Ok(sat(h, f, &mut env))
}

/// Whether `f` belongs to the first-order type of the tuple `a`, the free
/// variables `x1, …, xn` naming its coordinates.
pub fn tp_member(h: &FiniteAlgebra, f: &FoFormula, a: &[usize]) -> Result<bool, TranslateError> {
    fo_sat(h, f, &Point::tuple(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::cyclic_group;
    use crate::semantics::val_member;
    use crate::term::{Sort, Substitution};

    fn x(i: usize) -> Term {
        Term::Var(Var::indexed("x", i))
    }

    #[test]
    fn equality_is_unchanged() {
        let u = MsFormula::eq(Sort::numbered("x", 2), x(1), x(2)).unwrap();
        assert_eq!(translate(&u).unwrap().to_string(), "(eq x1 x2)");
    }

    #[test]
    fn quantifier_gets_tilde_copy() {
        let u = MsFormula::exists(
            Var::new("x1"),
            MsFormula::eq(Sort::numbered("x", 2), x(1), x(2)).unwrap(),
        )
        .unwrap();
        let f = translate(&u).unwrap();
        assert_eq!(f.to_string(), "(exists ~x1_1 (eq ~x1_1 x2))");
        assert!(f.has_tilde_discipline());
    }

    #[test]
    fn substitution_is_inlined() {
        let ys = Sort::numbered("y", 2);
        let xs = Sort::numbered("x", 2);
        let body = MsFormula::eq(ys.clone(), Term::var("y1"), Term::var("y2")).unwrap();
        let s = Substitution::new(ys, xs, vec![Term::app("*", vec![x(1), x(1)]), x(2)]).unwrap();
        let u = MsFormula::subst(s, body).unwrap();
        assert_eq!(translate(&u).unwrap().to_string(), "(eq (* x1 x1) x2)");
    }

    #[test]
    fn shadowing_quantifiers_stay_apart() {
        let xs = Sort::numbered("x", 1);
        let inner = MsFormula::exists(Var::new("x1"), MsFormula::eq(xs.clone(), x(1), x(1)).unwrap()).unwrap();
        let both = MsFormula::and(MsFormula::eq(xs, x(1), x(1)).unwrap(), inner).unwrap();
        let u = MsFormula::exists(Var::new("x1"), both).unwrap();
        let f = translate(&u).unwrap();
        assert_eq!(
            f.to_string(),
            "(exists ~x1_1 (and (eq ~x1_1 ~x1_1) (exists ~x1_2 (eq ~x1_2 ~x1_2))))"
        );
        assert!(f.has_tilde_discipline());
        assert!(f.free_vars().is_empty());
    }

    #[test]
    fn substitution_under_quantifier_sees_the_tilde() {
        // ∃x1 s_*(y1 = y2) with s(y1) = x1, s(y2) = x2
        let ys = Sort::numbered("y", 2);
        let xs = Sort::numbered("x", 2);
        let s = Substitution::new(ys.clone(), xs, vec![x(1), x(2)]).unwrap();
        let body = MsFormula::eq(ys, Term::var("y1"), Term::var("y2")).unwrap();
        let u = MsFormula::exists(Var::new("x1"), MsFormula::subst(s, body).unwrap()).unwrap();
        assert_eq!(translate(&u).unwrap().to_string(), "(exists ~x1_1 (eq ~x1_1 x2))");
    }

    #[test]
    fn first_order_satisfaction() {
        let z4 = cyclic_group(4);
        let xs = Sort::numbered("x", 2);
        let u = MsFormula::exists(
            Var::new("x2"),
            MsFormula::eq(xs, x(1), Term::app("+", vec![x(2), x(2)])).unwrap(),
        )
        .unwrap();
        let f = translate(&u).unwrap();
        assert_eq!(f.to_string(), "(exists ~x2_1 (eq x1 (+ ~x2_1 ~x2_1)))");
        assert!(tp_member(&z4, &f, &[2]).unwrap());
        assert!(!tp_member(&z4, &f, &[1]).unwrap());
        for a in 0..4 {
            for b in 0..4 {
                let p = Point::tuple(&[a, b]);
                assert_eq!(fo_sat(&z4, &f, &p).unwrap(), val_member(&z4, &u, &p).unwrap());
            }
        }
    }

    #[test]
    fn missing_assignment() {
        let z4 = cyclic_group(4);
        let u = MsFormula::eq(Sort::numbered("x", 2), x(1), x(2)).unwrap();
        let f = translate(&u).unwrap();
        assert_eq!(
            tp_member(&z4, &f, &[1]),
            Err(TranslateError::MissingAssignment(Var::new("x2")))
        );
        let reflexive = FoFormula::Eq(
            Term::Var(FoVar::Free(Var::new("x1"))),
            Term::Var(FoVar::Free(Var::new("x1"))),
        );
        assert!(tp_member(&z4, &reflexive, &[3]).unwrap());
    }
}
