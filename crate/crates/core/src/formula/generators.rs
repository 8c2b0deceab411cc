//! Named formula constructions used in the extension and isotypy arguments.

use super::{FormulaError, MsFormula};
use crate::term::{Sort, Substitution, Term, Var};

/// The formula saying that the point `x` is the image of some point `y`
/// under the words `w`:
///
/// `s_* ∃y1 … ∃yn (x1 ≡ w1 ∧ … ∧ xk ≡ wk)` with `s(xi) = xi` and `s(yj) = x1`.
///
/// The inner formula has sort `X ∪ Y`; `s` collapses it back to `X`.
pub fn presentation_formula(x: &Sort, y: &Sort, words: &[Term]) -> Result<MsFormula, FormulaError> {
    if words.len() != x.len() {
        return Err(FormulaError::LengthMismatch {
            expected: x.len(),
            found: words.len(),
        });
    }
    if !x.is_disjoint(y) {
        return Err(FormulaError::SortOverlap(x.clone(), y.clone()));
    }
    let first = x.vars().first().ok_or(FormulaError::EmptySort)?.clone();
    let joint = x.union(y);

    let equalities = x
        .vars()
        .iter()
        .zip(words)
        .map(|(xi, w)| {
            if let Some(var) = w.var_outside(y) {
                return Err(FormulaError::VariableNotInSort { var, sort: y.clone() });
            }
            MsFormula::eq(joint.clone(), Term::Var(xi.clone()), w.clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut body = MsFormula::conjunction(equalities)?.ok_or(FormulaError::EmptySort)?;
    for yj in y.vars().iter().rev() {
        body = MsFormula::exists(yj.clone(), body)?;
    }

    let images = joint
        .vars()
        .iter()
        .map(|v| {
            if x.contains(v) {
                Term::Var(v.clone())
            } else {
                Term::Var(first.clone())
            }
        })
        .collect();
    let s = Substitution::new(joint, x.clone(), images)?;
    MsFormula::subst(s, body)
}

/// `¬(x_new ≡ w)` over the sort `X ∪ {x_new}`.
pub fn proper_extension_formula(x: &Sort, x_new: &Var, w: &Term) -> Result<MsFormula, FormulaError> {
    if x.contains(x_new) {
        return Err(FormulaError::VariableClash(x_new.clone()));
    }
    if let Some(var) = w.var_outside(x) {
        return Err(FormulaError::VariableNotInSort { var, sort: x.clone() });
    }
    let sort = x.extended(x_new.clone())?;
    Ok(MsFormula::eq(sort, Term::Var(x_new.clone()), w.clone())?.not())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y1() -> Term {
        Term::var("y1")
    }

    #[test]
    fn presentation_shape() {
        let x = Sort::numbered("x", 1);
        let y = Sort::numbered("y", 1);
        let u = presentation_formula(&x, &y, &[y1()]).unwrap();
        assert_eq!(u.sort(), &x);
        assert_eq!(u.to_string(), "(subst ((x1 x1) (y1 x1)) (exists y1 (eq x1 y1)))");
        assert_eq!(u.length(), 2);
    }

    #[test]
    fn presentation_two_words() {
        let x = Sort::numbered("x", 2);
        let y = Sort::numbered("y", 2);
        let u = presentation_formula(&x, &y, &[y1(), Term::var("y2")]).unwrap();
        assert_eq!(
            u.to_string(),
            "(subst ((x1 x1) (x2 x2) (y1 x1) (y2 x1)) (exists y1 (exists y2 (and (eq x1 y1) (eq x2 y2)))))"
        );
    }

    #[test]
    fn presentation_errors() {
        let x = Sort::numbered("x", 1);
        assert!(matches!(
            presentation_formula(&x, &x, &[Term::var("x1")]),
            Err(FormulaError::SortOverlap(..))
        ));
        let y = Sort::numbered("y", 1);
        assert!(matches!(
            presentation_formula(&x, &y, &[y1(), y1()]),
            Err(FormulaError::LengthMismatch { expected: 1, found: 2 })
        ));
        assert!(matches!(
            presentation_formula(&x, &y, &[Term::var("y2")]),
            Err(FormulaError::VariableNotInSort { .. })
        ));
    }

    #[test]
    fn proper_extension() {
        let x = Sort::numbered("x", 1);
        let v = proper_extension_formula(&x, &Var::new("x2"), &Term::var("x1")).unwrap();
        assert_eq!(v.to_string(), "(not (eq x2 x1))");
        assert_eq!(v.sort(), &Sort::numbered("x", 2));
        assert!(matches!(
            proper_extension_formula(&x, &Var::new("x1"), &Term::var("x1")),
            Err(FormulaError::VariableClash(_))
        ));
    }
}
