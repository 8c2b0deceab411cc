use std::fmt::Write;

use super::sexpr::{read_all, SExpr};
use super::TextError;
use crate::formula::MsFormula;
use crate::term::{Sort, Substitution, Term, Var};

fn sort_of(e: &SExpr) -> Result<Sort, TextError> {
    let items = e.tagged("sort").ok_or_else(|| e.error("expected `(sort <vars>)`"))?;
    let vars = items
        .iter()
        .map(|v| v.atom().map(Var::new).ok_or_else(|| v.error("expected a variable")))
        .collect::<Result<Vec<_>, _>>()?;
    Sort::new(vars).map_err(|err| e.error(err.to_string()))
}

fn term(sort: &Sort, e: &SExpr) -> Result<Term, TextError> {
    match e {
        SExpr::Atom(a, _) => {
            let v = Var::new(a);
            if !sort.contains(&v) {
                return Err(e.error(format!("variable `{a}` is not in {sort}")));
            }
            Ok(Term::Var(v))
        }
        SExpr::List(items, _) => {
            let (head, args) = items.split_first().ok_or_else(|| e.error("empty term"))?;
            let op = head.atom().ok_or_else(|| head.error("expected an operation name"))?;
            let args = args.iter().map(|a| term(sort, a)).collect::<Result<_, _>>()?;
            Ok(Term::app(op, args))
        }
    }
}

fn arity(e: &SExpr, args: &[SExpr], n: usize, form: &str) -> Result<(), TextError> {
    if args.len() != n {
        return Err(e.error(format!("`{form}` takes {n} argument(s), found {}", args.len())));
    }
    Ok(())
}

/// The substitution written `((y1 t1) …)`, with terms over `codomain`.
fn substitution(codomain: &Sort, e: &SExpr) -> Result<Substitution, TextError> {
    let pairs = e.list().ok_or_else(|| e.error("expected `((<var> <term>) ...)`"))?;
    let mut vars = Vec::new();
    let mut images = Vec::new();
    for p in pairs {
        match p.list() {
            Some([v, t]) => {
                vars.push(Var::new(v.atom().ok_or_else(|| v.error("expected a variable"))?));
                images.push(term(codomain, t)?);
            }
            _ => return Err(p.error("expected `(<var> <term>)`")),
        }
    }
    let domain = Sort::new(vars).map_err(|err| e.error(err.to_string()))?;
    Substitution::new(domain, codomain.clone(), images).map_err(|err| e.error(err.to_string()))
}

fn formula(sort: &Sort, e: &SExpr) -> Result<MsFormula, TextError> {
    let items = e.list().ok_or_else(|| e.error("expected a formula"))?;
    let (head, args) = items.split_first().ok_or_else(|| e.error("empty formula"))?;
    let form = head.atom().ok_or_else(|| head.error("expected a connective"))?;
    let built = match form {
        "eq" => {
            arity(e, args, 2, form)?;
            MsFormula::eq(sort.clone(), term(sort, &args[0])?, term(sort, &args[1])?)
        }
        "not" => {
            arity(e, args, 1, form)?;
            Ok(formula(sort, &args[0])?.not())
        }
        "and" | "or" => {
            arity(e, args, 2, form)?;
            let (a, b) = (formula(sort, &args[0])?, formula(sort, &args[1])?);
            if form == "and" {
                MsFormula::and(a, b)
            } else {
                MsFormula::or(a, b)
            }
        }
        "exists" | "forall" => {
            arity(e, args, 2, form)?;
            let x = Var::new(args[0].atom().ok_or_else(|| args[0].error("expected a variable"))?);
            let body = formula(sort, &args[1])?;
            if form == "exists" {
                MsFormula::exists(x, body)
            } else {
                MsFormula::forall(x, body)
            }
        }
        "subst" => {
            arity(e, args, 2, form)?;
            let s = substitution(sort, &args[0])?;
            let body = formula(s.domain(), &args[1])?;
            MsFormula::subst(s, body)
        }
        other => return Err(head.error(format!("unknown connective `{other}`"))),
    };
    built.map_err(|err| e.error(err.to_string()))
}

/// A formula document: `(sort …)` followed by one formula of that sort.
pub fn parse_formula(text: &str) -> Result<MsFormula, TextError> {
    let es = read_all(text)?;
    match es.as_slice() {
        [s, f] => formula(&sort_of(s)?, f),
        [] => Err(TextError::syntax(1, 1, "expected `(sort ...)` and a formula")),
        [only] => Err(only.error("expected `(sort ...)` followed by a formula")),
        [_, _, extra, ..] => Err(extra.error("unexpected text after the formula")),
    }
}

/// A single term over `sort`.
pub fn parse_term(sort: &Sort, text: &str) -> Result<Term, TextError> {
    let es = read_all(text)?;
    match es.as_slice() {
        [t] => term(sort, t),
        [] => Err(TextError::syntax(1, 1, "expected a term")),
        [_, extra, ..] => Err(extra.error("unexpected text after the term")),
    }
}

/// A list of `(map (sort <codomain>) ((y t) …))` entries.
pub fn parse_pool(text: &str) -> Result<Vec<Substitution>, TextError> {
    read_all(text)?
        .iter()
        .map(|e| match e.tagged("map") {
            Some([sort, pairs]) => substitution(&sort_of(sort)?, pairs),
            _ => Err(e.error("expected `(map (sort ...) ((<var> <term>) ...))`")),
        })
        .collect()
}

pub fn print_pool(pool: &[Substitution]) -> String {
    let mut out = String::new();
    for s in pool {
        writeln!(out, "(map {} {})", s.codomain(), s).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexivity_document() {
        let f = parse_formula("(sort x1) (eq x1 x1)").unwrap();
        assert_eq!(f.length(), 0);
        assert_eq!(f.sort(), &Sort::numbered("x", 1));
    }

    #[test]
    fn every_connective_round_trips() {
        let docs = [
            "(sort x1 x2) (exists x2 (eq x1 (+ x2 x2)))",
            "(sort x1) (subst ((y1 (+ x1 x1))) (eq y1 (0)))",
            "(sort x1 x2) (and (not (eq x1 x2)) (or (eq x1 (0)) (eq (neg x2) x1)))",
            "(sort x1) (subst ((y1 x1) (y2 x1)) (exists y2 (eq y1 (* y2 y2))))",
        ];
        for d in docs {
            let f = parse_formula(d).unwrap();
            assert_eq!(f.to_document(), d);
            assert_eq!(parse_formula(&f.to_document()).unwrap(), f);
        }
    }

    #[test]
    fn forall_is_sugar() {
        let f = parse_formula("(sort x1) (forall x1 (eq x1 x1))").unwrap();
        assert_eq!(f.to_string(), "(not (exists x1 (not (eq x1 x1))))");
    }

    #[test]
    fn errors_point_at_the_culprit() {
        let err = parse_formula("(sort x1)\n(eq x1 x2)").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 2, col: 8, .. }), "{err}");
        let err = parse_formula("(sort x1) (exists x2 (eq x1 x1))").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 1, col: 11, .. }), "{err}");
        let err = parse_formula("(sort x1) (implies (eq x1 x1))").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 1, col: 12, .. }), "{err}");
        assert!(parse_formula("(eq x1 x1)").is_err());
        assert!(parse_formula("(sort x1 x1) (eq x1 x1)").is_err());
    }

    #[test]
    fn pool_round_trip() {
        let text = "(map (sort x1 x2) ((y1 x1) (y2 (* x1 x2))))\n(map (sort x1) ((x1 x1)))\n";
        let pool = parse_pool(text).unwrap();
        assert_eq!(pool.len(), 2);
        assert_eq!(pool[0].domain(), &Sort::numbered("y", 2));
        assert_eq!(print_pool(&pool), text);
        assert!(parse_pool("(map (sort x1) ((y1 x2)))").is_err());
    }

    #[test]
    fn terms() {
        let xs = Sort::numbered("x", 2);
        assert_eq!(parse_term(&xs, "(+ x1 (0))").unwrap().to_string(), "(+ x1 (0))");
        assert!(parse_term(&xs, "x3").is_err());
    }
}
