//! Variables, sorts, terms of the free algebra `W(X)` and substitutions
//! between free algebras.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;

/// A variable symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: impl AsRef<str>) -> Self {
        Var(Arc::from(name.as_ref()))
    }

    /// `x{index}`, the conventional names `x1, x2, ...`.
    pub fn indexed(prefix: &str, index: usize) -> Self {
        Var::new(format!("{prefix}{index}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Self {
        Var::new(name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered finite set of variables.
///
/// The order is the declaration order and it is significant: points store
/// their coordinates in this order, and two sorts are equal only when they
/// list the same variables in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sort(Arc<[Var]>);

impl Sort {
    pub fn new<I>(vars: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator,
        I::Item: Into<Var>,
    {
        let vars: Vec<Var> = vars.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(v) {
                return Err(AlgebraError::DuplicateVariable(v.to_string()));
            }
        }
        Ok(Sort(vars.into()))
    }

    pub fn empty() -> Self {
        Sort(Arc::from(Vec::new()))
    }

    /// The sort `{prefix1, ..., prefix<n>}`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Sort((1..=n).map(|i| Var::indexed(prefix, i)).collect())
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &Var) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: &Var) -> Option<usize> {
        self.0.iter().position(|w| w == v)
    }

    pub fn is_disjoint(&self, other: &Sort) -> bool {
        self.0.iter().all(|v| !other.contains(v))
    }

    /// Variables of `self` followed by the variables of `other` not already present.
    pub fn union(&self, other: &Sort) -> Sort {
        let mut vars = self.0.to_vec();
        vars.extend(other.0.iter().filter(|v| !self.contains(v)).cloned());
        Sort(vars.into())
    }

    /// Appends a fresh variable.
    pub fn extended(&self, v: Var) -> Result<Sort, AlgebraError> {
        if self.contains(&v) {
            return Err(AlgebraError::DuplicateVariable(v.to_string()));
        }
        let mut vars = self.0.to_vec();
        vars.push(v);
        Ok(Sort(vars.into()))
    }

    /// Number of points of this sort in an algebra with `size` elements.
    pub fn point_count(&self, size: usize) -> usize {
        size.pow(self.len() as u32)
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(sort")?;
        for v in self.0.iter() {
            write!(f, " {v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A term over variables of type `V`: a variable or an operation applied to
/// argument terms. Constants are applications with no arguments.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term<V = Var> {
    Var(V),
    App(Arc<str>, Vec<Term<V>>),
}

impl<V> Term<V> {
    pub fn var(v: impl Into<V>) -> Self {
        Term::Var(v.into())
    }

    pub fn app(op: impl AsRef<str>, args: Vec<Term<V>>) -> Self {
        Term::App(Arc::from(op.as_ref()), args)
    }

    pub fn constant(op: impl AsRef<str>) -> Self {
        Term::app(op, Vec::new())
    }

    /// Nesting depth of operation symbols. Variables and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => args.iter().map(|a| a.depth() + 1).max().unwrap_or(0),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn for_each_var<'a>(&'a self, f: &mut impl FnMut(&'a V)) {
        match self {
            Term::Var(v) => f(v),
            Term::App(_, args) => args.iter().for_each(|a| a.for_each_var(f)),
        }
    }

    /// Homomorphic image: every variable is replaced by `image(v)`.
    pub fn substitute<W, E>(&self, image: &mut impl FnMut(&V) -> Result<Term<W>, E>) -> Result<Term<W>, E> {
        Ok(match self {
            Term::Var(v) => image(v)?,
            Term::App(op, args) => Term::App(
                op.clone(),
                args.iter().map(|a| a.substitute(image)).collect::<Result<_, _>>()?,
            ),
        })
    }
}

impl Term<Var> {
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.for_each_var(&mut |v| {
            out.insert(v.clone());
        });
        out
    }

    /// First variable not in `sort`, if any.
    pub fn var_outside(&self, sort: &Sort) -> Option<Var> {
        let mut bad = None;
        self.for_each_var(&mut |v| {
            if bad.is_none() && !sort.contains(v) {
                bad = Some(v.clone());
            }
        });
        bad
    }
}

impl<V: fmt::Display> fmt::Display for Term<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::App(op, args) => {
                write!(f, "({op}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A homomorphism `s: W(X) -> W(Y)` given by the images of the variables of `X`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Substitution {
    domain: Sort,
    codomain: Sort,
    images: Vec<Term>,
}

impl Substitution {
    pub fn new(domain: Sort, codomain: Sort, images: Vec<Term>) -> Result<Self, AlgebraError> {
        if images.len() != domain.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: domain.len(),
                found: images.len(),
            });
        }
        for t in &images {
            if let Some(v) = t.var_outside(&codomain) {
                return Err(AlgebraError::UnknownVariable(v.to_string()));
            }
        }
        Ok(Substitution {
            domain,
            codomain,
            images,
        })
    }

    /// Domain is the list of bound variables, in the given order.
    pub fn from_pairs(codomain: Sort, pairs: Vec<(Var, Term)>) -> Result<Self, AlgebraError> {
        let (vars, images): (Vec<Var>, Vec<Term>) = pairs.into_iter().unzip();
        Substitution::new(Sort::new(vars)?, codomain, images)
    }

    pub fn identity(sort: Sort) -> Self {
        let images = sort.vars().iter().cloned().map(Term::Var).collect();
        Substitution {
            domain: sort.clone(),
            codomain: sort,
            images,
        }
    }

    pub fn domain(&self) -> &Sort {
        &self.domain
    }

    pub fn codomain(&self) -> &Sort {
        &self.codomain
    }

    pub fn images(&self) -> &[Term] {
        &self.images
    }

    pub fn image(&self, v: &Var) -> Option<&Term> {
        self.domain.index_of(v).map(|i| &self.images[i])
    }

    /// `s(t)` for a term `t` over the domain.
    pub fn apply(&self, t: &Term) -> Result<Term, AlgebraError> {
        t.substitute(&mut |v: &Var| {
            self.image(v)
                .cloned()
                .ok_or_else(|| AlgebraError::UnknownVariable(v.to_string()))
        })
    }

    /// `self ∘ inner`, defined when `inner.codomain == self.domain`.
    pub fn after(&self, inner: &Substitution) -> Result<Substitution, AlgebraError> {
        if inner.codomain != self.domain {
            return Err(AlgebraError::SortMismatch {
                expected: self.domain.to_string(),
                found: inner.codomain.to_string(),
            });
        }
        let images = inner.images.iter().map(|t| self.apply(t)).collect::<Result<_, _>>()?;
        Ok(Substitution {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (v, t)) in self.domain.vars().iter().zip(&self.images).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({v} {t})")?;
        }
        f.write_str(")")
    }
}
