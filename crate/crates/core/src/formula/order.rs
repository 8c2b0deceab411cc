use std::cmp::Ordering;

use super::{Kind, MsFormula};
use crate::algebra::Signature;
use crate::term::{Sort, Substitution, Term};

/// The total order in which formulas are enumerated.
///
/// Terms over a sort compare by depth, then by head symbol (the sort's
/// variables in declaration order, then operations in signature order), then
/// by their arguments lexicographically.
///
/// Formulas compare by length, then by constructor in the order
/// `eq < not < and < or < exists < subst`, then by their components
/// lexicographically: the two terms of an equality, the operands of a
/// connective, the position of the quantified variable in the sort followed by
/// the body, and the position of the substitution in the pool followed by the
/// body.
///
/// The order is monotone: replacing a component by a smaller one yields a
/// smaller formula. Bounded comparison relies on this.
pub struct EnumerationOrder<'a> {
    signature: &'a Signature,
    pool: &'a [Substitution],
}

pub(crate) const TAG_EQ: u8 = 0;
pub(crate) const TAG_NOT: u8 = 1;
pub(crate) const TAG_AND: u8 = 2;
pub(crate) const TAG_OR: u8 = 3;
pub(crate) const TAG_EXISTS: u8 = 4;
pub(crate) const TAG_SUBST: u8 = 5;

pub(crate) fn tag(f: &MsFormula) -> u8 {
    match f.kind() {
        Kind::Eq(..) => TAG_EQ,
        Kind::Not(_) => TAG_NOT,
        Kind::And(..) => TAG_AND,
        Kind::Or(..) => TAG_OR,
        Kind::Exists(..) => TAG_EXISTS,
        Kind::Subst(..) => TAG_SUBST,
    }
}

impl<'a> EnumerationOrder<'a> {
    pub fn new(signature: &'a Signature, pool: &'a [Substitution]) -> Self {
        EnumerationOrder { signature, pool }
    }

    fn head_rank(&self, sort: &Sort, t: &Term) -> usize {
        match t {
            Term::Var(v) => sort.index_of(v).unwrap_or(usize::MAX / 2),
            Term::App(op, _) => sort.len() + self.signature.index_of(op).unwrap_or(usize::MAX / 2),
        }
    }

    pub fn cmp_terms(&self, sort: &Sort, a: &Term, b: &Term) -> Ordering {
        a.depth()
            .cmp(&b.depth())
            .then_with(|| self.head_rank(sort, a).cmp(&self.head_rank(sort, b)))
            .then_with(|| match (a, b) {
                (Term::App(_, xs), Term::App(_, ys)) => xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| self.cmp_terms(sort, x, y))
                    .find(|o| o.is_ne())
                    .unwrap_or_else(|| xs.len().cmp(&ys.len())),
                _ => Ordering::Equal,
            })
    }

    fn pool_index(&self, s: &Substitution) -> usize {
        self.pool.iter().position(|p| p == s).unwrap_or(usize::MAX)
    }

    pub fn cmp(&self, f: &MsFormula, g: &MsFormula) -> Ordering {
        f.length()
            .cmp(&g.length())
            .then_with(|| tag(f).cmp(&tag(g)))
            .then_with(|| match (f.kind(), g.kind()) {
                (Kind::Eq(l1, r1), Kind::Eq(l2, r2)) => self
                    .cmp_terms(f.sort(), l1, l2)
                    .then_with(|| self.cmp_terms(f.sort(), r1, r2)),
                (Kind::Not(a), Kind::Not(b)) => self.cmp(a, b),
                (Kind::And(a1, b1), Kind::And(a2, b2)) | (Kind::Or(a1, b1), Kind::Or(a2, b2)) => {
                    self.cmp(a1, a2).then_with(|| self.cmp(b1, b2))
                }
                (Kind::Exists(x, a), Kind::Exists(y, b)) => f
                    .sort()
                    .index_of(x)
                    .cmp(&g.sort().index_of(y))
                    .then_with(|| self.cmp(a, b)),
                (Kind::Subst(s, a), Kind::Subst(t, b)) => {
                    self.pool_index(s).cmp(&self.pool_index(t)).then_with(|| self.cmp(a, b))
                }
                _ => Ordering::Equal,
            })
    }
}
