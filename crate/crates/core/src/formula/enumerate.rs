//! Bounded enumeration of terms and formulas in [`EnumerationOrder`].
//!
//! [`EnumerationOrder`]: super::EnumerationOrder

use std::collections::HashMap;
use std::sync::Arc;

use super::MsFormula;
use crate::algebra::{for_each_tuple, Signature};
use crate::term::{Sort, Substitution, Term};

/// Generates terms over `sort` of depth at most `max_depth` in enumeration
/// order and returns those for which `keep` answers true.
///
/// Deeper terms are built only from kept terms, so a `keep` that discards
/// terms equivalent to an earlier one still reaches the first term of every
/// equivalence class.
pub(crate) fn grow_terms(
    sort: &Sort,
    sig: &Signature,
    max_depth: usize,
    mut keep: impl FnMut(&Term) -> bool,
) -> Vec<Term> {
    let mut kept = Vec::new();
    let leaves = sort.vars().iter().map(|v| Term::Var(v.clone())).chain(
        sig.ops()
            .iter()
            .filter(|o| o.arity == 0)
            .map(|o| Term::App(o.name.clone(), Vec::new())),
    );
    for t in leaves {
        if keep(&t) {
            kept.push(t);
        }
    }
    // kept[layer_start..] holds the kept terms of the previous depth
    let mut layer_start = 0;
    for _ in 1..=max_depth {
        let below = kept.len();
        let mut fresh = Vec::new();
        for op in sig.ops().iter().filter(|o| o.arity > 0) {
            for_each_tuple(below, op.arity, |idx| {
                if idx.iter().any(|&i| i >= layer_start) {
                    let t = Term::App(op.name.clone(), idx.iter().map(|&i| kept[i].clone()).collect());
                    if keep(&t) {
                        fresh.push(t);
                    }
                }
            });
        }
        layer_start = below;
        kept.extend(fresh);
    }
    kept
}

/// Every term over `sort` of depth at most `max_depth`, in enumeration order.
pub fn enumerate_terms(sort: &Sort, sig: &Signature, max_depth: usize) -> Vec<Term> {
    grow_terms(sort, sig, max_depth, |_| true)
}

struct Layers {
    signature: Signature,
    pool: Vec<Substitution>,
    max_term_depth: usize,
    terms: HashMap<Sort, Arc<Vec<Term>>>,
    layers: HashMap<(Sort, usize), Arc<Vec<MsFormula>>>,
}

impl Layers {
    fn terms(&mut self, sort: &Sort) -> Arc<Vec<Term>> {
        if let Some(t) = self.terms.get(sort) {
            return t.clone();
        }
        let t = Arc::new(enumerate_terms(sort, &self.signature, self.max_term_depth));
        self.terms.insert(sort.clone(), t.clone());
        t
    }

    /// All formulas of `sort` with length exactly `n`, in order.
    fn layer(&mut self, sort: &Sort, n: usize) -> Arc<Vec<MsFormula>> {
        let key = (sort.clone(), n);
        if let Some(l) = self.layers.get(&key) {
            return l.clone();
        }
        let mut out = Vec::new();
        if n == 0 {
            let terms = self.terms(sort);
            for l in terms.iter() {
                for r in terms.iter() {
                    out.push(MsFormula::eq(sort.clone(), l.clone(), r.clone()).expect("terms over sort"));
                }
            }
        } else {
            let prev = self.layer(sort, n - 1);
            out.extend(prev.iter().map(|f| f.clone().not()));
            let lower: Vec<_> = (0..n).map(|k| self.layer(sort, k)).collect();
            for join in [MsFormula::and, MsFormula::or] {
                for k in 0..n {
                    for f in lower[k].iter() {
                        for g in lower[n - 1 - k].iter() {
                            out.push(join(f.clone(), g.clone()).expect("same sort"));
                        }
                    }
                }
            }
            for x in sort.vars() {
                out.extend(
                    prev.iter()
                        .map(|f| MsFormula::exists(x.clone(), f.clone()).expect("x in sort")),
                );
            }
            let pool: Vec<Arc<Substitution>> = self
                .pool
                .iter()
                .filter(|s| s.codomain() == sort)
                .map(|s| Arc::new(s.clone()))
                .collect();
            for s in pool {
                let inner = self.layer(s.domain(), n - 1);
                out.extend(
                    inner
                        .iter()
                        .map(|f| MsFormula::subst(s.clone(), f.clone()).expect("domain sort")),
                );
            }
        }
        let out = Arc::new(out);
        self.layers.insert(key, out.clone());
        out
    }
}

/// Lazily yields every well-formed formula of a sort within the bounds,
/// each exactly once, in enumeration order. Substitution nodes come only
/// from the pool.
pub struct FormulaStream {
    layers: Layers,
    root: Sort,
    max_length: usize,
    length: usize,
    current: Arc<Vec<MsFormula>>,
    pos: usize,
}

impl Iterator for FormulaStream {
    type Item = MsFormula;

    fn next(&mut self) -> Option<MsFormula> {
        loop {
            if let Some(f) = self.current.get(self.pos) {
                self.pos += 1;
                return Some(f.clone());
            }
            if self.length >= self.max_length {
                return None;
            }
            self.length += 1;
            self.pos = 0;
            self.current = self.layers.layer(&self.root, self.length);
        }
    }
}

pub fn enumerate_formulas(
    sort: &Sort,
    signature: &Signature,
    max_length: usize,
    max_term_depth: usize,
    pool: &[Substitution],
) -> FormulaStream {
    let mut layers = Layers {
        signature: signature.clone(),
        pool: pool.to_vec(),
        max_term_depth,
        terms: HashMap::new(),
        layers: HashMap::new(),
    };
    let current = layers.layer(sort, 0);
    FormulaStream {
        layers,
        root: sort.clone(),
        max_length,
        length: 0,
        current,
        pos: 0,
    }
}
