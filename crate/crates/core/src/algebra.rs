//! Signatures, finite algebras given by operation tables, and points.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::term::{Sort, Substitution, Term, Var};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OpSymbol {
    pub name: Arc<str>,
    pub arity: usize,
}

/// An ordered list of operation symbols with unique names.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Signature {
    ops: Vec<OpSymbol>,
}

impl Signature {
    pub fn new<S: AsRef<str>>(ops: impl IntoIterator<Item = (S, usize)>) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (name, arity) in ops {
            let name: Arc<str> = Arc::from(name.as_ref());
            if !seen.insert(name.clone()) {
                return Err(AlgebraError::DuplicateOperation(name.to_string()));
            }
            out.push(OpSymbol { name, arity });
        }
        Ok(Signature { ops: out })
    }

    pub fn ops(&self) -> &[OpSymbol] {
        &self.ops
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.ops.iter().position(|o| &*o.name == name)
    }

    pub fn get(&self, name: &str) -> Option<&OpSymbol> {
        self.ops.iter().find(|o| &*o.name == name)
    }

    /// Checks that every operation in `t` exists and is applied to the right
    /// number of arguments.
    pub fn check_term<V>(&self, t: &Term<V>) -> Result<(), AlgebraError> {
        match t {
            Term::Var(_) => Ok(()),
            Term::App(op, args) => {
                let sym = self
                    .get(op)
                    .ok_or_else(|| AlgebraError::UnknownOperation(op.to_string()))?;
                if sym.arity != args.len() {
                    return Err(AlgebraError::ArityMismatch {
                        op: op.to_string(),
                        expected: sym.arity,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
        }
    }
}

/// A finite algebra on the carrier `0..size`.
///
/// Each operation of arity `r` is stored as a table of `size^r` entries in
/// row-major order: the arguments `(a_1, ..., a_r)` sit at index
/// `a_1 * size^(r-1) + ... + a_r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAlgebra {
    name: String,
    signature: Signature,
    size: usize,
    tables: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    pub fn new(
        name: impl Into<String>,
        signature: Signature,
        size: usize,
        tables: Vec<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        if tables.len() != signature.ops().len() {
            return Err(AlgebraError::LengthMismatch {
                expected: signature.ops().len(),
                found: tables.len(),
            });
        }
        for (sym, table) in signature.ops().iter().zip(&tables) {
            let expected = size.pow(sym.arity as u32);
            if table.len() != expected {
                return Err(AlgebraError::TableSize {
                    op: sym.name.to_string(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= size) {
                return Err(AlgebraError::ValueOutOfRange {
                    op: sym.name.to_string(),
                    value,
                    size,
                });
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            signature,
            size,
            tables,
        })
    }

    /// Builds the tables by evaluating `f(op_index, args)` on every argument tuple.
    pub fn from_fn(
        name: impl Into<String>,
        signature: Signature,
        size: usize,
        mut f: impl FnMut(usize, &[usize]) -> usize,
    ) -> Result<Self, AlgebraError> {
        let mut tables = Vec::with_capacity(signature.ops().len());
        for (i, sym) in signature.ops().iter().enumerate() {
            let mut table = Vec::with_capacity(size.pow(sym.arity as u32));
            for_each_tuple(size, sym.arity, |args| table.push(f(i, args)));
            tables.push(table);
        }
        FiniteAlgebra::new(name, signature, size, tables)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self, op: usize) -> &[usize] {
        &self.tables[op]
    }

    pub fn arity(&self, op: usize) -> usize {
        self.signature.ops[op].arity
    }

    /// Value of operation number `op` on `args`. Panics if `args` has the wrong length.
    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        assert_eq!(args.len(), self.arity(op));
        let idx = args.iter().fold(0, |acc, &a| acc * self.size + a);
        self.tables[op][idx]
    }

    /// Evaluates `t` with variables looked up through `lookup`.
    pub fn eval_with<V: fmt::Display>(
        &self,
        t: &Term<V>,
        lookup: &impl Fn(&V) -> Option<usize>,
    ) -> Result<usize, AlgebraError> {
        match t {
            Term::Var(v) => lookup(v).ok_or_else(|| AlgebraError::UnknownVariable(v.to_string())),
            Term::App(op, args) => {
                let i = self
                    .signature
                    .index_of(op)
                    .ok_or_else(|| AlgebraError::UnknownOperation(op.to_string()))?;
                let arity = self.arity(i);
                if arity != args.len() {
                    return Err(AlgebraError::ArityMismatch {
                        op: op.to_string(),
                        expected: arity,
                        found: args.len(),
                    });
                }
                let mut idx = 0;
                for a in args {
                    idx = idx * self.size + self.eval_with(a, lookup)?;
                }
                Ok(self.tables[i][idx])
            }
        }
    }

    /// Evaluates a term over `sort` at the coordinates `values` (aligned with `sort`).
    pub fn eval_at(&self, t: &Term, sort: &Sort, values: &[usize]) -> Result<usize, AlgebraError> {
        self.eval_with(t, &|v: &Var| sort.index_of(v).map(|i| values[i]))
    }

    /// `μ(t)` for the point `μ`, computed bottom-up by table lookup.
    pub fn eval_term(&self, t: &Term, p: &Point) -> Result<usize, AlgebraError> {
        self.eval_at(t, &p.sort, &p.values)
    }

    pub fn check_point(&self, p: &Point) -> Result<(), AlgebraError> {
        match p.values.iter().find(|&&v| v >= self.size) {
            Some(&value) => Err(AlgebraError::ElementOutOfRange { value, size: self.size }),
            None => Ok(()),
        }
    }

    /// Whether `perm` (a map on `0..size`) is a bijection commuting with every operation.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.size {
            return false;
        }
        let mut seen = vec![false; self.size];
        for &p in perm {
            if p >= self.size || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        self.signature.ops.iter().enumerate().all(|(op, sym)| {
            let mut ok = true;
            let mut mapped = vec![0; sym.arity];
            for_each_tuple(self.size, sym.arity, |args| {
                if ok {
                    for (m, &a) in mapped.iter_mut().zip(args) {
                        *m = perm[a];
                    }
                    ok = perm[self.apply(op, args)] == self.apply(op, &mapped);
                }
            });
            ok
        })
    }
}

/// Calls `f` on every tuple in `{0..size}^len`, in lexicographic order.
pub fn for_each_tuple(size: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut tuple = vec![0; len];
    if len > 0 && size == 0 {
        return;
    }
    loop {
        f(&tuple);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < size {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// An assignment of carrier elements to the variables of a sort; a
/// homomorphism `W(X) -> H`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    sort: Sort,
    values: Vec<usize>,
}

impl Point {
    pub fn new(sort: Sort, values: Vec<usize>) -> Result<Self, AlgebraError> {
        if sort.len() != values.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: sort.len(),
                found: values.len(),
            });
        }
        Ok(Point { sort, values })
    }

    /// The point `x1 ↦ values[0], x2 ↦ values[1], ...`.
    pub fn tuple(values: &[usize]) -> Self {
        Point {
            sort: Sort::numbered("x", values.len()),
            values: values.to_vec(),
        }
    }

    pub fn sort(&self) -> &Sort {
        &self.sort
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, v: &Var) -> Option<usize> {
        self.sort.index_of(v).map(|i| self.values[i])
    }

    /// The point `self ∘ s` of sort `s.domain()`.
    pub fn compose(&self, h: &FiniteAlgebra, s: &Substitution) -> Result<Point, AlgebraError> {
        if s.codomain() != &self.sort {
            return Err(AlgebraError::SortMismatch {
                expected: s.codomain().to_string(),
                found: self.sort.to_string(),
            });
        }
        let values = s
            .images()
            .iter()
            .map(|t| h.eval_term(t, self))
            .collect::<Result<_, _>>()?;
        Ok(Point {
            sort: s.domain().clone(),
            values,
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, a)) in self.sort.vars().iter().zip(&self.values).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}={a}")?;
        }
        Ok(())
    }
}
