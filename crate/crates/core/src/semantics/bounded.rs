//! Bounded comparison of logical kernels.
//!
//! Two points are compared on every formula of their sort up to a length and
//! term-depth bound, with substitution nodes drawn from a finite pool. The
//! answer is either "no formula within the bounds separates them" or the
//! first separating formula in [`EnumerationOrder`].
//!
//! Enumerating formulas one by one is hopeless beyond toy bounds, so
//! [`FormulaClasses`] works with value sets instead: a formula only matters
//! through its value set in each algebra, and the value set of a compound
//! formula depends only on the value sets of its parts. Classes of formulas
//! with equal value sets are built length by length, each represented by its
//! first formula in enumeration order. Because the order is monotone under
//! replacing a component by a smaller one, the first formula of every class
//! is built from first formulas of classes, so generating candidates from
//! representatives alone reaches every class and finds its representative.
//! The last length is never materialized: for a fixed pair of points only
//! the truth values at those two points are needed.
//!
//! [`bounded_lker_eq_by_enumeration`] is the literal formula-by-formula
//! definition and serves as the reference.
//!
//! [`EnumerationOrder`]: crate::formula::EnumerationOrder

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{holds, point_index, SemanticsError};
use crate::algebra::{FiniteAlgebra, Point};
use crate::exec::Execution;
use crate::formula::{enumerate::grow_terms, enumerate_formulas, MsFormula};
use crate::term::{Sort, Substitution, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_length: usize,
    pub max_term_depth: usize,
}

impl Bounds {
    pub fn new(max_length: usize, max_term_depth: usize) -> Self {
        Bounds {
            max_length,
            max_term_depth,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Every formula within the bounds holds at both points or at neither.
    Equivalent,
    /// The first formula, in enumeration order, holding at exactly one point.
    Separated(MsFormula),
}

impl Comparison {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Comparison::Equivalent)
    }

    pub fn separator(&self) -> Option<&MsFormula> {
        match self {
            Comparison::Equivalent => None,
            Comparison::Separated(f) => Some(f),
        }
    }
}

type Bits = Box<[u64]>;

#[inline]
fn get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

#[derive(Clone, Copy, Debug)]
enum Derivation {
    /// Indices into the sort's term representatives.
    Eq(usize, usize),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    /// Position of the variable in the sort, body.
    Exists(usize, usize),
    /// Pool index, body class in the pool entry's domain sort.
    Subst(usize, usize),
}

/// One algebra's block of points inside a value-set bitmap.
#[derive(Clone, Copy, Debug)]
struct Block {
    size: usize,
    points: usize,
    offset: usize,
}

struct SubstMap {
    pool: usize,
    domain: usize,
    /// Per block: codomain point index ↦ domain point index.
    maps: Vec<Vec<usize>>,
}

struct SortTable {
    sort: Sort,
    blocks: Vec<Block>,
    words: usize,
    full: Bits,
    terms: Vec<Term>,
    classes: Vec<(Bits, Derivation)>,
    /// `classes[layer_ends[n - 1]..layer_ends[n]]` were first reached at length `n`.
    layer_ends: Vec<usize>,
    index: HashMap<Bits, usize>,
    substs: Vec<SubstMap>,
}

impl SortTable {
    fn layer(&self, n: usize) -> std::ops::Range<usize> {
        let start = if n == 0 { 0 } else { self.layer_ends[n - 1] };
        start..self.layer_ends[n]
    }

    fn bits(&self, class: usize) -> &[u64] {
        &self.classes[class].0
    }

    fn insert(&mut self, bits: Bits, d: Derivation) {
        if !self.index.contains_key(&bits) {
            self.index.insert(bits.clone(), self.classes.len());
            self.classes.push((bits, d));
        }
    }
}

const CHUNK: usize = 1 << 14;

/// Formula classes of a sort, by value set in one or two algebras, up to
/// the bounds.
pub struct FormulaClasses {
    algebras: Vec<FiniteAlgebra>,
    pool: Vec<Arc<Substitution>>,
    bounds: Bounds,
    tables: Vec<SortTable>,
    exec: Execution,
}

impl FormulaClasses {
    /// Classes for comparing points of `sort` in `h1` against points in `h2`.
    pub fn build(
        h1: &FiniteAlgebra,
        h2: &FiniteAlgebra,
        sort: &Sort,
        bounds: Bounds,
        pool: &[Substitution],
        exec: Execution,
    ) -> Result<Self, SemanticsError> {
        if h1.signature() != h2.signature() {
            return Err(SemanticsError::SignatureMismatch(h1.name().into(), h2.name().into()));
        }
        for s in pool {
            for t in s.images() {
                h1.signature().check_term(t)?;
            }
        }
        let algebras = if h1 == h2 {
            vec![h1.clone()]
        } else {
            vec![h1.clone(), h2.clone()]
        };
        let mut classes = FormulaClasses {
            algebras,
            pool: pool.iter().cloned().map(Arc::new).collect(),
            bounds,
            tables: Vec::new(),
            exec,
        };

        // the root sort and every domain reachable through the pool
        let mut sorts = vec![sort.clone()];
        let mut i = 0;
        while i < sorts.len() {
            for s in pool {
                if s.codomain() == &sorts[i] && !sorts.contains(s.domain()) {
                    sorts.push(s.domain().clone());
                }
            }
            i += 1;
        }
        for s in &sorts {
            let table = classes.new_table(s);
            classes.tables.push(table);
        }
        for t in 0..classes.tables.len() {
            classes.tables[t].substs = classes.subst_maps(&sorts, t);
        }
        for n in 1..=classes.stored_length() {
            for t in 0..classes.tables.len() {
                classes.build_layer(t, n);
            }
        }
        Ok(classes)
    }

    /// Longest length whose classes are materialized.
    fn stored_length(&self) -> usize {
        self.bounds.max_length.saturating_sub(1)
    }

    /// Number of materialized classes of the root sort.
    pub fn class_count(&self) -> usize {
        self.tables[0].classes.len()
    }

    /// Number of distinct term functions of the root sort within the depth bound.
    pub fn term_count(&self) -> usize {
        self.tables[0].terms.len()
    }

    fn new_table(&self, sort: &Sort) -> SortTable {
        let mut blocks = Vec::new();
        let mut offset = 0;
        for h in &self.algebras {
            let points = sort.point_count(h.size());
            blocks.push(Block {
                size: h.size(),
                points,
                offset,
            });
            offset += points;
        }
        let total = offset;
        let words = total.div_ceil(64);
        let mut full = vec![0u64; words].into_boxed_slice();
        for i in 0..total {
            set(&mut full, i);
        }

        // term representatives, first of each value vector
        let mut values: Vec<Vec<usize>> = Vec::new();
        let mut seen = HashSet::new();
        let algebras = &self.algebras;
        let terms = grow_terms(sort, algebras[0].signature(), self.bounds.max_term_depth, |t| {
            let mut v = Vec::with_capacity(total);
            for (h, b) in algebras.iter().zip(&blocks) {
                for p in 0..b.points {
                    let env = super::point_at(b.size, sort.len(), p);
                    v.push(h.eval_at(t, sort, &env).expect("checked term"));
                }
            }
            if seen.insert(v.clone()) {
                values.push(v);
                true
            } else {
                false
            }
        });

        let mut table = SortTable {
            sort: sort.clone(),
            blocks,
            words,
            full,
            terms,
            classes: Vec::new(),
            layer_ends: Vec::new(),
            index: HashMap::new(),
            substs: Vec::new(),
        };

        let r = values.len();
        let rows = self.exec.map_range(r, |l| {
            (0..r)
                .map(|rr| {
                    let mut bits = vec![0u64; words].into_boxed_slice();
                    for (i, (a, b)) in values[l].iter().zip(&values[rr]).enumerate() {
                        if a == b {
                            set(&mut bits, i);
                        }
                    }
                    bits
                })
                .collect::<Vec<_>>()
        });
        for (l, row) in rows.into_iter().enumerate() {
            for (rr, bits) in row.into_iter().enumerate() {
                table.insert(bits, Derivation::Eq(l, rr));
            }
        }
        table.layer_ends.push(table.classes.len());
        table
    }

    fn subst_maps(&self, sorts: &[Sort], t: usize) -> Vec<SubstMap> {
        let sort = &sorts[t];
        self.pool
            .iter()
            .enumerate()
            .filter(|(_, s)| s.codomain() == sort)
            .map(|(i, s)| {
                let domain = sorts.iter().position(|d| d == s.domain()).expect("closure of sorts");
                let maps = self
                    .algebras
                    .iter()
                    .map(|h| {
                        (0..sort.point_count(h.size()))
                            .map(|p| {
                                let env = super::point_at(h.size(), sort.len(), p);
                                let img: Vec<usize> = s
                                    .images()
                                    .iter()
                                    .map(|t| h.eval_at(t, sort, &env).expect("checked term"))
                                    .collect();
                                point_index(h.size(), &img)
                            })
                            .collect()
                    })
                    .collect();
                SubstMap { pool: i, domain, maps }
            })
            .collect()
    }

    fn compute(&self, t: usize, d: Derivation) -> Bits {
        let table = &self.tables[t];
        let mut out = vec![0u64; table.words].into_boxed_slice();
        match d {
            Derivation::Eq(..) => unreachable!("equalities are built with the table"),
            Derivation::Not(f) => {
                for ((o, a), m) in out.iter_mut().zip(table.bits(f)).zip(table.full.iter()) {
                    *o = !a & m;
                }
            }
            Derivation::And(f, g) => {
                for ((o, a), b) in out.iter_mut().zip(table.bits(f)).zip(table.bits(g)) {
                    *o = a & b;
                }
            }
            Derivation::Or(f, g) => {
                for ((o, a), b) in out.iter_mut().zip(table.bits(f)).zip(table.bits(g)) {
                    *o = a | b;
                }
            }
            Derivation::Exists(j, f) => {
                let src = table.bits(f);
                let arity = table.sort.len();
                for b in &table.blocks {
                    let stride = b.size.pow((arity - 1 - j) as u32);
                    for base in 0..b.points {
                        if (base / stride) % b.size != 0 {
                            continue;
                        }
                        let any = (0..b.size).any(|v| get(src, b.offset + base + v * stride));
                        if any {
                            for v in 0..b.size {
                                set(&mut out, b.offset + base + v * stride);
                            }
                        }
                    }
                }
            }
            Derivation::Subst(pool, f) => {
                let sm = table.substs.iter().find(|m| m.pool == pool).expect("pool entry");
                let dom = &self.tables[sm.domain];
                let src = dom.bits(f);
                for ((b, db), map) in table.blocks.iter().zip(&dom.blocks).zip(&sm.maps) {
                    for (p, &q) in map.iter().enumerate() {
                        if get(src, db.offset + q) {
                            set(&mut out, b.offset + p);
                        }
                    }
                }
            }
        }
        out
    }

    fn candidates(&self, t: usize, n: usize) -> Vec<Derivation> {
        let table = &self.tables[t];
        let mut out = Vec::new();
        let prev = table.layer(n - 1);
        out.extend(prev.clone().map(Derivation::Not));
        for ctor in [Derivation::And as fn(usize, usize) -> Derivation, Derivation::Or] {
            for k in 0..n {
                for f in table.layer(k) {
                    out.extend(table.layer(n - 1 - k).map(|g| ctor(f, g)));
                }
            }
        }
        for j in 0..table.sort.len() {
            out.extend(prev.clone().map(|f| Derivation::Exists(j, f)));
        }
        for sm in &table.substs {
            out.extend(
                self.tables[sm.domain]
                    .layer(n - 1)
                    .map(|f| Derivation::Subst(sm.pool, f)),
            );
        }
        out
    }

    fn build_layer(&mut self, t: usize, n: usize) {
        let candidates = self.candidates(t, n);
        for chunk in candidates.chunks(CHUNK) {
            let bits = self.exec.map(chunk, |&d| self.compute(t, d));
            let table = &mut self.tables[t];
            for (d, b) in chunk.iter().zip(bits) {
                table.insert(b, *d);
            }
        }
        let table = &mut self.tables[t];
        table.layer_ends.push(table.classes.len());
    }

    fn formula(&self, t: usize, class: usize) -> MsFormula {
        let table = &self.tables[t];
        self.derive(t, table.classes[class].1)
    }

    fn derive(&self, t: usize, d: Derivation) -> MsFormula {
        let table = &self.tables[t];
        let sort = table.sort.clone();
        match d {
            Derivation::Eq(l, r) => MsFormula::eq(sort, table.terms[l].clone(), table.terms[r].clone()),
            Derivation::Not(f) => Ok(self.formula(t, f).not()),
            Derivation::And(f, g) => MsFormula::and(self.formula(t, f), self.formula(t, g)),
            Derivation::Or(f, g) => MsFormula::or(self.formula(t, f), self.formula(t, g)),
            Derivation::Exists(j, f) => MsFormula::exists(sort.vars()[j].clone(), self.formula(t, f)),
            Derivation::Subst(pool, f) => {
                let sm = table.substs.iter().find(|m| m.pool == pool).expect("pool entry");
                MsFormula::subst(self.pool[pool].clone(), self.formula(sm.domain, f))
            }
        }
        .expect("classes are built from well-sorted parts")
    }

    /// Compares `p1` (a point of the first algebra) with `p2` (a point of the second).
    pub fn separate(&self, p1: &Point, p2: &Point) -> Result<Comparison, SemanticsError> {
        let root = &self.tables[0];
        for p in [p1, p2] {
            if p.sort() != &root.sort {
                return Err(SemanticsError::SortMismatch {
                    expected: root.sort.clone(),
                    found: p.sort().clone(),
                });
            }
        }
        let first = &self.algebras[0];
        let last = self.algebras.last().expect("one algebra at least");
        first.check_point(p1)?;
        last.check_point(p2)?;
        let (b1, b2) = (root.blocks[0], *root.blocks.last().expect("block"));
        let i1 = b1.offset + point_index(b1.size, p1.values());
        let i2 = b2.offset + point_index(b2.size, p2.values());

        if let Some(c) = (0..root.classes.len()).find(|&c| get(root.bits(c), i1) != get(root.bits(c), i2)) {
            return Ok(Comparison::Separated(self.formula(0, c)));
        }
        if self.bounds.max_length == 0 {
            return Ok(Comparison::Equivalent);
        }
        Ok(match self.top_layer(i1, i2, p1, p2) {
            Some(d) => Comparison::Separated(self.derive(0, d)),
            None => Comparison::Equivalent,
        })
    }

    /// First separating formula of length exactly `max_length`, judged only
    /// at the two points.
    fn top_layer(&self, i1: usize, i2: usize, p1: &Point, p2: &Point) -> Option<Derivation> {
        let root = &self.tables[0];
        let top = self.bounds.max_length;
        let last = top - 1;
        let profile = |c: usize| (get(root.bits(c), i1), get(root.bits(c), i2));

        if let Some(f) = root.layer(last).find(|&f| profile(f).0 != profile(f).1) {
            return Some(Derivation::Not(f));
        }

        // first class of each profile, per length
        let firsts: Vec<[Option<usize>; 4]> = (0..=last)
            .map(|k| {
                let mut out = [None; 4];
                for c in root.layer(k) {
                    let (a, b) = profile(c);
                    let slot = &mut out[(a as usize) << 1 | b as usize];
                    if slot.is_none() {
                        *slot = Some(c);
                    }
                }
                out
            })
            .collect();
        type Join = (fn(bool, bool) -> bool, fn(usize, usize) -> Derivation);
        let joins: [Join; 2] = [(|a, b| a && b, Derivation::And), (|a, b| a || b, Derivation::Or)];
        for (join, ctor) in joins {
            for k in 0..=last {
                for f in root.layer(k) {
                    let (a1, a2) = profile(f);
                    let g = (0..4)
                        .filter(|&q| join(a1, q >> 1 == 1) != join(a2, q & 1 == 1))
                        .filter_map(|q| firsts[last - k][q])
                        .min();
                    if let Some(g) = g {
                        return Some(ctor(f, g));
                    }
                }
            }
        }

        let exists_at = |bits: &[u64], b: &Block, p: &Point, j: usize| {
            let mut env = p.values().to_vec();
            (0..b.size).any(|v| {
                env[j] = v;
                get(bits, b.offset + point_index(b.size, &env))
            })
        };
        let (b1, b2) = (root.blocks[0], *root.blocks.last().expect("block"));
        for j in 0..root.sort.len() {
            for f in root.layer(last) {
                let bits = root.bits(f);
                if exists_at(bits, &b1, p1, j) != exists_at(bits, &b2, p2, j) {
                    return Some(Derivation::Exists(j, f));
                }
            }
        }

        let (q1, q2) = (point_index(b1.size, p1.values()), point_index(b2.size, p2.values()));
        for sm in &root.substs {
            let dom = &self.tables[sm.domain];
            let (d1, d2) = (dom.blocks[0], *dom.blocks.last().expect("block"));
            let (m1, m2) = (&sm.maps[0], sm.maps.last().expect("map"));
            for f in dom.layer(last) {
                let bits = dom.bits(f);
                if get(bits, d1.offset + m1[q1]) != get(bits, d2.offset + m2[q2]) {
                    return Some(Derivation::Subst(sm.pool, f));
                }
            }
        }
        None
    }
}

/// Compares the logical kernels of `p1` in `h1` and `p2` in `h2` on all
/// formulas within `bounds`, returning the first separating formula.
pub fn bounded_lker_eq(
    h1: &FiniteAlgebra,
    p1: &Point,
    h2: &FiniteAlgebra,
    p2: &Point,
    bounds: Bounds,
    pool: &[Substitution],
) -> Result<Comparison, SemanticsError> {
    if p1.sort() != p2.sort() {
        return Err(SemanticsError::SortMismatch {
            expected: p1.sort().clone(),
            found: p2.sort().clone(),
        });
    }
    FormulaClasses::build(h1, h2, p1.sort(), bounds, pool, Execution::default())?.separate(p1, p2)
}

/// The same comparison, evaluating each enumerated formula in turn.
/// Exponentially slower; meant for small bounds and for cross-checking.
pub fn bounded_lker_eq_by_enumeration(
    h1: &FiniteAlgebra,
    p1: &Point,
    h2: &FiniteAlgebra,
    p2: &Point,
    bounds: Bounds,
    pool: &[Substitution],
) -> Result<Comparison, SemanticsError> {
    if p1.sort() != p2.sort() {
        return Err(SemanticsError::SortMismatch {
            expected: p1.sort().clone(),
            found: p2.sort().clone(),
        });
    }
    if h1.signature() != h2.signature() {
        return Err(SemanticsError::SignatureMismatch(h1.name().into(), h2.name().into()));
    }
    h1.check_point(p1)?;
    h2.check_point(p2)?;
    for s in pool {
        for t in s.images() {
            h1.signature().check_term(t)?;
        }
    }
    let stream = enumerate_formulas(
        p1.sort(),
        h1.signature(),
        bounds.max_length,
        bounds.max_term_depth,
        pool,
    );
    for f in stream {
        if holds(h1, &f, p1.values()) != holds(h2, &f, p2.values()) {
            return Ok(Comparison::Separated(f));
        }
    }
    Ok(Comparison::Equivalent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::library::*;
    use crate::term::Var;

    fn cmp(h: &FiniteAlgebra, a: &[usize], b: &[usize], bounds: Bounds) -> Comparison {
        bounded_lker_eq(h, &Point::tuple(a), h, &Point::tuple(b), bounds, &[]).unwrap()
    }

    #[test]
    fn identical_points_agree() {
        let z4 = cyclic_group(4);
        assert!(cmp(&z4, &[1], &[1], Bounds::new(2, 2)).is_equivalent());
    }

    #[test]
    fn automorphic_points_agree() {
        let z4 = cyclic_group(4);
        assert!(cmp(&z4, &[1], &[3], Bounds::new(2, 2)).is_equivalent());
    }

    #[test]
    fn z4_one_versus_two() {
        let z4 = cyclic_group(4);
        let c = cmp(&z4, &[1], &[2], Bounds::new(2, 2));
        // 2 + 2 = 0 already tells them apart at length 0
        assert_eq!(c.separator().unwrap().to_string(), "(eq x1 (neg x1))");
        // without the inverse operation the first witness needs a quantifier
        let sig = Signature::new([("+", 2)]).unwrap();
        let add = FiniteAlgebra::from_fn("Z4+", sig, 4, |_, a| (a[0] + a[1]) % 4).unwrap();
        let xs = Sort::numbered("x", 2);
        let a = Point::new(xs.clone(), vec![1, 0]).unwrap();
        let b = Point::new(xs, vec![2, 0]).unwrap();
        let c = bounded_lker_eq(&add, &a, &add, &b, Bounds::new(1, 1), &[]).unwrap();
        let sep = c.separator().unwrap();
        let expected = bounded_lker_eq_by_enumeration(&add, &a, &add, &b, Bounds::new(1, 1), &[]).unwrap();
        assert_eq!(Some(sep), expected.separator());
        assert_eq!(sep.to_string(), "(eq x2 (+ x1 x1))");
    }

    #[test]
    fn doubles_separator_in_pure_addition() {
        // (x1 ↦ 1) vs (x1 ↦ 2) in (Z4, +) with x2 available to quantify
        let sig = Signature::new([("+", 2)]).unwrap();
        let add = FiniteAlgebra::from_fn("Z4+", sig, 4, |_, a| (a[0] + a[1]) % 4).unwrap();
        let xs = Sort::numbered("x", 2);
        let a = Point::new(xs.clone(), vec![1, 1]).unwrap();
        let b = Point::new(xs.clone(), vec![2, 2]).unwrap();
        let fast = bounded_lker_eq(&add, &a, &add, &b, Bounds::new(1, 1), &[]).unwrap();
        let slow = bounded_lker_eq_by_enumeration(&add, &a, &add, &b, Bounds::new(1, 1), &[]).unwrap();
        assert_eq!(fast, slow);
        let sep = fast.separator().unwrap();
        assert!(val(&add, sep, &a) != val(&add, sep, &b));
    }

    fn val(h: &FiniteAlgebra, f: &MsFormula, p: &Point) -> bool {
        super::super::val_member(h, f, p).unwrap()
    }

    #[test]
    fn sort_mismatch() {
        let z4 = cyclic_group(4);
        let r = bounded_lker_eq(
            &z4,
            &Point::tuple(&[1]),
            &z4,
            &Point::tuple(&[1, 2]),
            Bounds::new(1, 1),
            &[],
        );
        assert!(matches!(r, Err(SemanticsError::SortMismatch { .. })));
    }

    #[test]
    fn signature_mismatch() {
        let r = bounded_lker_eq(
            &cyclic_group(2),
            &Point::tuple(&[1]),
            &boolean_algebra(),
            &Point::tuple(&[1]),
            Bounds::new(1, 1),
            &[],
        );
        assert!(matches!(r, Err(SemanticsError::SignatureMismatch(..))));
    }

    /// Agreement with the formula-by-formula reference on every pair of
    /// points, for algebras small enough to enumerate.
    fn agree_everywhere(h1: &FiniteAlgebra, h2: &FiniteAlgebra, arity: usize, bounds: Bounds, pool: &[Substitution]) {
        let sort = Sort::numbered("x", arity);
        let classes = FormulaClasses::build(h1, h2, &sort, bounds, pool, Execution::Sequential).unwrap();
        let points = |h: &FiniteAlgebra| -> Vec<Point> {
            (0..sort.point_count(h.size()))
                .map(|i| Point::new(sort.clone(), super::super::point_at(h.size(), arity, i)).unwrap())
                .collect()
        };
        for p in points(h1) {
            for q in points(h2) {
                let fast = classes.separate(&p, &q).unwrap();
                let slow = bounded_lker_eq_by_enumeration(h1, &p, h2, &q, bounds, pool).unwrap();
                assert_eq!(fast, slow, "{} at {p} vs {} at {q}", h1.name(), h2.name());
            }
        }
    }

    #[test]
    fn agrees_with_enumeration_on_groups() {
        agree_everywhere(&cyclic_group(4), &cyclic_group(4), 1, Bounds::new(1, 1), &[]);
        agree_everywhere(&cyclic_group(4), &cyclic_group(4), 1, Bounds::new(3, 0), &[]);
        agree_everywhere(&cyclic_group(3), &cyclic_group(3), 2, Bounds::new(2, 0), &[]);
        agree_everywhere(&cyclic_group(4), &klein_group(), 1, Bounds::new(1, 1), &[]);
    }

    #[test]
    fn agrees_with_enumeration_with_substitutions() {
        let xs = Sort::numbered("x", 1);
        let ys = Sort::numbered("y", 2);
        let pool = vec![
            Substitution::new(
                ys.clone(),
                xs.clone(),
                vec![Term::var("x1"), Term::app("succ", vec![Term::var("x1")])],
            )
            .unwrap(),
            Substitution::new(ys.clone(), ys.clone(), vec![Term::var("y2"), Term::var("y1")]).unwrap(),
        ];
        let h = successor_cycle(3);
        agree_everywhere(&h, &h, 1, Bounds::new(2, 1), &pool);
        agree_everywhere(&h, &successor_cycle(2), 1, Bounds::new(2, 1), &pool);
    }

    #[test]
    fn agrees_with_enumeration_on_semilattice() {
        let h = chain_semilattice(3);
        let swap = Substitution::new(
            Sort::numbered("x", 2),
            Sort::numbered("x", 2),
            vec![Term::var("x2"), Term::var("x1")],
        )
        .unwrap();
        agree_everywhere(&h, &h, 2, Bounds::new(2, 0), &[swap]);
    }

    #[test]
    fn modes_agree() {
        let s3 = symmetric_group_s3();
        let sort = Sort::numbered("x", 1);
        let seq = FormulaClasses::build(&s3, &s3, &sort, Bounds::new(2, 1), &[], Execution::Sequential).unwrap();
        let par = FormulaClasses::build(&s3, &s3, &sort, Bounds::new(2, 1), &[], Execution::Parallel).unwrap();
        assert_eq!(seq.class_count(), par.class_count());
        for a in 0..6 {
            for b in 0..6 {
                let (p, q) = (Point::tuple(&[a]), Point::tuple(&[b]));
                assert_eq!(seq.separate(&p, &q).unwrap(), par.separate(&p, &q).unwrap());
            }
        }
        let _ = Var::new("unused");
    }
}
