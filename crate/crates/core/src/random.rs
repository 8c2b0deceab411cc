//! Seeded generators for algebras, terms, formulas and integer data.
//!
//! Every function draws from a caller-supplied [`Rng`], so a fixed seed gives
//! a fixed sequence of objects.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{FiniteAlgebra, Point, Signature};
use crate::formula::MsFormula;
use crate::term::{Sort, Substitution, Term, Var};
use crate::zlattice::{IntMatrix, IntVector};

const NAMES: [&str; 4] = ["f", "g", "h", "k"];

/// One to three operations of arity at most two.
pub fn random_signature(rng: &mut impl Rng) -> Signature {
    let n = rng.gen_range(1..=3);
    let ops: Vec<(&str, usize)> = NAMES[..n].iter().map(|&name| (name, rng.gen_range(0..=2))).collect();
    Signature::new(ops).expect("distinct names")
}

/// Uniformly random tables on `0..size`.
pub fn random_algebra(rng: &mut impl Rng, signature: &Signature, size: usize) -> FiniteAlgebra {
    FiniteAlgebra::from_fn("random", signature.clone(), size, |_, _| rng.gen_range(0..size)).expect("size is positive")
}

pub fn random_point(rng: &mut impl Rng, h: &FiniteAlgebra, sort: &Sort) -> Point {
    let values = (0..sort.len()).map(|_| rng.gen_range(0..h.size())).collect();
    Point::new(sort.clone(), values).expect("one value per variable")
}

/// A term over `sort` of depth at most `max_depth`, or `None` when neither
/// a variable nor a constant is available.
pub fn random_term(rng: &mut impl Rng, sort: &Sort, sig: &Signature, max_depth: usize) -> Option<Term> {
    let constants: Vec<_> = sig.ops().iter().filter(|o| o.arity == 0).collect();
    let functions: Vec<_> = sig.ops().iter().filter(|o| o.arity > 0).collect();
    let leaves = sort.len() + constants.len();
    if max_depth > 0 && !functions.is_empty() && (leaves == 0 || rng.gen_bool(0.5)) {
        let op = functions.choose(rng).expect("non-empty");
        let args = (0..op.arity)
            .map(|_| random_term(rng, sort, sig, max_depth - 1))
            .collect::<Option<Vec<_>>>()?;
        return Some(Term::app(&op.name, args));
    }
    if leaves == 0 {
        return None;
    }
    let i = rng.gen_range(0..leaves);
    Some(match sort.vars().get(i) {
        Some(v) => Term::Var(v.clone()),
        None => Term::constant(&constants[i - sort.len()].name),
    })
}

pub fn random_substitution(
    rng: &mut impl Rng,
    domain: &Sort,
    codomain: &Sort,
    sig: &Signature,
    max_depth: usize,
) -> Option<Substitution> {
    let images = (0..domain.len())
        .map(|_| random_term(rng, codomain, sig, max_depth))
        .collect::<Option<Vec<_>>>()?;
    Some(Substitution::new(domain.clone(), codomain.clone(), images).expect("images live in the codomain"))
}

/// Up to `max_size` substitutions among the sorts `x1..xn` and `y1..ym`,
/// with `n` and `m` between one and two.
pub fn random_pool(rng: &mut impl Rng, sig: &Signature, max_size: usize, max_depth: usize) -> Vec<Substitution> {
    let sorts = [
        Sort::numbered("x", rng.gen_range(1..=2)),
        Sort::numbered("y", rng.gen_range(1..=2)),
    ];
    let n = rng.gen_range(0..=max_size);
    (0..n)
        .filter_map(|_| {
            let d = sorts.choose(rng).expect("non-empty");
            let c = sorts.choose(rng).expect("non-empty");
            random_substitution(rng, d, c, sig, max_depth)
        })
        .collect()
}

/// A formula of sort `sort` with length at most `max_length` and term depth
/// at most `max_depth`, whose substitution nodes are drawn from `pool`.
/// `None` when the signature and sort admit no terms.
pub fn random_formula(
    rng: &mut impl Rng,
    sort: &Sort,
    sig: &Signature,
    pool: &[Substitution],
    max_length: usize,
    max_depth: usize,
) -> Option<MsFormula> {
    let length = rng.gen_range(0..=max_length);
    formula_of_length(rng, sort, sig, pool, length, max_depth)
}

fn formula_of_length(
    rng: &mut impl Rng,
    sort: &Sort,
    sig: &Signature,
    pool: &[Substitution],
    length: usize,
    max_depth: usize,
) -> Option<MsFormula> {
    if length == 0 {
        let l = random_term(rng, sort, sig, max_depth)?;
        let r = random_term(rng, sort, sig, max_depth)?;
        return Some(MsFormula::eq(sort.clone(), l, r).expect("terms over the sort"));
    }
    let incoming: Vec<&Substitution> = pool.iter().filter(|s| s.codomain() == sort).collect();
    let rest = length - 1;
    match rng.gen_range(0..5) {
        0 => Some(formula_of_length(rng, sort, sig, pool, rest, max_depth)?.not()),
        1 if !sort.is_empty() => {
            let v: Var = sort.vars().choose(rng).expect("non-empty").clone();
            let body = formula_of_length(rng, sort, sig, pool, rest, max_depth)?;
            Some(MsFormula::exists(v, body).expect("variable of the sort"))
        }
        2 if !incoming.is_empty() => {
            let s = *incoming.choose(rng).expect("non-empty");
            // the body may live in a sort without terms; fall back to `¬`
            match formula_of_length(rng, s.domain(), sig, pool, rest, max_depth) {
                Some(body) => Some(MsFormula::subst(s.clone(), body).expect("body has the domain sort")),
                None => Some(formula_of_length(rng, sort, sig, pool, rest, max_depth)?.not()),
            }
        }
        3 | 4 => {
            let left = rng.gen_range(0..=rest);
            let a = formula_of_length(rng, sort, sig, pool, left, max_depth)?;
            let b = formula_of_length(rng, sort, sig, pool, rest - left, max_depth)?;
            Some(
                if rng.gen_bool(0.5) {
                    MsFormula::and(a, b)
                } else {
                    MsFormula::or(a, b)
                }
                .expect("same sort"),
            )
        }
        _ => Some(formula_of_length(rng, sort, sig, pool, rest, max_depth)?.not()),
    }
}

pub fn random_vector(rng: &mut impl Rng, n: usize, bound: i64) -> IntVector {
    (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

/// Entries drawn uniformly from `-bound..=bound`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let rs: Vec<IntVector> = (0..rows).map(|_| random_vector(rng, cols, bound)).collect();
    IntMatrix::from_rows(cols, &rs).expect("rectangular")
}

/// A product of `steps` random elementary operations, so `|det| = 1`.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m.negate_row(0);
        }
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        match rng.gen_range(0..3) {
            0 => m.swap_rows(i, j),
            1 => m.negate_row(i),
            _ => m.add_row(i, j, &BigInt::from(rng.gen_range(-2..=2))),
        }
    }
    m
}
