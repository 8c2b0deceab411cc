//! Ehrenfeucht–Fraïssé games on the relational encodings of finite algebras.
//!
//! An `r`-ary operation `f` becomes the `(r + 1)`-ary relation
//! `f(x1, …, xr) = y`; a constant becomes the unary relation "equals `c`".
//! A position is the set of pebbled pairs, and Duplicator survives it when
//! the pairs form a partial isomorphism of the encodings.

use std::collections::HashMap;

use super::SemanticsError;
use crate::algebra::{for_each_tuple, FiniteAlgebra};
use crate::error::AlgebraError;
use crate::exec::Execution;

type Position = Vec<(usize, usize)>;

struct Game<'a> {
    h1: &'a FiniteAlgebra,
    h2: &'a FiniteAlgebra,
    memo: HashMap<(Position, usize), bool>,
}

impl Game<'_> {
    fn partial_iso(&self, pos: &[(usize, usize)]) -> bool {
        for (i, &(x1, y1)) in pos.iter().enumerate() {
            for &(x2, y2) in &pos[i + 1..] {
                if (x1 == x2) != (y1 == y2) {
                    return false;
                }
            }
        }
        let n = pos.len();
        for op in 0..self.h1.signature().ops().len() {
            let arity = self.h1.arity(op);
            let mut ok = true;
            for_each_tuple(n, arity, |idx| {
                if !ok {
                    return;
                }
                let a: Vec<usize> = idx.iter().map(|&i| pos[i].0).collect();
                let b: Vec<usize> = idx.iter().map(|&i| pos[i].1).collect();
                let (fa, fb) = (self.h1.apply(op, &a), self.h2.apply(op, &b));
                ok = pos.iter().all(|&(x, y)| (fa == x) == (fb == y));
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn duplicator_wins(&mut self, pos: Position, rounds: usize) -> bool {
        if !self.partial_iso(&pos) {
            return false;
        }
        if rounds == 0 {
            return true;
        }
        let key = (pos, rounds);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let pos = &key.0;
        let win = (0..self.h1.size()).all(|x| self.answers(pos, rounds, Side::Left, x))
            && (0..self.h2.size()).all(|y| self.answers(pos, rounds, Side::Right, y));
        self.memo.insert(key, win);
        win
    }

    /// Whether Duplicator has a surviving answer to Spoiler pebbling `e` on `side`.
    fn answers(&mut self, pos: &Position, rounds: usize, side: Side, e: usize) -> bool {
        let pebbled = pos.iter().any(|&(x, y)| match side {
            Side::Left => x == e,
            Side::Right => y == e,
        });
        // answering with the existing partner leaves the position unchanged
        // with fewer rounds, which is never worse for Duplicator
        if pebbled {
            return true;
        }
        let other = match side {
            Side::Left => self.h2.size(),
            Side::Right => self.h1.size(),
        };
        (0..other).any(|r| {
            let pair = match side {
                Side::Left => (e, r),
                Side::Right => (r, e),
            };
            self.duplicator_wins(extend(pos, pair), rounds - 1)
        })
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn extend(pos: &[(usize, usize)], pair: (usize, usize)) -> Position {
    let mut out = pos.to_vec();
    if let Err(i) = out.binary_search(&pair) {
        out.insert(i, pair);
    }
    out
}

fn start(h1: &FiniteAlgebra, a: &[usize], h2: &FiniteAlgebra, b: &[usize]) -> Result<Position, SemanticsError> {
    if a.len() != b.len() {
        return Err(SemanticsError::LengthMismatch(a.len(), b.len()));
    }
    if h1.signature() != h2.signature() {
        return Err(SemanticsError::SignatureMismatch(h1.name().into(), h2.name().into()));
    }
    for (t, h) in [(a, h1), (b, h2)] {
        if let Some(&value) = t.iter().find(|&&v| v >= h.size()) {
            return Err(AlgebraError::ElementOutOfRange { value, size: h.size() }.into());
        }
    }
    let mut pos: Position = a.iter().copied().zip(b.iter().copied()).collect();
    pos.sort_unstable();
    pos.dedup();
    Ok(pos)
}

/// Whether Duplicator wins the `rounds`-round game on `h1, h2` from the
/// pebbled tuples `a, b`.
pub fn ef_equivalent(
    h1: &FiniteAlgebra,
    a: &[usize],
    h2: &FiniteAlgebra,
    b: &[usize],
    rounds: usize,
) -> Result<bool, SemanticsError> {
    ef_equivalent_with(h1, a, h2, b, rounds, Execution::default())
}

/// [`ef_equivalent`], spreading Spoiler's first moves over `exec`.
pub fn ef_equivalent_with(
    h1: &FiniteAlgebra,
    a: &[usize],
    h2: &FiniteAlgebra,
    b: &[usize],
    rounds: usize,
    exec: Execution,
) -> Result<bool, SemanticsError> {
    let pos = start(h1, a, h2, b)?;
    let new_game = || Game {
        h1,
        h2,
        memo: HashMap::new(),
    };
    if rounds == 0 || !new_game().partial_iso(&pos) {
        return Ok(new_game().duplicator_wins(pos, rounds));
    }
    let moves = h1.size() + h2.size();
    Ok(exec.all(moves, |m| {
        let (side, e) = if m < h1.size() {
            (Side::Left, m)
        } else {
            (Side::Right, m - h1.size())
        };
        new_game().answers(&pos, rounds, side, e)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::*;

    #[test]
    fn zero_rounds_compares_atoms() {
        let z4 = cyclic_group(4);
        assert!(ef_equivalent(&z4, &[1], &z4, &[3], 0).unwrap());
        // 0 is the constant, 1 is not
        assert!(!ef_equivalent(&z4, &[0], &z4, &[1], 0).unwrap());
        // neg 2 = 2 is an atomic fact about the pebble alone
        assert!(!ef_equivalent(&z4, &[2], &z4, &[1], 0).unwrap());
    }

    #[test]
    fn automorphic_tuples() {
        let z4 = cyclic_group(4);
        for r in 0..=4 {
            assert!(ef_equivalent(&z4, &[1], &z4, &[3], r).unwrap());
        }
    }

    #[test]
    fn klein_versus_cyclic() {
        let (v4, z4) = (klein_group(), cyclic_group(4));
        assert!(ef_equivalent(&v4, &[], &z4, &[], 0).unwrap());
        assert!(!ef_equivalent(&v4, &[], &z4, &[], 2).unwrap());
        assert!(!ef_equivalent_with(&v4, &[], &z4, &[], 2, Execution::Sequential).unwrap());
    }

    #[test]
    fn one_round_sees_elements_of_order_four() {
        // Z4 has x with x + x ≠ 0; Klein does not, one pebble suffices
        let (v4, z4) = (klein_group(), cyclic_group(4));
        assert!(!ef_equivalent(&z4, &[], &v4, &[], 1).unwrap());
    }

    #[test]
    fn errors() {
        let z4 = cyclic_group(4);
        assert!(matches!(
            ef_equivalent(&z4, &[1], &z4, &[1, 2], 1),
            Err(SemanticsError::LengthMismatch(1, 2))
        ));
        assert!(ef_equivalent(&z4, &[9], &z4, &[1], 1).is_err());
        assert!(matches!(
            ef_equivalent(&z4, &[], &boolean_algebra(), &[], 1),
            Err(SemanticsError::SignatureMismatch(..))
        ));
    }

    #[test]
    fn modes_agree() {
        let s3 = symmetric_group_s3();
        for a in 0..6 {
            for b in 0..6 {
                let seq = ef_equivalent_with(&s3, &[a], &s3, &[b], 2, Execution::Sequential).unwrap();
                let par = ef_equivalent_with(&s3, &[a], &s3, &[b], 2, Execution::Parallel).unwrap();
                assert_eq!(seq, par);
            }
        }
    }
}
