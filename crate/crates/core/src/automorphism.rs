//! Automorphism search for finite algebras.
//!
//! Backtracking over partial bijections: elements are assigned in increasing
//! order, candidate images are tried in increasing order, and every partial
//! map is pruned as soon as it contradicts an operation table. The search
//! therefore yields automorphisms in lexicographic order of their image
//! arrays.

use std::ops::ControlFlow;

use crate::algebra::{for_each_tuple, FiniteAlgebra};
use crate::error::AlgebraError;

struct Search<'a> {
    h: &'a FiniteAlgebra,
    image: Vec<Option<usize>>,
    preimage: Vec<Option<usize>>,
}

impl<'a> Search<'a> {
    fn new(h: &'a FiniteAlgebra) -> Self {
        Search {
            h,
            image: vec![None; h.size()],
            preimage: vec![None; h.size()],
        }
    }

    /// Fixes `x ↦ y`; false if it clashes with an existing assignment.
    fn seed(&mut self, x: usize, y: usize) -> bool {
        match (self.image[x], self.preimage[y]) {
            (Some(b), _) => b == y,
            (None, Some(_)) => false,
            (None, None) => {
                self.image[x] = Some(y);
                self.preimage[y] = Some(x);
                true
            }
        }
    }

    /// Every operation applied to assigned elements must commute with the map
    /// wherever both sides are determined.
    fn consistent(&self) -> bool {
        let assigned: Vec<usize> = (0..self.h.size()).filter(|&x| self.image[x].is_some()).collect();
        let mut args = Vec::new();
        let mut mapped = Vec::new();
        for op in 0..self.h.signature().ops().len() {
            let arity = self.h.arity(op);
            let mut ok = true;
            for_each_tuple(assigned.len(), arity, |idx| {
                if !ok {
                    return;
                }
                args.clear();
                args.extend(idx.iter().map(|&i| assigned[i]));
                mapped.clear();
                mapped.extend(args.iter().map(|&a| self.image[a].expect("assigned")));
                let y = self.h.apply(op, &args);
                let z = self.h.apply(op, &mapped);
                ok = match (self.image[y], self.preimage[z]) {
                    (Some(fy), _) => fy == z,
                    (None, Some(_)) => false,
                    (None, None) => true,
                };
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn run(&mut self, next: usize, visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        let m = self.h.size();
        let Some(x) = (next..m).find(|&x| self.image[x].is_none()) else {
            let perm: Vec<usize> = self.image.iter().map(|i| i.expect("total")).collect();
            return visit(&perm);
        };
        for y in 0..m {
            if self.preimage[y].is_some() {
                continue;
            }
            self.image[x] = Some(y);
            self.preimage[y] = Some(x);
            if self.consistent() {
                self.run(x + 1, visit)?;
            }
            self.image[x] = None;
            self.preimage[y] = None;
        }
        ControlFlow::Continue(())
    }
}

/// All automorphisms of `h`, in lexicographic order of their image arrays.
pub fn automorphisms(h: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut search = Search::new(h);
    if search.consistent() {
        let _ = search.run(0, &mut |p| {
            out.push(p.to_vec());
            ControlFlow::Continue(())
        });
    }
    out
}

/// The lexicographically first automorphism mapping `a` componentwise onto
/// `b`, or `None` when `a` and `b` lie in different orbits.
pub fn orbit_equivalent(h: &FiniteAlgebra, a: &[usize], b: &[usize]) -> Result<Option<Vec<usize>>, AlgebraError> {
    if a.len() != b.len() {
        return Err(AlgebraError::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    for &v in a.iter().chain(b) {
        if v >= h.size() {
            return Err(AlgebraError::ElementOutOfRange {
                value: v,
                size: h.size(),
            });
        }
    }
    let mut search = Search::new(h);
    for (&x, &y) in a.iter().zip(b) {
        if !search.seed(x, y) {
            return Ok(None);
        }
    }
    if !search.consistent() {
        return Ok(None);
    }
    let mut found = None;
    let _ = search.run(0, &mut |p| {
        found = Some(p.to_vec());
        ControlFlow::Break(())
    });
    Ok(found)
}

pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut r = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        r[x] = i;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::library::*;

    /// Exhaustive oracle: every bijection, filtered by the table check.
    fn brute_force(h: &FiniteAlgebra) -> Vec<Vec<usize>> {
        let m = h.size();
        let mut out = Vec::new();
        for_each_tuple(m, m, |p| {
            if h.is_automorphism(p) {
                out.push(p.to_vec());
            }
        });
        out
    }

    #[test]
    fn trivial_algebra() {
        assert_eq!(automorphisms(&cyclic_group(1)), vec![vec![0]]);
    }

    #[test]
    fn cyclic_group_of_order_4() {
        let auts = automorphisms(&cyclic_group(4));
        assert_eq!(auts, vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]);
    }

    #[test]
    fn klein_group_has_gl22_many() {
        let auts = automorphisms(&klein_group());
        assert_eq!(auts.len(), 6);
        assert_eq!(auts, brute_force(&klein_group()));
    }

    #[test]
    fn matches_brute_force_on_library() {
        for h in groups_up_to_order_6()
            .into_iter()
            .chain([chain_semilattice(4), boolean_algebra(), successor_cycle(5)])
        {
            assert_eq!(automorphisms(&h), brute_force(&h), "{}", h.name());
        }
    }

    #[test]
    fn automorphisms_form_a_group() {
        for h in groups_up_to_order_6() {
            let auts = automorphisms(&h);
            assert!(auts.contains(&(0..h.size()).collect()));
            for p in &auts {
                assert!(auts.contains(&inverse(p)));
                for q in &auts {
                    assert!(auts.contains(&compose(p, q)));
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let z4 = cyclic_group(4);
        assert_eq!(orbit_equivalent(&z4, &[1], &[1]).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(orbit_equivalent(&z4, &[1], &[3]).unwrap(), Some(vec![0, 3, 2, 1]));
        assert_eq!(orbit_equivalent(&z4, &[1], &[2]).unwrap(), None);
        assert!(orbit_equivalent(&z4, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn orbit_respects_constants() {
        // the constant 0 is fixed by every automorphism
        let z3 = cyclic_group(3);
        assert_eq!(orbit_equivalent(&z3, &[0], &[1]).unwrap(), None);
        let sig = Signature::new([("c", 0)]).unwrap();
        let pointed = FiniteAlgebra::new("pt", sig, 3, vec![vec![2]]).unwrap();
        assert_eq!(automorphisms(&pointed).len(), 2);
    }

    #[test]
    fn repeated_coordinates() {
        let z4 = cyclic_group(4);
        assert!(orbit_equivalent(&z4, &[1, 1], &[3, 3]).unwrap().is_some());
        assert!(orbit_equivalent(&z4, &[1, 1], &[3, 1]).unwrap().is_none());
    }
}
