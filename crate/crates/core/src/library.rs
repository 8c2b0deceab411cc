//! Small named algebras used by the tests, the benches and the CLI examples.
//!
//! All groups share the additive signature `+/2, neg/1, 0/0`, so any two of
//! them can be compared with each other.

use crate::algebra::{FiniteAlgebra, Signature};

pub fn group_signature() -> Signature {
    Signature::new([("+", 2), ("neg", 1), ("0", 0)]).expect("static signature")
}

/// Builds a group from its multiplication, inversion and identity.
pub fn group_from(
    name: impl Into<String>,
    size: usize,
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
    identity: usize,
) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(name, group_signature(), size, |op, args| match op {
        0 => mul(args[0], args[1]),
        1 => inv(args[0]),
        _ => identity,
    })
    .expect("group tables are total")
}

/// `Z/n`.
pub fn cyclic_group(n: usize) -> FiniteAlgebra {
    group_from(format!("Z{n}"), n, |a, b| (a + b) % n, |a| (n - a) % n, 0)
}

/// `Z/2 × Z/2`, element `2a + b` standing for `(a, b)`.
pub fn klein_group() -> FiniteAlgebra {
    group_from("V4", 4, |a, b| a ^ b, |a| a, 0)
}

/// The direct product `G × H`, element `g * |H| + h` standing for `(g, h)`.
pub fn direct_product(g: &FiniteAlgebra, h: &FiniteAlgebra) -> FiniteAlgebra {
    let m = h.size();
    group_from(
        format!("{}x{}", g.name(), h.name()),
        g.size() * m,
        |a, b| g.apply(0, &[a / m, b / m]) * m + h.apply(0, &[a % m, b % m]),
        |a| g.apply(1, &[a / m]) * m + h.apply(1, &[a % m]),
        g.apply(2, &[]) * m + h.apply(2, &[]),
    )
}

/// The symmetric group on three points. Elements are the permutations in
/// lexicographic order of their one-line notation `123, 132, 213, 231, 312, 321`;
/// the product is composition `(pq)(i) = p(q(i))`.
pub fn symmetric_group_s3() -> FiniteAlgebra {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
    let mul = |a: usize, b: usize| {
        let (p, q) = (perms[a], perms[b]);
        index([p[q[0]], p[q[1]], p[q[2]]])
    };
    let inv = |a: usize| {
        let p = perms[a];
        let mut r = [0; 3];
        for i in 0..3 {
            r[p[i]] = i;
        }
        index(r)
    };
    group_from("S3", 6, mul, inv, 0)
}

/// Every group of order at most 6, one per isomorphism class.
pub fn groups_up_to_order_6() -> Vec<FiniteAlgebra> {
    vec![
        cyclic_group(1),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_group(),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group_s3(),
    ]
}

/// The chain `0 < 1 < ... < n-1` as a meet-semilattice.
pub fn chain_semilattice(n: usize) -> FiniteAlgebra {
    let sig = Signature::new([("meet", 2)]).expect("static signature");
    FiniteAlgebra::from_fn(format!("C{n}"), sig, n, |_, a| a[0].min(a[1])).expect("total")
}

/// The two-element Boolean algebra.
pub fn boolean_algebra() -> FiniteAlgebra {
    let sig = Signature::new([("and", 2), ("or", 2), ("not", 1), ("1", 0)]).expect("static signature");
    FiniteAlgebra::from_fn("B2", sig, 2, |op, a| match op {
        0 => a[0] & a[1],
        1 => a[0] | a[1],
        2 => 1 - a[0],
        _ => 1,
    })
    .expect("total")
}

/// `n` elements with the successor map `i ↦ i + 1 mod n`.
pub fn successor_cycle(n: usize) -> FiniteAlgebra {
    let sig = Signature::new([("succ", 1)]).expect("static signature");
    FiniteAlgebra::from_fn(format!("Succ{n}"), sig, n, |_, a| (a[0] + 1) % n).expect("total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::for_each_tuple;

    fn assert_group(g: &FiniteAlgebra) {
        let n = g.size();
        let e = g.apply(2, &[]);
        for_each_tuple(n, 3, |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let ab_c = g.apply(0, &[g.apply(0, &[a, b]), c]);
            let a_bc = g.apply(0, &[a, g.apply(0, &[b, c])]);
            assert_eq!(ab_c, a_bc, "{} not associative", g.name());
        });
        for a in 0..n {
            assert_eq!(g.apply(0, &[a, e]), a);
            assert_eq!(g.apply(0, &[a, g.apply(1, &[a])]), e);
        }
    }

    #[test]
    fn library_groups_satisfy_group_axioms() {
        for g in groups_up_to_order_6() {
            assert_group(&g);
        }
        assert_group(&direct_product(&cyclic_group(2), &cyclic_group(3)));
    }

    #[test]
    fn s3_is_not_abelian() {
        let s3 = symmetric_group_s3();
        assert_ne!(s3.apply(0, &[1, 2]), s3.apply(0, &[2, 1]));
    }
}
