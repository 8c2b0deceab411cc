mod common;

use itertools::Itertools;
use lgtypes::random::{random_matrix, random_unimodular, random_vector};
use lgtypes::zlattice::{
    abelian_extend, eval_u_abelian, eval_v_abelian, smith_normal_form, solve_endo, stacked_basis, IntMatrix, IntVector,
    LatticeError,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in (0..m.rows()).combinations(k) {
        for cols in (0..m.cols()).combinations(k) {
            let sub: Vec<IntVector> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
                .collect();
            g = g.gcd(&IntMatrix::from_rows(k, &sub).unwrap().determinant());
        }
    }
    g
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn smith_form_invariants(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let (r, c) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let m = random_matrix(&mut rng, r, c, 10);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert!(s.d.is_diagonal());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(&s.v * &s.v_inverse, IntMatrix::identity(m.cols()));
        prop_assert!(s.invariants.iter().all(|p| p.is_positive()));
        for w in s.invariants.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert_eq!(smith_normal_form(&m), s);
    }

    #[test]
    fn invariants_are_determinantal_divisor_quotients(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m = random_matrix(&mut rng, r, c, 6);
        let s = smith_normal_form(&m);
        let mut product = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            product *= s.invariants.get(k - 1).cloned().unwrap_or_default();
            prop_assert_eq!(&product, &minor_gcd(&m, k));
        }
    }

    #[test]
    fn stacked_basis_stacks(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let n = rng.gen_range(1..=4);
        let count = rng.gen_range(0..=4);
        let gens: Vec<IntVector> = (0..count).map(|_| random_vector(&mut rng, n, 6)).collect();
        let b = stacked_basis(n, &gens).unwrap();
        prop_assert!(b.basis.is_unimodular());
        prop_assert_eq!(&b.basis * &b.basis_inverse, IntMatrix::identity(n));
        // each generator has coordinates c with p_i | c_i and c_i = 0 past the rank
        for a in &gens {
            let c = b.basis_inverse.transpose().mul_vec(a);
            for (i, ci) in c.iter().enumerate() {
                match b.invariants.get(i) {
                    Some(p) => prop_assert!(ci.is_multiple_of(p)),
                    None => prop_assert!(ci.is_zero()),
                }
            }
        }
    }

    #[test]
    fn extension_exactly_when_both_endomorphisms_exist(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=3);
        let a: Vec<IntVector> = (0..k).map(|_| random_vector(&mut rng, n, 5)).collect();
        let b: Vec<IntVector> = if rng.gen_bool(0.5) {
            let u = random_unimodular(&mut rng, n, 6);
            a.iter().map(|v| u.mul_vec(v)).collect()
        } else {
            let m = random_matrix(&mut rng, n, n, 2);
            a.iter().map(|v| m.mul_vec(v)).collect()
        };
        let fwd = solve_endo(n, &a, &b).unwrap();
        let bwd = solve_endo(n, &b, &a).unwrap();
        for (s, (from, to)) in [(&fwd, (&a, &b)), (&bwd, (&b, &a))] {
            if let Some(s) = s {
                for (x, y) in from.iter().zip(to.iter()) {
                    prop_assert_eq!(&s.mul_vec(x), y);
                }
            }
        }
        match abelian_extend(n, &a, &b) {
            Ok(c) => {
                prop_assert!(fwd.is_some() && bwd.is_some());
                prop_assert!(c.determinant.abs().is_one());
                prop_assert!(c.corner_identity_holds() && c.corners_are_closed());
                prop_assert!(c.corner_minor().abs().is_one());
                for (x, y) in a.iter().zip(&b) {
                    prop_assert_eq!(&c.phi.mul_vec(x), y);
                }
                prop_assert!(abelian_extend(n, &b, &a).is_ok());
            }
            Err(LatticeError::NoForwardEndo) => prop_assert!(fwd.is_none()),
            Err(LatticeError::NoBackwardEndo) => prop_assert!(fwd.is_some() && bwd.is_none()),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn bases_satisfy_both_families(key in any::<u64>()) {
        let mut rng = common::rng(key);
        let n = rng.gen_range(1..=3);
        let g = random_unimodular(&mut rng, n, 8).row_vectors();
        let q = random_vector(&mut rng, n, 5);
        let q0 = BigInt::from(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
        prop_assert!(eval_v_abelian(&q, &q0, &g).unwrap());
        if !q.iter().all(Zero::is_zero) {
            prop_assert!(eval_u_abelian(&q, &g).unwrap());
        }
    }
}
