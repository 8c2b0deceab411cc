use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntMatrix, IntVector, LatticeError};

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, each nonzero
/// diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// `V⁻¹`, maintained alongside `V`.
    pub v_inverse: IntMatrix,
    /// The nonzero diagonal entries, all positive.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

/// Smallest nonzero entry by absolute value in the block from `(t, t)`,
/// ties going to the first in row-major order.
fn pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form of `m`.
///
/// Pivots are chosen as the smallest nonzero entry by absolute value in the
/// remaining block, ties broken by row-major position; the result depends
/// only on `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (k, n) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(k);
    let mut v = IntMatrix::identity(n);
    let mut vi = IntMatrix::identity(n);

    let mut t = 0;
    while t < k.min(n) {
        let Some(_) = pivot(&a, t) else { break };
        loop {
            let (pi, pj) = pivot(&a, t).expect("block is nonzero");
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            vi.swap_rows(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..k {
                let q = a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    a.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    a.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                    // V⁻¹ picks up the inverse column operation as a row operation
                    vi.add_row(t, j, &q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..k).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    a.add_row(t, i, &BigInt::from(1));
                    u.add_row(t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let invariants = (0..t).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        u,
        d: a,
        v,
        v_inverse: vi,
        invariants,
    }
}

/// A basis `g1, …, gn` of `Zⁿ` and invariants `p1 | p2 | … | pk` such that
/// `p1·g1, …, pk·gk` is a basis of a given subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedBasis {
    /// Rows are `g1, …, gn`.
    pub basis: IntMatrix,
    /// `basis⁻¹`.
    pub basis_inverse: IntMatrix,
    pub invariants: Vec<BigInt>,
}

impl StackedBasis {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn vector(&self, i: usize) -> IntVector {
        self.basis.row(i).to_vec()
    }

    /// The subgroup basis `p_i · g_i`.
    pub fn subgroup_basis(&self) -> Vec<IntVector> {
        self.invariants
            .iter()
            .enumerate()
            .map(|(i, p)| self.basis.row(i).iter().map(|x| x * p).collect())
            .collect()
    }
}

/// Stacked basis for the subgroup of `Zⁿ` generated by `generators`, which
/// may be dependent or empty.
pub fn stacked_basis(n: usize, generators: &[IntVector]) -> Result<StackedBasis, LatticeError> {
    let m = IntMatrix::from_rows(n, generators)?;
    let s = smith_normal_form(&m);
    // M = U⁻¹ D V⁻¹: the generators are combinations of d_i · (row i of V⁻¹)
    Ok(StackedBasis {
        basis: s.v_inverse,
        basis_inverse: s.v,
        invariants: s.invariants,
    })
}
