use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, stacked_basis, IntMatrix, IntVector, LatticeError, StackedBasis};

fn check_vectors(n: usize, a: &[IntVector], b: &[IntVector]) -> Result<(), LatticeError> {
    if a.len() != b.len() {
        return Err(LatticeError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    match a.iter().chain(b).find(|v| v.len() != n) {
        Some(v) => Err(LatticeError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// Some integer `x` with `m · x = c`, or `None`. Coordinates left free by
/// the Smith decomposition of `m` are set to zero.
fn solve(m: &IntMatrix, c: &[BigInt]) -> Option<IntVector> {
    let s = smith_normal_form(m);
    let uc = s.u.mul_vec(c);
    let r = s.rank();
    if uc[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); m.cols()];
    for i in 0..r {
        let (q, rem) = uc[i].div_rem(&s.invariants[i]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(s.v.mul_vec(&y))
}

/// An `n × n` integer matrix `σ` with `σ · a_i = b_i` for every `i`, or `None`
/// when the integer system has no solution.
///
/// Each row of `σ` is solved separately through the Smith decomposition of
/// the matrix whose rows are the `a_i`, with every free coordinate (in the
/// Smith basis) set to zero, so the answer is a function of `a` and `b`.
pub fn solve_endo(n: usize, a: &[IntVector], b: &[IntVector]) -> Result<Option<IntMatrix>, LatticeError> {
    check_vectors(n, a, b)?;
    let at = IntMatrix::from_rows(n, a)?;
    let mut sigma = IntMatrix::zeros(n, n);
    for r in 0..n {
        let target: IntVector = b.iter().map(|v| v[r].clone()).collect();
        let Some(x) = solve(&at, &target) else {
            return Ok(None);
        };
        for (j, v) in x.into_iter().enumerate() {
            sigma[(r, j)] = v;
        }
    }
    Ok(Some(sigma))
}

/// A unimodular `Φ` with `Φ · a_i = b_i`, together with everything used to
/// build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCertificate {
    pub phi: IntMatrix,
    pub determinant: BigInt,
    pub sigma: IntMatrix,
    pub tau: IntMatrix,
    /// Stacked basis `g` for the subgroup generated by the `a_i`.
    pub source: StackedBasis,
    /// Stacked basis `f` for the subgroup generated by the `b_i`.
    pub target: StackedBasis,
    /// Column `i` holds the coordinates of `σ(g_i)` in the basis `f`.
    pub s: IntMatrix,
    /// Column `i` holds the coordinates of `τ(f_i)` in the basis `g`.
    pub t: IntMatrix,
}

impl ExtensionCertificate {
    pub fn rank(&self) -> usize {
        self.source.rank()
    }

    /// The `k × k` corners of `S` and `T` multiply to the identity.
    pub fn corner_identity_holds(&self) -> bool {
        let k = self.rank();
        &self.s.corner(k, k) * &self.t.corner(k, k) == IntMatrix::identity(k)
    }

    /// `S` has no entries below its `k × k` corner in the first `k` columns,
    /// and likewise `T`.
    pub fn corners_are_closed(&self) -> bool {
        let (k, n) = (self.rank(), self.phi.rows());
        (k..n).all(|j| (0..k).all(|i| self.s[(j, i)].is_zero() && self.t[(j, i)].is_zero()))
    }

    /// Determinant of the `k × k` corner of `S`.
    pub fn corner_minor(&self) -> BigInt {
        let k = self.rank();
        self.s.corner(k, k).determinant()
    }
}

/// Extends `a_i ↦ b_i` to an automorphism of `Zⁿ`.
///
/// Succeeds exactly when the assignment extends to endomorphisms in both
/// directions. Generators may be dependent.
pub fn abelian_extend(n: usize, a: &[IntVector], b: &[IntVector]) -> Result<ExtensionCertificate, LatticeError> {
    let sigma = solve_endo(n, a, b)?.ok_or(LatticeError::NoForwardEndo)?;
    let tau = solve_endo(n, b, a)?.ok_or(LatticeError::NoBackwardEndo)?;
    let source = stacked_basis(n, a)?;
    let target = stacked_basis(n, b)?;
    let k = source.rank();
    if target.rank() != k {
        return Err(LatticeError::InternalCheckFailed(format!(
            "ranks {} and {} differ although both endomorphisms exist",
            k,
            target.rank()
        )));
    }

    // Gᵀ has the g_i as columns and (Gᵀ)⁻¹ = (G⁻¹)ᵀ, likewise for F
    let g_t = source.basis.transpose();
    let g_t_inv = source.basis_inverse.transpose();
    let f_t = target.basis.transpose();
    let f_t_inv = target.basis_inverse.transpose();

    let columns: Vec<IntVector> = (0..n)
        .map(|i| {
            if i < k {
                sigma.mul_vec(source.basis.row(i))
            } else {
                target.vector(i)
            }
        })
        .collect();
    let images = IntMatrix::from_columns(n, &columns)?;
    let phi = &images * &g_t_inv;
    let s = &(&f_t_inv * &sigma) * &g_t;
    let t = &(&g_t_inv * &tau) * &f_t;

    let determinant = phi.determinant();
    let cert = ExtensionCertificate {
        phi,
        determinant,
        sigma,
        tau,
        source,
        target,
        s,
        t,
    };
    if !cert.determinant.abs().is_one() {
        return Err(LatticeError::InternalCheckFailed(format!(
            "determinant {} is not a unit",
            cert.determinant
        )));
    }
    if !cert.corners_are_closed() || !cert.corner_identity_holds() {
        return Err(LatticeError::InternalCheckFailed("corner identity fails".into()));
    }
    if let Some(i) = (0..a.len()).find(|&i| cert.phi.mul_vec(&a[i]) != b[i]) {
        return Err(LatticeError::InternalCheckFailed(format!(
            "generator {} is not mapped to its image",
            i + 1
        )));
    }
    Ok(cert)
}
