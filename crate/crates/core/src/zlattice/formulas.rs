//! Evaluators for two formula families over tuples of `Zᵐ`:
//!
//! * `u_q(x) := q1·x1 + … + qn·xn ≠ 0`,
//! * `v_{q,q0}(x) := ∀y (q1·x1 + … + qn·xn + q0·y = 0 → ⋁ y = k1·x1 + … + kn·xn)`,
//!   the disjunction ranging over integers with `|ki · q0| ≤ |qi|`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntVector, LatticeError};

fn combination(q: &[BigInt], g: &[IntVector]) -> Result<IntVector, LatticeError> {
    if q.len() != g.len() {
        return Err(LatticeError::DimensionMismatch {
            expected: q.len(),
            found: g.len(),
        });
    }
    let m = g.first().map_or(0, Vec::len);
    if let Some(v) = g.iter().find(|v| v.len() != m) {
        return Err(LatticeError::DimensionMismatch {
            expected: m,
            found: v.len(),
        });
    }
    let mut sum = vec![BigInt::zero(); m];
    for (qi, gi) in q.iter().zip(g) {
        for (s, x) in sum.iter_mut().zip(gi) {
            *s += qi * x;
        }
    }
    Ok(sum)
}

/// Whether `Σ qi·gi ≠ 0`. The parameters may not all be zero.
pub fn eval_u_abelian(q: &[BigInt], g: &[IntVector]) -> Result<bool, LatticeError> {
    if q.iter().all(Zero::is_zero) {
        return Err(LatticeError::ZeroParameter);
    }
    Ok(combination(q, g)?.iter().any(|x| !x.is_zero()))
}

/// Whether the tuple `g` satisfies `v_{q,q0}` in `Zᵐ`.
///
/// In a torsion-free group the antecedent pins `y` down to `-Σ qi·gi / q0`
/// when that division is exact, and is unsatisfiable otherwise.
pub fn eval_v_abelian(q: &[BigInt], q0: &BigInt, g: &[IntVector]) -> Result<bool, LatticeError> {
    if q0.is_zero() {
        return Err(LatticeError::ZeroParameter);
    }
    let c: IntVector = combination(q, g)?.into_iter().map(|x| -x).collect();
    if c.iter().any(|x| !x.is_multiple_of(q0)) {
        return Ok(true);
    }
    let y: IntVector = c.iter().map(|x| x / q0).collect();
    let bounds: Vec<BigInt> = q.iter().map(|qi| qi.abs() / q0.abs()).collect();

    // odometer over the box |ki| ≤ bounds[i]
    let mut k: Vec<BigInt> = bounds.iter().map(|b| -b).collect();
    loop {
        if combination(&k, g)? == y {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == k.len() {
                return Ok(false);
            }
            if k[i] < bounds[i] {
                k[i] += 1;
                break;
            }
            k[i] = -&bounds[i];
            i += 1;
        }
    }
}
