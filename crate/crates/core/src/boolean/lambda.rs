//! Rank prediction for `Σ_l c_l U_{t,k,l}` through the alternating sums
//! `λ_j(t,k,n;l)`.
//!
//! Two index sets are provided. [`j_set`] keeps every `j` for which some
//! `l` has both `c_l ≠ 0` and `λ_j(l) ≠ 0`. [`weighted_j_set`] keeps the `j`
//! with `Σ_l c_l λ_j(l) ≠ 0`, which is the multiplier of the `(n-j, j)`
//! component of the image. The two agree whenever at most one `c_l` is
//! nonzero; they differ when nonzero coefficients cancel (for example
//! `U_{1,2,0} + U_{1,2,1}` on four points is the all-ones matrix of rank 1).

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::specht::{specht_dim, TwoRowShape};

fn c(a: i64, b: i64) -> BigInt {
    BigInt::from(binomial(a, b))
}

/// `λ_j(t,k,n;l) = Σ_{s=0}^{j} (-1)^{j-s} C(j,s) C(k-s,l-s) C(n-k-j+s, t-l-j+s)`.
pub fn lambda_coeff(t: usize, k: usize, n: usize, l: usize, j: usize) -> Result<BigInt> {
    if l > t || j > t {
        return Err(Error::InvalidParameters(format!("need l <= t and j <= t, got l={l} j={j} t={t}")));
    }
    let (t, k, n, l, j) = (t as i64, k as i64, n as i64, l as i64, j as i64);
    let mut acc = BigInt::zero();
    for s in 0..=j {
        let term = c(j, s) * c(k - s, l - s) * c(n - k - j + s, t - l - j + s);
        if (j - s) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn check_range(t: usize, k: usize, n: usize, coeffs: &[Rational]) -> Result<()> {
    if !(t <= k && 2 * k <= n) {
        return Err(Error::InvalidParameters(format!("need t <= k <= n/2, got t={t} k={k} n={n}")));
    }
    if coeffs.len() != t + 1 {
        return Err(Error::InvalidParameters(format!(
            "need {} coefficients, got {}",
            t + 1,
            coeffs.len()
        )));
    }
    Ok(())
}

/// `{ j ∈ [0,t] : ∃ l with c_l ≠ 0 and λ_j(t,k,n;l) ≠ 0 }`.
pub fn j_set(t: usize, k: usize, n: usize, coeffs: &[Rational]) -> Result<BTreeSet<usize>> {
    check_range(t, k, n, coeffs)?;
    let mut out = BTreeSet::new();
    for j in 0..=t {
        for (l, cl) in coeffs.iter().enumerate() {
            if !cl.is_zero() && !lambda_coeff(t, k, n, l, j)?.is_zero() {
                out.insert(j);
                break;
            }
        }
    }
    Ok(out)
}

/// `{ j ∈ [0,t] : Σ_l c_l λ_j(t,k,n;l) ≠ 0 }`.
pub fn weighted_j_set(t: usize, k: usize, n: usize, coeffs: &[Rational]) -> Result<BTreeSet<usize>> {
    check_range(t, k, n, coeffs)?;
    let mut out = BTreeSet::new();
    for j in 0..=t {
        let mut total = Rational::zero();
        for (l, cl) in coeffs.iter().enumerate() {
            total += cl * Rational::from_integer(lambda_coeff(t, k, n, l, j)?);
        }
        if !total.is_zero() {
            out.insert(j);
        }
    }
    Ok(out)
}

fn rank_from(n: usize, js: &BTreeSet<usize>) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for &j in js {
        total += specht_dim(&TwoRowShape::new(n - j, j)?);
    }
    Ok(total)
}

/// `Σ_{j ∈ J} (C(n,j) − C(n,j−1))` over [`j_set`].
pub fn predicted_rank(t: usize, k: usize, n: usize, coeffs: &[Rational]) -> Result<BigUint> {
    rank_from(n, &j_set(t, k, n, coeffs)?)
}

/// Same sum over [`weighted_j_set`].
pub fn weighted_predicted_rank(t: usize, k: usize, n: usize, coeffs: &[Rational]) -> Result<BigUint> {
    rank_from(n, &weighted_j_set(t, k, n, coeffs)?)
}
