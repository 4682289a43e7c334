use num_traits::{One, Zero};

use crate::combinatorics::{intersection_size, subsets_iter, Subset};
use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// `W_{t,k}`: entry 1 iff the row `t`-subset is contained in the column `k`-subset.
    Inclusion,
    /// `U_{t,k,l}`: entry 1 iff the two subsets meet in exactly `l` elements.
    Intersection(usize),
    /// `Σ_l c_l U_{t,k,l}` with `c_0..c_t`.
    Combination(Vec<Rational>),
}

/// Parameters of a `C(n,t) × C(n,k)` matrix between `M_k` and `M_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpec {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub kind: MatrixKind,
}

impl MatrixSpec {
    pub fn inclusion(n: usize, t: usize, k: usize) -> Result<Self> {
        Self::new(n, t, k, MatrixKind::Inclusion)
    }

    pub fn intersection(n: usize, t: usize, k: usize, l: usize) -> Result<Self> {
        Self::new(n, t, k, MatrixKind::Intersection(l))
    }

    pub fn combination(n: usize, t: usize, k: usize, coeffs: Vec<Rational>) -> Result<Self> {
        Self::new(n, t, k, MatrixKind::Combination(coeffs))
    }

    pub fn new(n: usize, t: usize, k: usize, kind: MatrixKind) -> Result<Self> {
        let spec = MatrixSpec { n, t, k, kind };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let MatrixSpec { n, t, k, .. } = *self;
        if !(t <= k && k <= n) {
            return Err(Error::InvalidParameters(format!("need t <= k <= n, got t={t} k={k} n={n}")));
        }
        if n > crate::combinatorics::MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        match &self.kind {
            MatrixKind::Inclusion => Ok(()),
            MatrixKind::Intersection(l) if *l <= t => Ok(()),
            MatrixKind::Intersection(l) => Err(Error::InvalidParameters(format!("need l <= t, got l={l} t={t}"))),
            MatrixKind::Combination(c) if c.len() == t + 1 => Ok(()),
            MatrixKind::Combination(c) => Err(Error::InvalidParameters(format!(
                "need {} coefficients, got {}",
                t + 1,
                c.len()
            ))),
        }
    }
}

/// Builds the matrix with rows and columns in colex order.
pub fn build_matrix(spec: &MatrixSpec) -> Result<RationalMatrix> {
    spec.validate()?;
    let rows: Vec<Subset> = subsets_iter(spec.t, spec.n)?.collect();
    let cols: Vec<Subset> = subsets_iter(spec.k, spec.n)?.collect();
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in cols.iter().enumerate() {
            let value = match &spec.kind {
                MatrixKind::Inclusion => indicator(a.is_subset_of(b)),
                MatrixKind::Intersection(l) => indicator(intersection_size(a, b)? == *l),
                MatrixKind::Combination(c) => c[intersection_size(a, b)?].clone(),
            };
            if !value.is_zero() {
                m.set(i, j, value);
            }
        }
    }
    Ok(m)
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{integer, parse_matrix};

    #[test]
    fn small_inclusion() {
        let m = build_matrix(&MatrixSpec::inclusion(2, 0, 1).unwrap()).unwrap();
        assert_eq!(m, parse_matrix("1 2\n1 1\n").unwrap());
    }

    #[test]
    fn disjointness_of_singletons() {
        let m = build_matrix(&MatrixSpec::intersection(3, 1, 1, 0).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), &integer(i64::from(i != j)));
            }
        }
    }

    #[test]
    fn inclusion_row_pattern() {
        // row {1} of W_{1,2} on n = 4; columns {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
        let m = build_matrix(&MatrixSpec::inclusion(4, 1, 2).unwrap()).unwrap();
        let row: Vec<i64> = m.row(0).iter().map(|x| if x.is_zero() { 0 } else { 1 }).collect();
        assert_eq!(row, vec![1, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn combination_is_weighted_sum() {
        let c = vec![integer(2), integer(-3)];
        let a = build_matrix(&MatrixSpec::combination(5, 1, 2, c).unwrap()).unwrap();
        let u0 = build_matrix(&MatrixSpec::intersection(5, 1, 2, 0).unwrap()).unwrap();
        let u1 = build_matrix(&MatrixSpec::intersection(5, 1, 2, 1).unwrap()).unwrap();
        let expected = u0.add_scaled(&u0, &integer(1)).unwrap().add_scaled(&u1, &integer(-3)).unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn invalid_specs() {
        assert!(MatrixSpec::intersection(4, 1, 2, 2).is_err());
        assert!(MatrixSpec::inclusion(4, 3, 2).is_err());
        assert!(MatrixSpec::inclusion(4, 1, 5).is_err());
        assert!(MatrixSpec::combination(4, 1, 2, vec![integer(1)]).is_err());
    }
}
