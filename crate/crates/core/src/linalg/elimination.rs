//! Row reduction kernels.
//!
//! `integer_rank` runs fraction-free forward elimination, keeping every row
//! primitive (content divided out) after each update. It is attempted over
//! `i128` with checked arithmetic first and redone over `BigInt` if anything
//! overflows, so the answer is always exact.
//!
//! `rref` is plain Gauss-Jordan over the rationals; it backs the kernel
//! computations, which need the reduced form anyway.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

trait ExactInt: Clone + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn is_one(&self) -> bool;
    /// `x - b * y`, or `None` on overflow.
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Option<Self> {
        x.checked_sub(b.checked_mul(*y)?)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(x - b * y)
    }
}

fn make_primitive<T: ExactInt>(row: &mut [T], from: usize) {
    let mut g = T::zero();
    for x in &row[from..] {
        if !x.is_zero() {
            g = if g.is_zero() { x.clone() } else { g.gcd(x) };
            if g.is_unit() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_unit() {
        return;
    }
    for x in &mut row[from..] {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// Forward elimination; returns `None` if the integer type overflowed.
fn echelon_rank<T: ExactInt>(rows: &mut [Vec<T>], cols: usize) -> Option<usize> {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        // first nonzero entry scanning top to bottom
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot[j].is_zero()).collect();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let a = pivot[c].div_exact(&g);
            let b = row[c].div_exact(&g);
            if a.is_one() {
                // row -= b * pivot, touching only the pivot's support
                for &j in &support {
                    row[j] = T::sub_mul(&row[j], &b, &pivot[j])?;
                }
            } else {
                for j in c..cols {
                    row[j] = T::mul_sub(&a, &row[j], &b, &pivot[j])?;
                }
            }
            make_primitive(row, c + 1);
        }
        rank += 1;
    }
    Some(rank)
}

/// Exact rank of an integer matrix given as rows of equal length `cols`.
pub(crate) fn integer_rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect())
        .collect();
    if let Some(mut small) = small {
        if let Some(rank) = echelon_rank(&mut small, cols) {
            return rank;
        }
    }
    let mut big = rows.to_vec();
    echelon_rank(&mut big, cols).expect("BigInt elimination cannot overflow")
}

/// Reduced row echelon form over the rationals. Returns the nonzero rows
/// together with their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        for x in rows[rank][c..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot = rows[rank].clone();
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot[j];
            }
        }
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Scales a rational row by the lcm of its denominators.
pub(crate) fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_and_big_paths_agree() {
        let rows = big(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]]);
        let mut small: Vec<Vec<i128>> = vec![vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11]];
        let mut bigrows = rows.clone();
        assert_eq!(echelon_rank(&mut small, 3), Some(2));
        assert_eq!(echelon_rank(&mut bigrows, 3), Some(2));
        assert_eq!(integer_rank(&rows, 3), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i128::MAX / 3;
        let mut small: Vec<Vec<i128>> = vec![vec![huge, 1], vec![huge - 1, huge]];
        assert_eq!(echelon_rank(&mut small, 2), None);
        let rows = vec![
            vec![BigInt::from(huge), BigInt::from(1)],
            vec![BigInt::from(huge - 1), BigInt::from(huge)],
        ];
        assert_eq!(integer_rank(&rows, 2), 2);
    }
}
