//! Dense exact-rational matrices and the row-reduction oracle used by every
//! verification in the crate: rank, right kernel, span membership.
//!
//! Nothing here uses floating point. Rank goes through fraction-free integer
//! elimination (rows are cleared of denominators first, which does not change
//! the row space); kernels go through rational reduced row echelon form.

mod elimination;
mod text;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use text::{parse_matrix, MatrixFormat};

/// Exact rationals; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RationalVector {
    entries: Vec<Rational>,
}

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector { entries: vec![Rational::zero(); dim] }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RationalVector { entries: values.iter().map(|&v| integer(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> RationalVector {
        RationalVector { entries: self.entries.iter().map(|x| x * factor).collect() }
    }

    /// Smallest integer multiple with coprime entries (and unchanged sign).
    pub fn primitive(&self) -> RationalVector {
        let lcm = self.entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.entries.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return self.clone();
        }
        RationalVector {
            entries: ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect(),
        }
    }
}

impl std::ops::Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    /// All rows must have the same length; `cols` is taken from the first row
    /// (zero for an empty list).
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { rows: nrows, cols, entries })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors (`dim × count`).
    pub fn from_columns(vectors: &[RationalVector]) -> Result<Self> {
        let dim = check_same_dim(vectors)?;
        let mut m = Self::zeros(dim, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            for i in 0..dim {
                m.set(i, j, v[i].clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &Rational) {
        for x in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *x *= factor;
        }
    }

    /// Entrywise `self + factor * other`.
    pub fn add_scaled(&self, other: &RationalMatrix, factor: &Rational) -> Result<RationalMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b * factor)
            .collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_text(&self, format: MatrixFormat) -> String {
        text::render(self, format)
    }
}

fn check_same_dim(vectors: &[RationalVector]) -> Result<usize> {
    let dim = vectors.first().map_or(0, RationalVector::dim);
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
        }
    }
    Ok(dim)
}

/// Exact rank over ℚ.
pub fn rank(m: &RationalMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| elimination::integer_row(m.row(i)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    elimination::integer_rank(&rows, m.cols)
}

/// Reduced row echelon form: nonzero rows and their pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let (rows, pivots) = elimination::rref(m.row_vecs(), m.cols);
    let nrows = rows.len();
    let entries = rows.into_iter().flatten().collect();
    (RationalMatrix { rows: nrows, cols: m.cols, entries }, pivots)
}

/// A basis of the right null space, one vector per free column, each scaled
/// to a primitive integer vector.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<RationalVector> {
    let (reduced, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(i, f).clone();
            }
            RationalVector::new(v).primitive()
        })
        .collect()
}

/// Rank of the matrix whose columns are `vectors`.
pub fn rank_of_columns(vectors: &[RationalVector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    check_same_dim(vectors)?;
    // row rank == column rank, so the vectors can be used as rows directly
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.entries.clone()).collect();
    Ok(rank(&RationalMatrix::from_rows(rows)?))
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(v: &RationalVector, vectors: &[RationalVector]) -> Result<bool> {
    if let Some(first) = vectors.first() {
        if first.dim() != v.dim() {
            return Err(Error::DimensionMismatch { expected: first.dim(), found: v.dim() });
        }
    }
    if v.is_zero() {
        check_same_dim(vectors)?;
        return Ok(true);
    }
    let base = rank_of_columns(vectors)?;
    let mut all = vectors.to_vec();
    all.push(v.clone());
    Ok(rank_of_columns(&all)? == base)
}

pub fn matvec(m: &RationalMatrix, v: &RationalVector) -> Result<RationalVector> {
    if m.cols != v.dim() {
        return Err(Error::DimensionMismatch { expected: m.cols, found: v.dim() });
    }
    let entries = (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v.entries())
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect();
    Ok(RationalVector::new(entries))
}

/// Incrementally maintained echelon basis of a subspace.
///
/// Each stored row has a leading one at its pivot and zeros at the pivots of
/// all rows stored before it, so reducing against the rows in insertion order
/// is enough to decide membership.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the spanned subspace.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &RationalVector) -> Result<Vec<Rational>> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        let mut w = v.entries.clone();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &RationalVector) -> Result<bool> {
        let mut w = self.reduce(v)?;
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = w[p].recip();
        for x in &mut w {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((p, w));
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_integer_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_integers(x)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 1]])), 1);
        assert_eq!(rank(&RationalMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&RationalMatrix::zeros(3, 0)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let a = RationalMatrix::from_rows(vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(3, 2), integer(1)],
        ])
        .unwrap();
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], v(&[-1, 1]));
        assert!(kernel_basis(&RationalMatrix::identity(2)).is_empty());
        let k = kernel_basis(&RationalMatrix::zeros(2, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(rank_of_columns(&k).unwrap(), 3);
    }

    #[test]
    fn rank_of_columns_examples() {
        assert_eq!(rank_of_columns(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap(), 2);
        assert_eq!(rank_of_columns(&[]).unwrap(), 0);
        assert_eq!(rank_of_columns(&[v(&[1, -1]), v(&[2, -2])]).unwrap(), 1);
        assert!(rank_of_columns(&[v(&[1]), v(&[1, 2])]).is_err());
    }

    #[test]
    fn in_span_examples() {
        assert!(in_span(&v(&[1, 1]), &[v(&[1, 0]), v(&[0, 1])]).unwrap());
        assert!(in_span(&v(&[0, 0]), &[]).unwrap());
        assert!(!in_span(&v(&[1, 0]), &[v(&[0, 1])]).unwrap());
        assert!(in_span(&v(&[1]), &[v(&[1, 2])]).is_err());
    }

    #[test]
    fn matvec_examples() {
        let x = v(&[3, -4, 5]);
        assert_eq!(matvec(&RationalMatrix::identity(3), &x).unwrap(), x);
        assert!(matvec(&RationalMatrix::zeros(2, 3), &x).unwrap().is_zero());
        assert_eq!(matvec(&m(&[&[1, 1]]), &v(&[1, -1])).unwrap(), v(&[0]));
        assert!(matvec(&m(&[&[1, 1]]), &v(&[1])).is_err());
    }

    #[test]
    fn span_basis_tracks_rank() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(&v(&[1, 2, 3])).unwrap());
        assert!(!s.insert(&v(&[2, 4, 6])).unwrap());
        assert!(s.insert(&v(&[0, 1, 1])).unwrap());
        assert!(s.contains(&v(&[1, 3, 4])).unwrap());
        assert!(!s.contains(&v(&[0, 0, 1])).unwrap());
        assert!(!s.insert(&v(&[0, 0, 0])).unwrap());
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn primitive_vectors() {
        let x = RationalVector::new(vec![rational(1, 2), rational(-3, 4), integer(0)]);
        assert_eq!(x.primitive(), v(&[2, -3, 0]));
    }
}
