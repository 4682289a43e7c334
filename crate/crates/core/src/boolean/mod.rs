//! The Boolean algebra `2^[X]`: rational formal sums of subsets of
//! `X = {1..n}` with union as multiplication, graded by subset size.
//!
//! The grade-`k` piece is the permutation module `M_k`; its coordinates are
//! indexed by colex rank (see [`BooleanElement::to_vector`]).

mod lambda;
mod matrices;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{apply_permutation, binomial_u64, colex_unrank, Permutation, Subset};
use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalVector};

pub use lambda::{j_set, lambda_coeff, predicted_rank, weighted_j_set, weighted_predicted_rank};
pub use matrices::{build_matrix, MatrixKind, MatrixSpec};

/// A finitely supported rational combination of subsets. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BooleanElement {
    n: usize,
    terms: BTreeMap<Subset, Rational>,
}

impl BooleanElement {
    pub fn zero(n: usize) -> Self {
        BooleanElement { n, terms: BTreeMap::new() }
    }

    /// The multiplicative identity: the empty set with coefficient one.
    pub fn one(n: usize) -> Result<Self> {
        Ok(Self::from_subset(Subset::empty(n)?))
    }

    pub fn from_subset(s: Subset) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, Rational::one());
        BooleanElement { n: s.n(), terms }
    }

    /// The singleton `{x}`.
    pub fn element(n: usize, x: usize) -> Result<Self> {
        Ok(Self::from_subset(Subset::new(n, &[x])?))
    }

    /// Sums the given terms; repeated subsets accumulate.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, Rational)>,
    {
        let mut e = Self::zero(n);
        for (s, c) in terms {
            if s.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: s.n() });
            }
            e.add_term(s, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, s: Subset, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in (grade, colex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Subset) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ground(&self, other: &BooleanElement) -> Result<()> {
        if self.n != other.n {
            Err(Error::GroundSetMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    pub fn plus(&self, other: &BooleanElement) -> Result<BooleanElement> {
        self.same_ground(other)?;
        let mut e = self.clone();
        for (s, c) in &other.terms {
            e.add_term(*s, c.clone());
        }
        Ok(e)
    }

    pub fn minus(&self, other: &BooleanElement) -> Result<BooleanElement> {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> BooleanElement {
        self.scaled(&-Rational::one())
    }

    pub fn scaled(&self, factor: &Rational) -> BooleanElement {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        BooleanElement {
            n: self.n,
            terms: self.terms.iter().map(|(s, c)| (*s, c * factor)).collect(),
        }
    }

    /// The common grade of all terms: `None` for zero, an error when grades
    /// are mixed.
    pub fn homogeneous_grade(&self) -> Result<Option<usize>> {
        let mut grades = self.terms.keys().map(Subset::len);
        let Some(first) = grades.next() else {
            return Ok(None);
        };
        if grades.all(|g| g == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Coordinates in `M_k`, indexed by colex rank. Fails if any term is not a
    /// `k`-subset.
    pub fn to_vector(&self, k: usize) -> Result<RationalVector> {
        let dim = binomial_u64(self.n, k) as usize;
        let mut v = vec![Rational::zero(); dim];
        for (s, c) in &self.terms {
            if s.len() != k {
                return Err(Error::NotHomogeneous);
            }
            v[s.colex_rank() as usize] = c.clone();
        }
        Ok(RationalVector::new(v))
    }

    /// Inverse of [`BooleanElement::to_vector`].
    pub fn from_vector(n: usize, k: usize, v: &RationalVector) -> Result<Self> {
        let dim = binomial_u64(n, k) as usize;
        if v.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
        }
        let mut e = Self::zero(n);
        for (r, c) in v.entries().iter().enumerate() {
            if !c.is_zero() {
                e.add_term(colex_unrank(r as u64, k, n)?, c.clone());
            }
        }
        Ok(e)
    }
}

impl fmt::Display for BooleanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*{s}")?,
                (_, false) => write!(f, " + {c}*{s}")?,
                (_, true) => write!(f, " - {}*{s}", c.abs())?,
            }
        }
        Ok(())
    }
}

/// `αβ = Σ α_Y β_Z (Y ∪ Z)`. Coefficients of coinciding unions add up.
pub fn product(a: &BooleanElement, b: &BooleanElement) -> Result<BooleanElement> {
    a.same_ground(b)?;
    let mut out = BooleanElement::zero(a.n);
    for (y, cy) in &a.terms {
        for (z, cz) in &b.terms {
            out.add_term(y.union(z)?, cy * cz);
        }
    }
    Ok(out)
}

/// The grade-`m` component.
pub fn grade(e: &BooleanElement, m: usize) -> BooleanElement {
    BooleanElement {
        n: e.n,
        terms: e
            .terms
            .iter()
            .filter(|(s, _)| s.len() == m)
            .map(|(s, c)| (*s, c.clone()))
            .collect(),
    }
}

/// `Σ_m(A)`: the sum of all `m`-subsets of `A`. This is `1` for `m = 0` and
/// `0` for `m > |A|`.
pub fn sigma(a: &Subset, m: usize) -> BooleanElement {
    let mut out = BooleanElement::zero(a.n());
    for s in a.subsets(m) {
        out.add_term(s, Rational::one());
    }
    out
}

/// `ψ_k^(steps)`: sends each `k`-subset to the sum of its `(k - steps)`-subsets,
/// extended linearly. Its matrix in colex coordinates is `W_{k-steps,k}`.
pub fn psi(e: &BooleanElement, steps: usize) -> Result<BooleanElement> {
    let Some(k) = e.homogeneous_grade()? else {
        return Ok(BooleanElement::zero(e.n));
    };
    if steps > k {
        return Err(Error::InvalidParameters(format!("cannot step down {steps} from grade {k}")));
    }
    let mut out = BooleanElement::zero(e.n);
    for (s, c) in &e.terms {
        for sub in s.subsets(k - steps) {
            out.add_term(sub, c.clone());
        }
    }
    Ok(out)
}

/// The natural action of `σ` on `2^[X]`.
pub fn permute_element(sigma: &Permutation, e: &BooleanElement) -> Result<BooleanElement> {
    if sigma.n() != e.n {
        return Err(Error::GroundSetMismatch { left: sigma.n(), right: e.n });
    }
    let mut out = BooleanElement::zero(e.n);
    for (s, c) in &e.terms {
        out.add_term(apply_permutation(sigma, s)?, c.clone());
    }
    Ok(out)
}
