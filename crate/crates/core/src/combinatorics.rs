//! Subsets of `X = {1..n}`, binomial coefficients, colexicographic ranking and
//! permutations of `X`.
//!
//! A [`Subset`] is stored as a bitmask (bit `i - 1` set iff `i` is a member),
//! which caps the ground set at [`MAX_GROUND_SET`] elements. For subsets of a
//! fixed size, colex order coincides with numeric order of the mask, which is
//! what [`SubsetIter`] and the `Ord` impl exploit.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 64;

/// Binomial coefficient `C(a, b)` with the vanishing convention: zero whenever
/// `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a {
        return BigUint::default();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Machine-word binomial for ranking; exact for `a <= 64`.
pub(crate) fn binomial_u64(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `{1..n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u8,
    bits: u64,
}

impl Subset {
    /// Builds a subset from a strictly increasing list of elements in `1..=n`.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::InvalidSubset(format!("element {e} outside 1..={n}")));
            }
            if e <= prev {
                return Err(Error::InvalidSubset(format!(
                    "elements must be strictly increasing, got {elements:?}"
                )));
            }
            prev = e;
            bits |= 1 << (e - 1);
        }
        Ok(Subset { n: n as u8, bits })
    }

    /// Like [`Subset::new`] but accepts the elements in any order.
    pub fn from_unsorted(n: usize, elements: &[usize]) -> Result<Self> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        Self::new(n, &sorted)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The whole ground set `{1..n}`.
    pub fn full(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset { n: n as u8, bits: full_mask(n) })
    }

    /// Builds a subset from its bitmask (bit `i - 1` represents element `i`).
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::InvalidSubset(format!("mask {bits:#x} has elements above {n}")));
        }
        Ok(Subset { n: n as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        Subset { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= 1 && x <= self.n() && self.bits & (1 << (x - 1)) != 0
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i + 1)
            }
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_ground(&self, other: &Subset) -> Result<()> {
        if self.n != other.n {
            Err(Error::GroundSetMismatch { left: self.n(), right: other.n() })
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_ground(other)?;
        Ok(Subset { n: self.n, bits: self.bits | other.bits })
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.same_ground(other)?;
        Ok(Subset { n: self.n, bits: self.bits & !other.bits })
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> Subset {
        Subset { n: self.n, bits: full_mask(self.n()) & !self.bits }
    }

    /// All `m`-element subsets of this subset, in colex order.
    pub fn subsets(&self, m: usize) -> impl Iterator<Item = Subset> + '_ {
        let members = self.elements();
        let inner = if m <= members.len() {
            Some(SubsetIter { n: members.len(), next: Some(full_mask(m)) })
        } else {
            None
        };
        inner.into_iter().flatten().map(move |pattern| {
            let bits = pattern
                .iter()
                .fold(0u64, |acc, i| acc | 1 << (members[i - 1] - 1));
            Subset::from_bits_unchecked(self.n(), bits)
        })
    }

    /// Position of this subset in colex order among subsets of the same size.
    pub fn colex_rank(&self) -> u64 {
        colex_rank(self)
    }
}

/// Orders by size first, then colex. Within one grade this is exactly colex
/// order, which fixes all matrix row and column indexing.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// `sum_i C(s_i - 1, i)` over the sorted elements, `i` counted from 1.
pub fn colex_rank(s: &Subset) -> u64 {
    s.iter()
        .enumerate()
        .map(|(i, e)| binomial_u64(e - 1, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`].
pub fn colex_unrank(rank: u64, k: usize, n: usize) -> Result<Subset> {
    check_ground(n)?;
    if k > n || rank >= binomial_u64(n, k) {
        return Err(Error::RankOutOfRange { rank, k, n });
    }
    let mut rest = rank;
    let mut bits = 0u64;
    let mut bound = n;
    for i in (1..=k).rev() {
        // largest c < bound with C(c, i) <= rest
        let mut c = bound - 1;
        while binomial_u64(c, i) > rest {
            c -= 1;
        }
        rest -= binomial_u64(c, i);
        bits |= 1 << c;
        bound = c;
    }
    Ok(Subset::from_bits_unchecked(n, bits))
}

/// All `k`-subsets of `{1..n}` in colex order.
pub struct SubsetIter {
    n: usize,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // Gosper's hack: next larger mask with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let next = (((ripple ^ cur) >> 2) / low) | ripple;
                (next & !full_mask(self.n) == 0).then_some(next)
            }
        };
        Some(Subset::from_bits_unchecked(self.n, cur))
    }
}

pub fn subsets_iter(k: usize, n: usize) -> Result<SubsetIter> {
    check_ground(n)?;
    if k > n {
        return Err(Error::InvalidParameters(format!("k={k} exceeds n={n}")));
    }
    Ok(SubsetIter { n, next: Some(full_mask(k)) })
}

/// `|a ∩ b|`.
pub fn intersection_size(a: &Subset, b: &Subset) -> Result<usize> {
    a.same_ground(b)?;
    Ok((a.bits & b.bits).count_ones() as usize)
}

/// A permutation of `{1..n}`, stored as its images `σ(1), …, σ(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!("image {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) outside 1..={n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// The `n - 1` adjacent transpositions `(i i+1)`, which generate the
    /// symmetric group.
    pub fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
        (1..n)
            .map(|i| Permutation::transposition(n, i, i + 1).expect("in range"))
            .collect()
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(x)`; panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch { left: self.n(), right: other.n() });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }
}

/// `{σ(x) : x ∈ s}`.
pub fn apply_permutation(sigma: &Permutation, s: &Subset) -> Result<Subset> {
    if sigma.n() != s.n() {
        return Err(Error::GroundSetMismatch { left: sigma.n(), right: s.n() });
    }
    let bits = s.iter().fold(0u64, |acc, x| acc | 1 << (sigma.apply(x) - 1));
    Ok(Subset::from_bits_unchecked(s.n(), bits))
}
