//! Minimal and total trades as grade-`k` elements of the Boolean algebra.
//!
//! A minimal `t`-`(n,k)` trade is `(x_1−y_1)⋯(x_{t+1}−y_{t+1})·x_{t+2}⋯x_k`;
//! a total trade replaces the fixed tail by the sum of all `(k−t−1)`-subsets
//! of the remaining points.

use std::fmt;

use num_traits::One;

use crate::boolean::{psi, sigma, BooleanElement};
use crate::combinatorics::Subset;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::specht::{standard_tableaux, TwoRowShape};

/// The points of a minimal trade (`tail` present) or a total trade
/// (`tail` absent). Elements are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TradeSpec {
    n: usize,
    t: usize,
    k: usize,
    xs: Vec<usize>,
    ys: Vec<usize>,
    tail: Option<Vec<usize>>,
}

impl TradeSpec {
    pub fn minimal(n: usize, t: usize, k: usize, xs: Vec<usize>, ys: Vec<usize>, tail: Vec<usize>) -> Result<Self> {
        let spec = TradeSpec { n, t, k, xs, ys, tail: Some(tail) };
        spec.validate()?;
        Ok(spec)
    }

    pub fn total(n: usize, t: usize, k: usize, xs: Vec<usize>, ys: Vec<usize>) -> Result<Self> {
        let spec = TradeSpec { n, t, k, xs, ys, tail: None };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let (n, t, k) = (self.n, self.t, self.k);
        check_range(t, k, n)?;
        if self.xs.len() != t + 1 || self.ys.len() != t + 1 {
            return Err(Error::InvalidParameters(format!(
                "need {} x's and y's, got {} and {}",
                t + 1,
                self.xs.len(),
                self.ys.len()
            )));
        }
        if let Some(tail) = &self.tail {
            if tail.len() != k - t - 1 {
                return Err(Error::InvalidParameters(format!(
                    "need a tail of length {}, got {}",
                    k - t - 1,
                    tail.len()
                )));
            }
        }
        let mut seen = 0u64;
        for &x in self.points() {
            if x == 0 || x > n {
                return Err(Error::InvalidParameters(format!("point {x} outside 1..={n}")));
            }
            if seen & (1 << (x - 1)) != 0 {
                return Err(Error::InvalidParameters(format!("point {x} repeated")));
            }
            seen |= 1 << (x - 1);
        }
        Ok(())
    }

    fn points(&self) -> impl Iterator<Item = &usize> {
        self.xs.iter().chain(&self.ys).chain(self.tail.iter().flatten())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    pub fn tail(&self) -> Option<&[usize]> {
        self.tail.as_deref()
    }

    /// Reorients every pair so that `x_i < y_i` and sorts the pairs by `x_i`.
    /// Returns the normalized spec and the sign relating the two trades.
    pub fn normalized(&self) -> (TradeSpec, i32) {
        let mut sign = 1;
        let mut pairs: Vec<(usize, usize)> = self
            .xs
            .iter()
            .zip(&self.ys)
            .map(|(&x, &y)| {
                if x < y {
                    (x, y)
                } else {
                    sign = -sign;
                    (y, x)
                }
            })
            .collect();
        pairs.sort_unstable();
        let mut tail = self.tail.clone();
        if let Some(tail) = tail.as_mut() {
            tail.sort_unstable();
        }
        let spec = TradeSpec {
            xs: pairs.iter().map(|p| p.0).collect(),
            ys: pairs.iter().map(|p| p.1).collect(),
            tail,
            ..*self
        };
        (spec, sign)
    }

    /// The trade this spec describes.
    pub fn element(&self) -> Result<BooleanElement> {
        match self.tail {
            Some(_) => minimal_trade(self),
            None => total_trade(self),
        }
    }
}

impl fmt::Display for TradeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "xs=[{}] ys=[{}]", list(&self.xs), list(&self.ys))?;
        if let Some(tail) = &self.tail {
            write!(f, " tail=[{}]", list(tail))?;
        }
        Ok(())
    }
}

fn check_range(t: usize, k: usize, n: usize) -> Result<()> {
    if !(t < k && t + k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k and t + k <= n, got t={t} k={k} n={n}")));
    }
    if n > crate::combinatorics::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

fn mask(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &x| m | 1 << (x - 1))
}

/// `(x_1−y_1)⋯(x_{t+1}−y_{t+1})` times `base`, expanded over all sign choices.
fn expand_pairs(spec: &TradeSpec, base: &BooleanElement) -> Result<BooleanElement> {
    let n = spec.n;
    let pairs = spec.xs.len();
    let mut terms = Vec::with_capacity(base.len() << pairs);
    for choice in 0u64..1 << pairs {
        let mut bits = 0u64;
        for i in 0..pairs {
            let point = if choice >> i & 1 == 0 { spec.xs[i] } else { spec.ys[i] };
            bits |= 1 << (point - 1);
        }
        let sign = if choice.count_ones() % 2 == 0 { Rational::one() } else { -Rational::one() };
        for (s, c) in base.terms() {
            terms.push((Subset::from_bits(n, bits | s.bits())?, &sign * c));
        }
    }
    BooleanElement::from_terms(n, terms)
}

/// Expands a minimal trade; the result has `2^{t+1}` terms with coefficients `±1`.
pub fn minimal_trade(spec: &TradeSpec) -> Result<BooleanElement> {
    let tail = spec
        .tail
        .as_deref()
        .ok_or_else(|| Error::InvalidParameters("a minimal trade needs a tail".into()))?;
    let base = BooleanElement::from_subset(Subset::from_bits(spec.n, mask(tail))?);
    expand_pairs(spec, &base)
}

/// Expands a total trade. When fewer than `k−t−1` points remain outside the
/// pairs the tail sum is empty and the trade is zero.
pub fn total_trade(spec: &TradeSpec) -> Result<BooleanElement> {
    if spec.tail.is_some() {
        return Err(Error::InvalidParameters("a total trade has no fixed tail".into()));
    }
    let used = mask(&spec.xs) | mask(&spec.ys);
    let rest = Subset::full(spec.n)?.difference(&Subset::from_bits(spec.n, used)?)?;
    expand_pairs(spec, &sigma(&rest, spec.k - spec.t - 1))
}

/// Whether `e` is annihilated by `ψ_k^(k−t)`, i.e. is a null vector of `W_{t,k}`.
/// The zero element is a trade of every strength.
pub fn is_t_trade(e: &BooleanElement, t: usize) -> Result<bool> {
    let Some(k) = e.homogeneous_grade()? else {
        return Ok(true);
    };
    if t > k {
        return Err(Error::InvalidParameters(format!("need t <= k, got t={t} k={k}")));
    }
    Ok(psi(e, k - t)?.is_zero())
}

/// The largest `t ≤ k−1` for which `e` is a `t`-trade, or `None` when `e`
/// is not even a 0-trade.
pub fn trade_strength(e: &BooleanElement) -> Result<Option<usize>> {
    let k = e.homogeneous_grade()?.ok_or(Error::ZeroElement)?;
    for t in (0..k).rev() {
        if is_t_trade(e, t)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Total trades read off the standard tableaux of shape `(n−t−1, t+1)`:
/// the first `t+1` columns give the pairs. These form a basis of the span
/// of all total trades whenever `t + k < n`.
pub fn total_trade_basis(t: usize, k: usize, n: usize) -> Result<Vec<(TradeSpec, BooleanElement)>> {
    check_range(t, k, n)?;
    if n < 2 * t + 2 {
        return Err(Error::InvalidParameters(format!("shape ({}, {}) is not a partition", n - t - 1, t + 1)));
    }
    let shape = TwoRowShape::new(n - t - 1, t + 1)?;
    standard_tableaux(&shape)
        .into_iter()
        .map(|u| {
            let spec = TradeSpec::total(n, t, k, u.row1()[..=t].to_vec(), u.row2().to_vec())?;
            let e = total_trade(&spec)?;
            Ok((spec, e))
        })
        .collect()
}

/// Every normalized choice of `t+1` disjoint pairs: `x_i < y_i` and
/// `x_1 < x_2 < ⋯`. Each sign class of total trades appears once.
pub fn total_trade_specs(t: usize, k: usize, n: usize) -> Result<Vec<TradeSpec>> {
    check_range(t, k, n)?;
    let mut out = Vec::new();
    let mut xs = Vec::with_capacity(t + 1);
    let mut ys = Vec::with_capacity(t + 1);
    pair_choices(n, t + 1, 0, 0, &mut xs, &mut ys, &mut |xs, ys| {
        out.push(TradeSpec { n, t, k, xs: xs.to_vec(), ys: ys.to_vec(), tail: None });
    });
    Ok(out)
}

fn pair_choices(
    n: usize,
    remaining: usize,
    min_x: usize,
    used: u64,
    xs: &mut Vec<usize>,
    ys: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize], &[usize]),
) {
    if remaining == 0 {
        emit(xs, ys);
        return;
    }
    for x in min_x + 1..=n {
        if used >> (x - 1) & 1 == 1 {
            continue;
        }
        for y in x + 1..=n {
            if used >> (y - 1) & 1 == 1 {
                continue;
            }
            xs.push(x);
            ys.push(y);
            pair_choices(n, remaining - 1, x, used | 1 << (x - 1) | 1 << (y - 1), xs, ys, emit);
            xs.pop();
            ys.pop();
        }
    }
}

/// The total trades of [`total_trade_specs`], in the same order.
pub fn all_total_trades(t: usize, k: usize, n: usize) -> Result<Vec<BooleanElement>> {
    total_trade_specs(t, k, n)?.iter().map(total_trade).collect()
}

/// Specs satisfying only `x_1 < ⋯ < x_{t+1}`, `y_1 < ⋯ < y_{t+1}` and
/// `x_i < y_i`. For small parameters this set is larger than a basis
/// (three candidates for `t=0, k=1, n=3`, spanning a plane).
pub fn literal_basis_candidates(t: usize, k: usize, n: usize) -> Result<Vec<TradeSpec>> {
    Ok(total_trade_specs(t, k, n)?
        .into_iter()
        .filter(|s| s.ys.windows(2).all(|w| w[0] < w[1]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{integer, rank_of_columns};

    fn el(n: usize, terms: &[(&[usize], i64)]) -> BooleanElement {
        BooleanElement::from_terms(n, terms.iter().map(|(s, c)| (Subset::new(n, s).unwrap(), integer(*c)))).unwrap()
    }

    #[test]
    fn minimal_examples() {
        let s = TradeSpec::minimal(2, 0, 1, vec![1], vec![2], vec![]).unwrap();
        assert_eq!(minimal_trade(&s).unwrap(), el(2, &[(&[1], 1), (&[2], -1)]));
        let s = TradeSpec::minimal(4, 0, 2, vec![1], vec![2], vec![3]).unwrap();
        assert_eq!(minimal_trade(&s).unwrap(), el(4, &[(&[1, 3], 1), (&[2, 3], -1)]));
        let s = TradeSpec::minimal(4, 1, 2, vec![1, 3], vec![2, 4], vec![]).unwrap();
        let expected = el(4, &[(&[1, 3], 1), (&[1, 4], -1), (&[2, 3], -1), (&[2, 4], 1)]);
        assert_eq!(minimal_trade(&s).unwrap(), expected);
        assert_eq!(s.to_string(), "xs=[1,3] ys=[2,4] tail=[]");
    }

    #[test]
    fn total_examples() {
        let s = TradeSpec::total(4, 0, 2, vec![1], vec![2]).unwrap();
        let expected = el(4, &[(&[1, 3], 1), (&[1, 4], 1), (&[2, 3], -1), (&[2, 4], -1)]);
        assert_eq!(total_trade(&s).unwrap(), expected);
        let s = TradeSpec::total(3, 0, 1, vec![1], vec![2]).unwrap();
        assert_eq!(total_trade(&s).unwrap(), el(3, &[(&[1], 1), (&[2], -1)]));
        assert_eq!(s.to_string(), "xs=[1] ys=[2]");
    }

    #[test]
    fn total_is_sum_of_minimals() {
        let total = total_trade(&TradeSpec::total(6, 0, 3, vec![2], vec![5]).unwrap()).unwrap();
        let mut sum = BooleanElement::zero(6);
        for tail in [[1, 3], [1, 4], [1, 6], [3, 4], [3, 6], [4, 6]] {
            let m = minimal_trade(&TradeSpec::minimal(6, 0, 3, vec![2], vec![5], tail.to_vec()).unwrap()).unwrap();
            sum = sum.plus(&m).unwrap();
        }
        assert_eq!(total, sum);
    }

    #[test]
    fn boundary_total_trade_vanishes() {
        let s = TradeSpec::total(2, 0, 2, vec![1], vec![2]).unwrap();
        assert!(total_trade(&s).unwrap().is_zero());
    }

    #[test]
    fn invalid_specs() {
        assert!(TradeSpec::total(4, 0, 2, vec![1], vec![1]).is_err());
        assert!(TradeSpec::total(4, 2, 2, vec![1, 2, 3], vec![4, 5, 6]).is_err());
        assert!(TradeSpec::total(3, 1, 2, vec![1, 2], vec![3, 4]).is_err());
        assert!(TradeSpec::minimal(5, 0, 2, vec![1], vec![2], vec![]).is_err());
        assert!(TradeSpec::minimal(5, 0, 2, vec![1], vec![2], vec![6]).is_err());
        assert!(TradeSpec::total(5, 0, 2, vec![0], vec![2]).is_err());
    }

    #[test]
    fn normalization_and_skew_symmetry() {
        let s = TradeSpec::total(6, 1, 2, vec![5, 2], vec![3, 6]).unwrap();
        let (norm, sign) = s.normalized();
        assert_eq!((norm.xs(), norm.ys(), sign), (&[2, 3][..], &[6, 5][..], -1));
        let a = total_trade(&s).unwrap();
        let b = total_trade(&norm).unwrap();
        assert_eq!(a, b.negated());
    }

    #[test]
    fn trade_predicates() {
        let e = total_trade(&TradeSpec::total(4, 0, 2, vec![1], vec![2]).unwrap()).unwrap();
        assert!(is_t_trade(&e, 0).unwrap());
        let block = el(4, &[(&[1, 2], 1)]);
        assert!(!is_t_trade(&block, 0).unwrap());
        assert_eq!(trade_strength(&block).unwrap(), None);
        let e = total_trade(&TradeSpec::total(5, 1, 2, vec![1, 3], vec![2, 4]).unwrap()).unwrap();
        assert_eq!(trade_strength(&e).unwrap(), Some(1));
        let e = total_trade(&TradeSpec::total(5, 0, 2, vec![1], vec![2]).unwrap()).unwrap();
        assert_eq!(trade_strength(&e).unwrap(), Some(0));
        assert!(trade_strength(&BooleanElement::zero(5)).is_err());
        let mixed = block.plus(&el(4, &[(&[1], 1)])).unwrap();
        assert!(is_t_trade(&mixed, 0).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_total_trades(0, 1, 2).unwrap(), vec![el(2, &[(&[1], 1), (&[2], -1)])]);
        let specs = total_trade_specs(0, 1, 3).unwrap();
        let pairs: Vec<_> = specs.iter().map(|s| (s.xs[0], s.ys[0])).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(total_trade_specs(1, 2, 4).unwrap().len(), 3);
        // 9 choices of the unused point times 105 perfect matchings of the other 8
        assert_eq!(total_trade_specs(3, 4, 9).unwrap().len(), 945);
    }

    #[test]
    fn canonical_basis() {
        let basis = total_trade_basis(0, 1, 3).unwrap();
        let specs: Vec<String> = basis.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(specs, vec!["xs=[1] ys=[3]", "xs=[1] ys=[2]"]);
        assert_eq!(total_trade_basis(1, 2, 5).unwrap().len(), 5);
        let basis = total_trade_basis(0, 2, 4).unwrap();
        let vectors: Vec<_> = basis.iter().map(|(_, e)| e.to_vector(2).unwrap()).collect();
        assert_eq!(rank_of_columns(&vectors).unwrap(), 3);
        assert!(total_trade_basis(1, 2, 3).is_err());
    }

    #[test]
    fn literal_candidates() {
        let c = literal_basis_candidates(0, 1, 3).unwrap();
        assert_eq!(c.len(), 3);
        let vectors: Vec<_> = c.iter().map(|s| total_trade(s).unwrap().to_vector(1).unwrap()).collect();
        assert_eq!(rank_of_columns(&vectors).unwrap(), 2);
        let zero = integer(0);
        assert!(vectors.iter().all(|v| v.entries().iter().fold(zero.clone(), |a, x| a + x) == zero));
    }
}
