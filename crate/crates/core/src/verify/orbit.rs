use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{params, RankReport};
use crate::boolean::BooleanElement;
use crate::combinatorics::{apply_permutation, binomial, colex_rank, subsets_iter, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{RationalVector, SpanBasis};
use crate::trades::{is_t_trade, minimal_trade, total_trade, total_trade_basis, TradeSpec};

/// The span of the `𝔖_n`-orbit of a homogeneous element, closed under the
/// adjacent transpositions.
pub fn orbit_span(e: &BooleanElement) -> Result<SpanBasis> {
    let k = e.homogeneous_grade()?.ok_or(Error::ZeroElement)?;
    let n = e.n();
    let subsets: Vec<_> = subsets_iter(k, n)?.collect();
    let generators: Vec<Vec<usize>> = Permutation::adjacent_transpositions(n)
        .iter()
        .map(|s| {
            subsets
                .iter()
                .map(|a| apply_permutation(s, a).map(|b| colex_rank(&b) as usize))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut span = SpanBasis::new(subsets.len());
    let start = e.to_vector(k)?;
    span.insert(&start)?;
    // every vector that enlarged the span has its generator images tested
    let mut pending = vec![start];
    while let Some(v) = pending.pop() {
        for g in &generators {
            let mut image = vec![Default::default(); v.dim()];
            for (i, x) in v.entries().iter().enumerate() {
                image[g[i]] = x.clone();
            }
            let image = RationalVector::new(image);
            if span.insert(&image)? {
                pending.push(image);
            }
        }
    }
    Ok(span)
}

/// The strengths `i ∈ [t, k−1]` whose total-trade space lies in the orbit
/// span of a `t`-trade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub indices: BTreeSet<usize>,
    pub span_dim: u64,
    /// `Σ_{i ∈ indices} (C(n,i+1) − C(n,i))`.
    pub predicted_dim: u64,
    pub pass: bool,
}

pub fn orbit_decomposition(e: &BooleanElement, t: usize) -> Result<OrbitDecomposition> {
    let k = e.homogeneous_grade()?.ok_or(Error::ZeroElement)?;
    let n = e.n();
    if !(t < k && 2 * k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k <= n/2, got t={t} k={k} n={n}")));
    }
    if !is_t_trade(e, t)? {
        return Err(Error::NotATrade(t));
    }
    let span = orbit_span(e)?;
    let mut indices = BTreeSet::new();
    let mut predicted_dim = 0;
    for i in t..k {
        let mut inside = true;
        for (_, b) in total_trade_basis(i, k, n)? {
            inside &= span.contains(&b.to_vector(k)?)?;
        }
        if inside {
            indices.insert(i);
            predicted_dim += (binomial(n as i64, i as i64 + 1) - binomial(n as i64, i as i64))
                .to_u64()
                .expect("fits in u64");
        }
    }
    let span_dim = span.rank() as u64;
    Ok(OrbitDecomposition { indices, span_dim, predicted_dim, pass: span_dim == predicted_dim })
}

/// Orbit decompositions of constructed witnesses: a total trade (expecting
/// `{t}`), a minimal trade (expecting `{t, …, k−1}`) and, when `t+1 < k`,
/// the sum of a total `t`-trade and a total `(t+1)`-trade (expecting
/// `{t, t+1}`). `predicted` is the dimension for the expected strengths and
/// `pass` also requires the found strengths to be the expected ones.
pub fn check_orbit_decomposition(t: usize, k: usize, n: usize, seed: u64) -> Result<Vec<RankReport>> {
    if !(t < k && 2 * k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k <= n/2, got t={t} k={k} n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = || {
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(&mut rng);
        p
    };
    let total = |s: usize, p: &[usize]| -> Result<BooleanElement> {
        total_trade(&TradeSpec::total(n, s, k, p[..=s].to_vec(), p[s + 1..2 * s + 2].to_vec())?)
    };
    let mut witnesses: Vec<(&str, BooleanElement, BTreeSet<usize>)> = Vec::new();
    witnesses.push(("total", total(t, &points())?, BTreeSet::from([t])));
    let p = points();
    let minimal = TradeSpec::minimal(n, t, k, p[..=t].to_vec(), p[t + 1..2 * t + 2].to_vec(), p[2 * t + 2..t + k + 1].to_vec())?;
    witnesses.push(("minimal", minimal_trade(&minimal)?, (t..k).collect()));
    if t + 1 < k {
        let mixed = total(t, &points())?.plus(&total(t + 1, &points())?)?;
        witnesses.push(("mixed", mixed, BTreeSet::from([t, t + 1])));
    }
    witnesses
        .into_iter()
        .map(|(name, e, expected)| {
            let start = Instant::now();
            let d = orbit_decomposition(&e, t)?;
            let predicted = expected
                .iter()
                .map(|&i| (binomial(n as i64, i as i64 + 1) - binomial(n as i64, i as i64)).to_u64().expect("fits"))
                .sum();
            let mut r = RankReport::new(
                "orbit-decomposition",
                format!("{},witness={name}", params(t, k, n)),
                predicted,
                d.span_dim,
                start.elapsed(),
            );
            r.pass = r.pass && d.pass && d.indices == expected;
            Ok(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Subset;
    use crate::linalg::integer;

    #[test]
    fn orbit_of_a_difference_of_points() {
        let e = BooleanElement::from_terms(3, [(Subset::new(3, &[1]).unwrap(), integer(1)), (Subset::new(3, &[2]).unwrap(), integer(-1))]).unwrap();
        assert_eq!(orbit_span(&e).unwrap().rank(), 2);
        let d = orbit_decomposition(&BooleanElement::zero(4), 0);
        assert!(d.is_err());
    }

    #[test]
    fn witnesses_decompose_as_expected() {
        for r in check_orbit_decomposition(0, 3, 6, 11).unwrap() {
            assert!(r.pass, "{r}");
        }
        let block = BooleanElement::from_subset(Subset::new(6, &[1, 2]).unwrap());
        assert_eq!(orbit_decomposition(&block, 0), Err(Error::NotATrade(0)));
    }
}
