use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::orbit::orbit_span;
use super::{params, DecompositionReport, RankReport, SummandRow};
use crate::boolean::{
    build_matrix, lambda_coeff, predicted_rank, weighted_predicted_rank, BooleanElement, MatrixSpec,
};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::{integer, matvec, rank, rank_of_columns, rational, Rational, RationalVector};
use crate::specht::{canonicalize, garnir, h_map_expr, straighten, Tableau, TabloidExpr, TwoRowShape};
use crate::trades::{
    all_total_trades, literal_basis_candidates, minimal_trade, total_trade, total_trade_basis, TradeSpec,
};

/// Random fillings per `(shape, column)` once exhaustive enumeration stops.
pub const GARNIR_SAMPLES: usize = 100;
/// Garnir checks enumerate every filling up to this ground-set size.
pub const GARNIR_EXHAUSTIVE_MAX: usize = 6;
/// Random tabloids per shape in the straightening check.
pub const STRAIGHTEN_SAMPLES: usize = 200;

fn to_u64(x: BigUint) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::InvalidParameters("count exceeds u64".into()))
}

fn binom(n: usize, k: usize) -> u64 {
    binomial(n as i64, k as i64).to_u64().expect("binomial fits in u64 for n <= 64")
}

/// `C(n, i+1) − C(n, i)`, the dimension of `S^(n−i−1, i+1)` when that is a
/// partition and zero when `n = 2i + 1`.
fn stratum_dim(n: usize, i: usize) -> Result<u64> {
    let d = BigInt::from(binomial(n as i64, i as i64 + 1)) - BigInt::from(binomial(n as i64, i as i64));
    d.to_u64().ok_or_else(|| Error::InvalidParameters(format!("C({n},{}) < C({n},{i})", i + 1)))
}

fn require_half(t: usize, k: usize, n: usize, strict: bool) -> Result<()> {
    let ok = if strict { t < k } else { t <= k } && 2 * k <= n;
    if !ok {
        let rel = if strict { "<" } else { "<=" };
        return Err(Error::InvalidParameters(format!("need t {rel} k <= n/2, got t={t} k={k} n={n}")));
    }
    Ok(())
}

fn require_trade_range(t: usize, k: usize, n: usize) -> Result<()> {
    if !(t < k && t + k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k and t + k <= n, got t={t} k={k} n={n}")));
    }
    Ok(())
}

fn vectors(elements: &[BooleanElement], k: usize) -> Result<Vec<RationalVector>> {
    elements.iter().map(|e| e.to_vector(k)).collect()
}

fn coeff_list(c: &[Rational]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `rank W_{t,k} = C(n,t)`.
pub fn check_inclusion_rank(t: usize, k: usize, n: usize) -> Result<RankReport> {
    require_half(t, k, n, true)?;
    let start = Instant::now();
    let m = build_matrix(&MatrixSpec::inclusion(n, t, k)?)?;
    let computed = rank(&m) as u64;
    Ok(RankReport::new("inclusion-rank", params(t, k, n), binom(n, t), computed, start.elapsed()))
}

/// The span of all `t`-`(n,k)` total trades has dimension `C(n,t+1) − C(n,t)`.
pub fn check_total_trade_dim(t: usize, k: usize, n: usize) -> Result<RankReport> {
    require_trade_range(t, k, n)?;
    let start = Instant::now();
    let computed = rank_of_columns(&vectors(&all_total_trades(t, k, n)?, k)?)? as u64;
    Ok(RankReport::new("total-trade-dim", params(t, k, n), stratum_dim(n, t)?, computed, start.elapsed()))
}

/// `ker W_{t,k}` is the direct sum of the total-trade spaces of strengths
/// `t..k−1`. Rows: one per stratum, the kernel dimension, and last the sum
/// of the strata dimensions.
pub fn check_kernel_decomposition(t: usize, k: usize, n: usize) -> Result<DecompositionReport> {
    require_half(t, k, n, true)?;
    let start = Instant::now();
    let w = build_matrix(&MatrixSpec::inclusion(n, t, k)?)?;
    let mut rows = Vec::new();
    let mut contained = true;
    let mut all = Vec::new();
    let mut sum = 0;
    for i in t..k {
        let vs = vectors(&all_total_trades(i, k, n)?, k)?;
        for v in &vs {
            contained &= matvec(&w, v)?.is_zero();
        }
        let dim = rank_of_columns(&vs)? as u64;
        sum += dim;
        rows.push(SummandRow { label: format!("T{i}"), predicted: stratum_dim(n, i)?, computed: dim });
        all.extend(vs);
    }
    let direct = rank_of_columns(&all)? as u64 == sum;
    let expected = binom(n, k) - binom(n, t);
    rows.push(SummandRow { label: "ker".into(), predicted: expected, computed: binom(n, k) - rank(&w) as u64 });
    rows.push(SummandRow { label: "sum".into(), predicted: expected, computed: sum });
    let flags = vec![("contained".into(), contained), ("direct".into(), direct)];
    Ok(DecompositionReport::new("kernel-decomposition", params(t, k, n), rows, flags, start.elapsed()))
}

/// Rank of `U_{t,k,l}` against the prediction for the coefficient vector `e_l`.
pub fn check_intersection_rank(t: usize, k: usize, n: usize, l: usize) -> Result<RankReport> {
    require_half(t, k, n, false)?;
    if l > t {
        return Err(Error::InvalidParameters(format!("need l <= t, got l={l} t={t}")));
    }
    let start = Instant::now();
    let coeffs: Vec<Rational> = (0..=t).map(|i| integer(i64::from(i == l))).collect();
    let predicted = to_u64(predicted_rank(t, k, n, &coeffs)?)?;
    let computed = rank(&build_matrix(&MatrixSpec::intersection(n, t, k, l)?)?) as u64;
    Ok(RankReport::new("intersection-rank", format!("{},l={l}", params(t, k, n)), predicted, computed, start.elapsed()))
}

fn combination_report(
    id: &str,
    t: usize,
    k: usize,
    n: usize,
    coeffs: &[Rational],
    predict: fn(usize, usize, usize, &[Rational]) -> Result<BigUint>,
) -> Result<RankReport> {
    require_half(t, k, n, true)?;
    let start = Instant::now();
    let predicted = to_u64(predict(t, k, n, coeffs)?)?;
    let computed = rank(&build_matrix(&MatrixSpec::combination(n, t, k, coeffs.to_vec())?)?) as u64;
    let p = format!("{},coeffs={}", params(t, k, n), coeff_list(coeffs));
    Ok(RankReport::new(id, p, predicted, computed, start.elapsed()))
}

/// Rank of `Σ_l c_l U_{t,k,l}` against [`predicted_rank`], one report per
/// coefficient vector.
pub fn check_combination_rank(t: usize, k: usize, n: usize, coeff_sets: &[Vec<Rational>]) -> Result<Vec<RankReport>> {
    coeff_sets
        .iter()
        .map(|c| combination_report("combination-rank", t, k, n, c, predicted_rank))
        .collect()
}

/// As [`check_combination_rank`], predicting with [`weighted_predicted_rank`].
pub fn check_weighted_combination_rank(
    t: usize,
    k: usize,
    n: usize,
    coeff_sets: &[Vec<Rational>],
) -> Result<Vec<RankReport>> {
    coeff_sets
        .iter()
        .map(|c| combination_report("combination-rank-weighted", t, k, n, c, weighted_predicted_rank))
        .collect()
}

/// `random` seeded vectors with entries `p/q`, `|p| ≤ 6`, `1 ≤ q ≤ 5`, never
/// all zero, followed by the whole grid `{−2,−1,1,2}^(t+1)`.
pub fn combination_coefficients(t: usize, random: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < random {
        let c: Vec<Rational> = (0..=t).map(|_| rational(rng.gen_range(-6..=6), rng.gen_range(1..=5))).collect();
        if c.iter().any(|x| *x != integer(0)) {
            out.push(c);
        }
    }
    let grid = [-2, -1, 1, 2];
    for mut code in 0..grid.len().pow(t as u32 + 1) {
        let mut c = Vec::with_capacity(t + 1);
        for _ in 0..=t {
            c.push(integer(grid[code % grid.len()]));
            code /= grid.len();
        }
        out.push(c);
    }
    out
}

/// The set cut out by the three ordering conditions alone, reported next
/// to the Specht dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisAudit {
    pub params: String,
    pub candidates: u64,
    pub rank: u64,
    pub dim: u64,
}

impl BasisAudit {
    pub fn discrepancy(&self) -> bool {
        self.candidates != self.dim || self.rank != self.dim
    }

    pub fn line(&self) -> String {
        format!(
            "AUDIT basis-literal params={} candidates={} rank={} dim={} discrepancy={}",
            self.params,
            self.candidates,
            self.rank,
            self.dim,
            self.discrepancy()
        )
    }
}

/// The standard-tableau basis has the right size, is independent and spans
/// all total trades; the literal candidate set is measured alongside.
pub fn check_standard_basis(t: usize, k: usize, n: usize) -> Result<(DecompositionReport, BasisAudit)> {
    require_trade_range(t, k, n)?;
    let start = Instant::now();
    let dim = stratum_dim(n, t)?;
    let basis: Vec<BooleanElement> = total_trade_basis(t, k, n)?.into_iter().map(|(_, e)| e).collect();
    let basis = vectors(&basis, k)?;
    let basis_rank = rank_of_columns(&basis)? as u64;
    let mut everything = basis.clone();
    everything.extend(vectors(&all_total_trades(t, k, n)?, k)?);
    let spanning = rank_of_columns(&everything)? as u64 == basis_rank;
    let rows = vec![
        SummandRow { label: "size".into(), predicted: dim, computed: basis.len() as u64 },
        SummandRow { label: "rank".into(), predicted: dim, computed: basis_rank },
    ];
    let report = DecompositionReport::new("basis", params(t, k, n), rows, vec![("spanning".into(), spanning)], start.elapsed());

    let literal: Vec<BooleanElement> = literal_basis_candidates(t, k, n)?.iter().map(total_trade).collect::<Result<_>>()?;
    let audit = BasisAudit {
        params: params(t, k, n),
        candidates: literal.len() as u64,
        rank: rank_of_columns(&vectors(&literal, k)?)? as u64,
        dim,
    };
    Ok((report, audit))
}

/// Seeded distinct points of `1..=n`.
fn shuffled_points(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(&mut rng);
    p
}

/// The permutations of one seeded minimal trade span all `t`-trades,
/// of dimension `C(n,k) − C(n,t)`.
pub fn check_graver_jurkat(t: usize, k: usize, n: usize, seed: u64) -> Result<RankReport> {
    require_half(t, k, n, true)?;
    let start = Instant::now();
    let p = shuffled_points(n, seed);
    let spec = TradeSpec::minimal(n, t, k, p[..=t].to_vec(), p[t + 1..2 * t + 2].to_vec(), p[2 * t + 2..t + k + 1].to_vec())?;
    let span = orbit_span(&minimal_trade(&spec)?)?;
    let predicted = binom(n, k) - binom(n, t);
    Ok(RankReport::new("graver-jurkat", params(t, k, n), predicted, span.rank() as u64, start.elapsed()))
}

/// `λ_j(t,k,n;t) = C(k−j, t−j)` for all `0 ≤ j ≤ t ≤ k ≤ n ≤ bound`.
/// `predicted` counts the tuples and `computed` the ones that agree.
pub fn check_lambda_closed_form(bound: usize) -> Result<RankReport> {
    let start = Instant::now();
    let (mut total, mut agree) = (0, 0);
    for n in 0..=bound {
        for k in 0..=n {
            for t in 0..=k {
                for j in 0..=t {
                    total += 1;
                    let closed = BigInt::from(binomial((k - j) as i64, (t - j) as i64));
                    if lambda_coeff(t, k, n, t, j)? == closed {
                        agree += 1;
                    }
                }
            }
        }
    }
    Ok(RankReport::new("lambda-closed-form", format!("n<={bound}"), total, agree, start.elapsed()))
}

fn for_each_permutation(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if i == p.len() {
        return f(p);
    }
    for j in i..p.len() {
        p.swap(i, j);
        for_each_permutation(p, i + 1, f)?;
        p.swap(i, j);
    }
    Ok(())
}

fn filling(shape: &TwoRowShape, p: &[usize]) -> Result<Tableau> {
    Tableau::new(p[..shape.lambda1()].to_vec(), p[shape.lambda1()..].to_vec())
}

fn shape_params(shape: &TwoRowShape) -> String {
    format!("shape={shape},n={}", shape.n())
}

/// `h(g_{U,c}) = 0` in `M_k` for every column `c` and every admissible `k`.
/// Fillings are exhaustive up to [`GARNIR_EXHAUSTIVE_MAX`] points and
/// [`GARNIR_SAMPLES`] seeded ones per column beyond. `predicted` counts the
/// `(U, c, k)` cases and `computed` those that vanish.
pub fn check_garnir_vanishing(shape: &TwoRowShape, seed: u64) -> Result<RankReport> {
    let n = shape.n();
    if shape.lambda2() == 0 || shape.lambda1() < 2 {
        return Err(Error::InvalidParameters(format!("shape {shape} has no Garnir elements to test")));
    }
    let t = shape.lambda2() - 1;
    let ks: Vec<usize> = (t + 1..=n - t).collect();
    let start = Instant::now();
    let (mut cases, mut vanished) = (0u64, 0u64);
    let mut test = |u: &Tableau, c: usize| -> Result<()> {
        let g = garnir(u, c)?;
        for &k in &ks {
            cases += 1;
            if h_map_expr(&g, k, n)?.is_zero() {
                vanished += 1;
            }
        }
        Ok(())
    };
    if n <= GARNIR_EXHAUSTIVE_MAX {
        let mut p: Vec<usize> = (1..=n).collect();
        for_each_permutation(&mut p, 0, &mut |p| {
            let u = filling(shape, p)?;
            (1..shape.lambda1()).try_for_each(|c| test(&u, c))
        })?;
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in 1..shape.lambda1() {
            for _ in 0..GARNIR_SAMPLES {
                let mut p: Vec<usize> = (1..=n).collect();
                p.shuffle(&mut rng);
                test(&filling(shape, &p)?, c)?;
            }
        }
    }
    Ok(RankReport::new("garnir", shape_params(shape), cases, vanished, start.elapsed()))
}

/// Straightens [`STRAIGHTEN_SAMPLES`] seeded random tabloids. A sample
/// passes when the result is supported on standard tabloids, has integer
/// coefficients, is fixed by a second straightening, and has the same image
/// as the input under `h` for every admissible `k`.
pub fn check_straightening(shape: &TwoRowShape, seed: u64) -> Result<RankReport> {
    let n = shape.n();
    if shape.lambda2() == 0 {
        return Err(Error::InvalidParameters(format!("shape {shape} has no map to trades")));
    }
    let t = shape.lambda2() - 1;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = 0u64;
    for _ in 0..STRAIGHTEN_SAMPLES {
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(&mut rng);
        let e = TabloidExpr::from_tabloid(&canonicalize(&filling(shape, &p)?));
        let s = straighten(&e)?;
        let mut ok = s.is_standard() && s.has_integer_coefficients() && straighten(&s)? == s;
        for k in t + 1..=n - t {
            ok = ok && h_map_expr(&e, k, n)? == h_map_expr(&s, k, n)?;
        }
        good += u64::from(ok);
    }
    Ok(RankReport::new("straighten", shape_params(shape), STRAIGHTEN_SAMPLES as u64, good, start.elapsed()))
}
