use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::checks::*;
use super::orbit::check_orbit_decomposition;
use super::RankReport;
use crate::error::{Error, Result};
use crate::specht::TwoRowShape;

/// Seeded random coefficient vectors per parameter tuple in the combination suite.
const RANDOM_COMBINATIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    InclusionRank,
    TotalTradeDim,
    KernelDecomposition,
    IntersectionRank,
    CombinationRank,
    Basis,
    GraverJurkat,
    OrbitDecomposition,
    LambdaClosedForm,
    Garnir,
    Straighten,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::InclusionRank,
        Suite::TotalTradeDim,
        Suite::KernelDecomposition,
        Suite::IntersectionRank,
        Suite::CombinationRank,
        Suite::Basis,
        Suite::GraverJurkat,
        Suite::OrbitDecomposition,
        Suite::LambdaClosedForm,
        Suite::Garnir,
        Suite::Straighten,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::InclusionRank => "inclusion-rank",
            Suite::TotalTradeDim => "total-trade-dim",
            Suite::KernelDecomposition => "kernel-decomposition",
            Suite::IntersectionRank => "intersection-rank",
            Suite::CombinationRank => "combination-rank",
            Suite::Basis => "basis",
            Suite::GraverJurkat => "graver-jurkat",
            Suite::OrbitDecomposition => "orbit-decomposition",
            Suite::LambdaClosedForm => "lambda-closed-form",
            Suite::Garnir => "garnir",
            Suite::Straighten => "straighten",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// A per-check seed from the run seed, a tag and the check's parameters
/// (FNV-1a over their little-endian bytes).
pub fn derive_seed(base: u64, tag: &str, params: &[usize]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = base
        .to_le_bytes()
        .into_iter()
        .chain(tag.bytes())
        .chain(params.iter().flat_map(|p| (*p as u64).to_le_bytes()));
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[derive(Clone, Debug)]
enum Entry {
    Check(RankReport),
    Info(String),
}

/// The records of one run, in parameter order.
#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    entries: Vec<Entry>,
}

impl SuiteOutcome {
    pub fn checks(&self) -> impl Iterator<Item = &RankReport> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Check(r) => Some(r),
            Entry::Info(_) => None,
        })
    }

    pub fn passed(&self) -> usize {
        self.checks().filter(|r| r.pass).count()
    }

    pub fn total(&self) -> usize {
        self.checks().count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }

    /// `CHECK` records interleaved with uncounted `AUDIT`/`NOTE`/detail
    /// lines, then the `TOTAL` line.
    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e {
                Entry::Check(r) => out.push_str(&r.line(timing)),
                Entry::Info(s) => out.push_str(s),
            }
            out.push('\n');
        }
        out.push_str(&format!("TOTAL pass={}/{}\n", self.passed(), self.total()));
        out
    }
}

type Job = Box<dyn Fn() -> Result<Vec<Entry>> + Send + Sync>;

fn half_range(n_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 1..=n / 2 {
            for t in 0..k {
                out.push((t, k, n));
            }
        }
    }
    out
}

fn trade_range(n_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            for t in 0..k.min(n + 1 - k) {
                out.push((t, k, n));
            }
        }
    }
    out
}

fn shapes(n_max: usize) -> Vec<TwoRowShape> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for l2 in 1..=n / 2 {
            out.push(TwoRowShape::new(n - l2, l2).expect("l2 <= n/2"));
        }
    }
    out
}

fn check(r: Result<RankReport>) -> Result<Vec<Entry>> {
    Ok(vec![Entry::Check(r?)])
}

fn jobs(suite: Suite, n_max: usize, seed: u64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    match suite {
        Suite::InclusionRank => {
            for (t, k, n) in half_range(n_max) {
                jobs.push(Box::new(move || check(check_inclusion_rank(t, k, n))));
            }
        }
        Suite::TotalTradeDim => {
            for (t, k, n) in trade_range(n_max) {
                jobs.push(Box::new(move || check(check_total_trade_dim(t, k, n))));
            }
        }
        Suite::KernelDecomposition => {
            for (t, k, n) in half_range(n_max) {
                jobs.push(Box::new(move || {
                    let d = check_kernel_decomposition(t, k, n)?;
                    let mut out = vec![Entry::Check(d.summary())];
                    if !d.pass {
                        out.extend(d.detail_lines().into_iter().map(Entry::Info));
                    }
                    Ok(out)
                }));
            }
        }
        Suite::IntersectionRank => {
            for (t, k, n) in half_range(n_max) {
                for l in 0..=t {
                    jobs.push(Box::new(move || check(check_intersection_rank(t, k, n, l))));
                }
            }
        }
        Suite::CombinationRank => {
            for (t, k, n) in half_range(n_max) {
                jobs.push(Box::new(move || {
                    let sets = combination_coefficients(t, RANDOM_COMBINATIONS, derive_seed(seed, "combination-rank", &[t, k, n]));
                    let literal = check_combination_rank(t, k, n, &sets)?;
                    let weighted = check_weighted_combination_rank(t, k, n, &sets)?;
                    let mut out = Vec::new();
                    for (l, w) in literal.into_iter().zip(weighted) {
                        let failed = !l.pass;
                        out.push(Entry::Check(l));
                        if failed {
                            out.push(Entry::Info(format!(
                                "NOTE {} params={} predicted={} computed={} pass={}",
                                w.id, w.params, w.predicted, w.computed, w.pass
                            )));
                        }
                    }
                    Ok(out)
                }));
            }
        }
        Suite::Basis => {
            for (t, k, n) in trade_range(n_max) {
                if n < 2 * t + 2 {
                    continue;
                }
                jobs.push(Box::new(move || {
                    let (d, audit) = check_standard_basis(t, k, n)?;
                    let mut out = vec![Entry::Check(d.summary())];
                    if !d.pass {
                        out.extend(d.detail_lines().into_iter().map(Entry::Info));
                    }
                    out.push(Entry::Info(audit.line()));
                    Ok(out)
                }));
            }
        }
        Suite::GraverJurkat => {
            for (t, k, n) in half_range(n_max) {
                let s = derive_seed(seed, "graver-jurkat", &[t, k, n]);
                jobs.push(Box::new(move || check(check_graver_jurkat(t, k, n, s))));
            }
        }
        Suite::OrbitDecomposition => {
            for (t, k, n) in half_range(n_max) {
                let s = derive_seed(seed, "orbit-decomposition", &[t, k, n]);
                jobs.push(Box::new(move || {
                    Ok(check_orbit_decomposition(t, k, n, s)?.into_iter().map(Entry::Check).collect())
                }));
            }
        }
        Suite::LambdaClosedForm => {
            jobs.push(Box::new(move || check(check_lambda_closed_form(n_max))));
        }
        Suite::Garnir => {
            for shape in shapes(n_max).into_iter().filter(|s| s.lambda1() >= 2) {
                let s = derive_seed(seed, "garnir", &[shape.lambda1(), shape.lambda2()]);
                jobs.push(Box::new(move || check(check_garnir_vanishing(&shape, s))));
            }
        }
        Suite::Straighten => {
            for shape in shapes(n_max) {
                let s = derive_seed(seed, "straighten", &[shape.lambda1(), shape.lambda2()]);
                jobs.push(Box::new(move || check(check_straightening(&shape, s))));
            }
        }
        Suite::All => {
            for each in Suite::EACH {
                jobs.extend(self::jobs(each, n_max, seed));
            }
        }
    }
    jobs
}

/// Runs every check of `suite` over all admissible parameters with
/// `n ≤ n_max` on up to `threads` workers (`None` uses every core). Output
/// order does not depend on scheduling.
pub fn run_suite(suite: Suite, n_max: usize, seed: u64, threads: Option<usize>) -> Result<SuiteOutcome> {
    if n_max > crate::combinatorics::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n_max));
    }
    let jobs = jobs(suite, n_max, seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let results: Vec<Result<Vec<Entry>>> = pool.install(|| jobs.par_iter().map(|job| job()).collect());
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    Ok(SuiteOutcome { entries })
}
