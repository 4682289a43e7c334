//! Checks of rank, dimension and decomposition statements against
//! independent row reduction.
//!
//! Every `computed` value below comes from exact elimination over matrices
//! or vectors built directly from subsets; the closed forms being tested only
//! ever supply the `predicted` side.

mod checks;
mod orbit;
mod suite;

use std::fmt;
use std::time::Duration;

pub use checks::{
    check_standard_basis, check_combination_rank, check_garnir_vanishing, check_graver_jurkat,
    check_inclusion_rank, check_intersection_rank, check_kernel_decomposition, check_lambda_closed_form,
    check_straightening, check_total_trade_dim, check_weighted_combination_rank, combination_coefficients,
    BasisAudit, GARNIR_EXHAUSTIVE_MAX, GARNIR_SAMPLES, STRAIGHTEN_SAMPLES,
};
pub use orbit::{check_orbit_decomposition, orbit_decomposition, orbit_span, OrbitDecomposition};
pub use suite::{derive_seed, run_suite, Suite, SuiteOutcome};

/// One predicted-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub id: String,
    pub params: String,
    pub predicted: u64,
    pub computed: u64,
    pub pass: bool,
    pub elapsed: Duration,
}

impl RankReport {
    pub fn new(id: &str, params: String, predicted: u64, computed: u64, elapsed: Duration) -> Self {
        RankReport { id: id.to_string(), params, predicted, computed, pass: predicted == computed, elapsed }
    }

    /// The `CHECK` record; `ms` is printed as 0 when `timing` is off.
    pub fn line(&self, timing: bool) -> String {
        let ms = if timing { self.elapsed.as_millis() } else { 0 };
        format!(
            "CHECK {} params={} predicted={} computed={} pass={} ms={}",
            self.id, self.params, self.predicted, self.computed, self.pass, ms
        )
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line(true))
    }
}

/// One summand of a decomposition: a label, its expected dimension and the
/// dimension found by row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandRow {
    pub label: String,
    pub predicted: u64,
    pub computed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub id: String,
    pub params: String,
    pub rows: Vec<SummandRow>,
    /// Named side conditions such as containment in a kernel or directness.
    pub flags: Vec<(String, bool)>,
    pub pass: bool,
    pub elapsed: Duration,
}

impl DecompositionReport {
    pub fn new(id: &str, params: String, rows: Vec<SummandRow>, flags: Vec<(String, bool)>, elapsed: Duration) -> Self {
        let pass = rows.iter().all(|r| r.predicted == r.computed) && flags.iter().all(|f| f.1);
        DecompositionReport { id: id.to_string(), params, rows, flags, pass, elapsed }
    }

    /// One record carrying the last row's dimensions; `pass` still requires
    /// every row and flag to hold.
    pub fn summary(&self) -> RankReport {
        let last = self.rows.last();
        RankReport {
            id: self.id.clone(),
            params: self.params.clone(),
            predicted: last.map_or(0, |r| r.predicted),
            computed: last.map_or(0, |r| r.computed),
            pass: self.pass,
            elapsed: self.elapsed,
        }
    }

    /// `ROW` lines for each summand and `FLAG` lines for each side condition.
    pub fn detail_lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("  ROW {} predicted={} computed={}", r.label, r.predicted, r.computed))
            .collect();
        out.extend(self.flags.iter().map(|(name, ok)| format!("  FLAG {name}={ok}")));
        out
    }
}

fn params(t: usize, k: usize, n: usize) -> String {
    format!("t={t},k={k},n={n}")
}
