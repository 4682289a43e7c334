//! The `tradekit` command line.
//!
//! Exit status is 0 on success, 1 when a comparison or verification fails
//! and 2 for usage errors. Diagnostics go to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::boolean::{
    build_matrix, j_set, lambda_coeff, predicted_rank, weighted_j_set, weighted_predicted_rank, MatrixKind,
    MatrixSpec,
};
use crate::error::{Error, Result};
use crate::linalg::{rank, MatrixFormat, Rational};
use crate::trades::{all_total_trades, total_trade_basis, total_trade_specs, trade_strength, TradeSpec};
use crate::verify::{run_suite, Suite};

/// Environment variable capping the number of verification workers.
pub const THREADS_ENV: &str = "TRADEKIT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "tradekit", version, about = "Trades, inclusion matrices and two-row Specht modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Inclusion,
    Intersection,
    Combination,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dense,
    Sparse,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print W_{t,k}, U_{t,k,l} or a combination of intersection matrices
    Matrix {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        /// Intersection size, for `--kind intersection`
        #[arg(long)]
        l: Option<usize>,
        /// Comma-separated c_0..c_t, for `--kind combination`
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long, value_enum, default_value = "dense")]
        format: Format,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the predicted and exact rank of sum_l c_l U_{t,k,l}
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated c_0..c_t
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Print the table lambda_j(t,k,n;l) for j, l in 0..=t
    Lambda {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
    /// Build one trade from its points, or list every total trade
    Trades {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        xs: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        ys: Option<Vec<usize>>,
        /// Fixed tail; makes the trade minimal instead of total
        #[arg(long, value_delimiter = ',')]
        tail: Option<Vec<usize>>,
    },
    /// List the standard-tableau basis of the total-trade space
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite over all admissible parameters up to n-max
    Verify {
        /// One of: inclusion-rank, total-trade-dim, kernel-decomposition,
        /// intersection-rank, combination-rank, basis, graver-jurkat,
        /// orbit-decomposition, lambda-closed-form, garnir, straighten, all
        suite: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print ms=0 in every record so runs can be compared byte for byte
        #[arg(long)]
        no_timing: bool,
    },
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out`. Returns the process exit status.
pub fn run<I, T, W>(args: I, out: &mut W) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Parses a comma-separated list of rationals such as `1,-1/2,0`.
pub fn parse_coeffs(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            if s.split_once('/').is_some_and(|(_, d)| d.trim_start_matches(['+', '0']).is_empty()) {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::from_str(s).map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
        })
        .collect()
}

fn set_text(set: &std::collections::BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(|j| j.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn execute<W: Write>(command: Command, out: &mut W) -> std::result::Result<u8, Failure> {
    match command {
        Command::Matrix { kind, n, t, k, l, coeffs, format, out: path } => {
            let kind = match kind {
                Kind::Inclusion => MatrixKind::Inclusion,
                Kind::Intersection => {
                    MatrixKind::Intersection(l.ok_or_else(|| Failure::Usage("--kind intersection needs --l".into()))?)
                }
                Kind::Combination => {
                    let text = coeffs.ok_or_else(|| Failure::Usage("--kind combination needs --coeffs".into()))?;
                    MatrixKind::Combination(parse_coeffs(&text)?)
                }
            };
            let spec = MatrixSpec::new(n, t, k, kind)?;
            let format = match format {
                Format::Dense => MatrixFormat::Dense,
                Format::Sparse => MatrixFormat::Sparse,
            };
            let text = build_matrix(&spec)?.to_text(format);
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Rank { n, t, k, coeffs } => {
            let c = parse_coeffs(&coeffs)?;
            let js = j_set(t, k, n, &c)?;
            let predicted = predicted_rank(t, k, n, &c)?;
            let weighted = weighted_j_set(t, k, n, &c)?;
            let weighted_rank = weighted_predicted_rank(t, k, n, &c)?;
            let computed = rank(&build_matrix(&MatrixSpec::combination(n, t, k, c)?)?);
            writeln!(out, "predicted {predicted} computed {computed}")?;
            writeln!(out, "J {}", set_text(&js))?;
            writeln!(out, "weighted J {} predicted {weighted_rank}", set_text(&weighted))?;
            Ok(if predicted == computed.into() { 0 } else { 1 })
        }
        Command::Lambda { n, t, k } => {
            if !(t <= k && k <= n) {
                return Err(Failure::Usage(format!("need t <= k <= n, got t={t} k={k} n={n}")));
            }
            let mut text = String::from("j\\l");
            for l in 0..=t {
                text.push_str(&format!(" {l}"));
            }
            text.push('\n');
            for j in 0..=t {
                text.push_str(&j.to_string());
                for l in 0..=t {
                    text.push_str(&format!(" {}", lambda_coeff(t, k, n, l, j)?));
                }
                text.push('\n');
            }
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Trades { n, t, k, xs, ys, tail } => {
            match (xs, ys) {
                (Some(xs), Some(ys)) => {
                    let spec = match tail {
                        Some(tail) => TradeSpec::minimal(n, t, k, xs, ys, tail)?,
                        None => TradeSpec::total(n, t, k, xs, ys)?,
                    };
                    let e = spec.element()?;
                    writeln!(out, "{spec}")?;
                    writeln!(out, "{e}")?;
                    if !e.is_zero() {
                        let strength = trade_strength(&e)?.map_or("none".to_string(), |s| s.to_string());
                        writeln!(out, "strength {strength}")?;
                    }
                }
                (None, None) if tail.is_none() => {
                    let specs = total_trade_specs(t, k, n)?;
                    let trades = all_total_trades(t, k, n)?;
                    for (spec, e) in specs.iter().zip(&trades) {
                        writeln!(out, "{spec}: {e}")?;
                    }
                }
                _ => return Err(Failure::Usage("give both --xs and --ys, or neither (and no --tail)".into())),
            }
            Ok(0)
        }
        Command::Basis { n, t, k } => {
            for (spec, e) in total_trade_basis(t, k, n)? {
                writeln!(out, "{spec}: {e}")?;
            }
            Ok(0)
        }
        Command::Verify { suite, n_max, seed, no_timing } => {
            let suite: Suite = suite.parse()?;
            let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok());
            let outcome = run_suite(suite, n_max, seed, threads)?;
            out.write_all(outcome.render(!no_timing).as_bytes())?;
            Ok(if outcome.all_passed() { 0 } else { 1 })
        }
    }
}
