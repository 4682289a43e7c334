//! Plain-text matrix interchange.
//!
//! Dense: a `rows cols` header, then `rows` lines of `cols` space-separated
//! rationals. Sparse: a `rows cols nnz` header, then `nnz` lines `i j value`
//! with 1-based indices, in row-major order. Rationals print as `p/q`, or just
//! `p` when `q = 1`.

use std::fmt::Write;
use std::str::FromStr;

use num_traits::Zero;

use super::{Rational, RationalMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Dense,
    Sparse,
}

impl FromStr for MatrixFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(MatrixFormat::Dense),
            "sparse" => Ok(MatrixFormat::Sparse),
            other => Err(Error::Parse(format!("unknown matrix format `{other}`"))),
        }
    }
}

pub(super) fn render(m: &RationalMatrix, format: MatrixFormat) -> String {
    let mut out = String::new();
    match format {
        MatrixFormat::Dense => {
            writeln!(out, "{} {}", m.rows(), m.cols()).unwrap();
            for i in 0..m.rows() {
                let line: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
        MatrixFormat::Sparse => {
            writeln!(out, "{} {} {}", m.rows(), m.cols(), m.nnz()).unwrap();
            for i in 0..m.rows() {
                for (j, x) in m.row(i).iter().enumerate() {
                    if !x.is_zero() {
                        writeln!(out, "{} {} {}", i + 1, j + 1, x).unwrap();
                    }
                }
            }
        }
    }
    out
}

fn parse_rational(token: &str) -> Result<Rational> {
    if let Some((_, den)) = token.split_once('/') {
        if den.trim_start_matches(['+', '0']).is_empty() {
            return Err(Error::Parse(format!("zero denominator in `{token}`")));
        }
    }
    Rational::from_str(token).map_err(|_| Error::Parse(format!("bad rational `{token}`")))
}

fn parse_usize(token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::Parse(format!("bad count `{token}`")))
}

/// Parses either format, telling them apart by the number of header fields.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .split_whitespace()
        .collect();
    match header.as_slice() {
        [r, c] => {
            let (rows, cols) = (parse_usize(r)?, parse_usize(c)?);
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
                let row: Vec<Rational> = line.split_whitespace().map(parse_rational).collect::<Result<_>>()?;
                if row.len() != cols {
                    return Err(Error::Parse(format!("row {} has {} entries, expected {cols}", i + 1, row.len())));
                }
                entries.extend(row);
            }
            if lines.next().is_some() {
                return Err(Error::Parse("trailing data after dense matrix".into()));
            }
            RationalMatrix::from_entries(rows, cols, entries)
        }
        [r, c, z] => {
            let (rows, cols, nnz) = (parse_usize(r)?, parse_usize(c)?, parse_usize(z)?);
            let mut m = RationalMatrix::zeros(rows, cols);
            for k in 0..nnz {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing entry {}", k + 1)))?;
                let fields: Vec<&str> = line.split_whitespace().collect();
                let [i, j, value] = fields.as_slice() else {
                    return Err(Error::Parse(format!("bad sparse entry `{line}`")));
                };
                let (i, j) = (parse_usize(i)?, parse_usize(j)?);
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(Error::Parse(format!("index ({i}, {j}) outside {rows}x{cols}")));
                }
                m.set(i - 1, j - 1, parse_rational(value)?);
            }
            if lines.next().is_some() {
                return Err(Error::Parse("trailing data after sparse matrix".into()));
            }
            Ok(m)
        }
        _ => Err(Error::Parse(format!("bad header `{}`", header.join(" ")))),
    }
}
