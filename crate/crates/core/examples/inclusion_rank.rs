//! Rank of the inclusion matrix W_{t,k} against C(n,t).

use tradekit::boolean::{build_matrix, MatrixSpec};
use tradekit::combinatorics::binomial;
use tradekit::linalg::rank;

fn main() -> tradekit::Result<()> {
    let n = 8;
    for k in 1..=n / 2 {
        for t in 0..k {
            let w = build_matrix(&MatrixSpec::inclusion(n, t, k)?)?;
            println!("W_{{{t},{k}}} on {n} points: {}x{}, rank {} (C(n,t) = {})", w.rows(), w.cols(), rank(&w), binomial(n as i64, t as i64));
        }
    }
    Ok(())
}
