//! Tables of lambda_j(t,k,n;l), whose nonvanishing decides which
//! summands survive in a combination of intersection matrices.

use tradekit::boolean::lambda_coeff;

fn main() -> tradekit::Result<()> {
    for (t, k, n) in [(2, 3, 8), (2, 4, 10), (3, 5, 12)] {
        println!("t={t} k={k} n={n}");
        for j in 0..=t {
            let row = (0..=t).map(|l| lambda_coeff(t, k, n, l, j).map(|v| format!("{v:>6}"))).collect::<Result<Vec<_>, _>>()?;
            println!("  j={j}: {}", row.join(""));
        }
    }
    Ok(())
}
