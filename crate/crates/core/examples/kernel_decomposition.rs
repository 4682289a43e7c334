//! The kernel of W_{t,k} as a direct sum of total-trade strata.

use tradekit::verify::check_kernel_decomposition;

fn main() -> tradekit::Result<()> {
    for (t, k, n) in [(0, 2, 6), (1, 3, 7), (1, 4, 8)] {
        let d = check_kernel_decomposition(t, k, n)?;
        println!("t={t} k={k} n={n}: {}", if d.pass { "ok" } else { "MISMATCH" });
        for line in d.detail_lines() {
            println!("{line}");
        }
    }
    Ok(())
}
