//! Which total-trade strata the symmetric-group orbit of a trade reaches.

use tradekit::trades::{minimal_trade, total_trade, TradeSpec};
use tradekit::verify::orbit_decomposition;

fn main() -> tradekit::Result<()> {
    let (n, t, k) = (7, 0, 3);
    let total = total_trade(&TradeSpec::total(n, t, k, vec![1], vec![2])?)?;
    let minimal = minimal_trade(&TradeSpec::minimal(n, t, k, vec![1], vec![2], vec![3, 4])?)?;
    let mixed = total.plus(&total_trade(&TradeSpec::total(n, t + 1, k, vec![3, 4], vec![5, 6])?)?)?;
    for (name, e) in [("total", total), ("minimal", minimal), ("mixed", mixed)] {
        let d = orbit_decomposition(&e, t)?;
        println!("{name:>8}: strata {:?}, span dimension {} (expected {})", d.indices, d.span_dim, d.predicted_dim);
    }
    Ok(())
}
