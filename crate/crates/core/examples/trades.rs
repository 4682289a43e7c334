//! Minimal and total trades, their strength, and the dimension of the span
//! of all total trades.

use tradekit::linalg::rank_of_columns;
use tradekit::trades::{all_total_trades, minimal_trade, total_trade, trade_strength, TradeSpec};

fn main() -> tradekit::Result<()> {
    let minimal = TradeSpec::minimal(7, 1, 3, vec![1, 2], vec![3, 4], vec![5])?;
    let e = minimal_trade(&minimal)?;
    println!("{minimal}\n  {e}\n  strength {:?}", trade_strength(&e)?);

    let total = TradeSpec::total(7, 1, 3, vec![1, 2], vec![3, 4])?;
    let e = total_trade(&total)?;
    println!("{total}\n  {} blocks, strength {:?}", e.len(), trade_strength(&e)?);

    let (n, t, k) = (7, 1, 3);
    let vectors = all_total_trades(t, k, n)?.iter().map(|e| e.to_vector(k)).collect::<Result<Vec<_>, _>>()?;
    println!("{} total trades for t={t} k={k} n={n} span a space of dimension {}", vectors.len(), rank_of_columns(&vectors)?);
    Ok(())
}
