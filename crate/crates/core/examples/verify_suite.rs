//! Running a verification suite from code. Pass a suite name and `n_max`
//! on the command line, e.g. `cargo run --example verify_suite garnir 6`.

use tradekit::verify::{run_suite, Suite};

fn main() -> tradekit::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite: Suite = args.next().as_deref().unwrap_or("inclusion-rank").parse()?;
    let n_max = args.next().map_or(Ok(6), |s| s.parse()).map_err(|e| tradekit::Error::Parse(format!("n_max: {e}")))?;
    let outcome = run_suite(suite, n_max, 0, None)?;
    print!("{}", outcome.render(false));
    Ok(())
}
