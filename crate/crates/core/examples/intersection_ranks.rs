//! Ranks of intersection matrices and their combinations, with the
//! predicted index sets.

use tradekit::boolean::{build_matrix, j_set, predicted_rank, weighted_j_set, weighted_predicted_rank, MatrixSpec};
use tradekit::linalg::{integer, rank, Rational};

fn show(n: usize, t: usize, k: usize, c: Vec<Rational>) -> tradekit::Result<()> {
    let label: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    let computed = rank(&build_matrix(&MatrixSpec::combination(n, t, k, c.clone())?)?);
    println!(
        "n={n} t={t} k={k} c=({}): rank {computed}, J={:?} predicts {}, weighted J={:?} predicts {}",
        label.join(","),
        j_set(t, k, n, &c)?,
        predicted_rank(t, k, n, &c)?,
        weighted_j_set(t, k, n, &c)?,
        weighted_predicted_rank(t, k, n, &c)?,
    );
    Ok(())
}

fn main() -> tradekit::Result<()> {
    for l in 0..=2 {
        let mut c = vec![integer(0); 3];
        c[l] = integer(1);
        show(9, 2, 3, c)?;
    }
    // all-ones matrix: the coefficients cancel in every j > 0
    show(6, 1, 2, vec![integer(1), integer(1)])?;
    show(6, 1, 2, vec![integer(2), integer(-1)])?;
    Ok(())
}
