//! Writing a matrix in both text formats and reading it back.

use tradekit::boolean::{build_matrix, MatrixSpec};
use tradekit::linalg::{parse_matrix, rational, MatrixFormat};

fn main() -> tradekit::Result<()> {
    let spec = MatrixSpec::combination(5, 1, 2, vec![rational(1, 2), rational(-3, 1)])?;
    let m = build_matrix(&spec)?;
    for format in [MatrixFormat::Dense, MatrixFormat::Sparse] {
        let text = m.to_text(format);
        println!("{format:?}:\n{text}");
        assert_eq!(parse_matrix(&text)?, m);
    }
    Ok(())
}
