//! Straightening column tabloids into the standard basis and checking
//! that the trade map does not see the difference.

use tradekit::specht::{canonicalize, garnir, h_map_expr, standard_tableaux, straighten, Tableau, TabloidExpr, TwoRowShape};

fn main() -> tradekit::Result<()> {
    let u: Tableau = "[3 1 5 / 4 2]".parse()?;
    let e = TabloidExpr::from_tabloid(&canonicalize(&u));
    let s = straighten(&e)?;
    println!("{e}\n  = {s}");
    for k in 2..=3 {
        println!("  h agrees for k={k}: {}", h_map_expr(&e, k, 5)? == h_map_expr(&s, k, 5)?);
    }

    let g = garnir(&u, 1)?;
    println!("Garnir element at column 1: {g}\n  straightens to {}", straighten(&g)?);

    let shape = TwoRowShape::new(3, 2)?;
    let basis: Vec<String> = standard_tableaux(&shape).iter().map(|t| t.to_string()).collect();
    println!("standard tableaux of {shape}: {}", basis.join(", "));
    Ok(())
}
