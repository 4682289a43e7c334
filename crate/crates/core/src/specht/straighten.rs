//! Rewriting column-tabloid expressions into the standard basis.
//!
//! A nonstandard canonical tabloid is rewritten at its leftmost violation
//! `c`, the first column with `row1[c] > row1[c+1]` or, when both columns
//! have height 2, `row2[c] > row2[c+1]`:
//!
//! * a first-row descent with `c ≤ λ2` uses `q ≡ q_1 + q_2`,
//! * a first-row descent with `c > λ2` uses `q ≡ q_3`,
//! * a descent in the second row only exchanges the two columns whole,
//!   `q ≡ q'`. This relation lies in the span of the Garnir elements.
//!
//! Each rewrite moves the largest displaced entry one column to the right,
//! so the vector of columns read from the largest entry down strictly
//! increases in lexicographic order. Terms are processed in that order,
//! which means every tabloid is rewritten at most once.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Tableau, TabloidExpr};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Rewrite budget used by [`straighten`].
pub const DEFAULT_FUEL: usize = 1_000_000;

/// Rewrites `e` modulo the Garnir relations until only standard tabloids
/// remain. Integer input gives integer output.
pub fn straighten(e: &TabloidExpr) -> Result<TabloidExpr> {
    straighten_with_fuel(e, DEFAULT_FUEL)
}

/// [`straighten`] with an explicit bound on the number of rewrites.
pub fn straighten_with_fuel(e: &TabloidExpr, fuel: usize) -> Result<TabloidExpr> {
    let mut queue: BTreeMap<(Vec<usize>, Tableau), Rational> = BTreeMap::new();
    for (u, c) in e.terms() {
        push(&mut queue, u.clone(), c.clone());
    }
    let mut out = TabloidExpr::zero();
    let mut rewrites = 0;
    while let Some(((_, u), coeff)) = queue.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let Some(c) = leftmost_violation(&u) else {
            out.add(&u, coeff);
            continue;
        };
        if rewrites == fuel {
            return Err(Error::FuelExhausted(fuel));
        }
        rewrites += 1;
        let mut image = TabloidExpr::zero();
        if u.row1[c - 1] > u.row1[c] {
            if c <= u.row2.len() {
                image.add_tableau(&u.swapped((1, c + 1), (1, c)), coeff.clone());
                image.add_tableau(&u.swapped((1, c + 1), (2, c)), coeff);
            } else {
                image.add_tableau(&u.swapped((1, c), (1, c + 1)), coeff);
            }
        } else {
            image.add_tableau(&u.swapped((1, c), (1, c + 1)).swapped((2, c), (2, c + 1)), coeff);
        }
        for (v, d) in image.terms {
            push(&mut queue, v, d);
        }
    }
    Ok(out)
}

fn push(queue: &mut BTreeMap<(Vec<usize>, Tableau), Rational>, u: Tableau, c: Rational) {
    *queue.entry((column_profile(&u), u)).or_insert_with(Rational::zero) += c;
}

/// Columns of `n, n−1, …, 1`, in that order.
fn column_profile(u: &Tableau) -> Vec<usize> {
    let n = u.n();
    let mut col = vec![0; n + 1];
    for (i, &x) in u.row1.iter().enumerate() {
        col[x] = i + 1;
    }
    for (i, &x) in u.row2.iter().enumerate() {
        col[x] = i + 1;
    }
    col.into_iter().skip(1).rev().collect()
}

fn leftmost_violation(u: &Tableau) -> Option<usize> {
    (1..u.row1.len()).find(|&c| u.row1[c - 1] > u.row1[c] || (c < u.row2.len() && u.row2[c - 1] > u.row2[c]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{in_span, integer, RationalVector};
    use crate::specht::{canonicalize, garnir, h_map_expr, standard_tableaux, TwoRowShape};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn expr(terms: &[(&str, i64)]) -> TabloidExpr {
        let mut e = TabloidExpr::zero();
        for (u, c) in terms {
            e.add_tableau(&tab(u), integer(*c));
        }
        e
    }

    #[test]
    fn standard_input_is_fixed() {
        let e = expr(&[("[1 2 / 3]", 2), ("[1 3 / 2]", -5)]);
        assert_eq!(straighten(&e).unwrap(), e);
        assert_eq!(straighten(&TabloidExpr::zero()).unwrap(), TabloidExpr::zero());
    }

    #[test]
    fn tail_descent_is_one_swap() {
        let e = expr(&[("[1 3 2 / 4]", 3)]);
        assert_eq!(straighten(&e).unwrap(), expr(&[("[1 2 3 / 4]", 3)]));
    }

    #[test]
    fn two_one_example() {
        let e = expr(&[("[2 1 / 3]", 1)]);
        assert_eq!(straighten(&e).unwrap(), expr(&[("[1 2 / 3]", 1), ("[1 3 / 2]", -1)]));
    }

    #[test]
    fn column_exchange_is_a_garnir_consequence() {
        for (l1, l2) in [(2, 2), (3, 2), (3, 3)] {
            let n = l1 + l2;
            let mut points: Vec<usize> = (1..=n).collect();
            let mut canonical = Vec::new();
            let mut all = Vec::new();
            permutations(&mut points, 0, &mut |p| {
                let u = Tableau::new(p[..l1].to_vec(), p[l1..].to_vec()).unwrap();
                if canonicalize(&u).tableau() == &u {
                    canonical.push(u.clone());
                }
                all.push(u);
            });
            canonical.sort();
            let coords = |e: &TabloidExpr| {
                let mut v = vec![integer(0); canonical.len()];
                for (u, c) in e.terms() {
                    v[canonical.binary_search(u).unwrap()] = c.clone();
                }
                RationalVector::new(v)
            };
            let mut relations = Vec::new();
            for u in &all {
                for c in 1..l1 {
                    relations.push(coords(&garnir(u, c).unwrap()));
                }
            }
            for u in &canonical {
                for c in 1..l2 {
                    let swapped = u.swapped((1, c), (1, c + 1)).swapped((2, c), (2, c + 1));
                    let diff = TabloidExpr::from_tableau(u).minus(&TabloidExpr::from_tableau(&swapped));
                    assert!(in_span(&coords(&diff), &relations).unwrap(), "{u} at column {c}");
                }
            }
        }
    }

    fn permutations(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permutations(p, i + 1, f);
            p.swap(i, j);
        }
    }

    #[test]
    fn random_tabloids_straighten_consistently() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (l1, l2) in [(3, 2), (4, 3), (5, 2)] {
            let n = l1 + l2;
            let shape = TwoRowShape::new(l1, l2).unwrap();
            let standard = standard_tableaux(&shape);
            for _ in 0..30 {
                let mut p: Vec<usize> = (1..=n).collect();
                p.shuffle(&mut rng);
                let e = TabloidExpr::from_tableau(&Tableau::new(p[..l1].to_vec(), p[l1..].to_vec()).unwrap());
                let s = straighten(&e).unwrap();
                assert!(s.is_standard() && s.has_integer_coefficients());
                assert!(s.terms().all(|(u, _)| standard.contains(u)));
                assert_eq!(straighten(&s).unwrap(), s);
                for k in l2..=n - l2 + 1 {
                    assert_eq!(h_map_expr(&e, k, n).unwrap(), h_map_expr(&s, k, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn fuel_is_enforced() {
        let e = expr(&[("[3 2 1 / 5 4]", 1)]);
        assert_eq!(straighten_with_fuel(&e, 0), Err(Error::FuelExhausted(0)));
        assert!(straighten_with_fuel(&e, 1000).is_ok());
    }
}
