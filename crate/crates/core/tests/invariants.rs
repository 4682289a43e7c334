use proptest::prelude::*;

use tradekit::boolean::{build_matrix, permute_element, psi, BooleanElement, MatrixSpec};
use tradekit::combinatorics::{binomial, colex_rank, colex_unrank, Permutation};
use tradekit::linalg::{integer, matvec, parse_matrix, rank, rational, rref, MatrixFormat, RationalMatrix};
use tradekit::specht::{canonicalize, h_map_expr, straighten, Tableau, TabloidExpr};
use tradekit::trades::{is_t_trade, minimal_trade, total_trade, TradeSpec};

/// `(n, t, k)` with `t < k`, `t + k < n` (room for a minimal trade) and a
/// shuffled ground set.
fn trade_params(n_max: usize) -> impl Strategy<Value = (usize, usize, usize, Vec<usize>)> {
    (2..=n_max)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| {
            let t_max = k.min(n - k);
            (Just(n), 0..t_max, Just(k), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        })
}

fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1..5usize, 1..5usize).prop_flat_map(|(r, c)| {
        prop::collection::vec((-4i64..=4, 1i64..=3), r * c)
            .prop_map(move |v| RationalMatrix::from_entries(r, c, v.into_iter().map(|(p, q)| rational(p, q)).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colex_round_trip(n in 1usize..=20, k_frac in 0.0f64..=1.0, r_frac in 0.0f64..1.0) {
        let k = (k_frac * n as f64) as usize;
        let count: u64 = binomial(n as i64, k as i64).try_into().unwrap();
        let r = (r_frac * count as f64) as u64;
        let s = colex_unrank(r, k, n).unwrap();
        prop_assert_eq!(s.len(), k);
        prop_assert_eq!(colex_rank(&s), r);
    }

    #[test]
    fn pascal(a in 1i64..60, b in 1i64..60) {
        prop_assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
    }

    #[test]
    fn minimal_and_total_trades_are_killed_by_inclusion((n, t, k, p) in trade_params(8)) {
        let xs = p[..=t].to_vec();
        let ys = p[t + 1..2 * t + 2].to_vec();
        let tail = p[2 * t + 2..t + k + 1].to_vec();
        for e in [
            minimal_trade(&TradeSpec::minimal(n, t, k, xs.clone(), ys.clone(), tail).unwrap()).unwrap(),
            total_trade(&TradeSpec::total(n, t, k, xs, ys).unwrap()).unwrap(),
        ] {
            prop_assert!(is_t_trade(&e, t).unwrap());
            if !e.is_zero() {
                let w = build_matrix(&MatrixSpec::inclusion(n, t, k).unwrap()).unwrap();
                prop_assert!(matvec(&w, &e.to_vector(k).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn minimal_trade_has_two_to_the_t_plus_one_blocks((n, t, k, p) in trade_params(9)) {
        let spec = TradeSpec::minimal(n, t, k, p[..=t].to_vec(), p[t + 1..2 * t + 2].to_vec(), p[2 * t + 2..t + k + 1].to_vec()).unwrap();
        let e = minimal_trade(&spec).unwrap();
        prop_assert_eq!(e.len(), 1 << (t + 1));
        prop_assert!(e.terms().all(|(_, c)| *c == integer(1) || *c == integer(-1)));
    }

    #[test]
    fn trades_stay_trades_under_permutation((n, t, k, p) in trade_params(8), seed in any::<u64>()) {
        use rand::SeedableRng;
        let spec = TradeSpec::minimal(n, t, k, p[..=t].to_vec(), p[t + 1..2 * t + 2].to_vec(), p[2 * t + 2..t + k + 1].to_vec()).unwrap();
        let e = minimal_trade(&spec).unwrap();
        let sigma = Permutation::random(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let image = permute_element(&sigma, &e).unwrap();
        prop_assert!(is_t_trade(&image, t).unwrap());
        prop_assert_eq!(permute_element(&sigma.inverse(), &image).unwrap(), e);
    }

    #[test]
    fn psi_is_additive((n, t, k, p) in trade_params(7), steps in 0usize..3) {
        let a = minimal_trade(&TradeSpec::minimal(n, t, k, p[..=t].to_vec(), p[t + 1..2 * t + 2].to_vec(), p[2 * t + 2..t + k + 1].to_vec()).unwrap()).unwrap();
        let b = BooleanElement::from_subset(colex_unrank(0, k, n).unwrap());
        let steps = steps.min(k);
        let lhs = psi(&a.plus(&b).unwrap(), steps).unwrap();
        let rhs = psi(&a, steps).unwrap().plus(&psi(&b, steps).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
        let r = rank(&m);
        prop_assert!(r <= m.rows().min(m.cols()));
        prop_assert_eq!(r, rank(&m.transpose()));
        let (reduced, pivots) = rref(&m);
        prop_assert_eq!(pivots.len(), r);
        prop_assert_eq!(rref(&reduced).0, reduced);
    }

    #[test]
    fn matrix_text_round_trip(m in small_matrix()) {
        for f in [MatrixFormat::Dense, MatrixFormat::Sparse] {
            prop_assert_eq!(parse_matrix(&m.to_text(f)).unwrap(), m.clone());
        }
    }

    #[test]
    fn straightening_preserves_h(n in 2usize..=7, l2_frac in 0.0f64..1.0, seed_perm in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let l2 = (1 + (l2_frac * (n / 2) as f64) as usize).min(n / 2);
        let mut pts: Vec<usize> = (1..=n).collect();
        pts.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed_perm));
        let u = Tableau::new(pts[..n - l2].to_vec(), pts[n - l2..].to_vec()).unwrap();
        let e = TabloidExpr::from_tabloid(&canonicalize(&u));
        let s = straighten(&e).unwrap();
        prop_assert!(s.is_standard());
        prop_assert!(s.has_integer_coefficients());
        let t = l2 - 1;
        for k in t + 1..=n - t {
            prop_assert_eq!(h_map_expr(&e, k, n).unwrap(), h_map_expr(&s, k, n).unwrap());
        }
    }
}
