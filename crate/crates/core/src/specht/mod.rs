//! Two-row Specht modules through column tabloids.
//!
//! A column tabloid is a filling of a two-row diagram taken up to sign under
//! swapping the two entries of a column. Tabloids are stored in canonical
//! form (every height-2 column increasing downwards) with the sign carried
//! separately. The Specht module `S^λ` is the quotient of the span of column
//! tabloids by the Garnir elements `g_{U,c}`; the standard tabloids give a
//! basis of the quotient, and [`straighten`] rewrites any expression in it.

mod straighten;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::boolean::BooleanElement;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::trades::{total_trade, TradeSpec};

pub use straighten::{straighten, straighten_with_fuel, DEFAULT_FUEL};

/// A partition `(λ1, λ2)` of `n = λ1 + λ2` with `λ1 ≥ λ2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoRowShape {
    lambda1: usize,
    lambda2: usize,
}

impl TwoRowShape {
    pub fn new(lambda1: usize, lambda2: usize) -> Result<Self> {
        if lambda1 < lambda2 {
            return Err(Error::InvalidParameters(format!("({lambda1}, {lambda2}) is not a partition")));
        }
        Ok(TwoRowShape { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> usize {
        self.lambda1
    }

    pub fn lambda2(&self) -> usize {
        self.lambda2
    }

    pub fn n(&self) -> usize {
        self.lambda1 + self.lambda2
    }
}

impl fmt::Display for TwoRowShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda1, self.lambda2)
    }
}

/// A filling of a two-row diagram with `1..=n`, each used once. Columns are
/// numbered from 1; column `c` has height 2 exactly when `c ≤ λ2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    row1: Vec<usize>,
    row2: Vec<usize>,
}

impl Tableau {
    pub fn new(row1: Vec<usize>, row2: Vec<usize>) -> Result<Self> {
        if row1.len() < row2.len() {
            return Err(Error::InvalidTableau(format!(
                "first row shorter than second ({} < {})",
                row1.len(),
                row2.len()
            )));
        }
        let n = row1.len() + row2.len();
        let mut seen = vec![false; n + 1];
        for &x in row1.iter().chain(&row2) {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!("entries must be 1..={n}, each once")));
            }
            seen[x] = true;
        }
        Ok(Tableau { row1, row2 })
    }

    pub fn shape(&self) -> TwoRowShape {
        TwoRowShape { lambda1: self.row1.len(), lambda2: self.row2.len() }
    }

    pub fn n(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn row1(&self) -> &[usize] {
        &self.row1
    }

    pub fn row2(&self) -> &[usize] {
        &self.row2
    }

    /// Rows increase to the right and columns increase downwards.
    pub fn is_standard(&self) -> bool {
        self.row1.windows(2).all(|w| w[0] < w[1])
            && self.row2.windows(2).all(|w| w[0] < w[1])
            && self.row2.iter().zip(&self.row1).all(|(b, a)| a < b)
    }

    fn is_column_canonical(&self) -> bool {
        self.row2.iter().zip(&self.row1).all(|(b, a)| a < b)
    }

    /// Exchanges the entries at two positions, given as `(row, column)` with
    /// rows 1 and 2 and 1-based columns.
    fn swapped(&self, p: (usize, usize), q: (usize, usize)) -> Tableau {
        let mut u = self.clone();
        let a = u.entry(p);
        let b = u.entry(q);
        *u.entry_mut(p) = b;
        *u.entry_mut(q) = a;
        u
    }

    fn entry(&self, (row, col): (usize, usize)) -> usize {
        if row == 1 {
            self.row1[col - 1]
        } else {
            self.row2[col - 1]
        }
    }

    fn entry_mut(&mut self, (row, col): (usize, usize)) -> &mut usize {
        if row == 1 {
            &mut self.row1[col - 1]
        } else {
            &mut self.row2[col - 1]
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        if self.row2.is_empty() {
            write!(f, "[{}]", join(&self.row1))
        } else {
            write!(f, "[{} / {}]", join(&self.row1), join(&self.row2))
        }
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses `[a b c / d e]`; the slash and second row may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tableau `{s}` must be bracketed")))?;
        let (top, bottom) = inner.split_once('/').unwrap_or((inner, ""));
        let row = |text: &str| -> Result<Vec<usize>> {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad tableau entry `{t}`"))))
                .collect()
        };
        Tableau::new(row(top)?, row(bottom)?)
    }
}

/// A column tabloid: a column-canonical tableau with a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tabloid {
    tableau: Tableau,
    sign: i8,
}

impl Tabloid {
    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_standard(&self) -> bool {
        self.tableau.is_standard()
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}{}", self.tableau)
    }
}

/// Sorts every height-2 column; the sign is `(−1)^(columns swapped)`.
pub fn canonicalize(u: &Tableau) -> Tabloid {
    let mut tableau = u.clone();
    let mut sign = 1;
    for (a, b) in tableau.row1.iter_mut().zip(tableau.row2.iter_mut()) {
        if *a > *b {
            std::mem::swap(a, b);
            sign = -sign;
        }
    }
    Tabloid { tableau, sign }
}

/// A rational combination of column tabloids over a single shape, keyed by
/// canonical tableau. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TabloidExpr {
    terms: BTreeMap<Tableau, Rational>,
}

impl TabloidExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_tabloid(q: &Tabloid) -> Self {
        let mut e = Self::zero();
        e.add(&q.tableau, Rational::from_integer(q.sign.into()));
        e
    }

    pub fn from_tableau(u: &Tableau) -> Self {
        Self::from_tabloid(&canonicalize(u))
    }

    /// Adds `coeff · u`, canonicalizing `u` first.
    pub fn add_tableau(&mut self, u: &Tableau, coeff: Rational) {
        if u.is_column_canonical() {
            self.add(u, coeff);
        } else {
            let q = canonicalize(u);
            let coeff = if q.sign < 0 { -coeff } else { coeff };
            self.add(&q.tableau, coeff);
        }
    }

    fn add(&mut self, u: &Tableau, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        if let Some(c) = self.terms.get_mut(u) {
            *c += coeff;
            if c.is_zero() {
                self.terms.remove(u);
            }
        } else {
            self.terms.insert(u.clone(), coeff);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &Tableau) -> Rational {
        let q = canonicalize(u);
        let c = self.terms.get(&q.tableau).cloned().unwrap_or_else(Rational::zero);
        if q.sign < 0 {
            -c
        } else {
            c
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &TabloidExpr) -> TabloidExpr {
        let mut e = self.clone();
        for (u, c) in &other.terms {
            e.add(u, c.clone());
        }
        e
    }

    pub fn minus(&self, other: &TabloidExpr) -> TabloidExpr {
        self.plus(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, factor: &Rational) -> TabloidExpr {
        if factor.is_zero() {
            return Self::zero();
        }
        TabloidExpr { terms: self.terms.iter().map(|(u, c)| (u.clone(), c * factor)).collect() }
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(Tableau::is_standard)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for TabloidExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (u, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*{u}")?,
                (_, false) => write!(f, " + {c}*{u}")?,
                (_, true) => write!(f, " - {}*{u}", c.abs())?,
            }
        }
        Ok(())
    }
}

/// The Garnir element `g_{U,c}` for adjacent columns `c, c+1`.
///
/// For `c ≤ λ2` it is `q − q_1 − q_2`, where `q_i` exchanges the top entry
/// of column `c+1` with the `i`-th entry of column `c`. For `c > λ2` it is
/// `q − q_3`, where `q_3` exchanges the entries of columns `c` and `c+1`.
pub fn garnir(u: &Tableau, c: usize) -> Result<TabloidExpr> {
    let lambda1 = u.row1.len();
    if c == 0 || c + 1 > lambda1 {
        return Err(Error::ColumnOutOfRange { column: c, max: lambda1.saturating_sub(1) });
    }
    let mut g = TabloidExpr::zero();
    let minus_one = -Rational::one();
    g.add_tableau(u, Rational::one());
    if c <= u.row2.len() {
        g.add_tableau(&u.swapped((1, c + 1), (1, c)), minus_one.clone());
        g.add_tableau(&u.swapped((1, c + 1), (2, c)), minus_one);
    } else {
        g.add_tableau(&u.swapped((1, c), (1, c + 1)), minus_one);
    }
    Ok(g)
}

/// All standard tableaux of `shape`, ordered lexicographically by
/// `(row1, row2)`.
pub fn standard_tableaux(shape: &TwoRowShape) -> Vec<Tableau> {
    let n = shape.n();
    let mut out = Vec::new();
    let mut row1 = Vec::with_capacity(shape.lambda1);
    let mut row2 = Vec::with_capacity(shape.lambda2);
    fill(1, n, shape, &mut row1, &mut row2, &mut out);
    out.sort();
    out
}

// Places 1..=n in increasing order; the next value may go at the end of the
// second row only while that row stays strictly shorter than the first.
fn fill(next: usize, n: usize, shape: &TwoRowShape, row1: &mut Vec<usize>, row2: &mut Vec<usize>, out: &mut Vec<Tableau>) {
    if next > n {
        out.push(Tableau { row1: row1.clone(), row2: row2.clone() });
        return;
    }
    if row1.len() < shape.lambda1 {
        row1.push(next);
        fill(next + 1, n, shape, row1, row2, out);
        row1.pop();
    }
    if row2.len() < shape.lambda2 && row2.len() < row1.len() {
        row2.push(next);
        fill(next + 1, n, shape, row1, row2, out);
        row2.pop();
    }
}

/// `dim S^(λ1,λ2) = C(n, λ2) − C(n, λ2 − 1)`.
pub fn specht_dim(shape: &TwoRowShape) -> BigUint {
    let n = shape.n() as i64;
    let l2 = shape.lambda2 as i64;
    binomial(n, l2) - binomial(n, l2 - 1)
}

/// The shapes `(n−j, j)`, `j = 0..=min(k, n−k)`, whose Specht modules make
/// up `M_k`.
pub fn young_rule(k: usize, n: usize) -> Result<Vec<TwoRowShape>> {
    if k > n {
        return Err(Error::InvalidParameters(format!("need k <= n, got k={k} n={n}")));
    }
    (0..=k.min(n - k)).map(|j| TwoRowShape::new(n - j, j)).collect()
}

fn h_params(shape: &TwoRowShape, k: usize) -> Result<usize> {
    let n = shape.n();
    if shape.lambda2 == 0 {
        return Err(Error::InvalidParameters("h needs a nonempty second row".into()));
    }
    let t = shape.lambda2 - 1;
    if !(t < k && t + k <= n) {
        return Err(Error::InvalidParameters(format!(
            "shape {shape} gives t={t}; need t < k and t + k <= n, got k={k} n={n}"
        )));
    }
    Ok(t)
}

/// Sends the tabloid with columns `(x_i, y_i)`, `i ≤ t+1`, to
/// `sign · (x_1−y_1)⋯(x_{t+1}−y_{t+1}) Σ_{k−t−1}(rest)` in `M_k`, where
/// `λ2 = t + 1`.
pub fn h_map(q: &Tabloid, k: usize) -> Result<BooleanElement> {
    let shape = q.tableau.shape();
    let t = h_params(&shape, k)?;
    let u = &q.tableau;
    let spec = TradeSpec::total(shape.n(), t, k, u.row1[..=t].to_vec(), u.row2.clone())?;
    let e = total_trade(&spec)?;
    Ok(if q.sign < 0 { e.negated() } else { e })
}

/// [`h_map`] extended linearly. The empty expression maps to zero in `M_k`
/// over the ground set of size `n`.
pub fn h_map_expr(e: &TabloidExpr, k: usize, n: usize) -> Result<BooleanElement> {
    let mut out = BooleanElement::zero(n);
    for (u, c) in e.terms() {
        if u.n() != n {
            return Err(Error::GroundSetMismatch { left: n, right: u.n() });
        }
        let image = h_map(&Tabloid { tableau: u.clone(), sign: 1 }, k)?;
        out = out.plus(&image.scaled(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let u = tab("[2 7 1 4 6 / 3 5]");
        assert_eq!(u.shape(), TwoRowShape::new(5, 2).unwrap());
        assert_eq!(u.to_string(), "[2 7 1 4 6 / 3 5]");
        assert_eq!(tab("[1 2 3]").to_string(), "[1 2 3]");
        assert_eq!(tab("[1 2 3 /]"), tab("[1 2 3]"));
        assert!("[1 2 / 3 4 5]".parse::<Tableau>().is_err());
        assert!("[1 1 / 2]".parse::<Tableau>().is_err());
        assert!("[1 2 / 4]".parse::<Tableau>().is_err());
        assert!("1 2 / 3".parse::<Tableau>().is_err());
    }

    #[test]
    fn canonical_signs() {
        let q = canonicalize(&tab("[1 2 / 3 4]"));
        assert_eq!((q.sign(), q.tableau().clone()), (1, tab("[1 2 / 3 4]")));
        let q = canonicalize(&tab("[4 2 1 / 3 5]"));
        assert_eq!((q.sign(), q.tableau().clone()), (-1, tab("[3 2 1 / 4 5]")));
        let q = canonicalize(&tab("[3 4 / 1 2]"));
        assert_eq!((q.sign(), q.tableau().clone()), (1, tab("[1 2 / 3 4]")));
        assert_eq!(canonicalize(q.tableau()).tableau(), q.tableau());
    }

    #[test]
    fn garnir_on_a_five_two_tableau() {
        let u = tab("[2 7 1 4 6 / 3 5]");
        let g = garnir(&u, 1).unwrap();
        let mut expected = TabloidExpr::from_tableau(&u);
        expected = expected.minus(&TabloidExpr::from_tableau(&tab("[7 2 1 4 6 / 3 5]")));
        expected = expected.minus(&TabloidExpr::from_tableau(&tab("[2 3 1 4 6 / 7 5]")));
        assert_eq!(g, expected);
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn garnir_small_cases() {
        // [2 3 / 1] is -[1 3 / 2]; q1 = [3 2 / 1] = -[1 2 / 3]; q2 = [2 1 / 3]
        let g = garnir(&tab("[2 3 / 1]"), 1).unwrap();
        let mut expected = TabloidExpr::zero();
        expected.add_tableau(&tab("[1 3 / 2]"), integer(-1));
        expected.add_tableau(&tab("[1 2 / 3]"), integer(1));
        expected.add_tableau(&tab("[2 1 / 3]"), integer(-1));
        assert_eq!(g, expected);
        assert_eq!(g.len(), 3);

        let g = garnir(&tab("[1 2 3 / 4]"), 2).unwrap();
        let expected = TabloidExpr::from_tableau(&tab("[1 2 3 / 4]")).minus(&TabloidExpr::from_tableau(&tab("[1 3 2 / 4]")));
        assert_eq!(g, expected);

        assert!(garnir(&tab("[1 2 / 3]"), 2).is_err());
        assert!(garnir(&tab("[1 2 / 3]"), 0).is_err());
    }

    #[test]
    fn standard_tableaux_examples() {
        let shape = TwoRowShape::new(2, 1).unwrap();
        assert_eq!(standard_tableaux(&shape), vec![tab("[1 2 / 3]"), tab("[1 3 / 2]")]);
        assert_eq!(standard_tableaux(&TwoRowShape::new(4, 0).unwrap()), vec![tab("[1 2 3 4]")]);
        assert_eq!(standard_tableaux(&TwoRowShape::new(3, 2).unwrap()).len(), 5);
        for n in 0..=12 {
            for l2 in 0..=n / 2 {
                let shape = TwoRowShape::new(n - l2, l2).unwrap();
                let all = standard_tableaux(&shape);
                assert_eq!(BigUint::from(all.len()), specht_dim(&shape));
                assert!(all.iter().all(Tableau::is_standard));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn dimensions_and_young_rule() {
        assert_eq!(specht_dim(&TwoRowShape::new(5, 0).unwrap()), BigUint::one());
        assert_eq!(specht_dim(&TwoRowShape::new(2, 1).unwrap()), BigUint::from(2u32));
        assert_eq!(specht_dim(&TwoRowShape::new(3, 2).unwrap()), BigUint::from(5u32));
        let shapes = young_rule(1, 3).unwrap();
        assert_eq!(shapes, vec![TwoRowShape::new(3, 0).unwrap(), TwoRowShape::new(2, 1).unwrap()]);
        assert_eq!(young_rule(0, 7).unwrap(), vec![TwoRowShape::new(7, 0).unwrap()]);
        for n in 0..=12usize {
            for k in 0..=n {
                let total: BigUint = young_rule(k, n).unwrap().iter().map(specht_dim).sum();
                assert_eq!(total, binomial(n as i64, k as i64));
            }
        }
        assert!(young_rule(4, 3).is_err());
        assert!(TwoRowShape::new(1, 2).is_err());
    }

    #[test]
    fn h_examples() {
        let q = canonicalize(&tab("[1 3 / 2]"));
        let expected = BooleanElement::element(3, 1).unwrap().minus(&BooleanElement::element(3, 2).unwrap()).unwrap();
        assert_eq!(h_map(&q, 1).unwrap(), expected);
        let flipped = canonicalize(&tab("[2 3 / 1]"));
        assert_eq!(h_map(&flipped, 1).unwrap(), expected.negated());
        assert!(h_map(&q, 4).is_err());
        assert!(h_map(&canonicalize(&tab("[1 2 3]")), 1).is_err());
    }

    #[test]
    fn h_kills_garnir_elements_on_small_shapes() {
        let u = tab("[2 7 1 4 6 / 3 5]");
        for c in 1..=4 {
            for k in 2..=5 {
                let g = garnir(&u, c).unwrap();
                assert!(h_map_expr(&g, k, 7).unwrap().is_zero(), "c={c} k={k}");
            }
        }
    }
}
