//! Exponent-vector monomials, ±1-coefficient binomials and 2×n monomial
//! matrices over the semigroup-weighted polynomial ring.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::Int;

/// The polynomial ring `k[X_1, ..., X_n]` graded by `deg X_i = a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedRing {
    pub weights: Vec<Int>,
}

impl WeightedRing {
    pub fn new(weights: Vec<Int>) -> Self {
        WeightedRing { weights }
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weighted_degree(&self, m: &Monomial) -> Result<Int> {
        if m.exponents.len() != self.num_vars() {
            return Err(Error::DimensionMismatch);
        }
        let mut acc: Int = 0;
        for (&e, &w) in m.exponents.iter().zip(&self.weights) {
            let term = (e as Int).checked_mul(w).ok_or(Error::Overflow)?;
            acc = acc.checked_add(term).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// A binomial lies in the defining ideal of the semigroup ring iff
    /// both of its terms have the same weighted degree.
    pub fn is_in_defining_ideal(&self, b: &Binomial) -> Result<bool> {
        Ok(self.weighted_degree(&b.plus)? == self.weighted_degree(&b.minus)?)
    }
}

/// A monomial as a vector of non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial { exponents: vec![0; num_vars] }
    }

    /// `X_{i+1}^e` in `num_vars` variables (`var` is 0-based).
    pub fn var_pow(num_vars: usize, var: usize, e: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[var] = e;
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `Some((var, e))` if this is a pure power of a single variable.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::DimensionMismatch);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exponents })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.num_vars() == other.num_vars()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Plain lexicographic comparison on exponent vectors, first index
    /// most significant. Used for the canonical sign of binomials.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }

    /// Parses `"X1^2*X3"` or `"1"` into a monomial in `num_vars` variables.
    pub fn parse(s: &str, num_vars: usize) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one(num_vars));
        }
        let mut exponents = vec![0u32; num_vars];
        for factor in s.split('*') {
            let f = factor.trim();
            let rest = f
                .strip_prefix('X')
                .ok_or_else(|| Error::Parse(format!("expected variable in `{f}`")))?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let idx: usize = var
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{f}`")))?;
            let e: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
            if idx == 0 || idx > num_vars {
                return Err(Error::Parse(format!(
                    "variable X{idx} outside 1..={num_vars}"
                )));
            }
            exponents[idx - 1] = exponents[idx - 1]
                .checked_add(e)
                .ok_or(Error::Overflow)?;
        }
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{}", i + 1)?;
            } else {
                write!(f, "X{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// The binomial `plus - minus` with coefficients fixed at +1 / -1.
///
/// Canonical sign: `plus` is the lexicographically larger term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    /// Builds the canonical form; returns `None` when the terms coincide
    /// (the zero binomial).
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        match a.lex_cmp(&b) {
            Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            Ordering::Less => Some(Binomial { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    pub fn canonical(&self) -> Binomial {
        Binomial::new(self.plus.clone(), self.minus.clone()).expect("terms differ")
    }

    pub fn num_vars(&self) -> usize {
        self.plus.num_vars()
    }

    /// Applies a variable relabeling: exponent of new variable `i` is
    /// taken from old variable `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Binomial {
        let map = |m: &Monomial| Monomial {
            exponents: perm.iter().map(|&p| m.exponents[p]).collect(),
        };
        Binomial::new(map(&self.plus), map(&self.minus)).expect("relabeling is injective")
    }

    /// Parses `"X1^2*X3 - X2^4"`.
    pub fn parse(s: &str, num_vars: usize) -> Result<Binomial> {
        let (l, r) = s
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `lhs - rhs` in `{s}`")))?;
        let plus = Monomial::parse(l, num_vars)?;
        let minus = Monomial::parse(r, num_vars)?;
        Binomial::new(plus, minus)
            .ok_or_else(|| Error::Parse("binomial terms coincide".into()))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// A 2×n matrix of monomials, every entry a pure power of one variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub top: Vec<Monomial>,
    pub bottom: Vec<Monomial>,
}

impl MonomialMatrix {
    pub fn new(top: Vec<Monomial>, bottom: Vec<Monomial>) -> Result<Self> {
        if top.len() != bottom.len() || top.len() < 2 {
            return Err(Error::ShapeMismatch("expected two rows of equal length >= 2".into()));
        }
        for m in top.iter().chain(&bottom) {
            if m.pure_power().is_none() {
                return Err(Error::ShapeMismatch(format!(
                    "entry {m} is not a pure variable power"
                )));
            }
        }
        Ok(MonomialMatrix { top, bottom })
    }

    pub fn num_cols(&self) -> usize {
        self.top.len()
    }

    /// The `C(n, 2)` maximal minors `top_i bot_j - top_j bot_i`, each in
    /// canonical sign, in column-pair order `(i, j)` with `i < j`.
    pub fn minors2(&self) -> Result<Vec<Binomial>> {
        let n = self.num_cols();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let a = self.top[i].mul(&self.bottom[j])?;
                let b = self.top[j].mul(&self.bottom[i])?;
                if let Some(binomial) = Binomial::new(a, b) {
                    out.push(binomial);
                }
            }
        }
        Ok(out)
    }

    /// Checks the cyclic two-row shape `(X_1^{l_1} ... X_n^{l_n} /
    /// X_2^{m_2} ... X_n^{m_n} X_1^{m_1})` and that the consecutive
    /// weighted-degree differences all agree; returns the common
    /// difference.
    pub fn check_common_difference(&self, ring: &WeightedRing) -> Result<Int> {
        let n = self.num_cols();
        if n != ring.num_vars() {
            return Err(Error::DimensionMismatch);
        }
        let mut tops = Vec::with_capacity(n);
        let mut bots = Vec::with_capacity(n);
        for i in 0..n {
            let (v, e) = self.top[i].pure_power().ok_or_else(|| {
                Error::ShapeMismatch(format!("top entry {i} is constant"))
            })?;
            if v != i {
                return Err(Error::ShapeMismatch(format!(
                    "top entry {} is a power of X{}, expected X{}",
                    i, v + 1, i + 1
                )));
            }
            tops.push(e as Int);
            let (v, e) = self.bottom[i].pure_power().ok_or_else(|| {
                Error::ShapeMismatch(format!("bottom entry {i} is constant"))
            })?;
            let expected = (i + 1) % n;
            if v != expected {
                return Err(Error::ShapeMismatch(format!(
                    "bottom entry {} is a power of X{}, expected X{}",
                    i, v + 1, expected + 1
                )));
            }
            bots.push(e as Int);
        }
        let w = &ring.weights;
        let diff_at = |i: usize| -> Int {
            let j = (i + 1) % n;
            bots[i] * w[j] - tops[i] * w[i]
        };
        let d0 = diff_at(0);
        for i in 1..n {
            if diff_at(i) != d0 {
                return Err(Error::ShapeMismatch(format!(
                    "common-difference check fails at column {}: {} != {}",
                    i + 1,
                    diff_at(i),
                    d0
                )));
            }
        }
        Ok(d0)
    }

    /// Parses `"[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]"`.
    pub fn parse(s: &str) -> Result<MonomialMatrix> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (t, b) = inner
            .split_once('/')
            .ok_or_else(|| Error::Parse("expected `top / bottom`".into()))?;
        let top_raw: Vec<&str> = t.split_whitespace().collect();
        let bot_raw: Vec<&str> = b.split_whitespace().collect();
        let n = top_raw.len();
        let top = top_raw
            .iter()
            .map(|m| Monomial::parse(m, n))
            .collect::<Result<_>>()?;
        let bottom = bot_raw
            .iter()
            .map(|m| Monomial::parse(m, n))
            .collect::<Result<_>>()?;
        MonomialMatrix::new(top, bottom)
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.top.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, " / ")?;
        for (i, m) in self.bottom.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let ring = WeightedRing::new(vec![6, 13, 40, 41]);
        assert_eq!(ring.weighted_degree(&m("X2^4", 4)), Ok(52));
        assert_eq!(ring.weighted_degree(&Monomial::one(4)), Ok(0));
        assert_eq!(ring.weighted_degree(&m("X1^2*X3", 4)), Ok(52));
        assert_eq!(
            ring.weighted_degree(&Monomial::one(3)),
            Err(Error::DimensionMismatch)
        );
    }

    #[test]
    fn defining_ideal_membership() {
        let ring = WeightedRing::new(vec![6, 13, 40, 41]);
        let b = Binomial::parse("X2^4 - X1^2*X3", 4).unwrap();
        assert_eq!(ring.is_in_defining_ideal(&b), Ok(true));
        let b = Binomial::parse("X1 - X2", 4).unwrap();
        assert_eq!(ring.is_in_defining_ideal(&b), Ok(false));
        let ring = WeightedRing::new(vec![8, 9, 28, 29, 15]);
        let b = Binomial::parse("X1*X3 - X2^4", 5).unwrap();
        assert_eq!(ring.is_in_defining_ideal(&b), Ok(true));
    }

    #[test]
    fn minors_of_worked_matrix() {
        let mat = MonomialMatrix::parse("[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]").unwrap();
        let minors = mat.minors2().unwrap();
        assert_eq!(minors.len(), 6);
        let wanted = Binomial::parse("X2^4 - X1^2*X3", 4).unwrap();
        assert!(minors.contains(&wanted));
        let ring = WeightedRing::new(vec![6, 13, 40, 41]);
        for b in &minors {
            assert_eq!(ring.is_in_defining_ideal(b), Ok(true));
        }
    }

    #[test]
    fn minors_2x2_and_2x5() {
        let mat = MonomialMatrix::parse("[X1^3 X2 / X2 X1]").unwrap();
        assert_eq!(mat.minors2().unwrap().len(), 1);
        let mat = MonomialMatrix::parse("[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]").unwrap();
        assert_eq!(mat.minors2().unwrap().len(), 10);
    }

    #[test]
    fn common_difference_examples() {
        let ring = WeightedRing::new(vec![6, 13, 40, 41]);
        let mat = MonomialMatrix::parse("[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]").unwrap();
        assert_eq!(mat.check_common_difference(&ring), Ok(1));

        let ring = WeightedRing::new(vec![7, 39, 43, 47, 17]);
        let mat = MonomialMatrix::parse("[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]").unwrap();
        assert_eq!(mat.check_common_difference(&ring), Ok(4));

        let ring = WeightedRing::new(vec![6, 13, 40, 41]);
        let mat = MonomialMatrix::parse("[X1^3 X2^3 X3 X4 / X2 X3 X4 X1^7]").unwrap();
        assert!(matches!(
            mat.check_common_difference(&ring),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn all_minors_homogeneous_when_common_difference_holds() {
        let ring = WeightedRing::new(vec![7, 39, 43, 47, 17]);
        let mat = MonomialMatrix::parse("[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]").unwrap();
        mat.check_common_difference(&ring).unwrap();
        for b in mat.minors2().unwrap() {
            assert_eq!(ring.is_in_defining_ideal(&b), Ok(true), "{b}");
        }
    }

    #[test]
    fn canonical_sign_is_idempotent() {
        let b = Binomial::parse("X2^4 - X1^2*X3", 4).unwrap();
        assert_eq!(b.canonical(), b);
        let same = Binomial::new(m("X1^2*X3", 4), m("X2^4", 4)).unwrap();
        assert_eq!(same, b);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["X1^2*X3 - X2^4", "X2 - X1^3", "X1*X2*X3 - X4^2"] {
            let b = Binomial::parse(s, 4).unwrap();
            assert_eq!(Binomial::parse(&b.to_string(), 4).unwrap(), b);
        }
        let mat = MonomialMatrix::parse("[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]").unwrap();
        assert_eq!(MonomialMatrix::parse(&mat.to_string()).unwrap(), mat);
    }

    #[test]
    fn matrix_rejects_mixed_entries() {
        assert!(MonomialMatrix::parse("[X1*X2 X2 / X2 X1]").is_err());
    }
}
