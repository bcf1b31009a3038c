//! Exact rational numbers and quadratic-surd comparisons.

use std::cmp::Ordering;

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational scalar used for divisor-class coordinates and pairings.
pub type Q = Ratio<i128>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n as i128, d as i128)
}

/// Returns the value as an `i64` if it is an integer that fits.
pub fn as_integer(x: &Q) -> Option<i64> {
    if x.is_integer() {
        i64::try_from(*x.numer()).ok()
    } else {
        None
    }
}

/// Floor of the square root for non-negative integers.
pub fn isqrt(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative value");
    n.sqrt()
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Compares `x` against `y·√r` exactly (`r ≥ 0`).
pub fn cmp_with_surd(x: &Q, y: &Q, r: u32) -> Ordering {
    let rhs_sign = if y.is_zero() || r == 0 { Ordering::Equal } else if y.is_positive() { Ordering::Greater } else { Ordering::Less };
    let lhs_sign = x.cmp(&Q::zero());
    if lhs_sign != rhs_sign {
        return lhs_sign.cmp(&rhs_sign);
    }
    // same sign: compare squares, reversed for negatives
    let lhs_sq = x * x;
    let rhs_sq = y * y * Q::from_integer(r as i128);
    match lhs_sign {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => lhs_sq.cmp(&rhs_sq),
        Ordering::Less => rhs_sq.cmp(&lhs_sq),
    }
}

/// A real number of the form `p + q·√r` with rational `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Surd {
    #[serde(with = "serde_q")]
    pub rational: Q,
    #[serde(with = "serde_q")]
    pub surd: Q,
    pub radicand: u32,
}

impl Surd {
    pub fn rational(x: Q) -> Self {
        Self { rational: x, surd: Q::zero(), radicand: 0 }
    }

    /// `p + q·√r`, collapsed to a rational when `r` is a perfect square.
    pub fn new(rational: Q, surd: Q, radicand: u32) -> Self {
        match exact_sqrt(radicand as i128) {
            Some(root) => Self::rational(rational + surd * Q::from_integer(root)),
            None => Self { rational, surd, radicand },
        }
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero() || self.radicand == 0
    }

    /// Compares `t` against this number exactly.
    pub fn cmp_rational(&self, t: &Q) -> Ordering {
        // t vs p + q√r  <=>  (t - p) vs q√r
        cmp_with_surd(&(t - self.rational), &self.surd, self.radicand)
    }

    /// Compares `k` against `a·self` exactly.
    pub fn cmp_scaled(&self, k: &Q, a: &Q) -> Ordering {
        cmp_with_surd(&(k - a * self.rational), &(a * self.surd), self.radicand)
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let surd = if self.surd == Q::from_integer(1) {
            format!("√{}", self.radicand)
        } else {
            format!("({})·√{}", self.surd, self.radicand)
        };
        if self.rational.is_zero() {
            write!(f, "{surd}")
        } else {
            write!(f, "{} + {}", self.rational, surd)
        }
    }
}

/// Serializes a rational as `"p"` or `"p/q"`.
pub mod serde_q {
    use super::Q;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_q(&s).map_err(D::Error::custom)
    }
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"0.25"`.
pub fn parse_q(s: &str) -> std::result::Result<Q, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let d: i128 = d.trim().parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if d == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, dec)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int: i128 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|e| format!("bad number {s:?}: {e}"))? };
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) || dec.len() > 18 {
            return Err(format!("bad decimal {s:?}"));
        }
        let scale = 10i128.pow(dec.len() as u32);
        let frac: i128 = dec.parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?;
        let magnitude = Q::from_integer(int.abs()) + Q::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    s.parse::<i128>().map(Q::from_integer).map_err(|e| format!("bad number {s:?}: {e}"))
}

/// Exact division of integers, `None` if `d` does not divide `n`.
pub fn exact_div(n: i128, d: i128) -> Option<i128> {
    (d != 0 && n % d == 0).then(|| n / d)
}

/// `|x|` for rationals.
pub fn qabs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_comparison_matches_floating_point_away_from_ties() {
        for x in -40..=40 {
            for y in -10..=10 {
                for r in [2u32, 3, 5, 7] {
                    let exact = cmp_with_surd(&q(x), &q(y), r);
                    let float = (x as f64).partial_cmp(&(y as f64 * (r as f64).sqrt())).unwrap();
                    assert_eq!(exact, float, "x={x} y={y} r={r}");
                }
            }
        }
    }

    #[test]
    fn surd_ties_are_equal() {
        // 2 = 1·√4, and 0 = 0·√3
        assert_eq!(cmp_with_surd(&q(2), &q(1), 4), Ordering::Equal);
        assert_eq!(cmp_with_surd(&q(0), &q(0), 3), Ordering::Equal);
        assert_eq!(cmp_with_surd(&q(-3), &q(-1), 9), Ordering::Equal);
    }

    #[test]
    fn surd_collapses_perfect_squares() {
        let s = Surd::new(q(0), frac(1, 4), 4);
        assert!(s.is_rational());
        assert_eq!(s.rational, frac(1, 2));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-3/4").unwrap(), frac(-3, 4));
        assert_eq!(parse_q("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_q("-1.5").unwrap(), frac(-3, 2));
        assert_eq!(parse_q("-0.5").unwrap(), frac(-1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(5929), Some(77));
        assert_eq!(exact_sqrt(5930), None);
        assert_eq!(exact_sqrt(-4), None);
    }
}
