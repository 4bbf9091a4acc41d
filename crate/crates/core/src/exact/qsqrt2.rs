use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{int, parse_rational, to_f64, Rational};
use super::ExactError;

/// An element `a + b·√2` of the real quadratic field Q(√2).
///
/// The derived ordering is lexicographic on `(a, b)`; it is a total order used
/// for canonical output, not the ordering of real numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a − b√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² − 2b²` down to Q.
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(QSqrt2 {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Sign of the real number `a + b√2`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        // opposite signs: compare a² with 2b²
        let cmp = (&self.a * &self.a).cmp(&(int(2) * &self.b * &self.b));
        match cmp {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    /// Parses the `a+b*sqrt2` notation produced by `Display`.
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("*sqrt2") else {
            return Ok(Self::from_rational(parse_rational(&t)?));
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-') && !body[..i].ends_with('/'))
            .map(|(i, _)| i)
            .ok_or_else(|| ExactError::Parse(s.into()))?;
        let a = parse_rational(&body[..split])?;
        let b_str = &body[split..];
        let b = parse_rational(b_str.strip_prefix('+').unwrap_or(b_str))?;
        Ok(QSqrt2 { a, b })
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt2", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Rational> for QSqrt2 {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl<'a> Add<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl<'a> Sub<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl<'a> Mul<&'a QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a * &o.a + int(2) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        &self + &o
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        &self - &o
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        &self * &o
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(QSqrt2::sqrt2().square(), QSqrt2::from_int(2));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = QSqrt2::new(int(1), int(1));
        assert_eq!(x.inverse().unwrap(), QSqrt2::new(int(-1), int(1)));
        assert!(QSqrt2::zero().inverse().is_err());
    }

    #[test]
    fn half_sqrt2_squared_is_half() {
        let x = QSqrt2::new(int(0), rat(1, 2));
        assert_eq!(x.square(), QSqrt2::from_rational(rat(1, 2)));
        assert_eq!(x.field_norm(), rat(-1, 2));
    }

    #[test]
    fn signum_matches_float() {
        for (a, b) in [
            (3, -2),
            (-3, 2),
            (1, -1),
            (-1, 1),
            (0, 0),
            (2, 0),
            (0, -5),
            (-7, 5),
        ] {
            let x = QSqrt2::new(int(a), int(b));
            let f = x.to_f64();
            let expect = if f > 0.0 {
                1
            } else if f < 0.0 {
                -1
            } else {
                0
            };
            assert_eq!(x.signum(), expect, "{x}");
        }
    }

    #[test]
    fn display_round_trip() {
        for x in [
            QSqrt2::new(rat(-1, 2), rat(3, 4)),
            QSqrt2::new(int(0), rat(-1, 2)),
            QSqrt2::from_rational(rat(-5, 3)),
        ] {
            assert_eq!(QSqrt2::parse(&x.to_string()).unwrap(), x);
        }
    }
}
