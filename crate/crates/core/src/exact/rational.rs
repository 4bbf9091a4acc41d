use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ExactError;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| ExactError::Parse(s.into()))?;
            let d: BigInt = d.trim().parse().map_err(|_| ExactError::Parse(s.into()))?;
            if d == BigInt::from(0) {
                return Err(ExactError::DivisionByZero);
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(t.parse().map_err(|_| ExactError::Parse(s.into()))?),
    };
    Ok(parsed)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
