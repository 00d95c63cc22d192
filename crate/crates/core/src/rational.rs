//! Exact rational numbers and their canonical `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats `r` as `p/q` with `q > 0` and `gcd(p, q) = 1`; integers keep the `/1`.
pub fn to_canonical_string(r: &Rational) -> String {
    // BigRational is always kept reduced with a positive denominator.
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the canonical `p/q` form. Plain integers are accepted as well.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("not a rational: `{s}`"),
    };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn format_vector(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(to_canonical_string).collect();
    format!("({})", parts.join(", "))
}
