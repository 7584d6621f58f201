//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Base field element: an arbitrary-precision reduced fraction.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `base^exp` for a signed exponent. Panics on `0^negative`.
pub fn pow(base: &Scalar, exp: i64) -> Scalar {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

/// Canonical text: `p` for integers, `p/q` otherwise (q > 0, reduced).
pub fn format(c: &Scalar) -> String {
    c.to_string()
}

/// Accepts `p`, `-p`, `p/q`; surrounding whitespace is ignored.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

pub fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}

/// Serde adapter writing scalars as canonical strings.
pub mod serde_str {
    use super::Scalar;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(c))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse(&raw).ok_or_else(|| D::Error::custom(format!("invalid rational `{raw}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format(&parse("6/4").unwrap()), "3/2");
        assert_eq!(format(&parse("-3/-1").unwrap()), "3");
        assert_eq!(format(&parse(" -2 ").unwrap()), "-2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow(&int(2), 3), int(8));
        assert_eq!(pow(&int(2), -2), frac(1, 4));
        assert_eq!(pow(&frac(-1, 3), 0), one());
    }
}
