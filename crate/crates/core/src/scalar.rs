//! Exact scalars. Everything downstream is built on `BigRational` and
//! Gaussian rationals `a + bi`; no floating point enters the crate.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = BigRational;
pub type Gaussian = Complex<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gauss(re: i64, im: i64) -> Gaussian {
    Complex::new(rat(re), rat(im))
}

pub fn g_real(q: Rational) -> Gaussian {
    Complex::new(q, Rational::zero())
}

pub fn g_zero() -> Gaussian {
    Complex::new(Rational::zero(), Rational::zero())
}

pub fn g_one() -> Gaussian {
    Complex::new(Rational::one(), Rational::zero())
}

pub fn g_i() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn g_is_zero(z: &Gaussian) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// Parses `"3"`, `"-7/4"` and the like.
pub fn parse_rational(s: &str) -> Option<Rational> {
    Rational::from_str(s.trim()).ok()
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Converts to a machine integer when the value is integral and fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Same as [`serde_rational`] for vectors.
pub mod serde_rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(|q| q.to_string()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| {
                parse_rational(s)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares_and_non_squares() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
        assert_eq!(rational_sqrt(&rat(0)), Some(rat(0)));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3", "7/12", "-1/2"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn gaussian_inverse() {
        let z = gauss(3, -4);
        let w = z.inv();
        assert_eq!(z * w, g_one());
    }
}
