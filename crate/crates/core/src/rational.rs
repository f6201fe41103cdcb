//! Exact rationals and their `"p/q"` string form used in JSON documents.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Parses `"p"`, `"p/q"` or a terminating decimal such as `"-1.5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q <= 0 {
            return Err(Error::Parse(format!("denominator must be positive in `{s}`")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, dec)) = s.split_once('.') {
        if dec.is_empty() || dec.len() > 12 || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let w: i64 = match whole {
            "" | "-" | "+" => 0,
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = 10i64.pow(dec.len() as u32);
        let d: i64 = dec.parse().map_err(|_| bad())?;
        let mag = Rational::from_integer(w.abs()) + Rational::new(d, scale);
        return Ok(if negative { -mag } else { mag });
    }
    s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

/// Parses a comma-separated list such as `"2,0"` or `"1/2, 3/2"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn is_negative_integer(r: &Rational) -> bool {
    r.is_integer() && r.is_negative()
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

/// Serde adapter: a single rational as a `"p/q"` string.
pub mod as_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter: a vector of rationals as an array of `"p/q"` strings.
pub mod vec_as_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| super::parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}
