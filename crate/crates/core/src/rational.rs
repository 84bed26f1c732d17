//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number used for every coefficient.
pub type Q = BigRational;

pub fn q(n: i64) -> Q { Q::from_integer(BigInt::from(n)) }

pub fn frac(n: i64, d: i64) -> Q { Q::new(BigInt::from(n), BigInt::from(d)) }

pub fn zero() -> Q { Q::zero() }

pub fn one() -> Q { Q::one() }

/// Lowest terms, sign carried by the numerator, integers printed without `/1`.
pub fn format_q(x: &Q) -> String {
  if x.denom().is_one() {
    x.numer().to_string()
  } else {
    format!("{}/{}", x.numer(), x.denom())
  }
}

/// Accepts `"p"`, `"p/q"` and `"-p/q"`; the denominator must be nonzero.
pub fn parse_q(s: &str) -> Result<Q> {
  let s = s.trim();
  let err = || Error::ParseRational(s.to_string());
  match s.split_once('/') {
    None => s.parse::<BigInt>().map(Q::from_integer).map_err(|_| err()),
    Some((n, d)) => {
      let n: BigInt = n.trim().parse().map_err(|_| err())?;
      let d: BigInt = d.trim().parse().map_err(|_| err())?;
      if d.is_zero() {
        return Err(err());
      }
      Ok(Q::new(n, d))
    },
  }
}

pub fn abs_sum<'a>(it: impl IntoIterator<Item = &'a Q>) -> Q {
  it.into_iter().fold(Q::zero(), |acc, x| acc + x.abs())
}

/// Serde adapter writing a rational as its `"p/q"` string.
pub mod serde_q {
  use serde::{Deserialize, Deserializer, Serializer};

  use super::{format_q, parse_q, Q};

  pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_q(x))
  }

  pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    let s = String::deserialize(d)?;
    parse_q(&s).map_err(serde::de::Error::custom)
  }
}
