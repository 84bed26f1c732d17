//! Rational chains on a pointed simplicial set, Moore normalization, exact
//! linear algebra and the ℓ¹ / normalized seminorms on homology.
//!
//! Chains live in the standard complex: every non-base simplex, degenerate
//! or not, is a basis element, and `∂ = Σ (−1)^j d_j`.

pub mod linalg;
pub mod lp;
pub mod norms;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};
use crate::simplicial::LevelwiseSimplicialSet;

pub use linalg::Echelon;
pub use lp::{solve_lp, LinearProgram, LpSolution};
pub use norms::{
  boundary_certificate, homology_q, is_homologous_zero, l1_seminorm, lambda_membership_value, normalized_seminorm, seminorm, solve_boundary_equation, HomologyQ, NormMode,
  Seminorm,
};

/// A finitely supported rational chain of one degree, indexed by simplex
/// position in its level. Never stores zeros or the base simplex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QChain {
  degree: usize,
  coeffs: BTreeMap<usize, Q>,
}

/// `{degree, coeffs: {label: "p/q"}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainJson {
  pub degree: usize,
  pub coeffs: BTreeMap<String, String>,
}

impl QChain {
  pub fn zero(degree: usize) -> Self { Self { degree, coeffs: BTreeMap::new() } }

  /// Drops zero coefficients and the base simplex.
  pub fn new(degree: usize, coeffs: impl IntoIterator<Item = (usize, Q)>) -> Self {
    let mut c = Self::zero(degree);
    for (s, v) in coeffs {
      c.add_term(s, &v);
    }
    c
  }

  pub fn single(degree: usize, simplex: usize, coeff: Q) -> Self { Self::new(degree, [(simplex, coeff)]) }

  pub fn degree(&self) -> usize { self.degree }

  pub fn coeffs(&self) -> &BTreeMap<usize, Q> { &self.coeffs }

  pub fn coeff(&self, s: usize) -> Q { self.coeffs.get(&s).cloned().unwrap_or_else(Q::zero) }

  pub fn is_zero(&self) -> bool { self.coeffs.is_empty() }

  pub fn support(&self) -> impl Iterator<Item = usize> + '_ { self.coeffs.keys().copied() }

  pub fn add_term(&mut self, s: usize, v: &Q) {
    if s == 0 || v.is_zero() {
      return;
    }
    let e = self.coeffs.entry(s).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
      self.coeffs.remove(&s);
    }
  }

  pub fn add_scaled(&mut self, other: &QChain, r: &Q) {
    debug_assert_eq!(self.degree, other.degree);
    for (&s, v) in &other.coeffs {
      self.add_term(s, &(v * r));
    }
  }

  pub fn plus(&self, other: &QChain) -> QChain {
    let mut c = self.clone();
    c.add_scaled(other, &Q::from_integer(1.into()));
    c
  }

  pub fn minus(&self, other: &QChain) -> QChain {
    let mut c = self.clone();
    c.add_scaled(other, &Q::from_integer((-1).into()));
    c
  }

  pub fn scaled(&self, r: &Q) -> QChain { QChain::new(self.degree, self.coeffs.iter().map(|(&s, v)| (s, v * r))) }

  /// `Σ |c(σ)|`.
  pub fn l1_norm(&self) -> Q { self.coeffs.values().fold(Q::zero(), |acc, v| acc + v.abs()) }

  /// `Σ_σ c(σ) w(σ)`.
  pub fn pairing(&self, w: &BTreeMap<usize, Q>) -> Q {
    self.coeffs.iter().filter_map(|(s, v)| w.get(s).map(|x| v * x)).fold(Q::zero(), |a, b| a + b)
  }

  pub fn to_json(&self, x: &LevelwiseSimplicialSet) -> ChainJson {
    let level = x.level(self.degree);
    ChainJson { degree: self.degree, coeffs: self.coeffs.iter().map(|(&s, v)| (level.label(s).to_string(), format_q(v))).collect() }
  }

  pub fn from_json(j: &ChainJson, x: &LevelwiseSimplicialSet) -> Result<Self> {
    if j.degree > x.dim_cap() {
      return Err(Error::InvalidChain(format!("degree {} exceeds the cap {}", j.degree, x.dim_cap())));
    }
    let level = x.level(j.degree);
    let mut c = QChain::zero(j.degree);
    for (label, v) in &j.coeffs {
      let s = level.index_of(label).ok_or_else(|| Error::InvalidChain(format!("unknown simplex {label:?}")))?;
      if s == 0 {
        return Err(Error::InvalidChain(format!("{label:?} is the base simplex")));
      }
      c.add_term(s, &parse_q(v)?);
    }
    Ok(c)
  }
}

fn check_degree(c: &QChain, x: &LevelwiseSimplicialSet, lo: usize, hi_slack: usize) -> Result<()> {
  if c.degree < lo || c.degree + hi_slack > x.dim_cap() {
    return Err(Error::InvalidChain(format!("degree {} out of range for cap {}", c.degree, x.dim_cap())));
  }
  Ok(())
}

/// `d_i` extended linearly; terms landing on the base vanish.
pub fn face(c: &QChain, x: &LevelwiseSimplicialSet, i: usize) -> Result<QChain> {
  check_degree(c, x, 1, 0)?;
  if i > c.degree {
    return Err(Error::IndexOutOfRange(format!("face d_{i} in degree {}", c.degree)));
  }
  Ok(QChain::new(c.degree - 1, c.coeffs.iter().map(|(&s, v)| (x.face(c.degree, i, s), v.clone()))))
}

/// `s_j` extended linearly.
pub fn degeneracy(c: &QChain, x: &LevelwiseSimplicialSet, j: usize) -> Result<QChain> {
  check_degree(c, x, 0, 1)?;
  if j > c.degree {
    return Err(Error::IndexOutOfRange(format!("degeneracy s_{j} in degree {}", c.degree)));
  }
  Ok(QChain::new(c.degree + 1, c.coeffs.iter().map(|(&s, v)| (x.degeneracy(c.degree, j, s), v.clone()))))
}

/// `∂ = Σ (−1)^j d_j`.
pub fn boundary(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<QChain> {
  check_degree(c, x, 1, 0)?;
  let n = c.degree;
  let mut out = QChain::zero(n - 1);
  for (&s, v) in &c.coeffs {
    for i in 0..=n {
      let t = x.face(n, i, s);
      if i % 2 == 0 {
        out.add_term(t, v);
      } else {
        out.add_term(t, &-v);
      }
    }
  }
  Ok(out)
}

/// Moore normalization: the factors `Id − s_j d_j` for `j = 0, …, n−1`,
/// applied in increasing `j`. Lands in `∩_{j<n} ker d_j`, kills degenerate
/// chains and has operator norm at most `2^n`.
pub fn normalize(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<QChain> {
  check_degree(c, x, 0, 0)?;
  let mut out = c.clone();
  for j in 0..c.degree {
    let correction = degeneracy(&face(&out, x, j)?, x, j)?;
    out = out.minus(&correction);
  }
  Ok(out)
}

/// Whether `d_j c = 0` for every `j < n`.
pub fn is_normalized(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<bool> {
  for j in 0..c.degree {
    if !face(c, x, j)?.is_zero() {
      return Ok(false);
    }
  }
  Ok(true)
}

/// Whether `∂c = 0` (degree-0 chains are cycles).
pub fn is_cycle(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<bool> {
  if c.degree == 0 {
    return Ok(true);
  }
  Ok(boundary(c, x)?.is_zero())
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::rational::{frac, q};
  use crate::simplicial::{minimal_torus, standard_simplex};

  #[test]
  fn boundary_of_edge() {
    let d1 = standard_simplex(1, 2).unwrap().to_levelwise();
    let e = d1.level(1).index_of("[0,1]").unwrap();
    let b = boundary(&QChain::single(1, e, q(1)), &d1).unwrap();
    // vertex [0] is the base, so only +[1] survives from d_0.
    assert_eq!(b, QChain::single(0, d1.level(0).index_of("[1]").unwrap(), q(1)));
  }

  #[test]
  fn degenerate_boundary_vanishes() {
    let d1 = standard_simplex(1, 2).unwrap().to_levelwise();
    let v = d1.level(0).index_of("[1]").unwrap();
    let s = degeneracy(&QChain::single(0, v, q(3)), &d1, 0).unwrap();
    assert!(boundary(&s, &d1).unwrap().is_zero());
    assert!(normalize(&s, &d1).unwrap().is_zero());
  }

  #[test]
  fn boundary_squares_to_zero() {
    let t = minimal_torus(3).unwrap().to_levelwise();
    for q_ in 2..=3 {
      for s in 1..t.size(q_) {
        let c = QChain::single(q_, s, frac(2, 3));
        assert!(boundary(&boundary(&c, &t).unwrap(), &t).unwrap().is_zero());
      }
    }
  }

  #[test]
  fn normalize_properties() {
    let t = minimal_torus(3).unwrap().to_levelwise();
    for n in 1..=3 {
      for s in 1..t.size(n) {
        let c = QChain::single(n, s, q(1));
        let p = normalize(&c, &t).unwrap();
        assert!(is_normalized(&p, &t).unwrap());
        assert_eq!(normalize(&p, &t).unwrap(), p);
        if t.is_degenerate(n, s) {
          assert!(p.is_zero());
        }
        assert!(p.l1_norm() <= q(1 << n));
        assert_eq!(boundary(&p, &t).unwrap(), normalize(&boundary(&c, &t).unwrap(), &t).unwrap());
      }
    }
  }

  #[test]
  fn json_roundtrip() {
    let t = minimal_torus(2).unwrap().to_levelwise();
    let c = QChain::new(2, [(1, frac(1, 2)), (3, q(-2))]);
    let j = c.to_json(&t);
    assert_eq!(QChain::from_json(&j, &t).unwrap(), c);
    let bad = ChainJson { degree: 2, coeffs: [("nope".to_string(), "1".to_string())].into() };
    assert!(QChain::from_json(&bad, &t).is_err());
  }
}
