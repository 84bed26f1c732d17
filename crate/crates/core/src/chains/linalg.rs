//! Sparse exact row echelon form over `Q`.
//!
//! Each stored row has a distinct pivot, its least key. Rows remember how
//! they combine the inserted vectors, which gives kernels, solutions and
//! dual bases without a second pass.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Q;

pub type SparseVec = BTreeMap<usize, Q>;

fn axpy(y: &mut SparseVec, a: &Q, x: &SparseVec) {
  for (&k, v) in x {
    let e = y.entry(k).or_insert_with(Q::zero);
    *e += a * v;
    if e.is_zero() {
      y.remove(&k);
    }
  }
}

#[derive(Clone, Debug)]
struct Row {
  vec: SparseVec,
  /// Combination of inserted vectors equal to `vec`.
  tag: SparseVec,
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
  rows:     Vec<Row>,
  pivot_of: BTreeMap<usize, usize>,
  inserted: usize,
}

impl Echelon {
  pub fn new() -> Self { Self::default() }

  pub fn rank(&self) -> usize { self.rows.len() }

  /// Number of vectors inserted so far, dependent ones included.
  pub fn inserted(&self) -> usize { self.inserted }

  /// Subtracts stored rows until no pivot key remains. Returns the residual
  /// and the combination of inserted vectors that was subtracted.
  pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
    let mut r = v.clone();
    let mut used = SparseVec::new();
    let mut cursor = 0;
    while let Some((k, row)) = r.range(cursor..).find_map(|(&k, _)| self.pivot_of.get(&k).map(|&i| (k, &self.rows[i]))) {
      let factor = -(&r[&k] / &row.vec[&k]);
      axpy(&mut r, &factor, &row.vec);
      axpy(&mut used, &-&factor, &row.tag);
      cursor = k + 1;
    }
    (r, used)
  }

  pub fn contains(&self, v: &SparseVec) -> bool { self.reduce(v).0.is_empty() }

  /// Inserts `v` as vector number `inserted()`. When `v` depends on earlier
  /// vectors, returns the relation `Σ a_t v_t = 0` (with `a_v = 1`).
  pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
    let id = self.inserted;
    self.inserted += 1;
    let (r, used) = self.reduce(&v);
    let mut tag = SparseVec::new();
    tag.insert(id, Q::from_integer(1.into()));
    axpy(&mut tag, &Q::from_integer((-1).into()), &used);
    match r.keys().next().copied() {
      None => Some(tag),
      Some(p) => {
        self.pivot_of.insert(p, self.rows.len());
        self.rows.push(Row { vec: r, tag });
        None
      }
    }
  }

  /// Coefficients `y` with `Σ y_t v_t = target`, if `target` is in the span.
  pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
    let (r, used) = self.reduce(target);
    r.is_empty().then_some(used)
  }

  /// A functional `ζ` with `ζ(v_t) = values[t]` for every inserted `v_t`.
  /// Requires the inserted vectors to be independent.
  pub fn dual_solve(&self, values: &[Q]) -> Result<SparseVec> {
    if self.rows.len() != self.inserted || values.len() != self.inserted {
      return Err(Error::InvalidChain("dual basis needs independent vectors and one value each".into()));
    }
    let mut zeta = SparseVec::new();
    for (&p, &ri) in self.pivot_of.iter().rev() {
      let row = &self.rows[ri];
      let target: Q = row.tag.iter().map(|(&t, a)| a * &values[t]).fold(Q::zero(), |x, y| x + y);
      let known: Q = row.vec.iter().filter(|(&k, _)| k != p).filter_map(|(k, v)| zeta.get(k).map(|z| z * v)).fold(Q::zero(), |x, y| x + y);
      let z = (target - known) / &row.vec[&p];
      if !z.is_zero() {
        zeta.insert(p, z);
      }
    }
    Ok(zeta)
  }
}

pub fn dot(a: &SparseVec, b: &SparseVec) -> Q {
  let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
  small.iter().filter_map(|(k, v)| large.get(k).map(|w| v * w)).fold(Q::zero(), |x, y| x + y)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::rational::q;

  fn v(entries: &[(usize, i64)]) -> SparseVec { entries.iter().map(|&(k, x)| (k, q(x))).collect() }

  #[test]
  fn detects_dependency() {
    let mut e = Echelon::new();
    assert!(e.insert(v(&[(0, 1), (1, 1)])).is_none());
    assert!(e.insert(v(&[(1, 1), (2, 1)])).is_none());
    let rel = e.insert(v(&[(0, 1), (2, -1)])).unwrap();
    // v0 − v1 − v2 = 0
    assert_eq!(rel, v(&[(0, -1), (1, 1), (2, 1)]));
    assert_eq!(e.rank(), 2);
  }

  #[test]
  fn solves_in_span() {
    let mut e = Echelon::new();
    e.insert(v(&[(0, 2), (3, 1)]));
    e.insert(v(&[(3, 1), (5, 1)]));
    let y = e.solve(&v(&[(0, 4), (3, 3), (5, 1)])).unwrap();
    assert_eq!(y, v(&[(0, 2), (1, 1)]));
    assert!(e.solve(&v(&[(5, 1)])).is_none());
  }

  #[test]
  fn dual_basis() {
    let mut e = Echelon::new();
    let vs = [v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 3)]), v(&[(0, 1), (2, 1)])];
    for x in &vs {
      assert!(e.insert(x.clone()).is_none());
    }
    for target in 0..3 {
      let values: Vec<Q> = (0..3).map(|t| q((t == target) as i64)).collect();
      let z = e.dual_solve(&values).unwrap();
      for (t, x) in vs.iter().enumerate() {
        assert_eq!(dot(&z, x), values[t]);
      }
    }
  }
}
