//! Exact rational linear programming: two-phase dense tableau simplex with
//! Bland's rule. Runs over `i64`, then `i128` fractions, restarting over big
//! rationals on overflow; every tier is exact, so all pivot identically.

use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use super::linalg::SparseVec;
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bound {
  pub lower: Option<Q>,
  pub upper: Option<Q>,
}

impl Bound {
  pub fn nonnegative() -> Self { Self { lower: Some(Q::zero()), upper: None } }

  pub fn free() -> Self { Self::default() }

  pub fn boxed(lower: Q, upper: Q) -> Self { Self { lower: Some(lower), upper: Some(upper) } }
}

/// Minimize `objective · x` subject to `rows · x = rhs` and the bounds.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearProgram {
  pub objective: Vec<Q>,
  pub rows:      Vec<SparseVec>,
  pub rhs:       Vec<Q>,
  pub bounds:    Vec<Bound>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
  pub value: Q,
  pub x:     Vec<Q>,
}

impl LinearProgram {
  /// `n` nonnegative variables with zero objective and no rows.
  pub fn new(n: usize) -> Self {
    Self { objective: vec![Q::zero(); n], rows: Vec::new(), rhs: Vec::new(), bounds: vec![Bound::nonnegative(); n] }
  }

  pub fn variables(&self) -> usize { self.objective.len() }

  pub fn add_row(&mut self, row: SparseVec, rhs: Q) {
    self.rows.push(row);
    self.rhs.push(rhs);
  }

  fn validate(&self) -> Result<()> {
    let n = self.variables();
    if self.bounds.len() != n || self.rows.len() != self.rhs.len() {
      return Err(Error::MalformedProgram("dimensions disagree".into()));
    }
    if let Some(k) = self.rows.iter().flat_map(|r| r.keys()).find(|&&k| k >= n) {
      return Err(Error::MalformedProgram(format!("row mentions variable {k} of {n}")));
    }
    for (i, b) in self.bounds.iter().enumerate() {
      if let (Some(l), Some(u)) = (&b.lower, &b.upper) {
        if l > u {
          return Err(Error::MalformedProgram(format!("variable {i} has lower bound above upper bound")));
        }
      }
    }
    Ok(())
  }

  /// Checks a point against every constraint exactly.
  pub fn is_feasible(&self, x: &[Q]) -> bool {
    x.len() == self.variables()
      && self.bounds.iter().zip(x).all(|(b, v)| b.lower.as_ref().is_none_or(|l| v >= l) && b.upper.as_ref().is_none_or(|u| v <= u))
      && self.rows.iter().zip(&self.rhs).all(|(r, b)| r.iter().map(|(&k, a)| a * &x[k]).fold(Q::zero(), |s, t| s + t) == *b)
  }

  pub fn evaluate(&self, x: &[Q]) -> Q { self.objective.iter().zip(x).map(|(c, v)| c * v).fold(Q::zero(), |s, t| s + t) }
}

/// How an original variable is rebuilt from standard-form columns.
struct Substitution {
  offset: Q,
  terms:  Vec<(usize, Q)>,
}

pub fn solve_lp(p: &LinearProgram) -> Result<LpSolution> {
  p.validate()?;
  // Rewrite as min c·y, A y = b, y ≥ 0.
  let mut subs = Vec::with_capacity(p.variables());
  let mut columns = 0usize;
  let mut extra_rows: Vec<(Vec<(usize, Q)>, Q)> = Vec::new();
  for b in &p.bounds {
    let sub = match (&b.lower, &b.upper) {
      (Some(l), Some(u)) => {
        let (y, slack) = (columns, columns + 1);
        columns += 2;
        extra_rows.push((vec![(y, Q::one()), (slack, Q::one())], u - l));
        Substitution { offset: l.clone(), terms: vec![(y, Q::one())] }
      }
      (Some(l), None) => {
        columns += 1;
        Substitution { offset: l.clone(), terms: vec![(columns - 1, Q::one())] }
      }
      (None, Some(u)) => {
        columns += 1;
        Substitution { offset: u.clone(), terms: vec![(columns - 1, -Q::one())] }
      }
      (None, None) => {
        columns += 2;
        Substitution { offset: Q::zero(), terms: vec![(columns - 2, Q::one()), (columns - 1, -Q::one())] }
      }
    };
    subs.push(sub);
  }
  let mut cost = vec![Q::zero(); columns];
  let mut constant = Q::zero();
  for (c, s) in p.objective.iter().zip(&subs) {
    constant += c * &s.offset;
    for (col, sign) in &s.terms {
      cost[*col] += c * sign;
    }
  }
  let mut a: Vec<Vec<Q>> = Vec::new();
  let mut b: Vec<Q> = Vec::new();
  for (row, rhs) in p.rows.iter().zip(&p.rhs) {
    let mut dense = vec![Q::zero(); columns];
    let mut r = rhs.clone();
    for (&k, coef) in row {
      r -= coef * &subs[k].offset;
      for (col, sign) in &subs[k].terms {
        dense[*col] += coef * sign;
      }
    }
    a.push(dense);
    b.push(r);
  }
  for (terms, r) in extra_rows {
    let mut dense = vec![Q::zero(); columns];
    for (col, v) in terms {
      dense[col] = v;
    }
    a.push(dense);
    b.push(r);
  }
  let y = solve_standard(&a, &b, &cost)?;
  let x: Vec<Q> = subs
    .iter()
    .map(|s| s.terms.iter().fold(s.offset.clone(), |acc, (col, sign)| acc + sign * &y[*col]))
    .collect();
  let value = p.evaluate(&x);
  debug_assert_eq!(value, cost.iter().zip(&y).map(|(c, v)| c * v).fold(constant, |s, t| s + t));
  Ok(LpSolution { value, x })
}

/// Exact scalars the tableau runs over. Arithmetic returns `None` on
/// overflow, which restarts the solve over `BigRational`.
trait Exact: Sized + Clone + PartialOrd {
  fn from_q(x: &Q) -> Option<Self>;
  fn to_q(&self) -> Q;
  fn nil() -> Self;
  fn unit() -> Self;
  fn vanishes(&self) -> bool;
  fn below_zero(&self) -> bool;
  fn above_zero(&self) -> bool;
  fn minus(&self, o: &Self) -> Option<Self>;
  fn times(&self, o: &Self) -> Option<Self>;
  fn over(&self, o: &Self) -> Option<Self>;
}

impl Exact for Q {
  fn from_q(x: &Q) -> Option<Self> { Some(x.clone()) }

  fn to_q(&self) -> Q { self.clone() }

  fn nil() -> Self { Zero::zero() }

  fn unit() -> Self { One::one() }

  fn vanishes(&self) -> bool { Zero::is_zero(self) }

  fn below_zero(&self) -> bool { Signed::is_negative(self) }

  fn above_zero(&self) -> bool { Signed::is_positive(self) }

  fn minus(&self, o: &Self) -> Option<Self> { Some(self - o) }

  fn times(&self, o: &Self) -> Option<Self> { Some(self * o) }

  fn over(&self, o: &Self) -> Option<Self> { Some(self / o) }

}

macro_rules! machine_ratio {
  ($t:ty) => {
    impl Exact for Ratio<$t> {
      fn from_q(x: &Q) -> Option<Self> {
        Some(Ratio::new_raw(<$t>::try_from(x.numer()).ok()?, <$t>::try_from(x.denom()).ok()?))
      }

      fn to_q(&self) -> Q { Q::new((*self.numer()).into(), (*self.denom()).into()) }

      fn nil() -> Self { Zero::zero() }

      fn unit() -> Self { One::one() }

      fn vanishes(&self) -> bool { *self.numer() == 0 }

      fn below_zero(&self) -> bool { *self.numer() < 0 }

      fn above_zero(&self) -> bool { *self.numer() > 0 }

      fn minus(&self, o: &Self) -> Option<Self> { self.checked_sub(o) }

      fn times(&self, o: &Self) -> Option<Self> { self.checked_mul(o) }

      fn over(&self, o: &Self) -> Option<Self> { self.checked_div(o) }
    }
  };
}

machine_ratio!(i64);
machine_ratio!(i128);

enum Halt {
  Lp(Error),
  Overflow,
}

impl From<Error> for Halt {
  fn from(e: Error) -> Self { Halt::Lp(e) }
}

type Step<T> = std::result::Result<T, Halt>;

fn ok<T>(v: Option<T>) -> Step<T> { v.ok_or(Halt::Overflow) }

/// Standard form `min c·y, A y = b, y ≥ 0`; returns an optimal `y`.
fn solve_standard(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> Result<Vec<Q>> {
  let attempts: [fn(&[Vec<Q>], &[Q], &[Q]) -> Step<Vec<Q>>; 3] =
    [Tableau::<Ratio<i64>>::solve, Tableau::<Ratio<i128>>::solve, Tableau::<Q>::solve];
  for attempt in attempts {
    match attempt(a, b, c) {
      Ok(y) => return Ok(y),
      Err(Halt::Lp(e)) => return Err(e),
      Err(Halt::Overflow) => continue,
    }
  }
  unreachable!("big rationals do not overflow")
}

struct Tableau<T> {
  rows:    Vec<Vec<T>>,
  cost:    Vec<T>,
  basis:   Vec<usize>,
  allowed: usize,
}

impl<T: Exact> Tableau<T> {
  fn solve(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> Step<Vec<Q>> {
    let (m, n) = (a.len(), c.len());
    // Columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, r)) in a.iter().zip(b).enumerate() {
      let flip = Signed::is_negative(r);
      let conv = |v: &Q| ok(T::from_q(&if flip { -v } else { v.clone() }));
      let mut full = row.iter().map(conv).collect::<Step<Vec<T>>>()?;
      full.resize(width, T::nil());
      full[n + i] = T::unit();
      full[width - 1] = conv(r)?;
      rows.push(full);
    }
    let mut cost = vec![T::nil(); width];
    for row in &rows {
      for j in (0..n).chain([width - 1]) {
        if !row[j].vanishes() {
          cost[j] = ok(cost[j].minus(&row[j]))?;
        }
      }
    }
    let mut t = Tableau { rows, cost, basis: (n..n + m).collect(), allowed: n + m };
    t.run()?;
    if !t.cost[width - 1].vanishes() {
      return Err(Error::Infeasible.into());
    }
    t.drive_out_artificials(n)?;
    t.allowed = n;
    t.cost = c.iter().map(|v| ok(T::from_q(v))).collect::<Step<Vec<T>>>()?;
    t.cost.resize(width, T::nil());
    for (i, &bv) in t.basis.iter().enumerate() {
      let cb = ok(T::from_q(&c[bv]))?;
      if cb.vanishes() {
        continue;
      }
      for j in 0..width {
        if !t.rows[i][j].vanishes() {
          t.cost[j] = ok(t.cost[j].minus(&ok(cb.times(&t.rows[i][j]))?))?;
        }
      }
    }
    t.run()?;
    let mut y = vec![Q::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
      if bv < n {
        y[bv] = t.rows[i][width - 1].to_q();
      }
    }
    Ok(y)
  }

  fn rhs(&self) -> usize { self.cost.len() - 1 }

  fn run(&mut self) -> Step<()> {
    loop {
      // Bland: least improving column, then least basic index among ties.
      let Some(q) = (0..self.allowed).find(|&j| self.cost[j].below_zero()) else { return Ok(()) };
      let rhs = self.rhs();
      let mut best: Option<(usize, T)> = None;
      for (i, row) in self.rows.iter().enumerate() {
        if !row[q].above_zero() {
          continue;
        }
        let ratio = ok(row[rhs].over(&row[q]))?;
        let better = match &best {
          None => true,
          Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
        };
        if better {
          best = Some((i, ratio));
        }
      }
      let (p, _) = best.ok_or(Error::Unbounded)?;
      self.pivot(p, q)?;
    }
  }

  fn pivot(&mut self, p: usize, q: usize) -> Step<()> {
    let inv = ok(T::unit().over(&self.rows[p][q]))?;
    let nz: Vec<usize> = (0..self.rows[p].len()).filter(|&j| !self.rows[p][j].vanishes()).collect();
    for &j in &nz {
      self.rows[p][j] = ok(self.rows[p][j].times(&inv))?;
    }
    let pivot_row = std::mem::take(&mut self.rows[p]);
    let eliminate = |row: &mut Vec<T>| -> Step<()> {
      if row[q].vanishes() {
        return Ok(());
      }
      let f = row[q].clone();
      for &j in &nz {
        row[j] = ok(row[j].minus(&ok(f.times(&pivot_row[j]))?))?;
      }
      Ok(())
    };
    for (i, row) in self.rows.iter_mut().enumerate() {
      if i != p {
        eliminate(row)?;
      }
    }
    eliminate(&mut self.cost)?;
    self.rows[p] = pivot_row;
    self.basis[p] = q;
    Ok(())
  }

  /// Pivots zero-valued artificials out of the basis; drops redundant rows.
  fn drive_out_artificials(&mut self, n: usize) -> Step<()> {
    let mut i = 0;
    while i < self.rows.len() {
      if self.basis[i] < n {
        i += 1;
        continue;
      }
      match (0..n).find(|&j| !self.rows[i][j].vanishes()) {
        Some(j) => {
          self.pivot(i, j)?;
          i += 1;
        }
        None => {
          self.rows.remove(i);
          self.basis.remove(i);
        }
      }
    }
    Ok(())
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::rational::{frac, q};

  fn row(entries: &[(usize, i64)]) -> SparseVec { entries.iter().map(|&(k, v)| (k, q(v))).collect() }

  #[test]
  fn fixed_value() {
    let mut p = LinearProgram::new(1);
    p.objective = vec![q(1)];
    p.add_row(row(&[(0, 1)]), q(1));
    assert_eq!(solve_lp(&p).unwrap().value, q(1));
  }

  #[test]
  fn two_variables() {
    let mut p = LinearProgram::new(2);
    p.objective = vec![q(1), q(1)];
    p.add_row(row(&[(0, 1), (1, -1)]), q(0));
    p.bounds[0].lower = Some(q(1));
    let s = solve_lp(&p).unwrap();
    assert_eq!(s.value, q(2));
    assert!(p.is_feasible(&s.x));
  }

  #[test]
  fn infeasible_and_unbounded() {
    let mut p = LinearProgram::new(1);
    p.add_row(row(&[(0, 1)]), q(-1));
    assert_eq!(solve_lp(&p), Err(Error::Infeasible));
    let mut u = LinearProgram::new(2);
    u.objective = vec![q(-1), q(0)];
    u.add_row(row(&[(0, 1), (1, -1)]), q(0));
    assert_eq!(solve_lp(&u), Err(Error::Unbounded));
  }

  #[test]
  fn free_and_upper_bounds() {
    // min |x − 1/3| written as u + v with x free.
    let mut p = LinearProgram::new(3);
    p.bounds[0] = Bound::free();
    p.objective = vec![q(0), q(1), q(1)];
    p.add_row(row(&[(0, 1), (1, -1), (2, 1)]), frac(1, 3));
    p.bounds[0].upper = Some(q(0));
    let s = solve_lp(&p).unwrap();
    assert_eq!(s.value, frac(1, 3));
  }

  #[test]
  fn redundant_rows() {
    let mut p = LinearProgram::new(2);
    p.objective = vec![q(1), q(2)];
    p.add_row(row(&[(0, 1), (1, 1)]), q(3));
    p.add_row(row(&[(0, 2), (1, 2)]), q(6));
    assert_eq!(solve_lp(&p).unwrap().value, q(3));
  }

  #[test]
  fn malformed() {
    let mut p = LinearProgram::new(1);
    p.add_row(row(&[(4, 1)]), q(0));
    assert!(matches!(solve_lp(&p), Err(Error::MalformedProgram(_))));
  }
}
