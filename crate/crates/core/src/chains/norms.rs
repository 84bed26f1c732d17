//! Rational homology and the ℓ¹ / normalized seminorms of homology classes.

use num_traits::{One, Signed, Zero};

use super::linalg::{dot, Echelon, SparseVec};
use super::lp::{solve_lp, Bound, LinearProgram};
use super::{boundary, is_cycle, normalize, QChain};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::simplicial::LevelwiseSimplicialSet;

/// Reduced rational homology in one degree.
#[derive(Clone, Debug)]
pub struct HomologyQ {
  pub degree:      usize,
  pub betti:       usize,
  /// Normalized cycles whose classes form a basis.
  pub cycle_basis: Vec<QChain>,
  /// Cocycles dual to `cycle_basis`, vanishing on degenerate simplices.
  pub cocycles:    Vec<SparseVec>,
}

impl HomologyQ {
  /// Coordinates of the class of a cycle in `cycle_basis`.
  pub fn coordinates(&self, z: &QChain) -> Vec<Q> { self.cocycles.iter().map(|k| z.pairing(k)).collect() }
}

fn nondegenerate(x: &LevelwiseSimplicialSet, q: usize) -> impl Iterator<Item = usize> + '_ {
  (1..x.size(q)).filter(move |&s| !x.is_degenerate(q, s))
}

/// Boundary in the complex modulo degenerate simplices.
fn reduced_boundary(x: &LevelwiseSimplicialSet, q: usize, s: usize) -> SparseVec {
  let mut out = SparseVec::new();
  for i in 0..=q {
    let t = x.face(q, i, s);
    if t == 0 || x.is_degenerate(q - 1, t) {
      continue;
    }
    let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
    let e = out.entry(t).or_insert_with(Q::zero);
    *e += sign;
    if e.is_zero() {
      out.remove(&t);
    }
  }
  out
}

pub fn homology_q(x: &LevelwiseSimplicialSet, n: usize) -> Result<HomologyQ> {
  if n + 1 > x.dim_cap() {
    return Err(Error::InsufficientCap(format!("homology in degree {n} needs cap {}, have {}", n + 1, x.dim_cap())));
  }
  let basis: Vec<usize> = nondegenerate(x, n).collect();
  let cycles: Vec<SparseVec> = if n == 0 {
    basis.iter().map(|&s| [(s, Q::one())].into()).collect()
  } else {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for &s in &basis {
      if let Some(rel) = e.insert(reduced_boundary(x, n, s)) {
        out.push(rel.into_iter().map(|(t, a)| (basis[t], a)).collect());
      }
    }
    out
  };
  let mut boundaries = Echelon::new();
  let mut independent = Vec::new();
  for s in nondegenerate(x, n + 1) {
    let b = reduced_boundary(x, n + 1, s);
    if boundaries.insert(b.clone()).is_none() {
      independent.push(b);
    }
  }
  let mut classes = Vec::new();
  for z in cycles {
    if boundaries.insert(z.clone()).is_none() {
      classes.push(z);
    }
  }
  let mut dual = Echelon::new();
  for v in independent.iter().chain(&classes) {
    dual.insert(v.clone());
  }
  let nb = independent.len();
  let mut cocycles = Vec::with_capacity(classes.len());
  for k in 0..classes.len() {
    let values: Vec<Q> = (0..nb + classes.len()).map(|t| if t == nb + k { Q::one() } else { Q::zero() }).collect();
    cocycles.push(dual.dual_solve(&values)?);
  }
  let cycle_basis =
    classes.iter().map(|z| normalize(&QChain::new(n, z.iter().map(|(&s, a)| (s, a.clone()))), x)).collect::<Result<Vec<_>>>()?;
  debug_assert!(classes.iter().zip(&cocycles).all(|(z, k)| dot(z, k).is_one()));
  Ok(HomologyQ { degree: n, betti: classes.len(), cycle_basis, cocycles })
}

fn require_cycle(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<()> {
  if c.degree() + 1 > x.dim_cap() {
    return Err(Error::InsufficientCap(format!("degree {} needs cap {}", c.degree(), c.degree() + 1)));
  }
  if !is_cycle(c, x)? {
    return Err(Error::NotACycle(format!("boundary of the degree-{} chain is nonzero", c.degree())));
  }
  Ok(())
}

/// A chain `ψ` with `∂ψ = c`, if one exists. `support` restricts `ψ` to the
/// listed `(n+1)`-simplices.
pub fn boundary_certificate(c: &QChain, x: &LevelwiseSimplicialSet, support: Option<&[usize]>) -> Result<Option<QChain>> {
  require_cycle(c, x)?;
  solve_boundary_equation(c, x, support)
}

/// Solves `∂ψ = target` without first checking that `target` is a cycle, so
/// an unsolvable system is reported as `None` rather than an error.
pub fn solve_boundary_equation(target: &QChain, x: &LevelwiseSimplicialSet, support: Option<&[usize]>) -> Result<Option<QChain>> {
  let n = target.degree();
  if n + 1 > x.dim_cap() {
    return Err(Error::InsufficientCap(format!("degree {n} needs cap {}", n + 1)));
  }
  let candidates: Vec<usize> = match support {
    Some(s) => s.to_vec(),
    None => (1..x.size(n + 1)).collect(),
  };
  let mut e = Echelon::new();
  for &s in &candidates {
    if s == 0 || s >= x.size(n + 1) {
      return Err(Error::IndexOutOfRange(format!("simplex {s} in degree {}", n + 1)));
    }
    e.insert(boundary(&QChain::single(n + 1, s, Q::one()), x)?.coeffs().clone());
  }
  Ok(e.solve(target.coeffs()).map(|y| QChain::new(n + 1, y.into_iter().map(|(t, a)| (candidates[t], a)))))
}

pub fn is_homologous_zero(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<Option<QChain>> { boundary_certificate(c, x, None) }

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormMode {
  /// Over all cycles in the class.
  L1,
  /// Over cycles with every face zero.
  Normalized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seminorm {
  pub value:   Q,
  /// An optimal representing cycle.
  pub witness: QChain,
}

/// `min ‖φ‖` over cycles `φ` homologous to `c`, normalized in that mode.
pub fn seminorm(c: &QChain, x: &LevelwiseSimplicialSet, mode: NormMode) -> Result<Seminorm> {
  require_cycle(c, x)?;
  let n = c.degree();
  if n == 0 {
    return Err(Error::InvalidChain("seminorms are defined from degree 1".into()));
  }
  let h = homology_q(x, n)?;
  let sims: Vec<usize> = (1..x.size(n)).collect();
  let m = sims.len();
  // φ_σ = u_σ − v_σ with u at column σ−1 and v at column m+σ−1.
  let mut lp = LinearProgram::new(2 * m);
  lp.objective = vec![Q::one(); 2 * m];
  lp.bounds = vec![Bound::nonnegative(); 2 * m];
  let mut push = |row: SparseVec, rhs: Q| {
    if !row.is_empty() {
      lp.add_row(row, rhs);
    } else {
      debug_assert!(rhs.is_zero());
    }
  };
  let rows_for = |i: usize| -> Vec<SparseVec> {
    let mut rows: Vec<SparseVec> = vec![SparseVec::new(); x.size(n - 1)];
    for &s in &sims {
      let t = x.face(n, i, s);
      if t == 0 {
        continue;
      }
      let sign = match mode {
        NormMode::Normalized => Q::one(),
        NormMode::L1 if i % 2 == 0 => Q::one(),
        NormMode::L1 => -Q::one(),
      };
      for (col, sg) in [(s - 1, sign.clone()), (m + s - 1, -sign)] {
        let e = rows[t].entry(col).or_insert_with(Q::zero);
        *e += sg;
        if e.is_zero() {
          rows[t].remove(&col);
        }
      }
    }
    rows
  };
  match mode {
    NormMode::Normalized => {
      for i in 0..=n {
        rows_for(i).into_iter().for_each(|r| push(r, Q::zero()));
      }
    }
    NormMode::L1 => {
      let mut total: Vec<SparseVec> = vec![SparseVec::new(); x.size(n - 1)];
      for i in 0..=n {
        for (t, r) in rows_for(i).into_iter().enumerate() {
          for (col, a) in r {
            let e = total[t].entry(col).or_insert_with(Q::zero);
            *e += a;
            if e.is_zero() {
              total[t].remove(&col);
            }
          }
        }
      }
      total.into_iter().for_each(|r| push(r, Q::zero()));
    }
  }
  for zeta in &h.cocycles {
    let mut row = SparseVec::new();
    for (&s, a) in zeta {
      row.insert(s - 1, a.clone());
      row.insert(m + s - 1, -a);
    }
    push(row, c.pairing(zeta));
  }
  let sol = solve_lp(&lp)?;
  let witness = QChain::new(n, sims.iter().map(|&s| (s, &sol.x[s - 1] - &sol.x[m + s - 1])));
  debug_assert_eq!(witness.l1_norm(), sol.value);
  Ok(Seminorm { value: sol.value, witness })
}

pub fn l1_seminorm(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<Q> { Ok(seminorm(c, x, NormMode::L1)?.value) }

pub fn normalized_seminorm(c: &QChain, x: &LevelwiseSimplicialSet) -> Result<Q> { Ok(seminorm(c, x, NormMode::Normalized)?.value) }

/// Whether `Σ_j ‖c_j‖^nor < λ`.
pub fn lambda_membership_value(classes: &[QChain], x: &LevelwiseSimplicialSet, lambda: &Q) -> Result<bool> {
  if !lambda.is_positive() {
    return Err(Error::NonPositiveLambda(crate::rational::format_q(lambda)));
  }
  let mut total = Q::zero();
  for c in classes {
    total += normalized_seminorm(c, x)?;
  }
  Ok(total < *lambda)
}
