//! The loop endofunctor Ω and the combinatorial homotopy sets π^comb.

use super::levelwise::LevelwiseSimplicialSet;
use crate::error::{Error, Result};
use crate::gamma::FinPointedSet;
use crate::union_find::UnionFind;

/// Whether every face of `x ∈ X_q` of degree `target` is the base point.
/// Only the monotone face composites are visited, level by level.
pub fn faces_vanish_to(x_set: &LevelwiseSimplicialSet, q: usize, x: usize, target: usize) -> bool {
  let mut frontier = vec![x];
  let mut degree = q;
  while degree > target {
    let mut next: Vec<usize> = Vec::new();
    for &y in &frontier {
      for i in 0..=degree {
        let f = x_set.face(degree, i, y);
        if f != 0 && !next.contains(&f) {
          next.push(f);
        }
      }
    }
    if next.is_empty() {
      return true;
    }
    frontier = next;
    degree -= 1;
  }
  frontier.iter().all(|&y| y == 0)
}

/// Membership in `Ω^n(X)_k ⊆ X_{n+k}`: `d_j x = *` for `j < n` and every
/// face of degree `n − 1` is the base point.
pub fn in_iterated_loop(x_set: &LevelwiseSimplicialSet, n: usize, k: usize, x: usize) -> bool {
  if n == 0 {
    return true;
  }
  let q = n + k;
  (0..n).all(|j| x_set.face(q, j, x) == 0) && faces_vanish_to(x_set, q, x, n - 1)
}

/// `Ω^n(X)` from the closed description, with structure maps `d_{j+n}`, `s_{j+n}`.
pub fn omega_n(x: &LevelwiseSimplicialSet, n: usize) -> Result<LevelwiseSimplicialSet> {
  let cap = x.dim_cap();
  if n > cap {
    return Err(Error::InsufficientCap(format!("Omega^{n} needs cap at least {n}, got {cap}")));
  }
  let keep: Vec<Vec<usize>> =
    (0..=cap - n).map(|k| (0..x.size(n + k)).filter(|&s| in_iterated_loop(x, n, k, s)).collect()).collect();
  Ok(x.restrict(&keep, n))
}

/// One application of Ω.
pub fn omega(x: &LevelwiseSimplicialSet) -> Result<LevelwiseSimplicialSet> {
  if x.dim_cap() < 1 {
    return Err(Error::InsufficientCap("Omega needs cap at least 1".into()));
  }
  omega_n(x, 1)
}

/// Degrees 0 and 1 of `Ω^n(X)` as subsets of `X_n` and `X_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaLevels {
  /// Indices into `X_n`, base first.
  pub set0:    Vec<usize>,
  /// Indices into `X_{n+1}`, base first.
  pub set1:    Vec<usize>,
  /// `d_n` on `set1`, as positions in `set0`.
  pub left:    Vec<usize>,
  /// `d_{n+1}` on `set1`, as positions in `set0`.
  pub right:   Vec<usize>,
  /// `s_n` on `set0`, as positions in `set1`.
  pub section: Vec<usize>,
}

pub fn omega_n_levels(x: &LevelwiseSimplicialSet, n: usize) -> Result<OmegaLevels> {
  if x.dim_cap() < n + 1 {
    return Err(Error::InsufficientCap(format!("degree {n} needs cap at least {}, got {}", n + 1, x.dim_cap())));
  }
  let set0: Vec<usize> = (0..x.size(n)).filter(|&s| in_iterated_loop(x, n, 0, s)).collect();
  let set1: Vec<usize> = (0..x.size(n + 1)).filter(|&s| in_iterated_loop(x, n, 1, s)).collect();
  let pos0: std::collections::HashMap<usize, usize> = set0.iter().enumerate().map(|(i, &s)| (s, i)).collect();
  let pos1: std::collections::HashMap<usize, usize> = set1.iter().enumerate().map(|(i, &s)| (s, i)).collect();
  let left = set1.iter().map(|&s| pos0[&x.face(n + 1, n, s)]).collect();
  let right = set1.iter().map(|&s| pos0[&x.face(n + 1, n + 1, s)]).collect();
  let section = set0.iter().map(|&s| pos1[&x.degeneracy(n, n, s)]).collect();
  Ok(OmegaLevels { set0, set1, left, right, section })
}

/// Classes of a relation given by edge lists, numbered by minimal member.
pub fn quotient_classes(size: usize, left: &[usize], right: &[usize]) -> (Vec<usize>, Vec<usize>) {
  let mut uf = UnionFind::new(size);
  for (&a, &b) in left.iter().zip(right) {
    uf.union(a, b);
  }
  uf.classes()
}

/// `π^comb_0`: `X_0` modulo the equivalence generated by `d_0 e ~ d_1 e`.
pub fn pi_comb_0(x: &LevelwiseSimplicialSet) -> Result<FinPointedSet> { pi_comb_n(x, 0) }

/// `π^comb_n = π^comb_0 ∘ Ω^n`, labelled by class minima.
pub fn pi_comb_n(x: &LevelwiseSimplicialSet, n: usize) -> Result<FinPointedSet> {
  let lv = omega_n_levels(x, n)?;
  let (_, mins) = quotient_classes(lv.set0.len(), &lv.left, &lv.right);
  FinPointedSet::new(mins.iter().map(|&m| x.level(n).label(lv.set0[m]).to_string()).collect(), 0)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::simplicial::construct::{sphere, standard_simplex};

  #[test]
  fn omega_of_circle() {
    let s1 = sphere(1, 3).unwrap().to_levelwise();
    let o = omega(&s1).unwrap();
    assert_eq!(o.level(0).elements(), &["*".to_string(), "id".to_string()]);
    o.check_identities().unwrap();
    let pt = LevelwiseSimplicialSet::point(2);
    assert_eq!(omega(&pt).unwrap(), LevelwiseSimplicialSet::point(1));
  }

  #[test]
  fn iterated_matches_closed_form() {
    for x in [sphere(1, 4).unwrap(), sphere(2, 4).unwrap(), standard_simplex(2, 4).unwrap()] {
      let l = x.to_levelwise();
      let twice = omega(&omega(&l).unwrap()).unwrap();
      let closed = omega_n(&l, 2).unwrap();
      assert_eq!(twice, closed);
    }
  }

  #[test]
  fn sphere_levels() {
    for n in 1..=3 {
      let s = sphere(n, n + 1).unwrap().to_levelwise();
      let lv = omega_n_levels(&s, n).unwrap();
      assert_eq!(lv.set0.len(), 2);
      assert_eq!(lv.set1.len(), 2);
      assert_eq!(s.level(n + 1).label(lv.set1[1]), format!("s{n}(id)"));
      assert_eq!((lv.left[1], lv.right[1]), (1, 1));
    }
  }

  #[test]
  fn simplex_has_trivial_loops() {
    let d1 = standard_simplex(1, 2).unwrap().to_levelwise();
    assert_eq!(omega_n_levels(&d1, 1).unwrap().set0, vec![0]);
    assert_eq!(pi_comb_0(&d1).unwrap().len(), 1);
  }

  #[test]
  fn sphere_homotopy() {
    for n in 0..=3 {
      let s = sphere(n, 4).unwrap().to_levelwise();
      for m in 0..=3 {
        let expected = if m == n { 2 } else { 1 };
        assert_eq!(pi_comb_n(&s, m).unwrap().len(), expected, "pi_{m}(S^{n})");
      }
    }
  }
}
