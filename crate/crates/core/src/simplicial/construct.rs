//! Standard finite simplicial sets.

use super::monotone;
use super::truncated::{Simplex, TruncatedSimplicialSet};
use crate::error::{Error, Result};

fn base_in(degree: usize) -> Simplex { Simplex { generator: 0, surjection: vec![0; degree + 1] } }

pub fn point(dim_cap: usize) -> TruncatedSimplicialSet {
  TruncatedSimplicialSet::new(dim_cap, vec![("*".into(), 0)], vec![vec![]], 0).expect("one point")
}

/// `Δ[n]` pointed at the vertex `0`; generators are the faces `[v_0,…,v_m]`.
pub fn standard_simplex(n: usize, dim_cap: usize) -> Result<TruncatedSimplicialSet> {
  if n > dim_cap {
    return Err(Error::InsufficientCap(format!("Delta[{n}] needs cap at least {n}, got {dim_cap}")));
  }
  let mut subsets: Vec<Vec<usize>> = (1u32..(1 << (n + 1)))
    .map(|mask| (0..=n).filter(|&v| mask & (1 << v) != 0).collect())
    .collect();
  subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
  let label = |s: &[usize]| format!("[{}]", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
  let index: std::collections::HashMap<Vec<usize>, usize> = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
  let generators = subsets.iter().map(|s| (label(s), s.len() - 1)).collect();
  let faces = subsets
    .iter()
    .map(|s| {
      if s.len() == 1 {
        return vec![];
      }
      (0..s.len())
        .map(|i| {
          let mut f = s.clone();
          f.remove(i);
          Simplex::nondegenerate(index[&f], f.len() - 1)
        })
        .collect()
    })
    .collect();
  TruncatedSimplicialSet::new(dim_cap, generators, faces, 0)
}

/// `S^n = Δ[n]/∂Δ[n]`: the base point and one generator `id` in degree `n`.
/// For `n = 0` this is the two-point set.
pub fn sphere(n: usize, dim_cap: usize) -> Result<TruncatedSimplicialSet> {
  if n + 1 > dim_cap {
    return Err(Error::InsufficientCap(format!("S^{n} needs cap at least {} for loop computations, got {dim_cap}", n + 1)));
  }
  let faces = if n == 0 { vec![] } else { vec![base_in(n - 1); n + 1] };
  TruncatedSimplicialSet::new(dim_cap, vec![("*".into(), 0), ("id".into(), n)], vec![vec![], faces], 0)
}

/// `S^1 ∨ S^1` with loops `a` and `b`.
pub fn wedge_of_circles(dim_cap: usize) -> Result<TruncatedSimplicialSet> {
  if dim_cap < 1 {
    return Err(Error::InsufficientCap("a wedge of circles needs cap at least 1".into()));
  }
  TruncatedSimplicialSet::new(
    dim_cap,
    vec![("*".into(), 0), ("a".into(), 1), ("b".into(), 1)],
    vec![vec![], vec![base_in(0); 2], vec![base_in(0); 2]],
    0,
  )
}

/// The one-vertex torus: edges `a`, `b`, diagonal `c`, triangles `U`, `L`.
///
/// `d(U) = (b, c, a)` and `d(L) = (a, c, b)` listed as `(d_0, d_1, d_2)`.
pub fn minimal_torus(dim_cap: usize) -> Result<TruncatedSimplicialSet> {
  if dim_cap < 2 {
    return Err(Error::InsufficientCap("the torus needs cap at least 2".into()));
  }
  let edge = |g: usize| Simplex::nondegenerate(g, 1);
  TruncatedSimplicialSet::new(
    dim_cap,
    vec![("*".into(), 0), ("a".into(), 1), ("b".into(), 1), ("c".into(), 1), ("U".into(), 2), ("L".into(), 2)],
    vec![
      vec![],
      vec![base_in(0); 2],
      vec![base_in(0); 2],
      vec![base_in(0); 2],
      vec![edge(2), edge(3), edge(1)],
      vec![edge(1), edge(3), edge(2)],
    ],
    0,
  )
}

/// Number of monotone surjections `[q] ↠ [n]`: the non-base count of `S^n` in degree `q`.
pub fn sphere_nonbase_count(n: usize, q: usize) -> u128 { monotone::surjection_count(q, n) }

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn simplex_counts() {
    let d0 = standard_simplex(0, 3).unwrap();
    assert_eq!(d0.to_levelwise().sizes(), vec![1, 1, 1, 1]);
    let d1 = standard_simplex(1, 3).unwrap();
    let counts: Vec<usize> = (0..=3).map(|d| d1.generators_of_degree(d).len()).collect();
    assert_eq!(counts, vec![2, 1, 0, 0]);
    let d2 = standard_simplex(2, 2).unwrap();
    assert_eq!(d2.generators_of_degree(1).len(), 3);
    assert!(standard_simplex(3, 2).is_err());
  }

  #[test]
  fn delta_levels_are_monotone_maps() {
    // |Δ[n]_q| = C(n+q+1, q+1)
    let d2 = standard_simplex(2, 3).unwrap().to_levelwise();
    assert_eq!(d2.sizes(), vec![3, 6, 10, 15]);
    d2.check_identities().unwrap();
  }

  #[test]
  fn sphere_counts() {
    for n in 0..3 {
      let s = sphere(n, 4).unwrap().to_levelwise();
      for q in 0..=4 {
        assert_eq!((s.size(q) - 1) as u128, sphere_nonbase_count(n, q));
      }
    }
    assert!(sphere(3, 3).is_err());
  }

  #[test]
  fn torus_and_wedge_valid() {
    minimal_torus(3).unwrap().to_levelwise().check_identities().unwrap();
    wedge_of_circles(2).unwrap().to_levelwise().check_identities().unwrap();
  }
}
