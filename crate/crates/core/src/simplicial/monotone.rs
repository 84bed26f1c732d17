//! Monotone maps between ordinals `[n] = {0,…,n}`, stored as value vectors.
//!
//! A map `θ: [n] → [m]` is the vector `(θ(0), …, θ(n))`. Precomposition with
//! a coface deletes an entry, precomposition with a codegeneracy duplicates one.

use crate::error::{Error, Result};

pub fn identity(n: usize) -> Vec<usize> { (0..=n).collect() }

pub fn is_monotone(values: &[usize]) -> bool { values.windows(2).all(|w| w[0] <= w[1]) }

/// Monotone and hitting every element of `[m]`.
pub fn is_surjection_onto(values: &[usize], m: usize) -> bool {
  !values.is_empty() && values[0] == 0 && values[values.len() - 1] == m && values.windows(2).all(|w| w[0] <= w[1] && w[1] - w[0] <= 1)
}

pub fn is_identity(values: &[usize]) -> bool { values.iter().enumerate().all(|(i, &v)| i == v) }

/// Positions `p` with `θ(p) = θ(p + 1)`, ascending.
pub fn collapsed_positions(values: &[usize]) -> Vec<usize> {
  values.windows(2).enumerate().filter(|(_, w)| w[0] == w[1]).map(|(p, _)| p).collect()
}

/// The surjection `[n] ↠ [n − r]` collapsing the given positions.
pub fn surjection_from_collapsed(n: usize, collapsed: &[usize]) -> Result<Vec<usize>> {
  let mut sorted = collapsed.to_vec();
  sorted.sort_unstable();
  sorted.dedup();
  if sorted.len() != collapsed.len() {
    return Err(Error::InvalidSimplicialSet(format!("repeated collapsed position in {collapsed:?}")));
  }
  if let Some(&p) = sorted.iter().find(|&&p| p >= n) {
    return Err(Error::InvalidSimplicialSet(format!("collapsed position {p} outside 0..{n}")));
  }
  let mut out = Vec::with_capacity(n + 1);
  let mut v = 0;
  out.push(0);
  for p in 0..n {
    if sorted.binary_search(&p).is_err() {
      v += 1;
    }
    out.push(v);
  }
  Ok(out)
}

/// All monotone surjections `[n] ↠ [m]`, ordered lexicographically by their
/// collapsed-position lists.
pub fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
  if m > n {
    return Vec::new();
  }
  let r = n - m;
  let mut out = Vec::new();
  let mut chosen = Vec::with_capacity(r);
  fn rec(start: usize, n: usize, r: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == r {
      out.push(surjection_from_collapsed(n, chosen).expect("valid positions"));
      return;
    }
    for p in start..n {
      if n - p < r - chosen.len() {
        break;
      }
      chosen.push(p);
      rec(p + 1, n, r, chosen, out);
      chosen.pop();
    }
  }
  rec(0, n, r, &mut chosen, &mut out);
  out
}

/// `θ ∘ δ_i`.
pub fn precompose_face(values: &[usize], i: usize) -> Vec<usize> {
  let mut out = values.to_vec();
  out.remove(i);
  out
}

/// `θ ∘ σ_j`.
pub fn precompose_degeneracy(values: &[usize], j: usize) -> Vec<usize> {
  let mut out = values.to_vec();
  out.insert(j, values[j]);
  out
}

/// `outer ∘ inner` for value vectors.
pub fn compose(inner: &[usize], outer: &[usize]) -> Vec<usize> { inner.iter().map(|&v| outer[v]).collect() }

/// Number of monotone surjections `[n] ↠ [m]`, i.e. `C(n, m)`.
pub fn surjection_count(n: usize, m: usize) -> u128 {
  if m > n {
    return 0;
  }
  let k = (n - m).min(m) as u128;
  let n = n as u128;
  (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn surjection_counts() {
    assert_eq!(surjections(3, 1).len(), 3);
    assert_eq!(surjections(3, 2).len(), 3);
    assert_eq!(surjections(4, 2).len(), 6);
    assert_eq!(surjections(2, 3).len(), 0);
    for n in 0..6 {
      for m in 0..=n {
        assert_eq!(surjections(n, m).len() as u128, surjection_count(n, m));
      }
    }
  }

  #[test]
  fn collapsed_roundtrip() {
    for n in 0..5 {
      for m in 0..=n {
        for s in surjections(n, m) {
          assert!(is_surjection_onto(&s, m));
          assert_eq!(surjection_from_collapsed(n, &collapsed_positions(&s)).unwrap(), s);
        }
      }
    }
  }

  #[test]
  fn degeneracy_collapses_position() {
    let s = precompose_degeneracy(&identity(2), 1);
    assert_eq!(s, vec![0, 1, 1, 2]);
    assert_eq!(collapsed_positions(&s), vec![1]);
    assert_eq!(precompose_face(&s, 1), identity(2));
  }

  #[test]
  fn rejects_bad_collapsed() {
    assert!(surjection_from_collapsed(2, &[2]).is_err());
    assert!(surjection_from_collapsed(3, &[1, 1]).is_err());
  }
}
