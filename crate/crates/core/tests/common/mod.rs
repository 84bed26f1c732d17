//! Oracles shared by the integration tests.

#![allow(dead_code)]

use gammahom::gamma::{ha_gamma_set, FiniteMonoid, GammaSet};
use gammahom::homotopy::{GammaSetTable, HomologyTable};
use gammahom::simplicial::TruncatedSimplicialSet;

/// Reduced normalized chains of `X` over `F_p`, on the non-base generators.
pub struct ModPHomology {
  pub p:       u64,
  pub degree:  usize,
  /// Generators of degree `n`, in the order used for chain vectors.
  pub cells:   Vec<usize>,
  /// Basis of the boundaries followed by cycle representatives of a homology basis.
  basis:       Vec<Vec<u64>>,
  boundaries:  usize,
}

fn inv(a: u64, p: u64) -> u64 {
  let mut r = 1;
  let (mut b, mut e) = (a % p, p - 2);
  while e > 0 {
    if e & 1 == 1 {
      r = r * b % p;
    }
    b = b * b % p;
    e >>= 1;
  }
  r
}

/// Row-reduces `rows` in place; returns the pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
  let cols = rows.first().map_or(0, Vec::len);
  let mut pivots = Vec::new();
  let mut r = 0;
  for c in 0..cols {
    let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
    rows.swap(r, pr);
    let s = inv(rows[r][c], p);
    rows[r].iter_mut().for_each(|v| *v = *v * s % p);
    for i in 0..rows.len() {
      if i != r && rows[i][c] != 0 {
        let f = rows[i][c];
        for j in 0..cols {
          rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
        }
      }
    }
    pivots.push(c);
    r += 1;
  }
  rows.truncate(r);
  pivots
}

/// Columns of the boundary map from degree `q` to `q-1` over `F_p`.
fn boundary_columns(x: &TruncatedSimplicialSet, q: usize, p: u64) -> (Vec<usize>, Vec<usize>, Vec<Vec<u64>>) {
  let cells = |d: usize| x.generators_of_degree(d).into_iter().filter(|&g| g != x.base()).collect::<Vec<_>>();
  let (src, tgt) = (cells(q), if q == 0 { vec![] } else { cells(q - 1) });
  let cols = src
    .iter()
    .map(|&g| {
      let mut col = vec![0u64; tgt.len()];
      if q > 0 {
        for (i, f) in x.face_table(g).iter().enumerate() {
          if f.is_nondegenerate() && f.generator != x.base() {
            let row = tgt.iter().position(|&t| t == f.generator).unwrap();
            let sign = if i % 2 == 0 { 1 } else { p - 1 };
            col[row] = (col[row] + sign) % p;
          }
        }
      }
      col
    })
    .collect();
  (src, tgt, cols)
}

impl ModPHomology {
  pub fn new(x: &TruncatedSimplicialSet, n: usize, p: u64) -> Self {
    let (cells, _, dn) = boundary_columns(x, n, p);
    let (_, _, dn1) = boundary_columns(x, n + 1, p);
    // Kernel of ∂_n: null space of the matrix with columns dn.
    let m = cells.len();
    let rows_of_dn: usize = dn.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = (0..rows_of_dn).map(|r| (0..m).map(|c| dn[c][r]).collect()).collect();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let kernel: Vec<Vec<u64>> = free
      .iter()
      .map(|&f| {
        let mut v = vec![0u64; m];
        v[f] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
          v[pc] = (p - a[r][f]) % p;
        }
        v
      })
      .collect();
    let mut bnd = dn1.clone();
    let pb = rref(&mut bnd, p);
    let boundaries = pb.len();
    let mut basis = bnd;
    for z in kernel {
      let mut trial = basis.clone();
      trial.push(z.clone());
      if rref(&mut trial, p).len() > basis.len() {
        basis.push(z);
      }
    }
    Self { p, degree: n, cells, basis, boundaries }
  }

  pub fn rank(&self) -> usize { self.basis.len() - self.boundaries }

  /// Coordinates of the class of a cycle in the homology basis.
  pub fn coordinates(&self, z: &[u64]) -> Vec<u64> {
    let (p, b) = (self.p, self.basis.len());
    // Solve Σ a_i basis_i = z via the augmented system.
    let m = self.cells.len();
    let mut rows: Vec<Vec<u64>> = (0..m).map(|r| (0..b).map(|i| self.basis[i][r]).chain([z[r] % p]).collect()).collect();
    let pivots = rref(&mut rows, p);
    assert!(!pivots.contains(&b), "not in the span of cycles");
    let mut sol = vec![0u64; b];
    for (r, &c) in pivots.iter().enumerate() {
      sol[c] = rows[r][b];
    }
    sol[self.boundaries..].to_vec()
  }

  /// `H(H_n(X, Z/p))` as a Γ-set table.
  pub fn table(&self, k_max: usize) -> (FiniteMonoid, GammaSetTable) {
    let g = (0..self.rank()).fold(FiniteMonoid::cyclic(1), |acc, _| {
      if acc.len() == 1 { FiniteMonoid::cyclic(self.p as usize) } else { FiniteMonoid::product(&acc, &FiniteMonoid::cyclic(self.p as usize)) }
    });
    let t = GammaSetTable::of_gamma_set(&ha_gamma_set(g.clone()), k_max).unwrap();
    (g, t)
  }
}

/// Compares `H_n(X, H(Z/p))` with the oracle through the explicit map
/// class ↦ homology coordinates of each copy.
pub fn dold_kan_agrees(x: &TruncatedSimplicialSet, h: &HomologyTable, n: usize, p: u64, k_max: usize) -> Result<(), String> {
  let oracle = ModPHomology::new(x, n, p);
  let (g, reference) = oracle.table(k_max);
  let lw = x.to_levelwise();
  let level = lw.level(n);
  // Levelwise index of each oracle cell.
  let cell_index: Vec<usize> = oracle.cells.iter().map(|&c| level.index_of(x.label(c)).unwrap()).collect();
  let ha = ha_gamma_set(g.clone());
  let mut beta = Vec::new();
  for k in 0..=k_max {
    let elems = ha.elements(k).unwrap();
    let pos: std::collections::HashMap<_, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let reps = h.classes[k].representatives();
    let mut bk = Vec::with_capacity(reps.len());
    for z in reps {
      let mut v = Vec::with_capacity(k);
      for j in 1..=k {
        let chain: Vec<u64> = cell_index.iter().map(|&x| z[lw.smash_index(n, x, j) - 1] as u64).collect();
        let coords = oracle.coordinates(&chain);
        let code = coords.iter().fold(0u64, |acc, &c| acc * p + c);
        v.push(code as u32);
      }
      bk.push(pos[&v]);
    }
    beta.push(bk);
  }
  if h.table.is_isomorphism(&reference, &beta) {
    Ok(())
  } else {
    Err(format!("rank {} oracle disagrees with the class table", oracle.rank()))
  }
}
