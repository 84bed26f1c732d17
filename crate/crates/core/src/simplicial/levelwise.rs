//! Simplicial sets given explicitly degree by degree, up to a cap.

use crate::error::{Error, Result};
use crate::gamma::{FinPointedSet, GammaMorphism};

/// Explicit levels `X_0, …, X_D` with tabulated faces and degeneracies.
///
/// The base point is index 0 in every level. `faces[q][i]` is `d_i: X_q →
/// X_{q−1}` (empty for `q = 0`) and `degeneracies[q][j]` is `s_j: X_q →
/// X_{q+1}` for `q < D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelwiseSimplicialSet {
  levels:       Vec<FinPointedSet>,
  faces:        Vec<Vec<Vec<usize>>>,
  degeneracies: Vec<Vec<Vec<usize>>>,
}

/// A pointed simplicial map between levelwise sets, one table per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelwiseMap {
  pub tables: Vec<Vec<usize>>,
}

impl LevelwiseSimplicialSet {
  pub(crate) fn from_parts(
    levels: Vec<FinPointedSet>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
  ) -> Self {
    Self { levels, faces, degeneracies }
  }

  /// Validates shapes, the base point, and every simplicial identity.
  pub fn new(levels: Vec<FinPointedSet>, faces: Vec<Vec<Vec<usize>>>, degeneracies: Vec<Vec<Vec<usize>>>) -> Result<Self> {
    if levels.is_empty() {
      return Err(Error::InvalidSimplicialSet("no levels".into()));
    }
    let cap = levels.len() - 1;
    if faces.len() != cap + 1 || degeneracies.len() != cap {
      return Err(Error::InvalidSimplicialSet("face/degeneracy tables do not match the levels".into()));
    }
    for (q, l) in levels.iter().enumerate() {
      if l.base() != 0 {
        return Err(Error::InvalidSimplicialSet(format!("level {q} does not have its base point first")));
      }
      let expected = if q == 0 { 0 } else { q + 1 };
      if faces[q].len() != expected || faces[q].iter().any(|t| t.len() != l.len()) {
        return Err(Error::InvalidSimplicialSet(format!("face tables of level {q} have the wrong shape")));
      }
      if faces[q].iter().any(|t| t.iter().any(|&v| v >= levels[q - 1].len())) {
        return Err(Error::InvalidSimplicialSet(format!("face of level {q} out of range")));
      }
      if q < cap {
        if degeneracies[q].len() != q + 1 || degeneracies[q].iter().any(|t| t.len() != l.len()) {
          return Err(Error::InvalidSimplicialSet(format!("degeneracy tables of level {q} have the wrong shape")));
        }
        if degeneracies[q].iter().any(|t| t.iter().any(|&v| v >= levels[q + 1].len())) {
          return Err(Error::InvalidSimplicialSet(format!("degeneracy of level {q} out of range")));
        }
      }
    }
    let set = Self { levels, faces, degeneracies };
    set.check_identities()?;
    Ok(set)
  }

  /// Checks the base point and all simplicial identities on every element.
  pub fn check_identities(&self) -> Result<()> {
    let cap = self.dim_cap();
    let fail = |what: String| Err(Error::IdentityViolation(what));
    for q in 0..=cap {
      for i in 0..self.faces[q].len() {
        if self.faces[q][i][0] != 0 {
          return fail(format!("d{i} moves the base point in degree {q}"));
        }
      }
      if q < cap {
        for j in 0..=q {
          if self.degeneracies[q][j][0] != 0 {
            return fail(format!("s{j} moves the base point in degree {q}"));
          }
        }
      }
      for x in 0..self.levels[q].len() {
        let name = |q: usize, x: usize| self.levels[q].label(x).to_string();
        if q >= 2 {
          for j in 1..=q {
            for i in 0..j {
              let l = self.face(q - 1, i, self.face(q, j, x));
              let r = self.face(q - 1, j - 1, self.face(q, i, x));
              if l != r {
                return fail(format!(
                  "d{i} d{j} = d{} d{i} fails on {}: left {}, right {}",
                  j - 1,
                  name(q, x),
                  name(q - 2, l),
                  name(q - 2, r)
                ));
              }
            }
          }
        }
        if q + 2 <= cap {
          for j in 0..=q {
            for i in 0..=j {
              let l = self.degeneracy(q + 1, i, self.degeneracy(q, j, x));
              let r = self.degeneracy(q + 1, j + 1, self.degeneracy(q, i, x));
              if l != r {
                return fail(format!("s{i} s{j} = s{} s{i} fails on {}", j + 1, name(q, x)));
              }
            }
          }
        }
        if q < cap {
          for j in 0..=q {
            let y = self.degeneracy(q, j, x);
            for i in 0..=q + 1 {
              let l = self.face(q + 1, i, y);
              let r = if i < j {
                self.degeneracy(q - 1, j - 1, self.face(q, i, x))
              } else if i == j || i == j + 1 {
                x
              } else {
                self.degeneracy(q - 1, j, self.face(q, i - 1, x))
              };
              if l != r {
                return fail(format!("d{i} s{j} fails on {}: left {}, right {}", name(q, x), name(q, l), name(q, r)));
              }
            }
          }
        }
      }
    }
    Ok(())
  }

  /// The one-point simplicial set.
  pub fn point(dim_cap: usize) -> Self {
    let levels = vec![FinPointedSet::from_labels("*", []).expect("one label"); dim_cap + 1];
    let faces = (0..=dim_cap).map(|q| if q == 0 { vec![] } else { vec![vec![0]; q + 1] }).collect();
    let degeneracies = (0..dim_cap).map(|q| vec![vec![0]; q + 1]).collect();
    Self { levels, faces, degeneracies }
  }

  pub fn dim_cap(&self) -> usize { self.levels.len() - 1 }

  pub fn level(&self, q: usize) -> &FinPointedSet { &self.levels[q] }

  pub fn levels(&self) -> &[FinPointedSet] { &self.levels }

  /// `|X_q|`, base included.
  pub fn size(&self, q: usize) -> usize { self.levels[q].len() }

  pub fn sizes(&self) -> Vec<usize> { self.levels.iter().map(FinPointedSet::len).collect() }

  pub fn face(&self, q: usize, i: usize, x: usize) -> usize { self.faces[q][i][x] }

  pub fn degeneracy(&self, q: usize, j: usize, x: usize) -> usize { self.degeneracies[q][j][x] }

  pub fn face_table(&self, q: usize, i: usize) -> &[usize] { &self.faces[q][i] }

  pub fn degeneracy_table(&self, q: usize, j: usize) -> &[usize] { &self.degeneracies[q][j] }

  /// `d_i: X_q → X_{q−1}` as a morphism of Γ^op.
  pub fn face_morphism(&self, q: usize, i: usize) -> GammaMorphism {
    GammaMorphism::new(self.size(q) - 1, self.size(q - 1) - 1, self.faces[q][i].clone()).expect("pointed face map")
  }

  /// `s_j: X_q → X_{q+1}` as a morphism of Γ^op.
  pub fn degeneracy_morphism(&self, q: usize, j: usize) -> GammaMorphism {
    GammaMorphism::new(self.size(q) - 1, self.size(q + 1) - 1, self.degeneracies[q][j].clone())
      .expect("pointed degeneracy map")
  }

  /// `x` lies in the image of some degeneracy.
  pub fn is_degenerate(&self, q: usize, x: usize) -> bool {
    q > 0 && (0..q).any(|j| self.degeneracy(q - 1, j, self.face(q, j, x)) == x)
  }

  /// Keeps degrees `0..=cap`.
  pub fn truncate(&self, cap: usize) -> Result<Self> {
    if cap > self.dim_cap() {
      return Err(Error::InsufficientCap(format!("cannot raise the cap from {} to {cap}", self.dim_cap())));
    }
    Ok(Self {
      levels:       self.levels[..=cap].to_vec(),
      faces:        self.faces[..=cap].to_vec(),
      degeneracies: self.degeneracies[..cap].to_vec(),
    })
  }

  /// Index of `(x, j)` in `(X ∧ k_+)_q` for non-base `x` and `1 ≤ j ≤ k`.
  pub fn smash_index(&self, q: usize, x: usize, j: usize) -> usize {
    if x == 0 {
      0
    } else {
      1 + (j - 1) * (self.size(q) - 1) + (x - 1)
    }
  }

  /// `X ∧ k_+`, copies ordered by `j` then by `x`.
  pub fn smash_with_k(&self, k: usize) -> Self {
    let cap = self.dim_cap();
    let levels = (0..=cap)
      .map(|q| {
        let mut labels = vec![self.levels[q].label(0).to_string()];
        for j in 1..=k {
          labels.extend((1..self.size(q)).map(|x| format!("({},{j})", self.levels[q].label(x))));
        }
        FinPointedSet::new(labels, 0).expect("distinct pairs")
      })
      .collect();
    let lift = |q_from: usize, q_to: usize, table: &Vec<usize>| -> Vec<usize> {
      let mut out = vec![0];
      for j in 1..=k {
        out.extend((1..self.size(q_from)).map(|x| self.smash_index(q_to, table[x], j)));
      }
      out
    };
    let faces = (0..=cap).map(|q| self.faces[q].iter().map(|t| lift(q, q - 1, t)).collect()).collect();
    let degeneracies = (0..cap).map(|q| self.degeneracies[q].iter().map(|t| lift(q, q + 1, t)).collect()).collect();
    Self { levels, faces, degeneracies }
  }

  /// `id_X ∧ φ: X ∧ k_+ → X ∧ m_+`.
  pub fn smash_map(&self, phi: &GammaMorphism) -> LevelwiseMap {
    let k = phi.source_arity();
    let tables = (0..=self.dim_cap())
      .map(|q| {
        let mut out = vec![0];
        for j in 1..=k {
          let t = phi.apply(j);
          out.extend((1..self.size(q)).map(|x| if t == 0 { 0 } else { self.smash_index(q, x, t) }));
        }
        out
      })
      .collect();
    LevelwiseMap { tables }
  }

  /// Degreewise product with componentwise structure maps.
  pub fn product(&self, other: &Self) -> Result<Self> {
    if self.dim_cap() != other.dim_cap() {
      return Err(Error::ArityMismatch(format!("caps {} and {} differ", self.dim_cap(), other.dim_cap())));
    }
    let cap = self.dim_cap();
    let levels = (0..=cap)
      .map(|q| {
        let labels = (0..self.size(q))
          .flat_map(|a| (0..other.size(q)).map(move |b| (a, b)))
          .map(|(a, b)| format!("({},{})", self.levels[q].label(a), other.levels[q].label(b)))
          .collect();
        FinPointedSet::new(labels, 0).expect("distinct pairs")
      })
      .collect();
    let pair = |qa: usize, ta: &[usize], tb: &[usize], q_to: usize| -> Vec<usize> {
      let w = other.size(q_to);
      (0..self.size(qa)).flat_map(|a| (0..other.size(qa)).map(move |b| ta[a] * w + tb[b])).collect()
    };
    let faces =
      (0..=cap).map(|q| (0..self.faces[q].len()).map(|i| pair(q, &self.faces[q][i], &other.faces[q][i], q - 1)).collect()).collect();
    let degeneracies = (0..cap)
      .map(|q| (0..=q).map(|j| pair(q, &self.degeneracies[q][j], &other.degeneracies[q][j], q + 1)).collect())
      .collect();
    Ok(Self { levels, faces, degeneracies })
  }

  /// The décalage `PX`: `(PX)_k = X_{k+1}`, structure maps shifted by one.
  pub fn path_space(&self) -> Result<Self> {
    let cap = self.dim_cap();
    if cap < 1 {
      return Err(Error::InsufficientCap("path space needs cap at least 1".into()));
    }
    let levels = self.levels[1..].to_vec();
    let faces = (0..cap).map(|k| if k == 0 { vec![] } else { self.faces[k + 1][1..].to_vec() }).collect();
    let degeneracies = (0..cap - 1).map(|k| self.degeneracies[k + 1][1..].to_vec()).collect();
    Ok(Self { levels, faces, degeneracies })
  }

  /// Sub-simplicial set on the given index lists (base first in each),
  /// assumed closed under all structure maps.
  pub(crate) fn restrict(&self, keep: &[Vec<usize>], shift: usize) -> Self {
    // keep[k] lists indices into X_{k+shift}; structure maps use index+shift.
    let pos: Vec<std::collections::HashMap<usize, usize>> =
      keep.iter().map(|l| l.iter().enumerate().map(|(i, &x)| (x, i)).collect()).collect();
    let cap = keep.len() - 1;
    let levels = keep
      .iter()
      .enumerate()
      .map(|(k, l)| {
        FinPointedSet::new(l.iter().map(|&x| self.levels[k + shift].label(x).to_string()).collect(), 0).expect("subset")
      })
      .collect();
    let faces = (0..=cap)
      .map(|k| {
        if k == 0 {
          return vec![];
        }
        (0..=k).map(|i| keep[k].iter().map(|&x| pos[k - 1][&self.face(k + shift, i + shift, x)]).collect()).collect()
      })
      .collect();
    let degeneracies = (0..cap)
      .map(|k| (0..=k).map(|j| keep[k].iter().map(|&x| pos[k + 1][&self.degeneracy(k + shift, j + shift, x)]).collect()).collect())
      .collect();
    Self { levels, faces, degeneracies }
  }
}

impl LevelwiseMap {
  /// Validates base preservation and compatibility with all structure maps.
  pub fn new(source: &LevelwiseSimplicialSet, target: &LevelwiseSimplicialSet, tables: Vec<Vec<usize>>) -> Result<Self> {
    let cap = source.dim_cap();
    if target.dim_cap() != cap || tables.len() != cap + 1 {
      return Err(Error::ArityMismatch("map tables do not cover both caps".into()));
    }
    for (q, t) in tables.iter().enumerate() {
      if t.len() != source.size(q) || t.iter().any(|&v| v >= target.size(q)) || t[0] != 0 {
        return Err(Error::InvalidMorphism(format!("degree-{q} table is not a pointed map")));
      }
      for x in 0..source.size(q) {
        if q >= 1 {
          for i in 0..=q {
            if tables[q - 1][source.face(q, i, x)] != target.face(q, i, t[x]) {
              return Err(Error::InvalidMorphism(format!("does not commute with d{i} on {}", source.level(q).label(x))));
            }
          }
        }
        if q < cap {
          for j in 0..=q {
            if tables[q + 1][source.degeneracy(q, j, x)] != target.degeneracy(q, j, t[x]) {
              return Err(Error::InvalidMorphism(format!("does not commute with s{j} on {}", source.level(q).label(x))));
            }
          }
        }
      }
    }
    Ok(Self { tables })
  }

  /// Builds a map by sending each simplex label to a target label.
  pub fn from_labels(
    source: &LevelwiseSimplicialSet,
    target: &LevelwiseSimplicialSet,
    f: impl Fn(usize, &str) -> String,
  ) -> Result<Self> {
    let mut tables = Vec::new();
    for q in 0..=source.dim_cap() {
      let mut t = Vec::with_capacity(source.size(q));
      for l in source.level(q).elements() {
        let image = f(q, l);
        t.push(
          target
            .level(q)
            .index_of(&image)
            .ok_or_else(|| Error::InvalidMorphism(format!("{l} maps to unknown simplex {image}")))?,
        );
      }
      tables.push(t);
    }
    Self::new(source, target, tables)
  }

  pub fn table(&self, q: usize) -> &[usize] { &self.tables[q] }

  pub fn morphism(&self, source: &LevelwiseSimplicialSet, target: &LevelwiseSimplicialSet, q: usize) -> GammaMorphism {
    GammaMorphism::new(source.size(q) - 1, target.size(q) - 1, self.tables[q].clone()).expect("pointed map")
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::simplicial::construct::{sphere, standard_simplex};

  #[test]
  fn sphere_level_sizes() {
    let s1 = sphere(1, 4).unwrap().to_levelwise();
    assert_eq!(s1.sizes(), vec![1, 2, 3, 4, 5]);
    let s2 = sphere(2, 3).unwrap().to_levelwise();
    assert_eq!(s2.size(3) - 1, 3);
    assert_eq!(s2.size(1), 1);
    s1.check_identities().unwrap();
  }

  #[test]
  fn smash_doubles() {
    let s1 = sphere(1, 3).unwrap().to_levelwise();
    let two = s1.smash_with_k(2);
    for q in 0..=3 {
      assert_eq!(two.size(q) - 1, 2 * (s1.size(q) - 1));
    }
    two.check_identities().unwrap();
    assert_eq!(s1.smash_with_k(0).sizes(), vec![1; 4]);
  }

  #[test]
  fn product_sizes_and_identities() {
    let a = sphere(1, 3).unwrap().to_levelwise();
    let b = standard_simplex(1, 3).unwrap().to_levelwise();
    let p = a.product(&b).unwrap();
    for q in 0..=3 {
      assert_eq!(p.size(q), a.size(q) * b.size(q));
    }
    p.check_identities().unwrap();
    let pt = a.product(&LevelwiseSimplicialSet::point(3)).unwrap();
    assert_eq!(pt.sizes(), a.sizes());
  }

  #[test]
  fn path_space_shift() {
    let x = standard_simplex(2, 3).unwrap().to_levelwise();
    let p = x.path_space().unwrap();
    assert_eq!(p.level(0), x.level(1));
    p.check_identities().unwrap();
    assert_eq!(LevelwiseSimplicialSet::point(2).path_space().unwrap(), LevelwiseSimplicialSet::point(1));
  }

  #[test]
  fn detects_broken_face() {
    let x = sphere(1, 2).unwrap().to_levelwise();
    let mut faces = x.faces.clone();
    faces[2][0][1] = 0;
    let err = LevelwiseSimplicialSet::new(x.levels.clone(), faces, x.degeneracies.clone()).unwrap_err();
    assert!(matches!(err, Error::IdentityViolation(_)));
  }

  #[test]
  fn degenerate_detection() {
    let x = sphere(1, 2).unwrap().to_levelwise();
    assert!(!x.is_degenerate(1, 1));
    assert!(x.is_degenerate(2, 1) && x.is_degenerate(2, 2));
  }
}
