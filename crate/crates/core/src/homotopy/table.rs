//! Finite tables of Γ-sets and the homology functor `k ↦ H_n(X, F)(k_+)`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::engine::{loop_classes, LoopClasses};
use crate::error::{Error, Result};
use crate::gamma::{compose_gamma_morphisms, eval_set, FinPointedSet, GammaMorphism, GammaSet};
use crate::simplicial::{LevelwiseSimplicialSet, TruncatedSimplicialSet};

/// Largest number of loops checked individually for descent.
const DESCENT_SAMPLE: usize = 1 << 12;

/// A Γ-set restricted to arities `0..=k_max`: its values and the action of
/// every Γ-morphism between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSetTable {
  values:  Vec<FinPointedSet>,
  actions: BTreeMap<GammaMorphism, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
  values:  BTreeMap<usize, Vec<String>>,
  actions: Vec<ActionJson>,
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
  morphism: GammaMorphism,
  table:    Vec<usize>,
}

impl Serialize for GammaSetTable {
  fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
    TableJson {
      values:  self.values.iter().enumerate().map(|(k, v)| (k, v.elements().to_vec())).collect(),
      actions: self.actions.iter().map(|(m, t)| ActionJson { morphism: m.clone(), table: t.clone() }).collect(),
    }
    .serialize(s)
  }
}

impl<'de> Deserialize<'de> for GammaSetTable {
  fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
    let raw = TableJson::deserialize(d)?;
    let values = raw
      .values
      .into_values()
      .map(|labels| FinPointedSet::new(labels, 0))
      .collect::<Result<Vec<_>>>()
      .map_err(serde::de::Error::custom)?;
    let actions = raw.actions.into_iter().map(|a| (a.morphism, a.table)).collect();
    GammaSetTable::new(values, actions).map_err(serde::de::Error::custom)
  }
}

impl GammaSetTable {
  /// Validates shapes, base preservation and functoriality.
  pub fn new(values: Vec<FinPointedSet>, actions: BTreeMap<GammaMorphism, Vec<usize>>) -> Result<Self> {
    if values.first().is_some_and(|v| v.len() != 1) {
      return Err(Error::Functoriality("value at 0_+ is not a point".into()));
    }
    for (m, t) in &actions {
      let (k, j) = (m.source_arity(), m.target_arity());
      if k >= values.len() || j >= values.len() || t.len() != values[k].len() {
        return Err(Error::ArityMismatch(format!("action of {m:?} does not fit the table")));
      }
      if t[0] != 0 || t.iter().any(|&c| c >= values[j].len()) {
        return Err(Error::Functoriality(format!("action of {m:?} is not a pointed map")));
      }
    }
    let table = Self { values, actions };
    table.check_functoriality()?;
    Ok(table)
  }

  pub fn k_max(&self) -> usize { self.values.len() - 1 }

  pub fn value(&self, k: usize) -> &FinPointedSet { &self.values[k] }

  pub fn values(&self) -> &[FinPointedSet] { &self.values }

  pub fn action(&self, m: &GammaMorphism) -> Option<&[usize]> { self.actions.get(m).map(Vec::as_slice) }

  pub fn actions(&self) -> impl Iterator<Item = (&GammaMorphism, &[usize])> { self.actions.iter().map(|(m, t)| (m, t.as_slice())) }

  /// `(g ∘ f)_* = g_* ∘ f_*` and `id_* = id` on every stored pair.
  pub fn check_functoriality(&self) -> Result<()> {
    let mut by_source: HashMap<usize, Vec<&GammaMorphism>> = HashMap::new();
    for m in self.actions.keys() {
      by_source.entry(m.source_arity()).or_default().push(m);
    }
    for (f, tf) in &self.actions {
      if *f == GammaMorphism::identity(f.source_arity()) && tf.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(Error::Functoriality(format!("identity of {} acts nontrivially", f.source_arity())));
      }
      for g in by_source.get(&f.target_arity()).into_iter().flatten() {
        let gf = compose_gamma_morphisms(f, g)?;
        let Some(tgf) = self.actions.get(&gf) else { continue };
        let tg = &self.actions[*g];
        if tf.iter().zip(tgf).any(|(&c, &d)| tg[c] != d) {
          return Err(Error::Functoriality(format!("composite {f:?} then {g:?}")));
        }
      }
    }
    Ok(())
  }

  /// The table of a finite Γ-set, by direct evaluation.
  pub fn of_gamma_set(f: &dyn GammaSet, k_max: usize) -> Result<Self> {
    let elems: Vec<_> = (0..=k_max).map(|k| f.elements(k)).collect::<Result<_>>()?;
    let index: Vec<HashMap<_, usize>> = elems.iter().map(|l| l.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()).collect();
    let values = (0..=k_max).map(|k| eval_set(f, &FinPointedSet::standard(k))).collect::<Result<_>>()?;
    let mut actions = BTreeMap::new();
    for m in all_morphisms(k_max) {
      let t = elems[m.source_arity()].iter().map(|e| index[m.target_arity()][&f.push(&m, e)]).collect();
      actions.insert(m, t);
    }
    Self::new(values, actions)
  }

  /// An isomorphism `self → other` as one bijection per arity, if any.
  pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<Vec<usize>>> {
    if self.values.len() != other.values.len() || self.actions.keys().ne(other.actions.keys()) {
      return None;
    }
    let mut beta: Vec<Vec<usize>> = Vec::new();
    for k in 0..self.values.len() {
      let n = self.values[k].len();
      if other.values[k].len() != n {
        return None;
      }
      // Candidates agree on every action into lower arities.
      let lower: Vec<(&GammaMorphism, &Vec<usize>)> =
        self.actions.iter().filter(|(m, _)| m.source_arity() == k && m.target_arity() < k).collect();
      let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
          (0..n)
            .filter(|&y| (x == 0) == (y == 0))
            .filter(|&y| lower.iter().all(|(m, t)| beta[m.target_arity()][t[x]] == other.actions[*m][y]))
            .collect()
        })
        .collect();
      let mut assign = vec![usize::MAX; n];
      let mut used = vec![false; n];
      if !self.extend_bijection(other, k, &beta, &candidates, 0, &mut assign, &mut used) {
        return None;
      }
      beta.push(assign);
    }
    Some(beta)
  }

  #[allow(clippy::too_many_arguments)]
  fn extend_bijection(
    &self,
    other: &Self,
    k: usize,
    beta: &[Vec<usize>],
    candidates: &[Vec<usize>],
    x: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
  ) -> bool {
    if x == candidates.len() {
      return self.compatible_at(other, k, beta, assign);
    }
    for &y in &candidates[x] {
      if used[y] {
        continue;
      }
      assign[x] = y;
      used[y] = true;
      if self.extend_bijection(other, k, beta, candidates, x + 1, assign, used) {
        return true;
      }
      used[y] = false;
    }
    assign[x] = usize::MAX;
    false
  }

  fn compatible_at(&self, other: &Self, k: usize, beta: &[Vec<usize>], current: &[usize]) -> bool {
    let map = |a: usize| if a == k { current } else { beta[a].as_slice() };
    self.actions.iter().filter(|(m, _)| m.target_arity() == k && m.source_arity() <= k).all(|(m, t)| {
      let (src, tgt) = (map(m.source_arity()), map(k));
      (0..t.len()).all(|x| tgt[t[x]] == other.actions[m][src[x]])
    })
  }

  /// Checks that `beta` is an isomorphism `self → other`.
  pub fn is_isomorphism(&self, other: &Self, beta: &[Vec<usize>]) -> bool {
    if beta.len() != self.values.len() || other.values.len() != self.values.len() {
      return false;
    }
    for (k, b) in beta.iter().enumerate() {
      let mut seen = vec![false; other.values[k].len()];
      if b.len() != self.values[k].len() || b.len() != seen.len() || b.first() != Some(&0) {
        return false;
      }
      for &y in b {
        if y >= seen.len() || std::mem::replace(&mut seen[y], true) {
          return false;
        }
      }
    }
    self.actions.iter().all(|(m, t)| {
      let Some(u) = other.actions.get(m) else { return false };
      (0..t.len()).all(|x| beta[m.target_arity()][t[x]] == u[beta[m.source_arity()][x]])
    })
  }
}

/// Every Γ-morphism between arities `0..=k_max`.
pub fn all_morphisms(k_max: usize) -> Vec<GammaMorphism> {
  (0..=k_max).flat_map(|k| (0..=k_max).flat_map(move |m| GammaMorphism::all(k, m))).collect()
}

/// `H_n(X, F)(k_+)` together with loop representatives.
pub fn homology_classes(x: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize, k: usize) -> Result<LoopClasses> {
  loop_classes(&x.smash_with_k(k), f, n)
}

/// `H_n(X, F)(k_+) = π^comb_n(F ∘ (X ∧ k_+))`.
pub fn homology(x: &TruncatedSimplicialSet, f: &dyn GammaSet, n: usize, k: usize) -> Result<FinPointedSet> {
  Ok(homology_classes(&x.to_levelwise(), f, n, k)?.classes().clone())
}

/// The class table of `H_n(X, F)` on arities `0..=k_max`, with the loop
/// data used to build it.
#[derive(Clone, Debug)]
pub struct HomologyTable {
  pub table:   GammaSetTable,
  pub classes: Vec<LoopClasses>,
}

/// `H_n(X, F)` as a Γ-set table.
///
/// Each action pushes class representatives along `id_X ∧ φ` then `F`, and
/// checks that the result does not depend on the representative.
pub fn homology_gamma(x: &TruncatedSimplicialSet, f: &dyn GammaSet, n: usize, k_max: usize) -> Result<GammaSetTable> {
  Ok(homology_gamma_levelwise(&x.to_levelwise(), f, n, k_max)?.table)
}

pub fn homology_gamma_levelwise(x: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize, k_max: usize) -> Result<HomologyTable> {
  let classes: Vec<LoopClasses> = (0..=k_max).map(|k| homology_classes(x, f, n, k)).collect::<Result<_>>()?;
  let spaces: Vec<LevelwiseSimplicialSet> = (0..=k_max).map(|k| x.smash_with_k(k)).collect();
  let mut actions = BTreeMap::new();
  for phi in all_morphisms(k_max) {
    let (k, m) = (phi.source_arity(), phi.target_arity());
    let along = x.smash_map(&phi).morphism(&spaces[k], &spaces[m], n);
    let image = |z: &Vec<u32>| classes[m].class_of(&f.push(&along, z));
    let table: Vec<usize> = classes[k].representatives().iter().map(image).collect::<Result<_>>()?;
    for (z, c) in classes[k].sample_members(DESCENT_SAMPLE) {
      if image(&z)? != table[c] {
        return Err(Error::Descent(format!("{phi:?} separates loops of class {c} at arity {k}")));
      }
    }
    actions.insert(phi, table);
  }
  let values = classes.iter().map(|c| c.classes().clone()).collect();
  Ok(HomologyTable { table: GammaSetTable::new(values, actions)?, classes })
}
