//! `F ∘ X` as an explicit simplicial set, the Γ-2-set before quotienting,
//! and the maps induced on homology by simplicial maps and by coefficient
//! morphisms.

use std::collections::HashMap;

use super::engine::{enumeration_limit, LoopClasses};
use super::table::{all_morphisms, homology_classes};
use crate::error::{Error, Result};
use crate::gamma::{FinPointedSet, GammaElem, GammaMorphism, GammaNatTrans, GammaSet};
use crate::simplicial::{omega_n_levels, LevelwiseMap, LevelwiseSimplicialSet};
use crate::two_sets::{components, TwoSet};

/// `F ∘ X` with the enumerated elements of every level.
#[derive(Clone, Debug)]
pub struct Composed {
  pub space:    LevelwiseSimplicialSet,
  pub elements: Vec<Vec<GammaElem>>,
}

/// `F ∘ X`: level `q` is `F(X_q)`, structure maps are `F` of those of `X`.
pub fn compose_coeffs(f: &dyn GammaSet, x: &LevelwiseSimplicialSet) -> Result<LevelwiseSimplicialSet> {
  Ok(compose_coeffs_with_elements(f, x)?.space)
}

pub fn compose_coeffs_with_elements(f: &dyn GammaSet, x: &LevelwiseSimplicialSet) -> Result<Composed> {
  let limit = enumeration_limit();
  let cap = x.dim_cap();
  let mut elements = Vec::with_capacity(cap + 1);
  for q in 0..=cap {
    let arity = x.size(q) - 1;
    match f.cardinality(arity) {
      Some(c) if c <= limit => elements.push(f.elements(arity)?),
      Some(c) => return Err(Error::EnumerationBound { degree: q, size: c.to_string(), limit }),
      None => return Err(Error::NotEnumerable(f.name())),
    }
  }
  let index: Vec<HashMap<&GammaElem, usize>> =
    elements.iter().map(|l| l.iter().enumerate().map(|(i, e)| (e, i)).collect()).collect();
  let levels = (0..=cap)
    .map(|q| {
      let points = x.level(q).skeleton_labels();
      FinPointedSet::new(elements[q].iter().map(|e| f.render(e, &points)).collect(), 0)
    })
    .collect::<Result<Vec<_>>>()?;
  let lift = |m: &GammaMorphism, q: usize, to: usize| -> Vec<usize> { elements[q].iter().map(|e| index[to][&f.push(m, e)]).collect() };
  let faces = (0..=cap).map(|q| if q == 0 { vec![] } else { (0..=q).map(|i| lift(&x.face_morphism(q, i), q, q - 1)).collect() }).collect();
  let degeneracies = (0..cap).map(|q| (0..=q).map(|j| lift(&x.degeneracy_morphism(q, j), q, q + 1)).collect()).collect();
  let space = LevelwiseSimplicialSet::new(levels, faces, degeneracies)?;
  Ok(Composed { space, elements })
}

/// `k ↦ π^(2)_n(F ∘ (X ∧ k_+))` with the vertex action of each Γ-morphism.
#[derive(Clone, Debug)]
pub struct GammaTwoSet {
  pub values:  Vec<TwoSet>,
  /// `(φ, table)` with `table` acting on vertices.
  pub actions: Vec<(GammaMorphism, Vec<usize>)>,
}

pub fn gamma_two_set(x: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize, k_max: usize) -> Result<GammaTwoSet> {
  let spaces: Vec<LevelwiseSimplicialSet> = (0..=k_max).map(|k| x.smash_with_k(k)).collect();
  let composed: Vec<Composed> = spaces.iter().map(|y| compose_coeffs_with_elements(f, y)).collect::<Result<_>>()?;
  let mut values = Vec::new();
  let mut vertex_elems: Vec<Vec<GammaElem>> = Vec::new();
  for c in &composed {
    let lv = omega_n_levels(&c.space, n)?;
    vertex_elems.push(lv.set0.iter().map(|&i| c.elements[n][i].clone()).collect());
    values.push(crate::two_sets::pi2_n(&c.space, n)?);
  }
  let mut actions = Vec::new();
  for phi in all_morphisms(k_max) {
    let (k, m) = (phi.source_arity(), phi.target_arity());
    let along = x.smash_map(&phi).morphism(&spaces[k], &spaces[m], n);
    let pos: HashMap<&GammaElem, usize> = vertex_elems[m].iter().enumerate().map(|(i, e)| (e, i)).collect();
    let table = vertex_elems[k]
      .iter()
      .map(|z| pos.get(&f.push(&along, z)).copied().ok_or_else(|| Error::Descent(format!("{phi:?} leaves the loops"))))
      .collect::<Result<_>>()?;
    actions.push((phi, table));
  }
  Ok(GammaTwoSet { values, actions })
}

impl GammaTwoSet {
  /// Whether `ℓ` of every entry has the given sizes.
  pub fn component_sizes(&self) -> Vec<usize> { self.values.iter().map(|t| components(t).len()).collect() }
}

/// `id ∧ k_+` applied to a simplicial map.
pub fn smash_of_map(
  f: &LevelwiseMap,
  source: &LevelwiseSimplicialSet,
  target: &LevelwiseSimplicialSet,
  k: usize,
) -> LevelwiseMap {
  let tables = (0..=source.dim_cap())
    .map(|q| {
      let mut out = vec![0];
      for j in 1..=k {
        out.extend((1..source.size(q)).map(|x| target.smash_index(q, f.table(q)[x], j)));
      }
      out
    })
    .collect();
  LevelwiseMap::new(&source.smash_with_k(k), &target.smash_with_k(k), tables).expect("smash of a simplicial map")
}

/// `H_n(f, F)(k_+)`: the map on classes induced by a simplicial map.
pub fn induced_by_map(
  f: &LevelwiseMap,
  source: &LevelwiseSimplicialSet,
  target: &LevelwiseSimplicialSet,
  coeff: &dyn GammaSet,
  n: usize,
  k: usize,
) -> Result<Vec<usize>> {
  let from = homology_classes(source, coeff, n, k)?;
  let to = homology_classes(target, coeff, n, k)?;
  let fk = smash_of_map(f, source, target, k);
  let along = fk.morphism(&source.smash_with_k(k), &target.smash_with_k(k), n);
  induced_table(&from, &to, |z| coeff.push(&along, z))
}

/// `H_n(X, h)(k_+)`: the map on classes induced by `h: M → N`.
pub fn induced_by_coefficients(
  x: &LevelwiseSimplicialSet,
  h: &dyn GammaNatTrans,
  from_coeff: &dyn GammaSet,
  to_coeff: &dyn GammaSet,
  n: usize,
  k: usize,
) -> Result<Vec<usize>> {
  let from = homology_classes(x, from_coeff, n, k)?;
  let to = homology_classes(x, to_coeff, n, k)?;
  let arity = from.arity();
  induced_table(&from, &to, |z| h.apply(arity, z))
}

fn induced_table(from: &LoopClasses, to: &LoopClasses, push: impl Fn(&GammaElem) -> GammaElem) -> Result<Vec<usize>> {
  let table: Vec<usize> = from.representatives().iter().map(|z| to.class_of(&push(z))).collect::<Result<_>>()?;
  for (z, c) in from.sample_members(1 << 12) {
    if to.class_of(&push(&z))? != table[c] {
      return Err(Error::Descent(format!("induced map separates loops of class {c}")));
    }
  }
  Ok(table)
}

/// `H_n(M₁ ∘ X, M₂)(1_+) → H_n(X, M₂ ∘ M₁)(1_+)`.
///
/// Both sides are quotients of the same set `M₂(M₁(X_n))`, so the map sends
/// a representative to its class on the right.
pub fn natural_comparison(x: &LevelwiseSimplicialSet, m1: &dyn GammaSet, m2: &dyn GammaSet, n: usize) -> Result<Vec<usize>> {
  let composite = crate::gamma::Composite { inner: m1, outer: m2 };
  let left = homology_classes(&compose_coeffs(m1, x)?, m2, n, 1)?;
  let right = homology_classes(x, &composite, n, 1)?;
  induced_table(&left, &right, |z| z.clone())
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::gamma::{ha_gamma_set, hb_gamma_set, FiniteMonoid, IdentityGamma, MonoidHomTrans};
  use crate::simplicial::{pi_comb_n, sphere, wedge_of_circles};
  use crate::two_sets::components;

  #[test]
  fn identity_composition() {
    let s = sphere(1, 2).unwrap().to_levelwise();
    assert_eq!(compose_coeffs(&IdentityGamma, &s).unwrap().sizes(), s.sizes());
  }

  #[test]
  fn ha_level_sizes() {
    let s = sphere(1, 2).unwrap().to_levelwise();
    let c = compose_coeffs(&ha_gamma_set(FiniteMonoid::cyclic(2)), &s).unwrap();
    assert_eq!(c.size(1), 2);
    let hb = compose_coeffs(&hb_gamma_set(), &sphere(2, 3).unwrap().to_levelwise()).unwrap();
    assert_eq!(hb.level(2).elements(), &["{*}".to_string(), "{*,id}".to_string()]);
  }

  #[test]
  fn two_set_components_match() {
    let s = sphere(1, 2).unwrap().to_levelwise();
    let g = gamma_two_set(&s, &hb_gamma_set(), 1, 2).unwrap();
    for (k, t) in g.values.iter().enumerate() {
      assert_eq!(components(t).len(), homology_classes(&s, &hb_gamma_set(), 1, k).unwrap().len());
    }
    let one = &gamma_two_set(&s, &IdentityGamma, 1, 1).unwrap().values[1];
    assert_eq!(one.vertices().len(), 2);
    assert_eq!(components(one).len(), 2);
    assert_eq!(pi_comb_n(&s, 1).unwrap().len(), 2);
  }

  #[test]
  fn comparison_is_bijective() {
    let s = sphere(1, 2).unwrap().to_levelwise();
    let t = natural_comparison(&s, &hb_gamma_set(), &hb_gamma_set(), 1).unwrap();
    let mut sorted = t.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), t.len());
  }

  #[test]
  fn interchange_law() {
    // f: S^1 ∨ S^1 → S^1 folding both loops, h: Z/4 → Z/2 reduction.
    let w = wedge_of_circles(2).unwrap().to_levelwise();
    let s = sphere(1, 2).unwrap().to_levelwise();
    let fold = LevelwiseMap::from_labels(&w, &s, |_, l| l.replace(['a', 'b'], "id")).unwrap();
    let z4 = FiniteMonoid::cyclic(4);
    let z2 = FiniteMonoid::cyclic(2);
    let h = MonoidHomTrans::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
    let (m, nn) = (ha_gamma_set(z4), ha_gamma_set(z2));
    for k in 0..=2 {
      let a = induced_by_coefficients(&w, &h, &m, &nn, 1, k).unwrap();
      let b = induced_by_map(&fold, &w, &s, &nn, 1, k).unwrap();
      let c = induced_by_map(&fold, &w, &s, &m, 1, k).unwrap();
      let d = induced_by_coefficients(&s, &h, &m, &nn, 1, k).unwrap();
      for x in 0..a.len() {
        assert_eq!(b[a[x]], d[c[x]]);
      }
    }
  }
}
