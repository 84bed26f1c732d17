//! Finite pointed sets, morphisms of Γ^op, and Γ-sets (𝔰-modules).
//!
//! A Γ-set is a pointed functor from the finite pointed sets `k_+ = {0,…,k}`
//! (base `0`) to pointed sets. Everything here works on the skeleton: a
//! finite pointed set is identified with `k_+` by putting its base point at
//! index 0, and a pointed map is a [`GammaMorphism`] table.
//!
//! Elements of `F(k_+)` are encoded as `Vec<u32>` ([`GammaElem`]). The meaning
//! of the vector depends on the functor: for 𝔰 it is the single index of a
//! point, for `HA` and `HB` it is one monoid value per non-base point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// A finite pointed set with opaque string labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinPointedSet {
  elements: Vec<String>,
  base:     usize,
}

impl FinPointedSet {
  pub fn new(elements: Vec<String>, base: usize) -> Result<Self> {
    if base >= elements.len() {
      return Err(Error::InvalidPointedSet(format!(
        "base index {base} outside {} elements",
        elements.len()
      )));
    }
    let mut seen = std::collections::HashSet::new();
    for e in &elements {
      if !seen.insert(e.as_str()) {
        return Err(Error::InvalidPointedSet(format!("duplicate label {e:?}")));
      }
    }
    Ok(Self { elements, base })
  }

  /// Builds a pointed set whose base is the first label.
  pub fn from_labels<S: Into<String>>(base: S, rest: impl IntoIterator<Item = S>) -> Result<Self> {
    let mut elements = vec![base.into()];
    elements.extend(rest.into_iter().map(Into::into));
    Self::new(elements, 0)
  }

  /// `k_+ = {0, 1, …, k}` with base `0`.
  pub fn standard(k: usize) -> Self {
    Self { elements: (0..=k).map(|i| i.to_string()).collect(), base: 0 }
  }

  pub fn point() -> Self { Self::standard(0) }

  pub fn len(&self) -> usize { self.elements.len() }

  pub fn is_empty(&self) -> bool { false }

  pub fn non_base_count(&self) -> usize { self.elements.len() - 1 }

  pub fn base(&self) -> usize { self.base }

  pub fn base_label(&self) -> &str { &self.elements[self.base] }

  pub fn elements(&self) -> &[String] { &self.elements }

  pub fn label(&self, i: usize) -> &str { &self.elements[i] }

  pub fn index_of(&self, label: &str) -> Option<usize> { self.elements.iter().position(|e| e == label) }

  /// Labels in skeleton order: base first, then the non-base labels in order.
  pub fn skeleton_labels(&self) -> Vec<String> {
    let mut out = vec![self.elements[self.base].clone()];
    out.extend(self.non_base_labels().cloned());
    out
  }

  pub fn non_base_labels(&self) -> impl Iterator<Item = &String> {
    self.elements.iter().enumerate().filter(move |(i, _)| *i != self.base).map(|(_, e)| e)
  }

  /// Position of each element in skeleton order.
  fn skeleton_position(&self) -> Vec<usize> {
    let mut pos = vec![0; self.len()];
    let mut next = 1;
    for (i, p) in pos.iter_mut().enumerate() {
      if i != self.base {
        *p = next;
        next += 1;
      }
    }
    pos
  }
}

/// Smash product `X ∧ Y`: the base together with all pairs of non-base points.
pub fn smash_pointed(x: &FinPointedSet, y: &FinPointedSet) -> FinPointedSet {
  let mut elements = vec![format!("({},{})", x.base_label(), y.base_label())];
  for a in x.non_base_labels() {
    for b in y.non_base_labels() {
      elements.push(format!("({a},{b})"));
    }
  }
  FinPointedSet { elements, base: 0 }
}

/// A morphism `k_+ → m_+` of Γ^op: a table with `table[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMorphism")]
pub struct GammaMorphism {
  k:     usize,
  m:     usize,
  table: Vec<usize>,
}

#[derive(Deserialize)]
struct RawMorphism {
  k:     usize,
  m:     usize,
  table: Vec<usize>,
}

impl TryFrom<RawMorphism> for GammaMorphism {
  type Error = Error;

  fn try_from(r: RawMorphism) -> Result<Self> { GammaMorphism::new(r.k, r.m, r.table) }
}

impl GammaMorphism {
  pub fn new(k: usize, m: usize, table: Vec<usize>) -> Result<Self> {
    if table.len() != k + 1 {
      return Err(Error::InvalidMorphism(format!("table has {} entries, expected {}", table.len(), k + 1)));
    }
    if table[0] != 0 {
      return Err(Error::InvalidMorphism("table[0] must be 0".into()));
    }
    if let Some(v) = table.iter().find(|&&v| v > m) {
      return Err(Error::InvalidMorphism(format!("value {v} outside 0..={m}")));
    }
    Ok(Self { k, m, table })
  }

  pub fn identity(k: usize) -> Self { Self { k, m: k, table: (0..=k).collect() } }

  /// The unique map to `0_+`.
  pub fn to_point(k: usize) -> Self { Self { k, m: 0, table: vec![0; k + 1] } }

  pub fn source_arity(&self) -> usize { self.k }

  pub fn target_arity(&self) -> usize { self.m }

  pub fn table(&self) -> &[usize] { &self.table }

  pub fn apply(&self, i: usize) -> usize { self.table[i] }

  /// Every morphism `k_+ → m_+`, in lexicographic order of tables.
  pub fn all(k: usize, m: usize) -> Vec<GammaMorphism> {
    let mut out = Vec::new();
    let mut table = vec![0; k + 1];
    loop {
      out.push(GammaMorphism { k, m, table: table.clone() });
      let mut pos = k;
      loop {
        if pos == 0 {
          return out;
        }
        if table[pos] < m {
          table[pos] += 1;
          break;
        }
        table[pos] = 0;
        pos -= 1;
      }
    }
  }

  /// Converts a base-preserving map between labelled pointed sets.
  pub fn from_pointed_map(x: &FinPointedSet, y: &FinPointedSet, map: &[usize]) -> Result<Self> {
    if map.len() != x.len() {
      return Err(Error::ArityMismatch(format!("map has {} entries for {} points", map.len(), x.len())));
    }
    if map[x.base()] != y.base() {
      return Err(Error::InvalidMorphism("map does not preserve the base point".into()));
    }
    let (px, py) = (x.skeleton_position(), y.skeleton_position());
    let mut table = vec![0; x.len()];
    for (i, &j) in map.iter().enumerate() {
      if j >= y.len() {
        return Err(Error::IndexOutOfRange(format!("target index {j}")));
      }
      table[px[i]] = py[j];
    }
    GammaMorphism::new(x.non_base_count(), y.non_base_count(), table)
  }
}

/// `g ∘ f`, defined when `f` lands where `g` starts.
pub fn compose_gamma_morphisms(f: &GammaMorphism, g: &GammaMorphism) -> Result<GammaMorphism> {
  if f.m != g.k {
    return Err(Error::ArityMismatch(format!("cannot compose {}_+ -> {}_+ with {}_+ -> {}_+", f.k, f.m, g.k, g.m)));
  }
  Ok(GammaMorphism { k: f.k, m: g.m, table: f.table.iter().map(|&i| g.table[i]).collect() })
}

/// A finite commutative monoid given by its addition table.
///
/// Construction reorders elements so that the zero sits at index 0; labels
/// are kept, so rendered output is unaffected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
  labels: Vec<String>,
  add:    Vec<Vec<usize>>,
}

/// JSON form of a monoid. `zero` and the table entries may be given either as
/// labels or as positions in `elements`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidSpec {
  pub elements: Vec<String>,
  pub zero:     ElementRef,
  pub add:      Vec<Vec<ElementRef>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
  Index(usize),
  Label(String),
}

impl FiniteMonoid {
  pub fn new(labels: Vec<String>, zero: usize, add: Vec<Vec<usize>>) -> Result<Self> {
    let n = labels.len();
    if n == 0 {
      return Err(Error::InvalidMonoid("no elements".into()));
    }
    if zero >= n {
      return Err(Error::InvalidMonoid(format!("zero index {zero} out of range")));
    }
    if add.len() != n || add.iter().any(|r| r.len() != n) {
      return Err(Error::InvalidMonoid(format!("addition table must be {n}x{n}")));
    }
    FinPointedSet::new(labels.clone(), 0).map_err(|e| Error::InvalidMonoid(e.to_string()))?;
    for (a, row) in add.iter().enumerate() {
      for (b, &c) in row.iter().enumerate() {
        if c >= n {
          return Err(Error::InvalidMonoid(format!("{} + {} has out-of-range value {c}", labels[a], labels[b])));
        }
      }
    }
    for a in 0..n {
      if add[zero][a] != a || add[a][zero] != a {
        return Err(Error::InvalidMonoid(format!("{} is not neutral for {}", labels[zero], labels[a])));
      }
      for b in 0..n {
        if add[a][b] != add[b][a] {
          return Err(Error::InvalidMonoid(format!("{} + {} is not commutative", labels[a], labels[b])));
        }
        for c in 0..n {
          if add[add[a][b]][c] != add[a][add[b][c]] {
            return Err(Error::InvalidMonoid(format!(
              "({0} + {1}) + {2} != {0} + ({1} + {2})",
              labels[a], labels[b], labels[c]
            )));
          }
        }
      }
    }
    // Move zero to index 0.
    let mut order: Vec<usize> = vec![zero];
    order.extend((0..n).filter(|&i| i != zero));
    let mut new_index = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
      new_index[old] = new;
    }
    let labels = order.iter().map(|&i| labels[i].clone()).collect();
    let add = order.iter().map(|&a| order.iter().map(|&b| new_index[add[a][b]]).collect()).collect();
    Ok(Self { labels, add })
  }

  pub fn from_spec(spec: &MonoidSpec) -> Result<Self> {
    let resolve = |r: &ElementRef| -> Result<usize> {
      match r {
        ElementRef::Index(i) if *i < spec.elements.len() => Ok(*i),
        ElementRef::Index(i) => Err(Error::InvalidMonoid(format!("element index {i} out of range"))),
        ElementRef::Label(l) => spec
          .elements
          .iter()
          .position(|e| e == l)
          .ok_or_else(|| Error::InvalidMonoid(format!("unknown element {l:?}"))),
      }
    };
    let zero = resolve(&spec.zero)?;
    let add = spec.add.iter().map(|row| row.iter().map(resolve).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    Self::new(spec.elements.clone(), zero, add)
  }

  pub fn to_spec(&self) -> MonoidSpec {
    MonoidSpec {
      elements: self.labels.clone(),
      zero:     ElementRef::Label(self.labels[0].clone()),
      add:      self
        .add
        .iter()
        .map(|row| row.iter().map(|&c| ElementRef::Label(self.labels[c].clone())).collect())
        .collect(),
    }
  }

  /// `Z/m` with elements labelled `0..m`.
  pub fn cyclic(m: usize) -> Self {
    assert!(m >= 1, "Z/0 is not finite");
    let labels = (0..m).map(|i| i.to_string()).collect();
    let add = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    Self { labels, add }
  }

  /// The Boolean semiring `{0, 1}` under `max`.
  pub fn boolean() -> Self {
    Self { labels: vec!["0".into(), "1".into()], add: vec![vec![0, 1], vec![1, 1]] }
  }

  /// Direct product, elements labelled `(a,b)`.
  pub fn product(a: &FiniteMonoid, b: &FiniteMonoid) -> Self {
    let (na, nb) = (a.len(), b.len());
    let labels = (0..na * nb).map(|i| format!("({},{})", a.labels[i / nb], b.labels[i % nb])).collect();
    let add = (0..na * nb)
      .map(|x| (0..na * nb).map(|y| a.add[x / nb][y / nb] * nb + b.add[x % nb][y % nb]).collect())
      .collect();
    Self { labels, add }
  }

  pub fn len(&self) -> usize { self.labels.len() }

  pub fn is_empty(&self) -> bool { false }

  pub fn zero(&self) -> usize { 0 }

  pub fn add(&self, a: usize, b: usize) -> usize { self.add[a][b] }

  pub fn label(&self, a: usize) -> &str { &self.labels[a] }

  pub fn labels(&self) -> &[String] { &self.labels }

  pub fn index_of(&self, label: &str) -> Option<usize> { self.labels.iter().position(|l| l == label) }

  pub fn is_group(&self) -> bool { (0..self.len()).all(|a| (0..self.len()).any(|b| self.add[a][b] == 0)) }

  /// Values `v` with `partial + v = 0`.
  pub fn completions_to_zero(&self, partial: usize) -> Vec<usize> {
    (0..self.len()).filter(|&v| self.add[partial][v] == 0).collect()
  }
}

/// An element of `F(k_+)`.
pub type GammaElem = Vec<u32>;

/// A Γ-set with an effective description.
///
/// Implementations must be pointed (`F(0_+)` is a single point) and
/// functorial; the built-ins are checked for both in the test suite.
pub trait GammaSet: fmt::Debug + Send + Sync {
  fn name(&self) -> String;

  /// `|F(k_+)|`, or `None` when the value is infinite.
  fn cardinality(&self, arity: usize) -> Option<u128>;

  fn base(&self, arity: usize) -> GammaElem;

  /// Every element of `F(k_+)`, base first.
  fn elements(&self, arity: usize) -> Result<Vec<GammaElem>>;

  fn push(&self, f: &GammaMorphism, x: &GammaElem) -> GammaElem;

  /// Human-readable form; `points[i]` labels the point `i` of `k_+`.
  fn render(&self, x: &GammaElem, points: &[String]) -> String;

  /// When `F = HA` for a finite monoid `A`, returns `A`. Such functors send
  /// wedges to products, which the homology engine exploits.
  fn fiber_monoid(&self) -> Option<&FiniteMonoid> { None }
}

/// The Γ-ring 𝔰: the inclusion of Γ^op into pointed sets.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityGamma;

impl GammaSet for IdentityGamma {
  fn name(&self) -> String { "s".into() }

  fn cardinality(&self, arity: usize) -> Option<u128> { Some(arity as u128 + 1) }

  fn base(&self, _arity: usize) -> GammaElem { vec![0] }

  fn elements(&self, arity: usize) -> Result<Vec<GammaElem>> { Ok((0..=arity as u32).map(|i| vec![i]).collect()) }

  fn push(&self, f: &GammaMorphism, x: &GammaElem) -> GammaElem { vec![f.apply(x[0] as usize) as u32] }

  fn render(&self, x: &GammaElem, points: &[String]) -> String { points[x[0] as usize].clone() }
}

/// `HA` for a finite commutative monoid `A`: `A`-valued maps vanishing at the
/// base, pushed forward by summing over fibres.
#[derive(Clone, Debug)]
pub struct HA {
  monoid: FiniteMonoid,
}

pub fn ha_gamma_set(monoid: FiniteMonoid) -> HA { HA { monoid } }

impl HA {
  pub fn monoid(&self) -> &FiniteMonoid { &self.monoid }
}

fn enumerate_vectors(len: usize, radix: usize) -> Vec<GammaElem> {
  let total = (radix as u128).pow(len as u32) as usize;
  let mut out = Vec::with_capacity(total);
  let mut cur = vec![0u32; len];
  for _ in 0..total {
    out.push(cur.clone());
    for d in (0..len).rev() {
      if (cur[d] as usize) + 1 < radix {
        cur[d] += 1;
        break;
      }
      cur[d] = 0;
    }
  }
  out
}

fn fiber_push(monoid: &FiniteMonoid, f: &GammaMorphism, x: &GammaElem) -> GammaElem {
  let mut out = vec![0u32; f.target_arity()];
  for (l, &v) in x.iter().enumerate() {
    let j = f.apply(l + 1);
    if j != 0 {
      out[j - 1] = monoid.add(out[j - 1] as usize, v as usize) as u32;
    }
  }
  out
}

impl GammaSet for HA {
  fn name(&self) -> String { format!("H[{}]", self.monoid.labels.join(",")) }

  fn cardinality(&self, arity: usize) -> Option<u128> { (self.monoid.len() as u128).checked_pow(arity as u32) }

  fn base(&self, arity: usize) -> GammaElem { vec![0; arity] }

  fn elements(&self, arity: usize) -> Result<Vec<GammaElem>> { Ok(enumerate_vectors(arity, self.monoid.len())) }

  fn push(&self, f: &GammaMorphism, x: &GammaElem) -> GammaElem { fiber_push(&self.monoid, f, x) }

  fn render(&self, x: &GammaElem, points: &[String]) -> String {
    let parts: Vec<String> = x
      .iter()
      .enumerate()
      .filter(|(_, &v)| v != 0)
      .map(|(i, &v)| format!("{}:{}", points[i + 1], self.monoid.label(v as usize)))
      .collect();
    format!("{{{}}}", parts.join(","))
  }

  fn fiber_monoid(&self) -> Option<&FiniteMonoid> { Some(&self.monoid) }
}

/// `HB`: subsets containing the base point, pushed forward by direct image.
///
/// Encoded as an indicator vector on the non-base points; this makes `HB`
/// the same functor as `H` of the Boolean monoid.
#[derive(Clone, Debug)]
pub struct HB {
  boolean: FiniteMonoid,
}

pub fn hb_gamma_set() -> HB { HB { boolean: FiniteMonoid::boolean() } }

impl HB {
  /// The members of the subset encoded by `x`, base (index 0) included.
  pub fn members(x: &GammaElem) -> Vec<usize> {
    std::iter::once(0).chain(x.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i + 1)).collect()
  }

  pub fn from_members(arity: usize, members: &[usize]) -> GammaElem {
    let mut x = vec![0; arity];
    for &m in members.iter().filter(|&&m| m != 0) {
      x[m - 1] = 1;
    }
    x
  }
}

impl GammaSet for HB {
  fn name(&self) -> String { "HB".into() }

  fn cardinality(&self, arity: usize) -> Option<u128> { 2u128.checked_pow(arity as u32) }

  fn base(&self, arity: usize) -> GammaElem { vec![0; arity] }

  fn elements(&self, arity: usize) -> Result<Vec<GammaElem>> { Ok(enumerate_vectors(arity, 2)) }

  fn push(&self, f: &GammaMorphism, x: &GammaElem) -> GammaElem { fiber_push(&self.boolean, f, x) }

  fn render(&self, x: &GammaElem, points: &[String]) -> String {
    let parts: Vec<&str> = HB::members(x).into_iter().map(|i| points[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
  }

  fn fiber_monoid(&self) -> Option<&FiniteMonoid> { Some(&self.boolean) }
}

/// The composite Γ-set `outer ∘ inner`, both viewed as endofunctors of
/// pointed sets.
#[derive(Debug)]
pub struct Composite<'a> {
  pub inner: &'a dyn GammaSet,
  pub outer: &'a dyn GammaSet,
}

impl Composite<'_> {
  fn inner_points(&self, arity: usize) -> Result<(Vec<GammaElem>, HashMap<GammaElem, usize>)> {
    let pts = self.inner.elements(arity)?;
    let index = pts.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    Ok((pts, index))
  }
}

impl GammaSet for Composite<'_> {
  fn name(&self) -> String { format!("{}o{}", self.outer.name(), self.inner.name()) }

  fn cardinality(&self, arity: usize) -> Option<u128> {
    let n = self.inner.cardinality(arity)?;
    self.outer.cardinality(usize::try_from(n).ok()? - 1)
  }

  fn base(&self, arity: usize) -> GammaElem {
    let n = self.inner.cardinality(arity).expect("finite inner Gamma-set") as usize;
    self.outer.base(n - 1)
  }

  fn elements(&self, arity: usize) -> Result<Vec<GammaElem>> {
    let n = self.inner.cardinality(arity).ok_or_else(|| Error::NotEnumerable(self.inner.name()))? as usize;
    self.outer.elements(n - 1)
  }

  fn push(&self, f: &GammaMorphism, x: &GammaElem) -> GammaElem {
    let (src, _) = self.inner_points(f.source_arity()).expect("finite inner Gamma-set");
    let (_, tgt) = self.inner_points(f.target_arity()).expect("finite inner Gamma-set");
    let table = src.iter().map(|e| tgt[&self.inner.push(f, e)]).collect();
    let induced = GammaMorphism::new(src.len() - 1, tgt.len() - 1, table).expect("inner push is pointed");
    self.outer.push(&induced, x)
  }

  fn render(&self, x: &GammaElem, points: &[String]) -> String {
    let arity = points.len() - 1;
    let pts = self.inner.elements(arity).expect("finite inner Gamma-set");
    let labels: Vec<String> = pts.iter().map(|e| self.inner.render(e, points)).collect();
    self.outer.render(x, &labels)
  }
}

/// Evaluates `F` on a labelled pointed set, rendering each element.
pub fn eval_set(f: &dyn GammaSet, x: &FinPointedSet) -> Result<FinPointedSet> {
  let points = x.skeleton_labels();
  let elems = f.elements(x.non_base_count())?;
  FinPointedSet::new(elems.iter().map(|e| f.render(e, &points)).collect(), 0)
}

/// A morphism of Γ-sets, given by its components.
pub trait GammaNatTrans: fmt::Debug + Send + Sync {
  fn apply(&self, arity: usize, x: &GammaElem) -> GammaElem;
}

/// `HA → HB` induced by a monoid homomorphism `A → B` (given as a table).
#[derive(Clone, Debug)]
pub struct MonoidHomTrans {
  pub table: Vec<usize>,
}

impl MonoidHomTrans {
  pub fn new(from: &FiniteMonoid, to: &FiniteMonoid, table: Vec<usize>) -> Result<Self> {
    if table.len() != from.len() || table.iter().any(|&v| v >= to.len()) {
      return Err(Error::InvalidMonoid("homomorphism table has wrong shape".into()));
    }
    if table[0] != 0 {
      return Err(Error::InvalidMonoid("homomorphism must preserve zero".into()));
    }
    for a in 0..from.len() {
      for b in 0..from.len() {
        if table[from.add(a, b)] != to.add(table[a], table[b]) {
          return Err(Error::InvalidMonoid(format!("not additive at ({a}, {b})")));
        }
      }
    }
    Ok(Self { table })
  }
}

impl GammaNatTrans for MonoidHomTrans {
  fn apply(&self, _arity: usize, x: &GammaElem) -> GammaElem { x.iter().map(|&v| self.table[v as usize] as u32).collect() }
}

/// `𝔰 → HA`, sending a point `x` to the indicator of `x` with value `value`
/// (and the base to zero).
#[derive(Clone, Debug)]
pub struct PointIndicator {
  pub value: usize,
}

impl GammaNatTrans for PointIndicator {
  fn apply(&self, arity: usize, x: &GammaElem) -> GammaElem {
    let mut out = vec![0; arity];
    if x[0] != 0 {
      out[x[0] as usize - 1] = self.value as u32;
    }
    out
  }
}

/// A finitely supported rational weighting of the non-base points of a
/// pointed set: an element of `HQ(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalWeighting {
  support: BTreeMap<String, Q>,
}

impl RationalWeighting {
  /// Drops zero weights and rejects weights on the base label.
  pub fn new(weights: impl IntoIterator<Item = (String, Q)>, base_label: &str) -> Result<Self> {
    let mut support = BTreeMap::new();
    for (k, v) in weights {
      if k == base_label {
        return Err(Error::InvalidPointedSet(format!("weighting assigns {} to the base point", format_q(&v))));
      }
      if !v.is_zero() {
        support.insert(k, v);
      }
    }
    Ok(Self { support })
  }

  pub fn support(&self) -> &BTreeMap<String, Q> { &self.support }

  pub fn l1_mass(&self) -> Q { self.support.values().fold(Q::zero(), |acc, v| acc + v.abs()) }

  /// Pushforward along a pointed map given on labels; unmapped labels and
  /// labels sent to `base_label` vanish.
  pub fn push(&self, map: &BTreeMap<String, String>, base_label: &str) -> RationalWeighting {
    let mut out: BTreeMap<String, Q> = BTreeMap::new();
    for (k, v) in &self.support {
      if let Some(t) = map.get(k) {
        if t != base_label {
          *out.entry(t.clone()).or_insert_with(Q::zero) += v;
        }
      }
    }
    out.retain(|_, v| !v.is_zero());
    RationalWeighting { support: out }
  }
}

/// Membership in `‖HR‖_λ`: total absolute mass strictly below `λ`.
pub fn hr_lambda_contains(w: &RationalWeighting, lambda: &Q) -> Result<bool> {
  if !lambda.is_positive() {
    return Err(Error::NonPositiveLambda(format_q(lambda)));
  }
  Ok(&w.l1_mass() < lambda)
}

/// Membership in the unit ball `‖HR‖_1`: total absolute mass at most 1.
pub fn hr1_algebra_contains(w: &RationalWeighting) -> bool { w.l1_mass() <= Q::from_integer(1.into()) }

#[cfg(test)]
mod tests {
  use super::*;
  use crate::rational::{frac, q};

  fn m(k: usize, mm: usize, t: &[usize]) -> GammaMorphism { GammaMorphism::new(k, mm, t.to_vec()).unwrap() }

  #[test]
  fn compose_identity() {
    let id = GammaMorphism::identity(2);
    assert_eq!(compose_gamma_morphisms(&id, &id).unwrap(), id);
  }

  #[test]
  fn compose_forced() {
    let f = m(1, 2, &[0, 2]);
    let g = m(2, 1, &[0, 1, 1]);
    assert_eq!(compose_gamma_morphisms(&f, &g).unwrap().table(), &[0, 1]);
  }

  #[test]
  fn swap_is_involution() {
    let s = m(2, 2, &[0, 2, 1]);
    assert_eq!(compose_gamma_morphisms(&s, &s).unwrap(), GammaMorphism::identity(2));
  }

  #[test]
  fn compose_arity_mismatch() {
    let f = m(1, 2, &[0, 2]);
    assert!(matches!(compose_gamma_morphisms(&f, &f), Err(Error::ArityMismatch(_))));
  }

  #[test]
  fn morphism_rejects_moved_base() {
    assert!(GammaMorphism::new(1, 1, vec![1, 0]).is_err());
    assert!(GammaMorphism::new(1, 1, vec![0, 2]).is_err());
    assert!(serde_json::from_str::<GammaMorphism>(r#"{"k":1,"m":1,"table":[1,1]}"#).is_err());
    let ok: GammaMorphism = serde_json::from_str(r#"{"k":2,"m":1,"table":[0,1,0]}"#).unwrap();
    assert_eq!(ok.table(), &[0, 1, 0]);
  }

  #[test]
  fn all_morphisms_count() {
    assert_eq!(GammaMorphism::all(3, 2).len(), 27);
    assert_eq!(GammaMorphism::all(0, 3).len(), 1);
    assert_eq!(GammaMorphism::all(2, 0).len(), 1);
  }

  #[test]
  fn smash_sizes() {
    let s = smash_pointed(&FinPointedSet::standard(2), &FinPointedSet::standard(3));
    assert_eq!(s.non_base_count(), 6);
    let x = FinPointedSet::from_labels("*", ["a", "b"]).unwrap();
    assert_eq!(smash_pointed(&x, &FinPointedSet::standard(1)).non_base_count(), 2);
    assert_eq!(smash_pointed(&x, &FinPointedSet::standard(0)).len(), 1);
  }

  #[test]
  fn ha_z2() {
    let ha = ha_gamma_set(FiniteMonoid::cyclic(2));
    assert_eq!(ha.elements(2).unwrap().len(), 4);
    let fold = m(2, 1, &[0, 1, 1]);
    for a in 0..2u32 {
      for b in 0..2u32 {
        assert_eq!(ha.push(&fold, &vec![a, b]), vec![(a + b) % 2]);
      }
    }
    for f in GammaMorphism::all(2, 3) {
      assert_eq!(ha.push(&f, &ha.base(2)), ha.base(3));
    }
  }

  #[test]
  fn hb_values() {
    let hb = hb_gamma_set();
    let one = hb.elements(1).unwrap();
    assert_eq!(one.len(), 2);
    let pts = FinPointedSet::standard(1).skeleton_labels();
    let rendered: Vec<String> = one.iter().map(|e| hb.render(e, &pts)).collect();
    assert_eq!(rendered, vec!["{0}", "{0,1}"]);
    assert_eq!(hb.elements(2).unwrap().len(), 4);
    let to_base = GammaMorphism::to_point(3);
    for z in hb.elements(3).unwrap() {
      assert_eq!(hb.push(&to_base, &z), hb.base(0));
    }
  }

  #[test]
  fn hb_direct_image_law() {
    let hb = hb_gamma_set();
    for f in GammaMorphism::all(3, 2) {
      for z in hb.elements(3).unwrap() {
        let all_to_base = HB::members(&z).iter().all(|&x| f.apply(x) == 0);
        assert_eq!(hb.push(&f, &z) == hb.base(2), all_to_base);
      }
    }
  }

  #[test]
  fn monoid_validation() {
    let bad = FiniteMonoid::new(vec!["0".into(), "1".into()], 0, vec![vec![0, 1], vec![0, 0]]);
    assert!(bad.is_err());
    let noncomm = FiniteMonoid::new(vec!["0".into(), "a".into(), "b".into()], 0, vec![
      vec![0, 1, 2],
      vec![1, 1, 1],
      vec![2, 2, 2],
    ]);
    assert!(matches!(noncomm, Err(Error::InvalidMonoid(_))));
    let reordered = FiniteMonoid::new(vec!["1".into(), "0".into()], 1, vec![vec![1, 0], vec![0, 1]]).unwrap();
    assert_eq!(reordered.label(0), "0");
    assert!(reordered.is_group());
    assert!(!FiniteMonoid::boolean().is_group());
  }

  #[test]
  fn monoid_spec_labels() {
    let json = r#"{"elements":["e","x"],"zero":"e","add":[["e","x"],["x","x"]]}"#;
    let spec: MonoidSpec = serde_json::from_str(json).unwrap();
    let mono = FiniteMonoid::from_spec(&spec).unwrap();
    assert_eq!(mono, FiniteMonoid::new(vec!["e".into(), "x".into()], 0, vec![vec![0, 1], vec![1, 1]]).unwrap());
    let back = FiniteMonoid::from_spec(&mono.to_spec()).unwrap();
    assert_eq!(back, mono);
  }

  #[test]
  fn hr_lambda_cases() {
    let empty = RationalWeighting::default();
    assert!(hr_lambda_contains(&empty, &q(1)).unwrap());
    let w = RationalWeighting::new([("a".to_string(), frac(1, 2)), ("b".to_string(), frac(-1, 3))], "*").unwrap();
    assert!(!hr_lambda_contains(&w, &frac(5, 6)).unwrap());
    assert!(!hr_lambda_contains(&w, &frac(4, 5)).unwrap());
    assert!(hr_lambda_contains(&w, &frac(7, 8)).unwrap());
    assert!(matches!(hr_lambda_contains(&w, &q(0)), Err(Error::NonPositiveLambda(_))));
    assert!(matches!(hr_lambda_contains(&w, &q(-2)), Err(Error::NonPositiveLambda(_))));
  }

  #[test]
  fn hr1_cases() {
    let w = RationalWeighting::new([("a".to_string(), frac(1, 4)), ("b".to_string(), frac(-3, 4))], "*").unwrap();
    assert!(hr1_algebra_contains(&w));
    let w = RationalWeighting::new([("a".to_string(), frac(1001, 1000))], "*").unwrap();
    assert!(!hr1_algebra_contains(&w));
    assert!(hr1_algebra_contains(&RationalWeighting::default()));
  }

  #[test]
  fn weighting_rejects_base() {
    assert!(RationalWeighting::new([("*".to_string(), q(1))], "*").is_err());
    let w = RationalWeighting::new([("a".to_string(), q(0))], "*").unwrap();
    assert!(w.support().is_empty());
  }

  #[test]
  fn weighting_push_cancels() {
    let w = RationalWeighting::new([("a".to_string(), q(1)), ("b".to_string(), q(-1))], "*").unwrap();
    let fold: BTreeMap<String, String> = [("a", "c"), ("b", "c")].iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
    assert!(w.push(&fold, "*").support().is_empty());
  }

  #[test]
  fn composite_hb_hb() {
    let hb = hb_gamma_set();
    let c = Composite { inner: &hb, outer: &hb };
    assert_eq!(c.cardinality(1), Some(2));
    assert_eq!(c.cardinality(2), Some(8));
    assert_eq!(c.elements(0).unwrap().len(), 1);
  }

  #[test]
  fn pointed_map_conversion() {
    let x = FinPointedSet::new(vec!["a".into(), "*".into(), "b".into()], 1).unwrap();
    let y = FinPointedSet::from_labels("pt", ["c"]).unwrap();
    let f = GammaMorphism::from_pointed_map(&x, &y, &[1, 0, 0]).unwrap();
    assert_eq!(f.table(), &[0, 1, 0]);
    assert!(GammaMorphism::from_pointed_map(&x, &y, &[1, 1, 0]).is_err());
  }

  #[test]
  fn eval_set_renders() {
    let hb = hb_gamma_set();
    let x = FinPointedSet::from_labels("*", ["a"]).unwrap();
    let v = eval_set(&hb, &x).unwrap();
    assert_eq!(v.elements(), &["{*}".to_string(), "{*,a}".to_string()]);
    let s = eval_set(&IdentityGamma, &x).unwrap();
    assert_eq!(s, x);
  }
}
