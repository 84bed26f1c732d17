//! The topos of 2-sets: presheaves on the full subcategory `{[0], [1]}` of Δ.
//!
//! A 2-set has vertices `F0`, edges `F1`, two boundaries `b0, b1: F1 → F0`
//! and a section `s: F0 → F1` with `b_j ∘ s = id`. Equivalently it is a set
//! with a right action of the monoid `{1, m0, m1}` where `m_j x = m_j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::FinPointedSet;
use crate::simplicial::{omega_n_levels, LevelwiseSimplicialSet};
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSet {
  f0:   Vec<String>,
  f1:   Vec<String>,
  b0:   Vec<usize>,
  b1:   Vec<usize>,
  s:    Vec<usize>,
  base: Option<usize>,
}

/// File form: label lists and label-to-label maps.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoSetSpec {
  #[serde(rename = "F0")]
  pub f0:   Vec<String>,
  #[serde(rename = "F1")]
  pub f1:   Vec<String>,
  pub b0:   BTreeMap<String, String>,
  pub b1:   BTreeMap<String, String>,
  pub s:    BTreeMap<String, String>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub base: Option<String>,
}

impl TwoSet {
  pub fn new(f0: Vec<String>, f1: Vec<String>, b0: Vec<usize>, b1: Vec<usize>, s: Vec<usize>, base: Option<usize>) -> Result<Self> {
    let bad = |m: String| Err(Error::InvalidTwoSet(m));
    if b0.len() != f1.len() || b1.len() != f1.len() || s.len() != f0.len() {
      return bad("map tables have the wrong length".into());
    }
    if b0.iter().chain(&b1).any(|&v| v >= f0.len()) || s.iter().any(|&e| e >= f1.len()) {
      return bad("map value out of range".into());
    }
    for (name, labels) in [("F0", &f0), ("F1", &f1)] {
      let mut seen = std::collections::HashSet::new();
      if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        return bad(format!("duplicate {name} label {l:?}"));
      }
    }
    for v in 0..f0.len() {
      if b0[s[v]] != v || b1[s[v]] != v {
        return bad(format!("b_j(s({})) != {}", f0[v], f0[v]));
      }
    }
    if base.is_some_and(|b| b >= f0.len()) {
      return bad("base vertex out of range".into());
    }
    Ok(Self { f0, f1, b0, b1, s, base })
  }

  pub fn from_spec(spec: &TwoSetSpec) -> Result<Self> {
    let find = |labels: &[String], l: &str, what: &str| -> Result<usize> {
      labels.iter().position(|x| x == l).ok_or_else(|| Error::InvalidTwoSet(format!("unknown {what} label {l:?}")))
    };
    let edge_map = |m: &BTreeMap<String, String>, name: &str| -> Result<Vec<usize>> {
      spec
        .f1
        .iter()
        .map(|e| {
          let v = m.get(e).ok_or_else(|| Error::InvalidTwoSet(format!("{name} undefined on {e:?}")))?;
          find(&spec.f0, v, "F0")
        })
        .collect()
    };
    let b0 = edge_map(&spec.b0, "b0")?;
    let b1 = edge_map(&spec.b1, "b1")?;
    let s = spec
      .f0
      .iter()
      .map(|v| {
        let e = spec.s.get(v).ok_or_else(|| Error::InvalidTwoSet(format!("s undefined on {v:?}")))?;
        find(&spec.f1, e, "F1")
      })
      .collect::<Result<_>>()?;
    let base = spec.base.as_deref().map(|b| find(&spec.f0, b, "F0")).transpose()?;
    Self::new(spec.f0.clone(), spec.f1.clone(), b0, b1, s, base)
  }

  pub fn to_spec(&self) -> TwoSetSpec {
    let edge_map = |m: &[usize]| self.f1.iter().zip(m).map(|(e, &v)| (e.clone(), self.f0[v].clone())).collect();
    TwoSetSpec {
      f0:   self.f0.clone(),
      f1:   self.f1.clone(),
      b0:   edge_map(&self.b0),
      b1:   edge_map(&self.b1),
      s:    self.f0.iter().zip(&self.s).map(|(v, &e)| (v.clone(), self.f1[e].clone())).collect(),
      base: self.base.map(|b| self.f0[b].clone()),
    }
  }

  pub fn vertices(&self) -> &[String] { &self.f0 }

  pub fn edges(&self) -> &[String] { &self.f1 }

  pub fn b0(&self, e: usize) -> usize { self.b0[e] }

  pub fn b1(&self, e: usize) -> usize { self.b1[e] }

  pub fn boundary(&self, j: usize, e: usize) -> usize { if j == 0 { self.b0[e] } else { self.b1[e] } }

  pub fn section(&self, v: usize) -> usize { self.s[v] }

  pub fn base(&self) -> Option<usize> { self.base }

  /// Edges outside the image of the section.
  pub fn nondegenerate_edges(&self) -> Vec<usize> {
    let mut degenerate = vec![false; self.f1.len()];
    for &e in &self.s {
      degenerate[e] = true;
    }
    (0..self.f1.len()).filter(|&e| !degenerate[e]).collect()
  }
}

/// A right action of `{1, m0, m1}`: `act0`, `act1` with `act_i ∘ act_j = act_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSet {
  carrier: Vec<String>,
  act0:    Vec<usize>,
  act1:    Vec<usize>,
}

impl MSet {
  pub fn new(carrier: Vec<String>, act0: Vec<usize>, act1: Vec<usize>) -> Result<Self> {
    let n = carrier.len();
    if act0.len() != n || act1.len() != n || act0.iter().chain(&act1).any(|&v| v >= n) {
      return Err(Error::InvalidMSet("action tables have the wrong shape".into()));
    }
    let acts = [&act0, &act1];
    for x in 0..n {
      for i in 0..2 {
        for j in 0..2 {
          if acts[i][acts[j][x]] != acts[j][x] {
            return Err(Error::InvalidMSet(format!("act{i}(act{j}({})) != act{j}({})", carrier[x], carrier[x])));
          }
        }
      }
    }
    Ok(Self { carrier, act0, act1 })
  }

  pub fn carrier(&self) -> &[String] { &self.carrier }

  pub fn act(&self, j: usize, x: usize) -> usize { if j == 0 { self.act0[x] } else { self.act1[x] } }

  /// Image of `act_j`; the same set for both `j`.
  pub fn range(&self, j: usize) -> Vec<usize> {
    let t = if j == 0 { &self.act0 } else { &self.act1 };
    let mut r: Vec<usize> = t.clone();
    r.sort_unstable();
    r.dedup();
    r
  }
}

/// `T_j = s ∘ b_j` acting on `F1`.
pub fn twoset_to_mset(t: &TwoSet) -> MSet {
  let act = |b: &[usize]| b.iter().map(|&v| t.s[v]).collect();
  MSet::new(t.f1.clone(), act(&t.b0), act(&t.b1)).expect("section identities give the action law")
}

/// `F1` = carrier, `F0` = range of `act0`, section the inclusion.
pub fn mset_to_twoset(m: &MSet) -> TwoSet {
  let range = m.range(0);
  let pos: BTreeMap<usize, usize> = range.iter().enumerate().map(|(i, &x)| (x, i)).collect();
  let f0 = range.iter().map(|&x| m.carrier[x].clone()).collect();
  let b = |j: usize| (0..m.carrier.len()).map(|x| pos[&m.act(j, x)]).collect();
  TwoSet::new(f0, m.carrier.clone(), b(0), b(1), range.clone(), None).expect("range is fixed by both actions")
}

/// The quiver `(V, E, d0, d1)` as a 2-set: `F1 = V ⊔ E`.
pub fn quiver_to_twoset(vertices: &[String], edges: &[String], d0: &[usize], d1: &[usize]) -> Result<TwoSet> {
  if d0.len() != edges.len() || d1.len() != edges.len() {
    return Err(Error::InvalidTwoSet("source/target lists do not match the edges".into()));
  }
  let f1: Vec<String> = vertices.iter().cloned().chain(edges.iter().cloned()).collect();
  let b = |d: &[usize]| (0..vertices.len()).chain(d.iter().copied()).collect();
  TwoSet::new(vertices.to_vec(), f1, b(d0), b(d1), (0..vertices.len()).collect(), None)
}

/// Connected components of a 2-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
  /// Class of each vertex.
  pub class_of: Vec<usize>,
  /// Label of the minimal vertex of each class.
  pub labels:   Vec<String>,
  /// Class of the base vertex, when the 2-set is pointed.
  pub base:     Option<usize>,
}

impl Components {
  pub fn len(&self) -> usize { self.labels.len() }

  pub fn is_empty(&self) -> bool { self.labels.is_empty() }

  /// The components as a pointed set, base class first. `None` when unpointed.
  pub fn pointed(&self) -> Option<FinPointedSet> {
    let b = self.base?;
    let mut labels = vec![self.labels[b].clone()];
    labels.extend(self.labels.iter().enumerate().filter(|(i, _)| *i != b).map(|(_, l)| l.clone()));
    FinPointedSet::new(labels, 0).ok()
  }
}

/// `ℓ`: vertices modulo the equivalence generated by `b0(e) ~ b1(e)`.
pub fn components(t: &TwoSet) -> Components {
  let mut uf = UnionFind::new(t.f0.len());
  for e in 0..t.f1.len() {
    uf.union(t.b0[e], t.b1[e]);
  }
  let (class_of, mins) = uf.classes();
  let labels = mins.iter().map(|&m| t.f0[m].clone()).collect();
  Components { base: t.base.map(|b| class_of[b]), class_of, labels }
}

/// `π^(2)_0`: degrees 0 and 1 of `X` with `b_i = d_i`, `s = s_0`.
pub fn pi2_zero(x: &LevelwiseSimplicialSet) -> Result<TwoSet> { pi2_n(x, 0) }

/// `π^(2)_n = π^(2)_0 ∘ Ω^n`: boundaries `d_n`, `d_{n+1}`, section `s_n`.
pub fn pi2_n(x: &LevelwiseSimplicialSet, n: usize) -> Result<TwoSet> {
  let lv = omega_n_levels(x, n)?;
  let f0 = lv.set0.iter().map(|&s| x.level(n).label(s).to_string()).collect();
  let f1 = lv.set1.iter().map(|&s| x.level(n + 1).label(s).to_string()).collect();
  TwoSet::new(f0, f1, lv.left, lv.right, lv.section, Some(0))
}

/// Vertex and edge labels of the subobject classifier.
pub const FALSE: usize = 0;
pub const TRUE: usize = 1;
pub const REPAIR: usize = 2;
pub const DOUBT: usize = 3;
pub const CHECK: usize = 4;

pub const CLASSIFIER_EDGE_NAMES: [&str; 5] = ["False", "True", "Repair", "Doubt", "Check"];

/// Vertices `{False, True}`, edges `{False, True, Repair, Doubt, Check}`.
///
/// The edges are the right ideals `∅, M, {m1}, {m0}, {m0, m1}` with
/// `b_j(J) = True` exactly when `m_j ∈ J`. So `Repair` runs from `False` to
/// `True`, `Doubt` from `True` to `False`, and `Check` is a loop at `True`.
pub fn subobject_classifier() -> TwoSet {
  TwoSet::new(
    vec!["False".into(), "True".into()],
    CLASSIFIER_EDGE_NAMES.iter().map(|s| s.to_string()).collect(),
    vec![FALSE, TRUE, FALSE, TRUE, TRUE],
    vec![FALSE, TRUE, TRUE, FALSE, TRUE],
    vec![FALSE, TRUE],
    None,
  )
  .expect("classifier is a 2-set")
}

/// A morphism of 2-sets, given on vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSetMap {
  pub on_vertices: Vec<usize>,
  pub on_edges:    Vec<usize>,
}

impl TwoSetMap {
  pub fn is_morphism(&self, from: &TwoSet, to: &TwoSet) -> bool {
    (0..from.f1.len()).all(|e| {
      to.b0[self.on_edges[e]] == self.on_vertices[from.b0[e]] && to.b1[self.on_edges[e]] == self.on_vertices[from.b1[e]]
    }) && (0..from.f0.len()).all(|v| to.s[self.on_vertices[v]] == self.on_edges[from.s[v]])
  }
}

/// Marks which vertices and edges of `G` belong to a sub-2-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject {
  pub vertices: Vec<bool>,
  pub edges:    Vec<bool>,
}

impl Subobject {
  /// Rejects subsets not closed under `b0`, `b1`, `s`.
  pub fn new(g: &TwoSet, vertices: Vec<bool>, edges: Vec<bool>) -> Result<Self> {
    if vertices.len() != g.f0.len() || edges.len() != g.f1.len() {
      return Err(Error::NotSubobject("membership vectors have the wrong length".into()));
    }
    for e in (0..g.f1.len()).filter(|&e| edges[e]) {
      if !vertices[g.b0[e]] || !vertices[g.b1[e]] {
        return Err(Error::NotSubobject(format!("edge {} has a boundary outside the subobject", g.f1[e])));
      }
    }
    for v in (0..g.f0.len()).filter(|&v| vertices[v]) {
      if !edges[g.s[v]] {
        return Err(Error::NotSubobject(format!("s({}) is missing", g.f0[v])));
      }
    }
    Ok(Self { vertices, edges })
  }

  /// Membership by label; degenerate edges of listed vertices are added.
  pub fn from_labels(g: &TwoSet, labels: &[String]) -> Result<Self> {
    for l in labels {
      if !g.f0.contains(l) && !g.f1.contains(l) {
        return Err(Error::NotSubobject(format!("unknown label {l:?}")));
      }
    }
    let vertices: Vec<bool> = g.f0.iter().map(|v| labels.contains(v)).collect();
    let mut edges: Vec<bool> = g.f1.iter().map(|e| labels.contains(e)).collect();
    for v in (0..g.f0.len()).filter(|&v| vertices[v]) {
      edges[g.s[v]] = true;
    }
    Self::new(g, vertices, edges)
  }
}

/// The classifying map `G → Ω` of a subobject.
pub fn classify(g: &TwoSet, sub: &Subobject) -> Result<TwoSetMap> {
  let sub = Subobject::new(g, sub.vertices.clone(), sub.edges.clone())?;
  let on_vertices = sub.vertices.iter().map(|&m| if m { TRUE } else { FALSE }).collect();
  let on_edges = (0..g.f1.len())
    .map(|e| match (sub.edges[e], sub.vertices[g.b0[e]], sub.vertices[g.b1[e]]) {
      (true, _, _) => TRUE,
      (false, false, false) => FALSE,
      (false, false, true) => REPAIR,
      (false, true, false) => DOUBT,
      (false, true, true) => CHECK,
    })
    .collect();
  Ok(TwoSetMap { on_vertices, on_edges })
}

/// Pullback of the `True` subobject of Ω along a map `G → Ω`.
pub fn preimage_of_true(f: &TwoSetMap) -> Subobject {
  Subobject {
    vertices: f.on_vertices.iter().map(|&v| v == TRUE).collect(),
    edges:    f.on_edges.iter().map(|&e| e == TRUE).collect(),
  }
}

/// Every 2-set with exactly `edges` edges, up to relabelling: `v` vertices
/// whose degenerate edges come first, then arbitrary boundaries for the rest.
pub fn enumerate_two_sets(edges: usize) -> Vec<TwoSet> {
  let mut out = Vec::new();
  if edges == 0 {
    out.push(TwoSet::new(vec![], vec![], vec![], vec![], vec![], None).expect("empty"));
    return out;
  }
  for v in 1..=edges {
    let extra = edges - v;
    let f0: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
    let mut f1: Vec<String> = (0..v).map(|i| format!("s(v{i})")).collect();
    f1.extend((0..extra).map(|i| format!("e{i}")));
    let total = v.pow(2 * extra as u32);
    for code in 0..total {
      let mut c = code;
      let mut b0: Vec<usize> = (0..v).collect();
      let mut b1: Vec<usize> = (0..v).collect();
      for _ in 0..extra {
        b0.push(c % v);
        c /= v;
        b1.push(c % v);
        c /= v;
      }
      out.push(TwoSet::new(f0.clone(), f1.clone(), b0, b1, (0..v).collect(), None).expect("section holds"));
    }
  }
  out
}

/// Every subobject of `g`.
pub fn enumerate_subobjects(g: &TwoSet) -> Vec<Subobject> {
  let (nv, ne) = (g.f0.len(), g.f1.len());
  let mut out = Vec::new();
  for vm in 0u32..(1 << nv) {
    let vertices: Vec<bool> = (0..nv).map(|i| vm & (1 << i) != 0).collect();
    for em in 0u32..(1 << ne) {
      let edges: Vec<bool> = (0..ne).map(|i| em & (1 << i) != 0).collect();
      if let Ok(s) = Subobject::new(g, vertices.clone(), edges) {
        out.push(s);
      }
    }
  }
  out
}

/// Every 2-set morphism `g → h`.
pub fn enumerate_morphisms(g: &TwoSet, h: &TwoSet) -> Vec<TwoSetMap> {
  let (nv, ne) = (g.f0.len(), g.f1.len());
  let mut out = Vec::new();
  let vcount = h.f0.len().pow(nv as u32);
  let ecount = h.f1.len().pow(ne as u32);
  for vc in 0..vcount {
    let on_vertices: Vec<usize> = (0..nv).map(|i| (vc / h.f0.len().pow(i as u32)) % h.f0.len()).collect();
    for ec in 0..ecount {
      let on_edges: Vec<usize> = (0..ne).map(|i| (ec / h.f1.len().pow(i as u32)) % h.f1.len()).collect();
      let f = TwoSetMap { on_vertices: on_vertices.clone(), on_edges };
      if f.is_morphism(g, h) {
        out.push(f);
      }
    }
  }
  out
}
