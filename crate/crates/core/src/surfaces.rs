//! The building block K, the genus-g surface model Σ(g) and its explicit
//! normalized fundamental cycle.
//!
//! A simplex of degree `m ≤ 3` is an affine tuple `(v₀, …, v_m)` of vertices
//! of one hexagon `Conv(0, 1, 2, 3, 4, 5)` (block `w`), taken modulo the
//! identifications generated by
//!
//! - tuples over `{1, 2}`: `1 ↦ 4`, `2 ↦ 3` (same block),
//! - tuples over `{2, 3}`: `2 ↦ 5`, `3 ↦ 4` (same block),
//! - tuples over `{0, 5}` in block `w`: `5 ↦ 1` in block `w + 1 mod g`.
//!
//! Faces delete an entry, degeneracies repeat one. A disjoint base point `*`
//! sits at index 0 of every level. Simplices are labelled `"w:v₀v₁…"` by the
//! least tuple of their class.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chains::{face, is_homologous_zero, normalized_seminorm, solve_boundary_equation, QChain};
use crate::error::{Error, Result};
use crate::gamma::FinPointedSet;
use crate::rational::{format_q, q, Q};
use crate::simplicial::LevelwiseSimplicialSet;
use crate::union_find::UnionFind;

pub const DIM_CAP: usize = 3;
const HEX: usize = 6;

#[derive(Clone, Debug)]
pub struct SurfaceModel {
  genus:  usize,
  blocks: usize,
  space:  LevelwiseSimplicialSet,
  /// Per degree, the simplex index of every key `w·6^(q+1) + tuple`.
  index:  Vec<Vec<usize>>,
  /// Per degree, the least tuple `(w, vertices)` of each simplex.
  reps:   Vec<Vec<(usize, Vec<u8>)>>,
}

fn encode(w: usize, t: &[u8]) -> usize { t.iter().fold(w, |acc, &v| acc * HEX + v as usize) }

fn decode(mut key: usize, len: usize) -> (usize, Vec<u8>) {
  let mut t = vec![0u8; len];
  for slot in t.iter_mut().rev() {
    *slot = (key % HEX) as u8;
    key /= HEX;
  }
  (key, t)
}

fn supported_on(t: &[u8], set: &[u8]) -> bool { t.iter().all(|v| set.contains(v)) }

fn relabel(t: &[u8], rule: &[(u8, u8)]) -> Vec<u8> {
  t.iter().map(|&v| rule.iter().find(|(a, _)| *a == v).map_or(v, |&(_, b)| b)).collect()
}

impl SurfaceModel {
  fn build(blocks: usize, radial: bool, genus: usize) -> Result<Self> {
    let mut index = Vec::with_capacity(DIM_CAP + 1);
    let mut reps = Vec::with_capacity(DIM_CAP + 1);
    let mut levels = Vec::with_capacity(DIM_CAP + 1);
    for deg in 0..=DIM_CAP {
      let len = deg + 1;
      let keys = blocks * HEX.pow(len as u32);
      let mut uf = UnionFind::new(keys);
      for key in 0..keys {
        let (w, t) = decode(key, len);
        if supported_on(&t, &[1, 2]) {
          uf.union(key, encode(w, &relabel(&t, &[(1, 4), (2, 3)])));
        }
        if supported_on(&t, &[2, 3]) {
          uf.union(key, encode(w, &relabel(&t, &[(2, 5), (3, 4)])));
        }
        if radial && supported_on(&t, &[0, 5]) {
          uf.union(key, encode((w + 1) % blocks, &relabel(&t, &[(5, 1)])));
        }
      }
      let (class_of, mins) = uf.classes();
      index.push(class_of.iter().map(|c| c + 1).collect::<Vec<_>>());
      let level_reps: Vec<(usize, Vec<u8>)> = mins.iter().map(|&k| decode(k, len)).collect();
      let mut labels = vec!["*".to_string()];
      labels.extend(level_reps.iter().map(|(w, t)| format!("{w}:{}", t.iter().map(|v| v.to_string()).collect::<String>())));
      levels.push(FinPointedSet::new(labels, 0)?);
      reps.push(level_reps);
    }
    let lookup = |deg: usize, w: usize, t: &[u8]| index[deg][encode(w, t)];
    let faces = (0..=DIM_CAP)
      .map(|deg| {
        if deg == 0 {
          return vec![];
        }
        (0..=deg)
          .map(|i| {
            let mut table = vec![0];
            table.extend(reps[deg].iter().map(|(w, t)| {
              let mut f = t.clone();
              f.remove(i);
              lookup(deg - 1, *w, &f)
            }));
            table
          })
          .collect()
      })
      .collect();
    let degeneracies = (0..DIM_CAP)
      .map(|deg| {
        (0..=deg)
          .map(|j| {
            let mut table = vec![0];
            table.extend(reps[deg].iter().map(|(w, t)| {
              let mut s = t.clone();
              s.insert(j, t[j]);
              lookup(deg + 1, *w, &s)
            }));
            table
          })
          .collect()
      })
      .collect();
    let space = LevelwiseSimplicialSet::new(levels, faces, degeneracies).map_err(|e| Error::ModelVerification(e.to_string()))?;
    Ok(Self { genus, blocks, space, index, reps })
  }

  pub fn genus(&self) -> usize { self.genus }

  pub fn blocks(&self) -> usize { self.blocks }

  pub fn space(&self) -> &LevelwiseSimplicialSet { &self.space }

  /// The simplex of the tuple `t` in block `w`.
  pub fn simplex(&self, w: usize, t: &[u8]) -> Result<usize> {
    if t.is_empty() || t.len() > DIM_CAP + 1 || w >= self.blocks || t.iter().any(|&v| v as usize >= HEX) {
      return Err(Error::InvalidSurfaceChain(format!("no simplex {w}:{t:?}")));
    }
    Ok(self.index[t.len() - 1][encode(w, t)])
  }

  /// The least tuple of a simplex.
  pub fn representative(&self, degree: usize, s: usize) -> &(usize, Vec<u8>) { &self.reps[degree][s - 1] }

  pub fn tuple_chain(&self, terms: &[(i64, usize, &[u8])]) -> Result<QChain> {
    let degree = terms.first().map_or(0, |t| t.2.len() - 1);
    let mut c = QChain::zero(degree);
    for &(k, w, t) in terms {
      if t.len() != degree + 1 {
        return Err(Error::InvalidSurfaceChain("terms of different degrees".into()));
      }
      c.add_term(self.simplex(w, t)?, &q(k));
    }
    Ok(c)
  }

  /// Simplices of a given degree whose tuple lies over `vertices` in block `w`.
  pub fn supported_simplices(&self, degree: usize, w: usize, vertices: &[u8]) -> Vec<usize> {
    let len = degree + 1;
    let mut out: Vec<usize> = (0..HEX.pow(len as u32))
      .map(|k| decode(k, len).1)
      .filter(|t| supported_on(t, vertices))
      .map(|t| self.index[degree][encode(w, &t)])
      .collect();
    out.sort_unstable();
    out.dedup();
    out
  }

  /// Global label of outer vertex `a ∈ 1..=5` of block `w`; the center is 0.
  pub fn vertex_label(&self, w: usize, a: u8) -> usize {
    if a == 0 {
      return 0;
    }
    (a as usize - 1 + 4 * w) % (4 * self.blocks) + 1
  }
}

/// One hexagon with its outer sides paired and its radial sides free.
pub fn build_block() -> Result<SurfaceModel> { SurfaceModel::build(1, false, 1) }

pub fn build_surface(g: usize) -> Result<SurfaceModel> {
  if g < 2 {
    return Err(Error::InvalidGenus(g));
  }
  SurfaceModel::build(g, true, g)
}

/// Vertex, edge and face counts of the geometric quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellCounts {
  pub vertices: usize,
  pub edges:    usize,
  pub faces:    usize,
}

impl CellCounts {
  pub fn euler_characteristic(&self) -> i64 { self.vertices as i64 - self.edges as i64 + self.faces as i64 }
}

/// Counts the classes of the polygon's own cells: the center and corners,
/// the unoriented sides `(0,a)` and `(a,a+1)`, the triangles `(0,i,i+1)`.
pub fn cell_counts(model: &SurfaceModel) -> CellCounts {
  let mut vertices = Vec::new();
  let mut edges = Vec::new();
  for w in 0..model.blocks {
    for a in 0..HEX as u8 {
      vertices.push(model.index[0][encode(w, &[a])]);
    }
    let sides = (1..=5u8).map(|a| (0, a)).chain((1..=4u8).map(|a| (a, a + 1)));
    for (a, b) in sides {
      let (ab, ba) = (model.index[1][encode(w, &[a, b])], model.index[1][encode(w, &[b, a])]);
      edges.push((ab.min(ba), ab.max(ba)));
    }
  }
  vertices.sort_unstable();
  vertices.dedup();
  edges.sort_unstable();
  edges.dedup();
  CellCounts { vertices: vertices.len(), edges: edges.len(), faces: 4 * model.blocks }
}

fn check_pair(model: &SurfaceModel, w: usize, i: u8, j: u8) -> Result<()> {
  if w >= model.blocks || !(1..=4).contains(&i) || j != i + 1 {
    return Err(Error::InvalidSurfaceChain(format!("({i},{j}) in block {w} is not a pair of adjacent outer vertices")));
  }
  Ok(())
}

/// `c(0,i,j) = Δ(0,i,j) + Δ(i,j,0) + 2Δ(j,0,i) − Δ(j,i,0) − Δ(0,j,i) − 2Δ(i,0,j)`.
pub fn chain_c0ij(model: &SurfaceModel, w: usize, i: u8, j: u8) -> Result<QChain> {
  check_pair(model, w, i, j)?;
  model.tuple_chain(&[
    (1, w, &[0, i, j]),
    (1, w, &[i, j, 0]),
    (2, w, &[j, 0, i]),
    (-1, w, &[j, i, 0]),
    (-1, w, &[0, j, i]),
    (-2, w, &[i, 0, j]),
  ])
}

/// `Σ_{1≤i≤4} c(0,i,i+1)` in block `w`.
pub fn chain_block(model: &SurfaceModel, w: usize) -> Result<QChain> {
  let mut c = QChain::zero(2);
  for i in 1..=4 {
    c.add_scaled(&chain_c0ij(model, w, i, i + 1)?, &Q::one());
  }
  Ok(c)
}

/// The sum of all blocks; checked to have every face zero.
pub fn fundamental_normalized_cycle(model: &SurfaceModel) -> Result<QChain> {
  let mut c = QChain::zero(2);
  for w in 0..model.blocks {
    c.add_scaled(&chain_block(model, w)?, &Q::one());
  }
  for j in 0..=2 {
    if !face(&c, &model.space, j)?.is_zero() {
      return Err(Error::ModelVerification(format!("face d_{j} of the fundamental cycle is nonzero")));
    }
  }
  Ok(c)
}

fn permutation_sign(t: &[u8]) -> i64 {
  let mut sign = 1;
  for a in 0..t.len() {
    for b in a + 1..t.len() {
      match t[a].cmp(&t[b]) {
        std::cmp::Ordering::Equal => return 0,
        std::cmp::Ordering::Greater => sign = -sign,
        std::cmp::Ordering::Less => {}
      }
    }
  }
  sign
}

/// `Σ c(σ) · sign(σ)`, the sign of the vertex permutation of σ's tuple
/// (zero for repeated vertices).
pub fn signed_pairing(model: &SurfaceModel, c: &QChain) -> Q {
  c.coeffs().iter().map(|(&s, a)| a * q(permutation_sign(&model.representative(c.degree(), s).1))).fold(Q::zero(), |x, y| x + y)
}

/// `q(a,b) = Δ(a,b,a) + Δ(a,a,a)`, with `∂q(a,b) = Δ(a,b) + Δ(b,a)`.
pub fn folded_edge(model: &SurfaceModel, w: usize, a: u8, b: u8) -> Result<QChain> {
  model.tuple_chain(&[(1, w, &[a, b, a]), (1, w, &[a, a, a])])
}

/// `β(i,j) = 4q(0,i) − 4q(0,j) + 4q(i,j)`, which makes `c(0,i,j) − 8Δ(0,i,j)`
/// a cycle.
pub fn correction(model: &SurfaceModel, w: usize, i: u8, j: u8) -> Result<QChain> {
  let mut b = folded_edge(model, w, 0, i)?.scaled(&q(4));
  b.add_scaled(&folded_edge(model, w, 0, j)?, &q(-4));
  b.add_scaled(&folded_edge(model, w, i, j)?, &q(4));
  Ok(b)
}

#[derive(Clone, Debug)]
pub struct LiteralAttempt {
  pub block:       usize,
  pub pair:        (u8, u8),
  /// `"triangle"` (tuples over `{0,i,j}`) or `"block"` (all six vertices).
  pub support:     &'static str,
  pub certificate: Option<QChain>,
}

#[derive(Clone, Debug)]
pub struct TriangleCertificate {
  pub block:   usize,
  pub pair:    (u8, u8),
  pub support: &'static str,
  /// `∂ψ = c(0,i,j) − 8Δ(0,i,j) + β(i,j)`.
  pub psi:     QChain,
}

#[derive(Clone, Debug)]
pub struct ClassCertificate {
  /// `∂ψ = c(0,i,j) − 8Δ(0,i,j)` tried per pair, smallest support first.
  pub literal:       Vec<LiteralAttempt>,
  pub triangles:     Vec<TriangleCertificate>,
  /// `t = Σ Δ(0,i,i+1)` over all triangles.
  pub t:             QChain,
  /// Each surviving pair `Δ(a,b) + Δ(b,a)` of `∂t` with `k·q(a,b)` bounding it.
  pub pair_bounds:   Vec<(String, QChain)>,
  /// `z = t − (1/8) Σ β`, a cycle with `c − 8z = ∂Ψ`.
  pub z:             QChain,
  pub psi_total:     QChain,
  /// Whether `z` is not a boundary.
  pub z_nontrivial:  bool,
}

impl ClassCertificate {
  pub fn literal_found(&self) -> bool {
    let mut ok: BTreeMap<(usize, (u8, u8)), bool> = BTreeMap::new();
    for a in &self.literal {
      *ok.entry((a.block, a.pair)).or_default() |= a.certificate.is_some();
    }
    !ok.is_empty() && ok.values().all(|&b| b)
  }
}

fn solve_on_supports(
  model: &SurfaceModel,
  w: usize,
  i: u8,
  j: u8,
  target: &QChain,
) -> Result<Vec<(&'static str, Option<QChain>)>> {
  let mut out = Vec::new();
  for (name, verts) in [("triangle", vec![0, i, j]), ("block", (0..HEX as u8).collect())] {
    let support = model.supported_simplices(3, w, &verts);
    let found = solve_boundary_equation(target, &model.space, Some(&support))?;
    let done = found.is_some();
    out.push((name, found));
    if done {
      break;
    }
  }
  Ok(out)
}

pub fn class_certificate(model: &SurfaceModel) -> Result<ClassCertificate> {
  let x = &model.space;
  let mut literal = Vec::new();
  let mut triangles = Vec::new();
  let mut t = QChain::zero(2);
  let mut beta_total = QChain::zero(2);
  let mut psi_total = QChain::zero(3);
  for w in 0..model.blocks {
    for i in 1..=4u8 {
      let j = i + 1;
      let c = chain_c0ij(model, w, i, j)?;
      let delta = model.tuple_chain(&[(1, w, &[0, i, j])])?;
      let target = c.minus(&delta.scaled(&q(8)));
      for (support, certificate) in solve_on_supports(model, w, i, j, &target)? {
        literal.push(LiteralAttempt { block: w, pair: (i, j), support, certificate });
      }
      let beta = correction(model, w, i, j)?;
      let relative = target.plus(&beta);
      let (support, psi) = solve_on_supports(model, w, i, j, &relative)?
        .pop()
        .and_then(|(s, p)| p.map(|p| (s, p)))
        .ok_or_else(|| Error::CertificateInfeasible(format!("c(0,{i},{j}) − 8Δ + β in block {w} over the whole block")))?;
      psi_total.add_scaled(&psi, &Q::one());
      triangles.push(TriangleCertificate { block: w, pair: (i, j), support, psi });
      t.add_scaled(&delta, &Q::one());
      beta_total.add_scaled(&beta, &Q::one());
    }
  }
  let pair_bounds = pair_bounds_of(model, &t)?;
  let z = t.minus(&beta_total.scaled(&(Q::one() / q(8))));
  if !crate::chains::is_cycle(&z, x)? {
    return Err(Error::ModelVerification("z is not a cycle".into()));
  }
  let c = fundamental_normalized_cycle(model)?;
  if crate::chains::boundary(&psi_total, x)? != c.minus(&z.scaled(&q(8))) {
    return Err(Error::ModelVerification("summed certificates do not bound c − 8z".into()));
  }
  let z_nontrivial = is_homologous_zero(&z, x)?.is_none();
  Ok(ClassCertificate { literal, triangles, t, pair_bounds, z, psi_total, z_nontrivial })
}

/// Splits `∂t` into pairs `k(Δ(a,b) + Δ(b,a))` and bounds each by `k·q(a,b)`.
fn pair_bounds_of(model: &SurfaceModel, t: &QChain) -> Result<Vec<(String, QChain)>> {
  let x = &model.space;
  let mut rest = crate::chains::boundary(t, x)?;
  let mut out = Vec::new();
  while let Some((&s, k)) = rest.coeffs().iter().next() {
    let k = k.clone();
    let (w, tuple) = model.representative(1, s).clone();
    let bound = folded_edge(model, w, tuple[0], tuple[1])?.scaled(&k);
    let db = crate::chains::boundary(&bound, x)?;
    if db.coeffs().values().any(|v| v.abs() != k.abs()) || !db.coeffs().keys().all(|r| rest.coeffs().contains_key(r)) {
      return Err(Error::ModelVerification(format!("∂t has an unpaired term at {}", x.level(1).label(s))));
    }
    rest = rest.minus(&db);
    out.push((format!("{}:{}{}", w, tuple[0], tuple[1]), bound));
  }
  Ok(out)
}

/// `4(n(g−1)+1)/n`, the bound transferred from a degree-n cyclic cover.
pub fn cyclic_cover_bound(g: usize, n: usize) -> Result<Q> {
  if g < 2 {
    return Err(Error::InvalidGenus(g));
  }
  if n == 0 {
    return Err(Error::IndexOutOfRange("cover degree must be at least 1".into()));
  }
  let (g, n) = (g as i64, n as i64);
  Ok(q(4 * (n * (g - 1) + 1)) / q(n))
}

/// `4(g−1)`, the simplicial volume of the genus-g surface, as cited.
pub fn gromov_lower_bound(g: usize) -> Q { q(4 * (g as i64 - 1)) }

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
  True,
  False,
  Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdDecision {
  pub verdict:        Verdict,
  #[serde(with = "crate::rational::serde_q")]
  pub lower_bound:    Q,
  pub lower_source:   &'static str,
  /// Least `n ≤ n_max` whose cover bound is below λ, else `n_max`.
  pub cover_degree:   usize,
  #[serde(with = "crate::rational::serde_q")]
  pub cover_bound:    Q,
  #[serde(serialize_with = "serialize_opt_q")]
  pub model_bound:    Option<Q>,
  pub explanation:    String,
}

fn serialize_opt_q<S: serde::Serializer>(v: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
  match v {
    Some(x) => s.serialize_some(&format_q(x)),
    None => s.serialize_none(),
  }
}

pub fn lambda_threshold_decision(g: usize, lambda: &Q, n_max: usize) -> Result<ThresholdDecision> {
  lambda_threshold_decision_with_model(g, lambda, n_max, None)
}

/// As [`lambda_threshold_decision`], also using a normalized-seminorm value
/// certified on the model.
pub fn lambda_threshold_decision_with_model(g: usize, lambda: &Q, n_max: usize, model: Option<&Q>) -> Result<ThresholdDecision> {
  if !lambda.is_positive() {
    return Err(Error::NonPositiveLambda(format_q(lambda)));
  }
  if n_max == 0 {
    return Err(Error::IndexOutOfRange("n_max must be at least 1".into()));
  }
  let lower = gromov_lower_bound(g);
  let gap = lambda - &lower;
  // 4(g−1) + 4/n < λ  ⇔  n > 4/gap.
  let cover_degree = if gap.is_positive() {
    let least = (q(4) / &gap).floor().to_integer() + num_bigint::BigInt::one();
    least.to_string().parse::<usize>().map_or(n_max, |n| n.min(n_max))
  } else {
    n_max
  };
  let cover_bound = cyclic_cover_bound(g, cover_degree)?;
  let (verdict, explanation) = if *lambda <= lower {
    (Verdict::False, format!("λ = {} ≤ 4(g−1) = {} (paper-supplied bound)", format_q(lambda), format_q(&lower)))
  } else if *lambda > cover_bound {
    (Verdict::True, format!("a degree-{cover_degree} cyclic cover gives a normalized cycle of norm {} < λ", format_q(&cover_bound)))
  } else if let Some(m) = model.filter(|m| *lambda > **m) {
    (Verdict::True, format!("the model LP gives a normalized cycle of norm {} < λ", format_q(m)))
  } else {
    (
      Verdict::Unknown,
      format!("4(g−1) = {} < λ = {} ≤ {}; raise n_max", format_q(&lower), format_q(lambda), format_q(&cover_bound)),
    )
  };
  Ok(ThresholdDecision {
    verdict,
    lower_bound: lower,
    lower_source: "paper-supplied bound",
    cover_degree,
    cover_bound,
    model_bound: model.cloned(),
    explanation,
  })
}

/// `‖c/8‖^nor` over the model, with c the fundamental normalized cycle.
pub fn model_normalized_value(model: &SurfaceModel) -> Result<Q> {
  let c = fundamental_normalized_cycle(model)?;
  normalized_seminorm(&c.scaled(&(Q::one() / q(8))), &model.space)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::chains::is_cycle;
  use crate::rational::frac;

  #[test]
  fn outer_sides_are_paired() {
    let k = build_block().unwrap();
    assert_eq!(k.simplex(0, &[1, 2]).unwrap(), k.simplex(0, &[4, 3]).unwrap());
    assert_eq!(k.simplex(0, &[2, 1]).unwrap(), k.simplex(0, &[3, 4]).unwrap());
    assert_eq!(k.simplex(0, &[2, 3]).unwrap(), k.simplex(0, &[5, 4]).unwrap());
    assert_eq!(k.simplex(0, &[1, 2, 1]).unwrap(), k.simplex(0, &[4, 3, 4]).unwrap());
    assert_ne!(k.simplex(0, &[0, 1]).unwrap(), k.simplex(0, &[0, 2]).unwrap());
    assert_ne!(k.simplex(0, &[0, 1]).unwrap(), k.simplex(0, &[0, 5]).unwrap());
  }

  #[test]
  fn radial_sides_are_shared() {
    let s = build_surface(2).unwrap();
    assert_eq!(s.simplex(0, &[0, 5]).unwrap(), s.simplex(1, &[0, 1]).unwrap());
    assert_eq!(s.simplex(1, &[0, 5]).unwrap(), s.simplex(0, &[0, 1]).unwrap());
    assert_eq!(s.space().level(1).label(s.simplex(1, &[5, 0]).unwrap()), "0:10");
    assert_eq!(s.vertex_label(1, 5), 1);
    assert_eq!(s.vertex_label(1, 4), 8);
    assert!(matches!(build_surface(1), Err(Error::InvalidGenus(1))));
  }

  #[test]
  fn euler_characteristic() {
    for g in 2..=4 {
      let counts = cell_counts(&build_surface(g).unwrap());
      assert_eq!(counts, CellCounts { vertices: 2, edges: 6 * g, faces: 4 * g });
      assert_eq!(counts.euler_characteristic(), 2 - 2 * g as i64);
    }
  }

  #[test]
  fn six_term_chain() {
    let s = build_surface(2).unwrap();
    let c = chain_c0ij(&s, 0, 2, 3).unwrap();
    assert_eq!(c.l1_norm(), q(8));
    assert_eq!(signed_pairing(&s, &c), q(8));
    assert!(chain_c0ij(&s, 0, 2, 4).is_err());
    assert!(chain_c0ij(&s, 2, 1, 2).is_err());
  }

  #[test]
  fn fundamental_cycle_norm() {
    let s = build_surface(2).unwrap();
    let c = fundamental_normalized_cycle(&s).unwrap();
    assert_eq!(c.l1_norm(), q(64));
    assert_eq!(signed_pairing(&s, &c), q(64));
    assert!(is_cycle(&c, s.space()).unwrap());
    assert_eq!(chain_block(&s, 1).unwrap().l1_norm(), q(32));
  }

  #[test]
  fn folded_edge_bounds_a_pair() {
    let s = build_surface(2).unwrap();
    let b = crate::chains::boundary(&folded_edge(&s, 0, 0, 3).unwrap(), s.space()).unwrap();
    assert_eq!(b, s.tuple_chain(&[(1, 0, &[0, 3]), (1, 0, &[3, 0])]).unwrap());
  }

  #[test]
  fn cover_bounds() {
    assert_eq!(cyclic_cover_bound(2, 1).unwrap(), q(8));
    assert_eq!(cyclic_cover_bound(2, 4).unwrap(), q(5));
    assert_eq!(cyclic_cover_bound(3, 1).unwrap(), q(12));
    let d = lambda_threshold_decision(2, &frac(401, 100), 1000).unwrap();
    assert_eq!(d.verdict, Verdict::True);
    assert_eq!(d.cover_degree, 401);
    assert_eq!(lambda_threshold_decision(2, &frac(401, 100), 400).unwrap().verdict, Verdict::Unknown);
    assert_eq!(lambda_threshold_decision(2, &q(4), 1000).unwrap().verdict, Verdict::False);
    assert_eq!(lambda_threshold_decision(2, &q(9), 1).unwrap().verdict, Verdict::True);
  }
}
