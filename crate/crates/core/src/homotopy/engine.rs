//! `π^comb_n(F ∘ Y)` for a Γ-set `F` and a levelwise simplicial set `Y`.
//!
//! Two strategies. The general one enumerates `F(Y_n)` and `F(Y_{n+1})` and
//! filters by the closed description of `Ω^n`. When `F = HA` the loop
//! conditions are fibre sums, so the search splits over connected pieces of
//! `Y` and each piece is solved by backtracking with constraint closing.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gamma::{FinPointedSet, FiniteMonoid, GammaElem, GammaSet};
use crate::simplicial::LevelwiseSimplicialSet;
use crate::union_find::UnionFind;

/// Default cap on the number of elements enumerated in one degree.
pub const DEFAULT_ENUM_LIMIT: u128 = 1 << 20;

/// Reads `GAMMAHOM_ENUM_LIMIT` when set to a positive integer.
pub fn enumeration_limit() -> u128 {
  std::env::var("GAMMAHOM_ENUM_LIMIT").ok().and_then(|s| s.parse().ok()).filter(|&v| v > 0).unwrap_or(DEFAULT_ENUM_LIMIT)
}

fn too_big(degree: usize, size: impl ToString, limit: u128) -> Error { Error::EnumerationBound { degree, size: size.to_string(), limit } }

/// The homotopy classes of `F ∘ Y` in one degree, with a lookup from loops to classes.
#[derive(Clone, Debug)]
pub struct LoopClasses {
  degree:  usize,
  arity:   usize,
  classes: FinPointedSet,
  reps:    Vec<GammaElem>,
  lookup:  Lookup,
}

#[derive(Clone, Debug)]
enum Lookup {
  Direct(HashMap<GammaElem, usize>),
  Pieces(Vec<Piece>),
}

/// One connected piece of `Y` around degree `n`.
#[derive(Clone, Debug)]
struct Piece {
  /// Positions in the `F(Y_n)` vector owned by this piece.
  coords:  Vec<usize>,
  /// Loop restricted to `coords` ↦ local class.
  classes: HashMap<Vec<u32>, usize>,
  reps:    Vec<Vec<u32>>,
}

impl LoopClasses {
  pub fn degree(&self) -> usize { self.degree }

  /// Number of non-base points of the simplicial degree the loops live in.
  pub fn arity(&self) -> usize { self.arity }

  pub fn classes(&self) -> &FinPointedSet { &self.classes }

  pub fn len(&self) -> usize { self.reps.len() }

  pub fn is_empty(&self) -> bool { false }

  /// The least loop in class `c`.
  pub fn representative(&self, c: usize) -> &GammaElem { &self.reps[c] }

  pub fn representatives(&self) -> &[GammaElem] { &self.reps }

  /// Class of a loop of `F(Y_n)`; an error if `z` is not a loop.
  pub fn class_of(&self, z: &GammaElem) -> Result<usize> {
    let missing = || Error::Descent(format!("element {z:?} is not an {}-loop", self.degree));
    match &self.lookup {
      Lookup::Direct(m) => m.get(z).copied().ok_or_else(missing),
      Lookup::Pieces(_) if z.len() != self.arity => Err(missing()),
      Lookup::Pieces(pieces) => pieces.iter().try_fold(0, |id, p| {
        let sub: Vec<u32> = p.coords.iter().map(|&c| z[c]).collect();
        Ok(id * p.reps.len() + *p.classes.get(&sub).ok_or_else(missing)?)
      }),
    }
  }

  /// Loops paired with their classes: every loop when there are at most
  /// `limit`, otherwise the loops supported on a single piece.
  pub fn sample_members(&self, limit: usize) -> Vec<(GammaElem, usize)> {
    let mut out: Vec<(GammaElem, usize)> = match &self.lookup {
      Lookup::Direct(m) => m.iter().map(|(z, &c)| (z.clone(), c)).collect(),
      Lookup::Pieces(pieces) => {
        let total = pieces.iter().try_fold(1usize, |acc, p| acc.checked_mul(p.classes.len()));
        let mut loops = vec![vec![0u32; self.arity]];
        if total.is_some_and(|t| t <= limit) {
          for p in pieces {
            loops = loops
              .iter()
              .flat_map(|z| {
                p.classes.keys().map(move |sub| {
                  let mut z = z.clone();
                  p.coords.iter().zip(sub).for_each(|(&c, &v)| z[c] = v);
                  z
                })
              })
              .collect();
          }
        } else {
          for p in pieces {
            for sub in p.classes.keys() {
              let mut z = vec![0u32; self.arity];
              p.coords.iter().zip(sub).for_each(|(&c, &v)| z[c] = v);
              loops.push(z);
            }
          }
        }
        loops.into_iter().map(|z| {
          let c = self.class_of(&z).expect("assembled from loops");
          (z, c)
        }).collect()
      }
    };
    out.sort();
    out.dedup();
    out
  }
}

/// `π^comb_n(F ∘ Y)`.
pub fn loop_classes(y: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize) -> Result<LoopClasses> {
  if y.dim_cap() < n + 1 {
    return Err(Error::InsufficientCap(format!("degree {n} needs cap at least {}, got {}", n + 1, y.dim_cap())));
  }
  match f.fiber_monoid() {
    Some(m) => fiberwise(y, f, m, n),
    None => direct(y, f, n),
  }
}

fn labels_for(y: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize, reps: &[GammaElem]) -> Result<FinPointedSet> {
  let points = y.level(n).skeleton_labels();
  FinPointedSet::new(reps.iter().map(|r| f.render(r, &points)).collect(), 0)
}

fn is_loop(y: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize, q: usize, z: &GammaElem) -> bool {
  // z ∈ F(Y_q) with q ∈ {n, n+1}.
  let lower = |z: &GammaElem, deg: usize, i: usize| f.push(&y.face_morphism(deg, i), z);
  let is_base = |z: &GammaElem, deg: usize| *z == f.base(y.size(deg) - 1);
  if q == n + 1 && (0..n).any(|j| !is_base(&lower(z, q, j), q - 1)) {
    return false;
  }
  if n == 0 {
    return true;
  }
  let mut frontier = vec![z.clone()];
  let mut deg = q;
  while deg > n - 1 {
    let mut next: Vec<GammaElem> = Vec::new();
    for w in &frontier {
      for i in 0..=deg {
        let v = lower(w, deg, i);
        if !next.contains(&v) {
          next.push(v);
        }
      }
    }
    frontier = next;
    deg -= 1;
  }
  frontier.iter().all(|w| is_base(w, n - 1))
}

fn checked_size(f: &dyn GammaSet, y: &LevelwiseSimplicialSet, q: usize, limit: u128) -> Result<()> {
  let arity = y.size(q) - 1;
  match f.cardinality(arity) {
    None => Err(too_big(q, "unbounded", limit)),
    Some(c) if c > limit => Err(too_big(q, c, limit)),
    Some(_) => Ok(()),
  }
}

fn direct(y: &LevelwiseSimplicialSet, f: &dyn GammaSet, n: usize) -> Result<LoopClasses> {
  let limit = enumeration_limit();
  checked_size(f, y, n, limit)?;
  checked_size(f, y, n + 1, limit)?;
  let set0: Vec<GammaElem> = f.elements(y.size(n) - 1)?.into_iter().filter(|z| is_loop(y, f, n, n, z)).collect();
  let index: HashMap<GammaElem, usize> = set0.iter().cloned().enumerate().map(|(i, z)| (z, i)).collect();
  let dn = y.face_morphism(n + 1, n);
  let dn1 = y.face_morphism(n + 1, n + 1);
  let mut uf = UnionFind::new(set0.len());
  for w in f.elements(y.size(n + 1) - 1)? {
    if !is_loop(y, f, n, n + 1, &w) {
      continue;
    }
    let (a, b) = (f.push(&dn, &w), f.push(&dn1, &w));
    let (ia, ib) = index
      .get(&a)
      .zip(index.get(&b))
      .ok_or_else(|| Error::Descent(format!("a face of an {}-loop in degree {} is not a loop", n, n + 1)))?;
    uf.union(*ia, *ib);
  }
  let (class_of, mins) = uf.classes();
  let reps: Vec<GammaElem> = mins.iter().map(|&m| set0[m].clone()).collect();
  let lookup = index.into_iter().map(|(z, i)| (z, class_of[i])).collect();
  Ok(LoopClasses { degree: n, arity: y.size(n) - 1, classes: labels_for(y, f, n, &reps)?, reps, lookup: Lookup::Direct(lookup) })
}

/// Sum constraints `Σ_{v ∈ vars} x_v = 0` over the monoid.
struct System {
  vars:        usize,
  constraints: Vec<Vec<usize>>,
}

impl System {
  /// Solutions in lexicographic order of the chosen variable order.
  fn solve(&self, m: &FiniteMonoid, limit: u128, degree: usize) -> Result<Vec<Vec<u32>>> {
    let order = self.order();
    let mut pos = vec![0; self.vars];
    for (p, &v) in order.iter().enumerate() {
      pos[v] = p;
    }
    // Constraints grouped by the position of their last variable.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); self.vars];
    for (ci, c) in self.constraints.iter().enumerate() {
      if let Some(last) = c.iter().map(|&v| pos[v]).max() {
        closing[last].push(ci);
      }
    }
    let mut out = Vec::new();
    let mut x = vec![0u32; self.vars];
    self.search(m, &order, &closing, 0, &mut x, &mut out, limit, degree)?;
    out.sort();
    Ok(out)
  }

  #[allow(clippy::too_many_arguments)]
  fn search(
    &self,
    m: &FiniteMonoid,
    order: &[usize],
    closing: &[Vec<usize>],
    p: usize,
    x: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    limit: u128,
    degree: usize,
  ) -> Result<()> {
    if p == order.len() {
      if out.len() as u128 >= limit {
        return Err(too_big(degree, format!("more than {limit}"), limit));
      }
      out.push(x.clone());
      return Ok(());
    }
    let v = order[p];
    let mut allowed: Vec<bool> = vec![true; m.len()];
    for &ci in &closing[p] {
      let partial = self.constraints[ci].iter().filter(|&&u| u != v).fold(0, |acc, &u| m.add(acc, x[u] as usize));
      let ok = m.completions_to_zero(partial);
      for (a, flag) in allowed.iter_mut().enumerate() {
        *flag &= ok.contains(&a);
      }
    }
    for a in (0..m.len()).filter(|&a| allowed[a]) {
      x[v] = a as u32;
      self.search(m, order, closing, p + 1, x, out, limit, degree)?;
    }
    x[v] = 0;
    Ok(())
  }

  /// Greedy order that closes constraints as early as possible.
  fn order(&self) -> Vec<usize> {
    let mut remaining: Vec<usize> = self.constraints.iter().map(Vec::len).collect();
    let mut touches: Vec<Vec<usize>> = vec![Vec::new(); self.vars];
    for (ci, c) in self.constraints.iter().enumerate() {
      for &v in c {
        touches[v].push(ci);
      }
    }
    let mut placed = vec![false; self.vars];
    let mut order = Vec::with_capacity(self.vars);
    for _ in 0..self.vars {
      let score = |v: usize| {
        let closes = touches[v].iter().filter(|&&c| remaining[c] == 1).count();
        let progress = touches[v].iter().filter(|&&c| remaining[c] < self.constraints[c].len()).count();
        (closes, progress)
      };
      let v = (0..self.vars).filter(|&v| !placed[v]).max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a))).expect("unplaced");
      placed[v] = true;
      order.push(v);
      for &c in &touches[v] {
        remaining[c] -= 1;
      }
    }
    order
  }
}

/// Groups of simplices (non-base, degrees `n−1..=n+1`) linked by faces.
fn pieces_of(y: &LevelwiseSimplicialSet, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
  let lo = n.saturating_sub(1);
  let offset: Vec<usize> = (lo..=n + 1).scan(0, |acc, q| {
    let o = *acc;
    *acc += y.size(q);
    Some(o)
  })
  .collect();
  let node = |q: usize, s: usize| offset[q - lo] + s;
  let total = offset.last().copied().unwrap_or(0) + y.size(n + 1);
  let mut uf = UnionFind::new(total);
  for q in (lo + 1)..=n + 1 {
    for s in 1..y.size(q) {
      for i in 0..=q {
        let t = y.face(q, i, s);
        if t != 0 {
          uf.union(node(q, s), node(q - 1, t));
        }
      }
    }
  }
  let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
  let mut root_to_group: HashMap<usize, usize> = HashMap::new();
  for s in 1..y.size(n) {
    let r = uf.find(node(n, s));
    let g = *root_to_group.entry(r).or_insert_with(|| {
      groups.push((Vec::new(), Vec::new()));
      groups.len() - 1
    });
    groups[g].0.push(s);
  }
  for w in 1..y.size(n + 1) {
    if let Some(&g) = root_to_group.get(&uf.find(node(n + 1, w))) {
      groups[g].1.push(w);
    }
  }
  groups
}

fn fiberwise(y: &LevelwiseSimplicialSet, f: &dyn GammaSet, m: &FiniteMonoid, n: usize) -> Result<LoopClasses> {
  let limit = enumeration_limit();
  let mut pieces = Vec::new();
  for (cells, walls) in pieces_of(y, n) {
    let cell_pos: HashMap<usize, usize> = cells.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    // Fibre-sum constraints: for a face composite and each non-base target.
    let fibres = |vars: &[usize], image: &dyn Fn(usize) -> usize| -> Vec<Vec<usize>> {
      let mut by_target: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
      for (i, &s) in vars.iter().enumerate() {
        let t = image(s);
        if t != 0 {
          by_target.entry(t).or_default().push(i);
        }
      }
      by_target.into_values().collect()
    };
    let mut c0 = Vec::new();
    if n >= 1 {
      for i in 0..=n {
        c0.extend(fibres(&cells, &|s| y.face(n, i, s)));
      }
    }
    let mut c1 = Vec::new();
    for j in 0..n {
      c1.extend(fibres(&walls, &|w| y.face(n + 1, j, w)));
    }
    if n >= 1 {
      for b in 1..=n + 1 {
        for a in 0..b {
          c1.extend(fibres(&walls, &|w| y.face(n, a, y.face(n + 1, b, w))));
        }
      }
    }
    let set0 = System { vars: cells.len(), constraints: c0 }.solve(m, limit, n)?;
    let set1 = System { vars: walls.len(), constraints: c1 }.solve(m, limit, n + 1)?;
    let index: HashMap<&Vec<u32>, usize> = set0.iter().enumerate().map(|(i, z)| (z, i)).collect();
    let push_down = |w: &[u32], i: usize| -> Vec<u32> {
      let mut out = vec![0u32; cells.len()];
      for (k, &s) in walls.iter().enumerate() {
        let t = y.face(n + 1, i, s);
        if t != 0 {
          let c = cell_pos[&t];
          out[c] = m.add(out[c] as usize, w[k] as usize) as u32;
        }
      }
      out
    };
    let mut uf = UnionFind::new(set0.len());
    for w in &set1 {
      let (a, b) = (push_down(w, n), push_down(w, n + 1));
      let (ia, ib) = index
        .get(&a)
        .zip(index.get(&b))
        .ok_or_else(|| Error::Descent(format!("a face of an {n}-loop in degree {} is not a loop", n + 1)))?;
      uf.union(*ia, *ib);
    }
    let (class_of, mins) = uf.classes();
    let reps: Vec<Vec<u32>> = mins.iter().map(|&i| set0[i].clone()).collect();
    let classes = set0.iter().cloned().zip(class_of).collect();
    pieces.push(Piece { coords: cells.iter().map(|&s| s - 1).collect(), classes, reps });
  }
  let total = pieces.iter().try_fold(1u128, |acc, p| acc.checked_mul(p.reps.len() as u128));
  match total {
    Some(t) if t <= limit => {}
    other => return Err(too_big(n, other.map_or("overflow".to_string(), |t| t.to_string()), limit)),
  }
  let arity = y.size(n) - 1;
  let mut reps = vec![vec![0u32; arity]];
  for p in &pieces {
    let mut next = Vec::with_capacity(reps.len() * p.reps.len());
    for r in &reps {
      for local in &p.reps {
        let mut z = r.clone();
        for (&c, &v) in p.coords.iter().zip(local) {
          z[c] = v;
        }
        next.push(z);
      }
    }
    reps = next;
  }
  Ok(LoopClasses { degree: n, arity, classes: labels_for(y, f, n, &reps)?, reps, lookup: Lookup::Pieces(pieces) })
}
