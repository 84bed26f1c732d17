//! Simplicial sets given by nondegenerate generators and a face table.
//!
//! Every simplex is stored in Eilenberg–Zilber form `θ^* x` with `x` a
//! generator and `θ` a monotone surjection. Faces of such pairs are rewritten
//! into the same form by factoring `θ ∘ δ_i` as a surjection followed by an
//! injection and peeling the injection off one coface at a time.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::levelwise::LevelwiseSimplicialSet;
use super::monotone;
use crate::error::{Error, Result};
use crate::gamma::FinPointedSet;

/// `θ^* x`: a generator pulled back along a monotone surjection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
  pub generator:  usize,
  /// Values of `θ: [n] ↠ [m]` where `m` is the generator's degree.
  pub surjection: Vec<usize>,
}

impl Simplex {
  pub fn nondegenerate(generator: usize, degree: usize) -> Self {
    Self { generator, surjection: monotone::identity(degree) }
  }

  pub fn degree(&self) -> usize { self.surjection.len() - 1 }

  pub fn is_nondegenerate(&self) -> bool { monotone::is_identity(&self.surjection) }

  /// Collapsed positions `p_1 < … < p_r`; the simplex is `s_{p_r} ⋯ s_{p_1} x`.
  pub fn collapsed(&self) -> Vec<usize> { monotone::collapsed_positions(&self.surjection) }
}

/// A face reference in the file format: generator label plus collapsed positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexRef {
  pub gen:       String,
  #[serde(default)]
  pub collapsed: Vec<usize>,
}

/// File form of a truncated simplicial set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TruncatedSpec {
  pub dim_cap:    usize,
  pub generators: BTreeMap<usize, Vec<String>>,
  #[serde(default)]
  pub faces:      BTreeMap<String, Vec<SimplexRef>>,
  /// Base point label; defaults to the first degree-0 generator.
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub base:       Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
  dim_cap: usize,
  labels:  Vec<String>,
  degrees: Vec<usize>,
  faces:   Vec<Vec<Simplex>>,
  base:    usize,
}

impl TruncatedSimplicialSet {
  /// Validates shapes and the simplicial identities `d_i d_j = d_{j−1} d_i`
  /// (`i < j`) on every generator, in increasing degree.
  pub fn new(dim_cap: usize, generators: Vec<(String, usize)>, faces: Vec<Vec<Simplex>>, base: usize) -> Result<Self> {
    let (labels, degrees): (Vec<String>, Vec<usize>) = generators.into_iter().unzip();
    if faces.len() != labels.len() {
      return Err(Error::InvalidSimplicialSet(format!("{} face lists for {} generators", faces.len(), labels.len())));
    }
    FinPointedSet::new(labels.clone(), 0).map_err(|e| Error::InvalidSimplicialSet(e.to_string()))?;
    if base >= labels.len() || degrees[base] != 0 {
      return Err(Error::InvalidSimplicialSet("base point must be a degree-0 generator".into()));
    }
    for (g, (&d, fs)) in degrees.iter().zip(&faces).enumerate() {
      if d > dim_cap {
        return Err(Error::InvalidSimplicialSet(format!("{} has degree {d} above the cap {dim_cap}", labels[g])));
      }
      let expected = if d == 0 { 0 } else { d + 1 };
      if fs.len() != expected {
        return Err(Error::InvalidSimplicialSet(format!("{} has {} faces, expected {expected}", labels[g], fs.len())));
      }
      for (i, f) in fs.iter().enumerate() {
        if f.generator >= labels.len() {
          return Err(Error::InvalidSimplicialSet(format!("d{i} {} refers to an unknown generator", labels[g])));
        }
        if f.degree() + 1 != d || !monotone::is_surjection_onto(&f.surjection, degrees[f.generator]) {
          return Err(Error::InvalidSimplicialSet(format!(
            "d{i} {} = {} does not have degree {}",
            labels[g],
            labels[f.generator],
            d - 1
          )));
        }
      }
    }
    if faces[base].iter().any(|f| f.generator != base) {
      return Err(Error::InvalidSimplicialSet("base point has non-base faces".into()));
    }
    let set = Self { dim_cap, labels, degrees, faces, base };
    set.check_identities()?;
    Ok(set)
  }

  fn check_identities(&self) -> Result<()> {
    let mut order: Vec<usize> = (0..self.labels.len()).collect();
    order.sort_by_key(|&g| (self.degrees[g], g));
    for g in order {
      let d = self.degrees[g];
      if d < 2 {
        continue;
      }
      let x = Simplex::nondegenerate(g, d);
      for j in 1..=d {
        for i in 0..j {
          let left = self.face(&self.face(&x, j)?, i)?;
          let right = self.face(&self.face(&x, i)?, j - 1)?;
          if left != right {
            return Err(Error::IdentityViolation(format!(
              "d{i} d{j} = d{} d{i} fails on {}: left {}, right {}",
              j - 1,
              self.labels[g],
              self.render(&left),
              self.render(&right)
            )));
          }
        }
      }
    }
    Ok(())
  }

  pub fn from_spec(spec: &TruncatedSpec) -> Result<Self> {
    let mut generators = Vec::new();
    for (&deg, names) in &spec.generators {
      generators.extend(names.iter().map(|n| (n.clone(), deg)));
    }
    let index: HashMap<&str, usize> = generators.iter().enumerate().map(|(i, (n, _))| (n.as_str(), i)).collect();
    if index.len() != generators.len() {
      return Err(Error::InvalidSimplicialSet("duplicate generator label".into()));
    }
    for name in spec.faces.keys() {
      if !index.contains_key(name.as_str()) {
        return Err(Error::InvalidSimplicialSet(format!("faces given for unknown generator {name:?}")));
      }
    }
    let mut faces = Vec::with_capacity(generators.len());
    for (name, deg) in &generators {
      let refs = spec.faces.get(name).map(Vec::as_slice).unwrap_or(&[]);
      let mut fs = Vec::with_capacity(refs.len());
      for r in refs {
        let &gen = index
          .get(r.gen.as_str())
          .ok_or_else(|| Error::InvalidSimplicialSet(format!("face of {name} refers to unknown {:?}", r.gen)))?;
        let surjection = monotone::surjection_from_collapsed(deg.saturating_sub(1), &r.collapsed)?;
        fs.push(Simplex { generator: gen, surjection });
      }
      faces.push(fs);
    }
    let base = match &spec.base {
      Some(b) => *index.get(b.as_str()).ok_or_else(|| Error::InvalidSimplicialSet(format!("unknown base {b:?}")))?,
      None => generators
        .iter()
        .position(|(_, d)| *d == 0)
        .ok_or_else(|| Error::InvalidSimplicialSet("no degree-0 generator for the base point".into()))?,
    };
    Self::new(spec.dim_cap, generators, faces, base)
  }

  pub fn to_spec(&self) -> TruncatedSpec {
    let mut generators: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut faces = BTreeMap::new();
    for (g, label) in self.labels.iter().enumerate() {
      generators.entry(self.degrees[g]).or_default().push(label.clone());
      if !self.faces[g].is_empty() {
        let refs = self.faces[g]
          .iter()
          .map(|f| SimplexRef { gen: self.labels[f.generator].clone(), collapsed: f.collapsed() })
          .collect();
        faces.insert(label.clone(), refs);
      }
    }
    TruncatedSpec { dim_cap: self.dim_cap, generators, faces, base: Some(self.labels[self.base].clone()) }
  }

  pub fn dim_cap(&self) -> usize { self.dim_cap }

  pub fn base(&self) -> usize { self.base }

  pub fn generator_count(&self) -> usize { self.labels.len() }

  pub fn label(&self, g: usize) -> &str { &self.labels[g] }

  pub fn generator_degree(&self, g: usize) -> usize { self.degrees[g] }

  pub fn generator_index(&self, label: &str) -> Option<usize> { self.labels.iter().position(|l| l == label) }

  /// Generators of the given degree, in declaration order.
  pub fn generators_of_degree(&self, d: usize) -> Vec<usize> { (0..self.labels.len()).filter(|&g| self.degrees[g] == d).collect() }

  pub fn face_table(&self, g: usize) -> &[Simplex] { &self.faces[g] }

  /// Same simplicial set with a different cap (generators above it dropped).
  pub fn with_cap(&self, dim_cap: usize) -> Result<Self> {
    if self.degrees.iter().any(|&d| d > dim_cap) {
      return Err(Error::InsufficientCap(format!("generators of degree above {dim_cap}")));
    }
    Ok(Self { dim_cap, ..self.clone() })
  }

  pub fn is_base(&self, x: &Simplex) -> bool { x.generator == self.base }

  /// `α^* g` for any monotone `α: [k] → [deg g]`, in canonical form.
  pub fn pull(&self, generator: usize, alpha: Vec<usize>) -> Simplex {
    let m = self.degrees[generator];
    let mut hit = vec![false; m + 1];
    for &v in &alpha {
      hit[v] = true;
    }
    match hit.iter().rposition(|h| !h) {
      None => Simplex { generator, surjection: alpha },
      Some(j) => {
        let face = &self.faces[generator][j];
        let shifted: Vec<usize> = alpha.iter().map(|&v| face.surjection[if v > j { v - 1 } else { v }]).collect();
        self.pull(face.generator, shifted)
      },
    }
  }

  pub fn face(&self, x: &Simplex, i: usize) -> Result<Simplex> {
    let n = x.degree();
    if n == 0 || i > n {
      return Err(Error::IndexOutOfRange(format!("face d{i} of a degree-{n} simplex")));
    }
    Ok(self.pull(x.generator, monotone::precompose_face(&x.surjection, i)))
  }

  pub fn degeneracy(&self, x: &Simplex, j: usize) -> Result<Simplex> {
    let n = x.degree();
    if j > n {
      return Err(Error::IndexOutOfRange(format!("degeneracy s{j} of a degree-{n} simplex")));
    }
    Ok(Simplex { generator: x.generator, surjection: monotone::precompose_degeneracy(&x.surjection, j) })
  }

  /// Label of a simplex: the generator label, wrapped in `s{p}(…)` for each
  /// collapsed position, outermost first. Base simplices keep the base label.
  pub fn render(&self, x: &Simplex) -> String {
    if self.is_base(x) || x.is_nondegenerate() {
      return self.labels[x.generator].clone();
    }
    let ops: String = x.collapsed().iter().rev().map(|p| format!("s{p}")).collect();
    format!("{ops}({})", self.labels[x.generator])
  }

  /// Nondegenerate non-base simplex count per degree.
  pub fn nondegenerate_counts(&self) -> Vec<usize> {
    (0..=self.dim_cap).map(|d| (0..self.labels.len()).filter(|&g| self.degrees[g] == d && g != self.base).count()).collect()
  }

  /// Simplices of degree `q` in enumeration order: base first, then each
  /// generator (declaration order) with its surjections.
  pub fn simplices(&self, q: usize) -> Vec<Simplex> {
    let mut out = vec![Simplex { generator: self.base, surjection: vec![0; q + 1] }];
    for g in 0..self.labels.len() {
      if g == self.base || self.degrees[g] > q {
        continue;
      }
      for s in monotone::surjections(q, self.degrees[g]) {
        out.push(Simplex { generator: g, surjection: s });
      }
    }
    out
  }

  /// Explicit levels up to the cap, with faces and degeneracies tabulated.
  pub fn to_levelwise(&self) -> LevelwiseSimplicialSet {
    let levels: Vec<Vec<Simplex>> = (0..=self.dim_cap).map(|q| self.simplices(q)).collect();
    let index: Vec<HashMap<&Simplex, usize>> =
      levels.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let lookup = |q: usize, s: &Simplex| -> usize { if self.is_base(s) { 0 } else { index[q][s] } };
    let mut faces = vec![Vec::new()];
    let mut degeneracies = Vec::new();
    for q in 0..=self.dim_cap {
      if q >= 1 {
        faces.push(
          (0..=q)
            .map(|i| levels[q].iter().map(|s| lookup(q - 1, &self.face(s, i).expect("in range"))).collect())
            .collect(),
        );
      }
      if q < self.dim_cap {
        degeneracies.push(
          (0..=q)
            .map(|j| levels[q].iter().map(|s| lookup(q + 1, &self.degeneracy(s, j).expect("in range"))).collect())
            .collect(),
        );
      }
    }
    let sets = levels
      .iter()
      .map(|l| FinPointedSet::new(l.iter().map(|s| self.render(s)).collect(), 0).expect("distinct canonical labels"))
      .collect();
    LevelwiseSimplicialSet::from_parts(sets, faces, degeneracies)
  }

  /// `X ∧ k_+`: one copy `(x,j)` of every non-base generator per `1 ≤ j ≤ k`.
  pub fn smash_with_k(&self, k: usize) -> Self {
    let mut labels = vec![self.labels[self.base].clone()];
    let mut degrees = vec![0];
    let mut faces = vec![Vec::new()];
    let mut new_index = vec![Vec::new(); self.labels.len()];
    for j in 1..=k {
      for g in 0..self.labels.len() {
        if g == self.base {
          continue;
        }
        new_index[g].push(labels.len());
        labels.push(format!("({},{j})", self.labels[g]));
        degrees.push(self.degrees[g]);
        faces.push(Vec::new());
      }
    }
    for g in 0..self.labels.len() {
      if g == self.base {
        continue;
      }
      for j in 0..k {
        let fs = self.faces[g]
          .iter()
          .map(|f| Simplex {
            generator:  if f.generator == self.base { 0 } else { new_index[f.generator][j] },
            surjection: f.surjection.clone(),
          })
          .collect();
        faces[new_index[g][j]] = fs;
      }
    }
    Self { dim_cap: self.dim_cap, labels, degrees, faces, base: 0 }
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::simplicial::construct::{minimal_torus, sphere, standard_simplex};

  #[test]
  fn face_of_degeneracy() {
    let x = standard_simplex(2, 3).unwrap();
    let e = x.generator_index("[0,1]").unwrap();
    let s = Simplex::nondegenerate(e, 1);
    for i in 0..=1 {
      let si = x.degeneracy(&s, i).unwrap();
      assert_eq!(x.face(&si, i).unwrap(), s);
      assert_eq!(x.face(&si, i + 1).unwrap(), s);
    }
    let s1 = x.degeneracy(&s, 1).unwrap();
    let lhs = x.face(&s1, 0).unwrap();
    let rhs = x.degeneracy(&x.face(&s, 0).unwrap(), 0).unwrap();
    assert_eq!(lhs, rhs);
  }

  #[test]
  fn faces_agree_with_table() {
    let t = minimal_torus(3).unwrap();
    for g in 0..t.generator_count() {
      let d = t.generator_degree(g);
      for i in 0..(if d == 0 { 0 } else { d + 1 }) {
        assert_eq!(&t.face(&Simplex::nondegenerate(g, d), i).unwrap(), &t.face_table(g)[i]);
      }
    }
  }

  #[test]
  fn render_degenerate() {
    let s = sphere(1, 3).unwrap();
    let id = s.generator_index("id").unwrap();
    let x = Simplex { generator: id, surjection: vec![0, 0, 1, 1] };
    assert_eq!(s.render(&x), "s2s0(id)");
  }

  #[test]
  fn rejects_identity_violation() {
    // A 2-simplex whose faces do not close up: d0 d2 = v but d1 d0 = w.
    let gens = vec![
      ("v".to_string(), 0),
      ("w".to_string(), 0),
      ("e".to_string(), 1),
      ("f".to_string(), 1),
      ("t".to_string(), 2),
    ];
    let e = Simplex::nondegenerate(2, 1);
    let f = Simplex::nondegenerate(3, 1);
    let v = Simplex::nondegenerate(0, 0);
    let w = Simplex::nondegenerate(1, 0);
    let faces = vec![vec![], vec![], vec![w.clone(), v.clone()], vec![v.clone(), v.clone()], vec![e.clone(), f.clone(), e]];
    let err = TruncatedSimplicialSet::new(2, gens, faces, 0).unwrap_err();
    assert!(matches!(err, Error::IdentityViolation(ref m) if m.contains("d0 d1")), "{err}");
  }

  #[test]
  fn spec_roundtrip() {
    let t = minimal_torus(3).unwrap();
    let json = serde_json::to_string(&t.to_spec()).unwrap();
    let back = TruncatedSimplicialSet::from_spec(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back.to_levelwise(), t.to_levelwise());
  }
}
