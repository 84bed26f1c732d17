//! Disjoint-set forest used for every equivalence closure in the crate.

/// Union-find with path compression and union by size.
///
/// Roots are not canonical; callers wanting deterministic class names use
/// [`UnionFind::classes`], which orders classes by their smallest member.
#[derive(Clone, Debug)]
pub struct UnionFind {
  parent: Vec<usize>,
  size:   Vec<usize>,
}

impl UnionFind {
  pub fn new(n: usize) -> Self { Self { parent: (0..n).collect(), size: vec![1; n] } }

  pub fn len(&self) -> usize { self.parent.len() }

  pub fn is_empty(&self) -> bool { self.parent.is_empty() }

  pub fn find(&mut self, mut x: usize) -> usize {
    let mut root = x;
    while self.parent[root] != root {
      root = self.parent[root];
    }
    while self.parent[x] != root {
      let next = self.parent[x];
      self.parent[x] = root;
      x = next;
    }
    root
  }

  /// Returns true when the two elements were in different classes.
  pub fn union(&mut self, a: usize, b: usize) -> bool {
    let (ra, rb) = (self.find(a), self.find(b));
    if ra == rb {
      return false;
    }
    let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
    self.parent[small] = big;
    self.size[big] += self.size[small];
    true
  }

  pub fn same(&mut self, a: usize, b: usize) -> bool { self.find(a) == self.find(b) }

  /// Class index of every element, classes numbered in order of their minimal
  /// element, together with the minimal element of each class.
  pub fn classes(&mut self) -> (Vec<usize>, Vec<usize>) {
    let n = self.len();
    let mut root_class = vec![usize::MAX; n];
    let mut class_of = vec![0; n];
    let mut mins = Vec::new();
    for x in 0..n {
      let r = self.find(x);
      if root_class[r] == usize::MAX {
        root_class[r] = mins.len();
        mins.push(x);
      }
      class_of[x] = root_class[r];
    }
    (class_of, mins)
  }
}
