//! Star-words, pairings compatible with them, and the oriented quotient
//! graph obtained by folding the k-gon along a pairing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One slot of a star-word: `T` itself or its adjoint `T*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Star,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::One => Letter::Star,
            Letter::Star => Letter::One,
        }
    }
}

/// The sequence `ε(1),…,ε(k)` of a word in an element and its adjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarWord(Vec<Letter>);

impl StarWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        StarWord(letters)
    }

    pub fn empty() -> Self {
        StarWord(Vec::new())
    }

    /// `(ONE, STAR)` repeated `times` times.
    pub fn alternating(times: usize) -> Self {
        StarWord([Letter::One, Letter::Star].repeat(times))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Equal numbers of `ONE` and `STAR`, the precondition for any
    /// compatible pairing to exist.
    pub fn is_balanced(&self) -> bool {
        self.count(Letter::One) == self.count(Letter::Star)
    }

    pub fn rotated(&self, by: usize) -> StarWord {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let by = by % v.len();
            v.rotate_left(by);
        }
        StarWord(v)
    }

    /// The star-word of the adjoint: reversed, with every letter flipped.
    pub fn adjoint(&self) -> StarWord {
        StarWord(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    /// Lexicographically least cyclic rotation.
    pub fn least_rotation(&self) -> StarWord {
        (0..self.len().max(1))
            .map(|r| self.rotated(r))
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::One => "1",
                Letter::Star => "*",
            })?;
        }
        Ok(())
    }
}

impl FromStr for StarWord {
    type Err = Error;

    /// Accepts a compact string over `1` and `*` such as `"*1*1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '1' => Ok(Letter::One),
                '*' => Ok(Letter::Star),
                other => Err(Error::parse(format!("unexpected symbol {other:?} in star-word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StarWord)
    }
}

impl From<Vec<Letter>> for StarWord {
    fn from(v: Vec<Letter>) -> Self {
        StarWord(v)
    }
}

/// A perfect matching of `{1,…,k}`, stored as 1-based pairs `(i, j)` with
/// `i < j`, sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(k: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; k + 1];
        let mut norm = Vec::new();
        for (a, b) in pairs {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j || i == 0 || j > k {
                return Err(Error::domain(format!("pair {{{a},{b}}} is not a pair in 1..={k}")));
            }
            for x in [i, j] {
                if seen[x] {
                    return Err(Error::domain(format!("{x} appears in two pairs")));
                }
                seen[x] = true;
            }
            norm.push((i, j));
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::domain(format!("not a perfect matching of 1..={k}")));
        }
        norm.sort_unstable();
        Ok(Pairing { k, pairs: norm })
    }

    pub fn empty() -> Self {
        Pairing { k: 0, pairs: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `partner[i]` for 1-based `i`; index 0 unused.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = vec![0; self.k + 1];
        for &(i, j) in &self.pairs {
            p[i] = j;
            p[j] = i;
        }
        p
    }

    pub fn is_compatible_with(&self, eps: &StarWord) -> bool {
        eps.len() == self.k
            && self
                .pairs
                .iter()
                .all(|&(i, j)| eps.letters()[i - 1] != eps.letters()[j - 1])
    }

    /// Removes the paired neighbors `{i, i+1}` and relabels the rest.
    /// `None` when `{i, i+1}` is not a pair.
    pub fn remove_paired_neighbors(&self, i: usize) -> Option<Pairing> {
        if !self.pairs.contains(&(i, i + 1)) {
            return None;
        }
        let shift = |x: usize| if x < i { x } else { x - 2 };
        let pairs = self
            .pairs
            .iter()
            .filter(|&&p| p != (i, i + 1))
            .map(|&(a, b)| (shift(a), shift(b)));
        Pairing::new(self.k - 2, pairs).ok()
    }

    /// Non-crossing iff successive removal of paired neighbors empties it.
    pub fn is_noncrossing(&self) -> bool {
        let mut current = self.clone();
        while current.k > 0 {
            let next = current
                .pairs
                .iter()
                .find(|&&(i, j)| j == i + 1)
                .map(|&(i, _)| i);
            match next.and_then(|i| current.remove_paired_neighbors(i)) {
                Some(p) => current = p,
                None => return false,
            }
        }
        true
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (i, j)) in self.pairs.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{i},{j}}}")?;
        }
        f.write_str("}")
    }
}

pub fn is_noncrossing(sigma: &Pairing) -> bool {
    sigma.is_noncrossing()
}

/// All non-crossing pairings matching each `ONE` with a `STAR`.
///
/// Pairs position 1 with each admissible partner in increasing order and
/// recurses on the inside and outside arcs, so only non-crossing matchings
/// are ever generated.
pub fn enumerate_compatible_ncp(eps: &StarWord) -> Vec<Pairing> {
    let k = eps.len();
    if k % 2 == 1 || !eps.is_balanced() {
        return Vec::new();
    }
    let mut out: Vec<Pairing> = arcs(eps.letters(), 0, k)
        .into_iter()
        .map(|pairs| Pairing::new(k, pairs).expect("generated matching is perfect"))
        .collect();
    out.sort();
    out
}

fn arcs(letters: &[Letter], lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo == hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut j = lo + 1;
    while j < hi {
        if letters[lo] != letters[j] {
            let inner = arcs(letters, lo + 1, j);
            if !inner.is_empty() {
                let outer = arcs(letters, j + 1, hi);
                for a in &inner {
                    for b in &outer {
                        let mut v = Vec::with_capacity(1 + a.len() + b.len());
                        v.push((lo + 1, j + 1));
                        v.extend_from_slice(a);
                        v.extend_from_slice(b);
                        out.push(v);
                    }
                }
            }
        }
        j += 2;
    }
    out
}

/// The k-gon folded along a pairing, with arrows inherited from the
/// star-word.
///
/// Vertex ids are the least 1-based k-gon index in each merged class. An
/// edge `(source, target)` is an arrow pointing from `source` to `target`;
/// labels must decrease along arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedQuotientGraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// `vertex_classes[j-1]` is the vertex that k-gon vertex `v_j` maps to.
    pub vertex_classes: Vec<usize>,
}

impl OrientedQuotientGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn index_of(&self, id: usize) -> usize {
        self.vertices.binary_search(&id).expect("edge endpoint is a vertex")
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut uf = UnionFind::new(n);
        for &(a, b) in &self.edges {
            uf.union(self.index_of(a), self.index_of(b));
        }
        (0..n).all(|v| uf.find(v) == uf.find(0))
    }

    /// Whether the undirected support has a cycle (parallel edges count).
    pub fn has_cycle(&self) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        self.edges
            .iter()
            .any(|&(a, b)| !uf.union(self.index_of(a), self.index_of(b)))
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && !self.has_cycle()
    }

    /// Vertex classes re-indexed to `0..vertex_count()`, one per k-gon vertex.
    pub fn compact_classes(&self) -> Vec<usize> {
        self.vertex_classes.iter().map(|&id| self.index_of(id)).collect()
    }

    /// The arrow relation as `(below, above)` pairs on compact indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(src, dst)| (self.index_of(dst), self.index_of(src)))
            .collect()
    }
}

pub fn quotient_graph(sigma: &Pairing, eps: &StarWord) -> Result<OrientedQuotientGraph> {
    if !sigma.is_compatible_with(eps) {
        return Err(Error::Incompatible(format!("{sigma} against {eps}")));
    }
    let k = eps.len();
    if k == 0 {
        return Ok(OrientedQuotientGraph {
            vertices: vec![1],
            edges: Vec::new(),
            vertex_classes: Vec::new(),
        });
    }
    let next = |j: usize| (j + 1) % k;
    let mut uf = UnionFind::new(k);
    for &(i, j) in sigma.pairs() {
        let (i, j) = (i - 1, j - 1);
        uf.union(i, next(j));
        uf.union(next(i), j);
    }
    // least index in each class becomes the vertex id
    let mut least = vec![usize::MAX; k];
    for v in 0..k {
        let r = uf.find(v);
        least[r] = least[r].min(v + 1);
    }
    let vertex_classes: Vec<usize> = (0..k).map(|v| least[uf.find(v)]).collect();
    let mut vertices = vertex_classes.clone();
    vertices.sort_unstable();
    vertices.dedup();

    let edges = sigma
        .pairs()
        .iter()
        .map(|&(i, _)| {
            let e = i - 1;
            let (from, to) = match eps.letters()[e] {
                Letter::One => (next(e), e),
                Letter::Star => (e, next(e)),
            };
            (vertex_classes[from], vertex_classes[to])
        })
        .collect();

    Ok(OrientedQuotientGraph {
        vertices,
        edges,
        vertex_classes,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
