//! Simple undirected graphs stored as rows of neighbor bitsets.
//!
//! Rows are `words` machine words wide, so graphs up to 64 vertices use a
//! single word per vertex and larger graphs (up to [`MAX_VERTICES`]) fall
//! back to multi-word rows behind the same interface.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] accepts.
pub const MAX_VERTICES: usize = 256;

/// Vertex identifier; vertices of an `n`-vertex graph are `0..n`.
pub type Vertex = usize;

/// A finite simple undirected graph with dense vertex ids `0..n`.
///
/// Values are immutable once built: every rewrite returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            bits: self.row(v)[0],
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, None).count_ones_total() == self.n
    }

    /// Vertices reachable from `start` without passing through `removed`.
    pub(crate) fn component_of(&self, start: Vertex, removed: Option<Vertex>) -> Bits {
        let mut seen = Bits::new(self.n);
        let mut frontier = Bits::new(self.n);
        seen.insert(start);
        frontier.insert(start);
        let mut next = Bits::new(self.n);
        loop {
            next.clear();
            for u in frontier.iter() {
                next.or_row(self.row(u));
            }
            if let Some(r) = removed {
                next.remove(r);
            }
            next.and_not(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.or(&next);
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    /// Returns an error unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let mut b = GraphBuilder::new(self.n)?;
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut b = GraphBuilder::new(keep.len())?;
        for (i, &v) in keep.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok(b.build())
    }

    /// Builder seeded with this graph's edges.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { g: self.clone() }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}

/// Mutable edge accumulator producing a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        Ok(GraphBuilder { g: Graph::empty(n)? })
    }

    pub fn order(&self) -> usize {
        self.g.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        self.g.check_vertex(u)?;
        self.g.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.g.has_edge(u, v) {
            return Err(Error::AlreadyAdjacent(u, v));
        }
        self.toggle(u, v);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        self.g.check_vertex(u)?;
        self.g.check_vertex(v)?;
        if u == v || !self.g.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        self.toggle(u, v);
        Ok(self)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.g.has_edge(u, v)
    }

    fn toggle(&mut self, u: Vertex, v: Vertex) {
        let w = self.g.words;
        self.g.adj[u * w + v / 64] ^= 1 << (v % 64);
        self.g.adj[v * w + u / 64] ^= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

/// Small fixed-width vertex set used by traversals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, v: Vertex) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub(crate) fn remove(&mut self, v: Vertex) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub(crate) fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn count_ones_total(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn or(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn or_row(&mut self, row: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(row) {
            *a |= b;
        }
    }

    pub(crate) fn and_not(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub(crate) fn iter(&self) -> Neighbors<'_> {
        Neighbors {
            row: &self.words,
            word: 0,
            bits: self.words[0],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_loops_and_duplicates() {
        let mut b = GraphBuilder::new(3).unwrap();
        b.add_edge(0, 1).unwrap();
        assert!(matches!(b.add_edge(1, 0), Err(Error::AlreadyAdjacent(1, 0))));
        assert!(matches!(b.add_edge(2, 2), Err(Error::SelfLoop(2))));
        assert!(matches!(b.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        for u in g.vertices() {
            assert!(!g.has_edge(u, u));
            for v in g.vertices() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert!(!g.is_connected());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn wide_rows_work_past_64_vertices() {
        let n = 150;
        let g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        assert_eq!(g.row_words(), 3);
        assert!(g.is_connected());
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.edges().count(), n - 1);
    }

    #[test]
    fn zero_vertices_rejected() {
        assert!(matches!(Graph::empty(0), Err(Error::VertexCount(0))));
    }

    #[test]
    fn permute_preserves_edges() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h, g);
        let h = g.permute(&[1, 0, 2, 3]).unwrap();
        assert!(h.has_edge(0, 1) && h.has_edge(0, 2) && h.has_edge(2, 3));
        assert!(!h.has_edge(1, 2));
        assert!(g.permute(&[0, 0, 1, 2]).is_err());
    }
}
