//! Distance-based invariants, pendant and cut vertices, and block structure.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, Vertex};

/// Distance entry for a vertex not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// Hop distances from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn is_complete(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<DistanceRow> {
    g.check_vertex(source)?;
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n];
    let mut seen = Bits::new(n);
    let mut frontier = Bits::new(n);
    let mut next = Bits::new(n);
    seen.insert(source);
    frontier.insert(source);
    dist[source] = 0;
    let mut level = 0;
    loop {
        next.clear();
        for u in frontier.iter() {
            next.or_row(g.row(u));
        }
        next.and_not(&seen);
        if next.is_empty() {
            break;
        }
        level += 1;
        for v in next.iter() {
            dist[v] = level;
        }
        seen.or(&next);
        std::mem::swap(&mut frontier, &mut next);
    }
    Ok(DistanceRow { source, dist })
}

/// Number of BFS levels below `source`, or `None` if some vertex is unreachable.
fn bfs_depth(g: &Graph, source: Vertex) -> Option<u32> {
    let n = g.order();
    if g.row_words() == 1 {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut level = 0;
        while seen != full {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.row(u)[0];
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
            level += 1;
        }
        return Some(level);
    }
    let row = bfs_distances(g, source).ok()?;
    row.dist.iter().try_fold(0, |m, &d| (d != UNREACHABLE).then_some(m.max(d)))
}

pub fn eccentricity(g: &Graph, v: Vertex) -> Result<u32> {
    g.check_vertex(v)?;
    bfs_depth(g, v).ok_or(Error::Disconnected)
}

/// Eccentricity of every vertex, by one BFS per vertex.
pub fn eccentricities(g: &Graph) -> Result<Vec<u32>> {
    g.vertices()
        .map(|v| bfs_depth(g, v).ok_or(Error::Disconnected))
        .collect()
}

/// All-pairs distances by Floyd-Warshall; independent of the BFS path.
#[allow(clippy::needless_range_loop)]
pub fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = UNREACHABLE / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == inf {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = UNREACHABLE;
            }
        }
    }
    d
}

/// Eccentricities read off the all-pairs matrix.
pub fn eccentricities_from_matrix(g: &Graph) -> Result<Vec<u32>> {
    distance_matrix(g)
        .into_iter()
        .map(|row| {
            let m = row.into_iter().max().unwrap_or(0);
            if m == UNREACHABLE {
                Err(Error::Disconnected)
            } else {
                Ok(m)
            }
        })
        .collect()
}

/// Sum of the eccentricities of all vertices.
pub fn total_eccentricity(g: &Graph) -> Result<u64> {
    g.vertices().try_fold(0u64, |acc, v| {
        bfs_depth(g, v).map(|e| acc + e as u64).ok_or(Error::Disconnected)
    })
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for v in g.vertices() {
        let row = bfs_distances(g, v)?;
        for &d in row.dist.iter().skip(v + 1) {
            if d == UNREACHABLE {
                return Err(Error::Disconnected);
            }
            total += d as u64;
        }
    }
    Ok(total)
}

/// Total eccentricity divided by the order, kept exact.
pub fn average_eccentricity(g: &Graph) -> Result<Ratio<u64>> {
    Ok(Ratio::new(total_eccentricity(g)?, g.order() as u64))
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or(0))
}

pub fn radius(g: &Graph) -> Result<u32> {
    Ok(eccentricities(g)?.into_iter().min().unwrap_or(0))
}

/// Vertices of minimum eccentricity.
pub fn center(g: &Graph) -> Result<Vec<Vertex>> {
    let ecc = eccentricities(g)?;
    let r = ecc.iter().copied().min().unwrap_or(0);
    Ok(g.vertices().filter(|&v| ecc[v] == r).collect())
}

pub fn pendant_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Acyclic,
    Cycle(u32),
}

impl Girth {
    pub fn length(self) -> Option<u32> {
        match self {
            Girth::Acyclic => None,
            Girth::Cycle(l) => Some(l),
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Acyclic => f.write_str("acyclic"),
            Girth::Cycle(l) => write!(f, "{l}"),
        }
    }
}

pub fn girth(g: &Graph) -> Result<Girth> {
    g.require_connected()?;
    let n = g.order();
    let mut best = u32::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = UNREACHABLE);
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    Ok(if best == u32::MAX { Girth::Acyclic } else { Girth::Cycle(best) })
}

/// Articulation points via iterative DFS low-points, sorted ascending.
pub fn cut_vertices(g: &Graph) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    let dfs = LowPoint::run(g);
    Ok(g.vertices().filter(|&v| dfs.is_cut[v]).collect())
}

/// Articulation points by deleting each vertex and re-testing connectivity.
pub fn cut_vertices_by_deletion(g: &Graph) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    let n = g.order();
    Ok(g
        .vertices()
        .filter(|&w| {
            if n <= 2 {
                return false;
            }
            let start = if w == 0 { 1 } else { 0 };
            g.component_of(start, Some(w)).count_ones_total() < n - 1
        })
        .collect())
}

/// Blocks (maximal 2-connected subgraphs or bridges), cut vertices and the
/// block graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted, ordered lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// Vertex `i` is `blocks[i]`; two blocks are adjacent iff they share a cut vertex.
    pub block_graph: Graph,
}

impl BlockDecomposition {
    /// Edges of `g` inside block `i`.
    pub fn block_edges<'a>(&'a self, g: &'a Graph, i: usize) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
        let b = &self.blocks[i];
        b.iter().enumerate().flat_map(move |(x, &u)| {
            b[x + 1..].iter().filter(move |&&v| g.has_edge(u, v)).map(move |&v| (u, v))
        })
    }

    /// Number of cut vertices of the whole graph lying in block `i`.
    pub fn cut_count_in(&self, i: usize) -> usize {
        self.blocks[i]
            .iter()
            .filter(|v| self.cut_vertices.binary_search(v).is_ok())
            .count()
    }

    /// Blocks containing exactly one cut vertex.
    pub fn pendant_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.cut_count_in(i) == 1).collect()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].binary_search(&v).is_ok())
            .collect()
    }
}

pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let dfs = LowPoint::run(g);
    let mut blocks = dfs.blocks;
    if blocks.is_empty() {
        // single vertex
        blocks.push(vec![0]);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let cut: Vec<Vertex> = g.vertices().filter(|&v| dfs.is_cut[v]).collect();
    let mut bg = crate::graph::GraphBuilder::new(blocks.len())?;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let shares = blocks[i]
                .iter()
                .any(|v| cut.binary_search(v).is_ok() && blocks[j].binary_search(v).is_ok());
            if shares {
                bg.add_edge(i, j)?;
            }
        }
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: cut,
        block_graph: bg.build(),
    })
}

struct LowPoint {
    is_cut: Vec<bool>,
    blocks: Vec<Vec<Vertex>>,
}

impl LowPoint {
    fn run(g: &Graph) -> Self {
        const UNSET: usize = usize::MAX;
        let n = g.order();
        let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
        let mut disc = vec![UNSET; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != UNSET {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, UNSET, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < nbrs[v].len() {
                    let w = nbrs[v][*idx];
                    *idx += 1;
                    if disc[w] == UNSET {
                        edge_stack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent == UNSET {
                        continue;
                    }
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        if parent != root {
                            is_cut[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        LowPoint { is_cut, blocks }
    }
}
