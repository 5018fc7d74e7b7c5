//! Exact canonical labeling by equitable-partition refinement and an
//! individualization search tree, with automorphism pruning.
//!
//! The canonical graph is the leaf whose relabeled upper triangle (graph6
//! bit order) is lexicographically largest. Automorphisms discovered along
//! the way prune the tree and give the vertex orbits.

use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::graph6;

/// Result of a canonical labeling search.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<Vertex>,
    /// Automorphism generators, each mapping vertex `v` to `perm[v]`.
    pub generators: Vec<Vec<Vertex>>,
    code: Vec<u64>,
}

impl CanonicalLabeling {
    /// Canonical position of every vertex (inverse of `order`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (smallest member) of each vertex under the
    /// automorphism group.
    pub fn orbits(&self) -> Vec<Vertex> {
        orbits_of(self.order.len(), self.generators.iter())
    }

    /// The canonical copy of `g`, which must be the graph this labeling was
    /// computed for.
    pub fn relabeled(&self, g: &Graph) -> Graph {
        relabel(g, &self.order)
    }
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let root = refine(g, vec![(0..n).collect()]);
    let mut search = Search {
        g,
        first: None,
        best: None,
        first_path: Vec::new(),
        generators: Vec::new(),
        backjump: None,
    };
    let mut path = Vec::new();
    search.visit(root, &mut path);
    let (order, code) = search.best.expect("search reaches at least one leaf");
    CanonicalLabeling {
        order,
        generators: search.generators,
        code,
    }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    relabel(g, &canonical_labeling(g).order)
}

/// Byte string identifying the isomorphism class of `g`: the graph6
/// encoding of its canonical relabeling.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    graph6::encode(&canonical_graph(g)).into_bytes()
}

/// Canonical form as a graph6 string.
pub fn canonical_graph6(g: &Graph) -> String {
    graph6::encode(&canonical_graph(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_labeling(a).code == canonical_labeling(b).code
}

fn relabel(g: &Graph, order: &[Vertex]) -> Graph {
    let n = g.order();
    let mut b = GraphBuilder::new(n).expect("order already validated");
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                b.add_edge(i, j).expect("fresh edge");
            }
        }
    }
    b.build()
}

/// Upper-triangle bits of the relabeled graph, most significant first.
fn leaf_code(g: &Graph, order: &[Vertex]) -> Vec<u64> {
    let n = g.order();
    let bits = n * (n.saturating_sub(1)) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let vj = order[j];
        for &vi in &order[..j] {
            if g.has_edge(vi, vj) {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

pub(crate) fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<Vertex>>) -> Vec<Vertex> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gen in gens {
        for (v, &w) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement.
///
/// Cells are split by the number of neighbors in a splitter cell and the
/// pieces are ordered by that count, so the result depends only on the
/// graph structure and the input cell order.
fn refine(g: &Graph, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let n = g.order();
    let words = g.row_words();
    let mut mask = vec![0u64; words];
    'outer: loop {
        if cells.len() == n {
            return cells;
        }
        for s in 0..cells.len() {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[s] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut split_any = false;
            let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(cells.len() + 1);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, Vertex)> = cell
                    .iter()
                    .map(|&v| {
                        let c = g.row(v).iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                        (c, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    split_any = true;
                }
            }
            if split_any {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<Vertex>, Vec<u64>)>,
    best: Option<(Vec<Vertex>, Vec<u64>)>,
    first_path: Vec<Vertex>,
    generators: Vec<Vec<Vertex>>,
    backjump: Option<usize>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<Vertex>>, path: &mut Vec<Vertex>) {
        let n = self.g.order();
        if cells.len() == n {
            self.leaf(cells.into_iter().map(|c| c[0]).collect(), path);
            return;
        }
        let depth = path.len();
        let target = cells.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<Vertex> = Vec::new();
        for v in candidates {
            if !tried.is_empty() {
                let fixing = self
                    .generators
                    .iter()
                    .filter(|gen| path.iter().all(|&p| gen[p] == p));
                let orb = orbits_of(n, fixing);
                if tried.iter().any(|&t| orb[t] == orb[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let child = refine(self.g, child);
            path.push(v);
            self.visit(child, path);
            path.pop();
            if let Some(level) = self.backjump {
                if level < depth {
                    return;
                }
                self.backjump = None;
            }
        }
    }

    fn leaf(&mut self, order: Vec<Vertex>, path: &[Vertex]) {
        let code = leaf_code(self.g, &order);
        let Some((first_order, first_code)) = &self.first else {
            self.first = Some((order.clone(), code.clone()));
            self.best = Some((order, code));
            self.first_path = path.to_vec();
            return;
        };
        if &code == first_code {
            let gen = automorphism(first_order, &order);
            self.generators.push(gen);
            let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            self.backjump = Some(common);
            return;
        }
        let (best_order, best_code) = self.best.as_ref().expect("best set with first");
        if &code == best_code {
            let gen = automorphism(best_order, &order);
            self.generators.push(gen);
        } else if &code > best_code {
            self.best = Some((order, code));
        }
    }
}

fn automorphism(from: &[Vertex], to: &[Vertex]) -> Vec<Vertex> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}
