//! Seeded random graphs, including graphs built to contain a site for a
//! chosen rewrite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::transforms::{self, RewriteKind, RewriteSite};

/// Edge list that grows one vertex at a time.
#[derive(Debug, Default)]
struct Grow {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Grow {
    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    /// Path of `len` new vertices hanging from `from`; returns its far end.
    fn path(&mut self, from: Vertex, len: usize) -> Vertex {
        let mut prev = from;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
        prev
    }

    /// Cycle of length `len` through `at` and `len - 1` new vertices.
    fn cycle(&mut self, at: Vertex, len: usize) {
        let end = self.path(at, len - 1);
        self.edges.push((end, at));
    }

    /// Random 2-connected block on `at` and `size - 1` new vertices: a cycle
    /// with random chords, or a clique.
    fn block<R: Rng>(&mut self, rng: &mut R, at: Vertex, size: usize) {
        if size == 2 {
            self.path(at, 1);
            return;
        }
        let mut vs = vec![at];
        vs.extend((1..size).map(|_| self.vertex()));
        if rng.gen_bool(0.3) {
            for i in 0..size {
                for j in i + 1..size {
                    self.edges.push((vs[i], vs[j]));
                }
            }
            return;
        }
        for i in 0..size {
            self.edges.push((vs[i], vs[(i + 1) % size]));
        }
        for i in 0..size {
            for j in i + 2..size {
                if (i, j) != (0, size - 1) && rng.gen_bool(0.25) {
                    self.edges.push((vs[i], vs[j]));
                }
            }
        }
    }

    /// Random connected piece on `size` vertices including `at`.
    fn piece<R: Rng>(&mut self, rng: &mut R, at: Vertex, size: usize) {
        let mut members = vec![at];
        let mut left = size - 1;
        while left > 0 {
            let root = *members.choose(rng).expect("nonempty");
            let b = rng.gen_range(2..=left.min(5) + 1);
            let first_new = self.n;
            self.block(rng, root, b);
            members.extend(first_new..self.n);
            left -= b - 1;
        }
    }

    fn build(self) -> Graph {
        Graph::from_edges(self.n, self.edges).expect("generated edges are valid")
    }
}

/// Uniform random recursive tree: vertex `i` joins a random earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (rng.gen_range(0..i), i))).expect("tree edges are valid")
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut b = random_tree(rng, n).to_builder();
    for u in 0..n {
        for v in u + 1..n {
            if !b.has_edge(u, v) && rng.gen_bool(p) {
                b.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    b.build()
}

/// Random connected graph grown block by block: bridges, cycles with
/// chords and cliques attached at random vertices.
pub fn random_block_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Grow::default();
    let root = g.vertex();
    g.piece(rng, root, n);
    g.build()
}

/// Random relabeling: returns the relabeled graph and the map `old -> new`.
pub fn shuffle<R: Rng>(rng: &mut R, g: &Graph) -> (Graph, Vec<Vertex>) {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(rng);
    (g.permute(&perm).expect("valid permutation"), perm)
}

/// Random graph on at most `max_n` vertices containing a site for `kind`,
/// randomly relabeled, with one of its sites chosen uniformly.
///
/// # Panics
/// If `max_n` is below the smallest order a site of `kind` needs (7 for
/// shrink-girth and merge-cycles, 5 for relocate-path, 4 for graft).
pub fn random_instance<R: Rng>(rng: &mut R, kind: RewriteKind, max_n: usize) -> (Graph, RewriteSite) {
    loop {
        let g = shaped(rng, kind, max_n);
        let (g, _) = shuffle(rng, &g);
        if let Some(site) = transforms::sites(&g, kind).choose(rng) {
            return (g.clone(), site.clone());
        }
    }
}

fn shaped<R: Rng>(rng: &mut R, kind: RewriteKind, max_n: usize) -> Graph {
    let mut g = Grow::default();
    let root = g.vertex();
    match kind {
        RewriteKind::AddEdge => {
            let n = rng.gen_range(3..=max_n);
            let p = rng.gen_range(0.0..0.5);
            return random_connected(rng, n, p);
        }
        RewriteKind::BlockToCycle => {
            let n = rng.gen_range(3..=max_n);
            return random_block_graph(rng, n);
        }
        RewriteKind::Graft => {
            assert!(max_n >= 4, "graft needs at least 4 vertices");
            let base = rng.gen_range(2..=max_n - 2);
            g.piece(rng, root, base);
            let hub = rng.gen_range(0..g.n);
            let room = max_n - g.n;
            let k = rng.gen_range(1..=room / 2);
            let l = rng.gen_range(k..=room - k);
            g.path(hub, k);
            g.path(hub, l);
        }
        RewriteKind::RelocatePath => {
            assert!(max_n >= 5, "relocate-path needs at least 5 vertices");
            let d = rng.gen_range(2..=max_n - 3);
            g.path(root, d - 1);
            let rest = max_n - d;
            let h1 = rng.gen_range(1..rest);
            g.piece(rng, root, h1 + 1);
            let h2 = rng.gen_range(1..=rest - h1);
            g.piece(rng, root, h2 + 1);
        }
        RewriteKind::MergeCycles => {
            assert!(max_n >= 7, "merge-cycles needs at least 7 vertices");
            let m1 = rng.gen_range(3..=max_n - 4);
            let m2 = rng.gen_range(3..=(max_n - m1 - 1).min(m1));
            let h = rng.gen_range(1..=max_n + 1 - m1 - m2);
            g.piece(rng, root, h + 1);
            g.cycle(root, m1);
            g.cycle(root, m2);
        }
        RewriteKind::BalancePaths => {
            let n = rng.gen_range(4..=max_n.max(4));
            let m = rng.gen_range(2..=n - 2);
            let mut lens = vec![1usize; m];
            for _ in 0..n - m {
                let i = rng.gen_range(0..m);
                lens[i] += 1;
            }
            let clique: Vec<Vertex> = std::iter::once(root).chain((1..m).map(|_| g.vertex())).collect();
            for i in 0..m {
                for j in i + 1..m {
                    g.edges.push((clique[i], clique[j]));
                }
            }
            for (i, &l) in lens.iter().enumerate() {
                g.path(clique[i], l - 1);
            }
        }
        RewriteKind::ShrinkGirth => {
            assert!(max_n >= 7, "shrink-girth needs at least 7 vertices");
            let h = rng.gen_range(2..=max_n - 5);
            g.piece(rng, root, h);
            let u = rng.gen_range(0..g.n);
            let r = rng.gen_range(5..=max_n - g.n);
            let girth = rng.gen_range(4..r);
            let last = g.path(u, r - girth);
            let first = g.path(last, 1);
            g.cycle(first, girth);
        }
    }
    g.build()
}
