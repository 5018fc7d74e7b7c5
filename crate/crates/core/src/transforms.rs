//! Local graph rewrites with a known effect on total eccentricity.
//!
//! Every rewrite takes an explicit [`RewriteSite`], validates it against the
//! block structure of the input, and returns a new graph on the same vertex
//! set. [`sites`] lists every valid site of a given kind in a fixed order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{bad_site, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::{self, BlockDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RewriteKind {
    AddEdge,
    Graft,
    RelocatePath,
    BlockToCycle,
    MergeCycles,
    BalancePaths,
    ShrinkGirth,
}

impl RewriteKind {
    pub const ALL: [RewriteKind; 7] = [
        RewriteKind::AddEdge,
        RewriteKind::Graft,
        RewriteKind::RelocatePath,
        RewriteKind::BlockToCycle,
        RewriteKind::MergeCycles,
        RewriteKind::BalancePaths,
        RewriteKind::ShrinkGirth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RewriteKind::AddEdge => "add-edge",
            RewriteKind::Graft => "graft",
            RewriteKind::RelocatePath => "relocate-path",
            RewriteKind::BlockToCycle => "block-to-cycle",
            RewriteKind::MergeCycles => "merge-cycles",
            RewriteKind::BalancePaths => "balance-paths",
            RewriteKind::ShrinkGirth => "shrink-girth",
        }
    }

    /// Direction in which total eccentricity moves under this rewrite.
    pub fn contract(self) -> Contract {
        match self {
            RewriteKind::AddEdge | RewriteKind::BalancePaths => Contract::NonIncreasing,
            RewriteKind::Graft | RewriteKind::RelocatePath | RewriteKind::ShrinkGirth => Contract::Increasing,
            RewriteKind::BlockToCycle | RewriteKind::MergeCycles => Contract::NonDecreasing,
        }
    }

    /// Order in which [`RewriteSite::from_anchors`] reads its integers.
    pub fn anchor_layout(self) -> &'static str {
        match self {
            RewriteKind::AddEdge => "u v",
            RewriteKind::Graft => "hub short long",
            RewriteKind::RelocatePath => "glue path_start h2_root...",
            RewriteKind::BlockToCycle => "block_index",
            RewriteKind::MergeCycles => "w a b",
            RewriteKind::BalancePaths => "long short clique...",
            RewriteKind::ShrinkGirth => "attach tail",
        }
    }
}

impl fmt::Display for RewriteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RewriteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RewriteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown rewrite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Contract {
    NonIncreasing,
    NonDecreasing,
    Increasing,
}

impl Contract {
    pub fn holds(self, before: u64, after: u64) -> bool {
        match self {
            Contract::NonIncreasing => after <= before,
            Contract::NonDecreasing => after >= before,
            Contract::Increasing => after > before,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Contract::NonIncreasing => "<=",
            Contract::NonDecreasing => ">=",
            Contract::Increasing => ">",
        }
    }
}

/// Where a rewrite applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RewriteSite {
    /// Join two non-adjacent vertices.
    AddEdge { u: Vertex, v: Vertex },
    /// Two pendant paths at `hub` starting at `short` (k vertices) and
    /// `long` (l >= k vertices); `hub` also has a neighbor off both paths.
    Graft { hub: Vertex, short: Vertex, long: Vertex },
    /// `glue` carries a pendant path starting at `path_start`; the branches
    /// of `glue` containing `h2_roots` form the part moved to the path's end.
    /// At least one other branch must stay behind.
    RelocatePath { glue: Vertex, path_start: Vertex, h2_roots: Vec<Vertex> },
    /// Index into [`invariants::blocks`] of a block with at least three
    /// vertices and at most one cut vertex.
    BlockToCycle { block: usize },
    /// Two pendant cycle blocks at cut vertex `w`, entered through neighbors
    /// `a` and `b`; `w` lies in a further block.
    MergeCycles { w: Vertex, a: Vertex, b: Vertex },
    /// Complete graph on `clique` with a pendant path at each clique vertex
    /// (possibly empty). One vertex moves from the path at `long` to the
    /// path at `short`.
    BalancePaths { long: Vertex, short: Vertex, clique: Vec<Vertex> },
    /// `tail` is the degree-1 end of a tadpole of girth at least 4, joined
    /// to `attach` by the only edge leaving the tadpole.
    ShrinkGirth { attach: Vertex, tail: Vertex },
}

impl RewriteSite {
    pub fn kind(&self) -> RewriteKind {
        match self {
            RewriteSite::AddEdge { .. } => RewriteKind::AddEdge,
            RewriteSite::Graft { .. } => RewriteKind::Graft,
            RewriteSite::RelocatePath { .. } => RewriteKind::RelocatePath,
            RewriteSite::BlockToCycle { .. } => RewriteKind::BlockToCycle,
            RewriteSite::MergeCycles { .. } => RewriteKind::MergeCycles,
            RewriteSite::BalancePaths { .. } => RewriteKind::BalancePaths,
            RewriteSite::ShrinkGirth { .. } => RewriteKind::ShrinkGirth,
        }
    }

    /// Flat integer form, in the order given by [`RewriteKind::anchor_layout`].
    pub fn anchors(&self) -> Vec<usize> {
        match self {
            RewriteSite::AddEdge { u, v } => vec![*u, *v],
            RewriteSite::Graft { hub, short, long } => vec![*hub, *short, *long],
            RewriteSite::RelocatePath { glue, path_start, h2_roots } => {
                let mut a = vec![*glue, *path_start];
                a.extend(h2_roots);
                a
            }
            RewriteSite::BlockToCycle { block } => vec![*block],
            RewriteSite::MergeCycles { w, a, b } => vec![*w, *a, *b],
            RewriteSite::BalancePaths { long, short, clique } => {
                let mut a = vec![*long, *short];
                a.extend(clique);
                a
            }
            RewriteSite::ShrinkGirth { attach, tail } => vec![*attach, *tail],
        }
    }

    pub fn from_anchors(kind: RewriteKind, a: &[usize]) -> Result<Self> {
        let exact = |len: usize| {
            if a.len() == len {
                Ok(())
            } else {
                bad_site(format!("{kind} takes {len} anchors ({}), got {}", kind.anchor_layout(), a.len()))
            }
        };
        let at_least = |len: usize| {
            if a.len() >= len {
                Ok(())
            } else {
                bad_site(format!("{kind} takes at least {len} anchors ({}), got {}", kind.anchor_layout(), a.len()))
            }
        };
        Ok(match kind {
            RewriteKind::AddEdge => {
                exact(2)?;
                RewriteSite::AddEdge { u: a[0], v: a[1] }
            }
            RewriteKind::Graft => {
                exact(3)?;
                RewriteSite::Graft { hub: a[0], short: a[1], long: a[2] }
            }
            RewriteKind::RelocatePath => {
                at_least(3)?;
                RewriteSite::RelocatePath { glue: a[0], path_start: a[1], h2_roots: a[2..].to_vec() }
            }
            RewriteKind::BlockToCycle => {
                exact(1)?;
                RewriteSite::BlockToCycle { block: a[0] }
            }
            RewriteKind::MergeCycles => {
                exact(3)?;
                RewriteSite::MergeCycles { w: a[0], a: a[1], b: a[2] }
            }
            RewriteKind::BalancePaths => {
                at_least(4)?;
                RewriteSite::BalancePaths { long: a[0], short: a[1], clique: a[2..].to_vec() }
            }
            RewriteKind::ShrinkGirth => {
                exact(2)?;
                RewriteSite::ShrinkGirth { attach: a[0], tail: a[1] }
            }
        })
    }
}

impl fmt::Display for RewriteSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        for a in self.anchors() {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Applies the rewrite described by `site` to `g`.
pub fn apply(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    match site {
        RewriteSite::AddEdge { u, v } => add_edge(g, *u, *v),
        RewriteSite::Graft { .. } => graft_edge(g, site),
        RewriteSite::RelocatePath { .. } => relocate_path(g, site),
        RewriteSite::BlockToCycle { block } => block_to_cycle(g, *block),
        RewriteSite::MergeCycles { .. } => merge_cycles(g, site),
        RewriteSite::BalancePaths { .. } => balance_paths(g, site),
        RewriteSite::ShrinkGirth { .. } => shrink_girth_to_3(g, site),
    }
}

/// Outcome of a rewrite together with both total eccentricities.
#[derive(Debug, Clone)]
pub struct Applied {
    pub before: Graph,
    pub after: Graph,
    pub eps_before: u64,
    pub eps_after: u64,
    pub contract: Contract,
}

impl Applied {
    pub fn contract_holds(&self) -> bool {
        self.contract.holds(self.eps_before, self.eps_after)
    }
}

/// Applies a rewrite to a connected graph and measures total eccentricity on
/// both sides.
pub fn apply_measured(g: &Graph, site: &RewriteSite) -> Result<Applied> {
    let after = apply(g, site)?;
    Ok(Applied {
        eps_before: invariants::total_eccentricity(g)?,
        eps_after: invariants::total_eccentricity(&after)?,
        before: g.clone(),
        after,
        contract: site.kind().contract(),
    })
}

pub fn add_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph> {
    let mut b = g.to_builder();
    b.add_edge(u, v)?;
    Ok(b.build())
}

pub fn graft_edge(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    let RewriteSite::Graft { hub, short, long } = *site else {
        return bad_site("expected a graft site");
    };
    let (p, q) = graft_paths(g, hub, short, long)?;
    let k = p.len();
    let prev = if k == 1 { hub } else { p[k - 2] };
    let mut b = g.to_builder();
    b.remove_edge(prev, p[k - 1])?;
    b.add_edge(q[q.len() - 1], p[k - 1])?;
    Ok(b.build())
}

fn graft_paths(g: &Graph, hub: Vertex, short: Vertex, long: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    for v in [hub, short, long] {
        g.check_vertex(v)?;
    }
    if short == long {
        return bad_site("graft needs two distinct paths");
    }
    if g.degree(hub) < 3 {
        return bad_site(format!("hub {hub} has no neighbor besides the two paths"));
    }
    let p = pendant_path(g, hub, short).ok_or_else(|| site_err(format!("no pendant path at {hub} through {short}")))?;
    let q = pendant_path(g, hub, long).ok_or_else(|| site_err(format!("no pendant path at {hub} through {long}")))?;
    if p.len() > q.len() {
        return bad_site(format!("short path has {} vertices, long path only {}", p.len(), q.len()));
    }
    Ok((p, q))
}

pub fn relocate_path(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    let RewriteSite::RelocatePath { glue, path_start, h2_roots } = site else {
        return bad_site("expected a relocate-path site");
    };
    let (path, h2) = relocation_parts(g, *glue, *path_start, h2_roots)?;
    let end = *path.last().expect("nonempty path");
    let mut b = g.to_builder();
    for x in g.neighbors(*glue).filter(|x| h2[*x]) {
        b.remove_edge(*glue, x)?;
        b.add_edge(end, x)?;
    }
    Ok(b.build())
}

/// The pendant path (without `glue`) and the membership mask of the moved part.
fn relocation_parts(g: &Graph, glue: Vertex, path_start: Vertex, roots: &[Vertex]) -> Result<(Vec<Vertex>, Vec<bool>)> {
    g.check_vertex(glue)?;
    g.check_vertex(path_start)?;
    g.require_connected()?;
    let path = pendant_path(g, glue, path_start)
        .ok_or_else(|| site_err(format!("no pendant path at {glue} through {path_start}")))?;
    if roots.is_empty() {
        return bad_site("relocate-path needs at least one branch to move");
    }
    let n = g.order();
    let mut h2 = vec![false; n];
    for &r in roots {
        g.check_vertex(r)?;
        if !g.has_edge(glue, r) {
            return bad_site(format!("{r} is not a neighbor of {glue}"));
        }
        if path.contains(&r) {
            return bad_site(format!("{r} lies on the relocated path"));
        }
        for x in g.component_of(r, Some(glue)).iter() {
            h2[x] = true;
        }
    }
    let on_path: Vec<bool> = (0..n).map(|v| path.contains(&v)).collect();
    let stays = g.neighbors(glue).any(|x| !h2[x] && !on_path[x]);
    if !stays {
        return bad_site(format!("nothing besides the path remains attached at {glue}"));
    }
    Ok((path, h2))
}

pub fn block_to_cycle(g: &Graph, block: usize) -> Result<Graph> {
    let dec = invariants::blocks(g)?;
    let cycle = block_cycle_order(&dec, block)?;
    let mut b = g.to_builder();
    for (u, v) in dec.block_edges(g, block) {
        b.remove_edge(u, v)?;
    }
    for i in 0..cycle.len() {
        b.add_edge(cycle[i], cycle[(i + 1) % cycle.len()])?;
    }
    Ok(b.build())
}

/// Cycle order for the replacement: the cut vertex (or smallest vertex)
/// first, then the rest ascending.
fn block_cycle_order(dec: &BlockDecomposition, block: usize) -> Result<Vec<Vertex>> {
    let Some(vs) = dec.blocks.get(block) else {
        return bad_site(format!("block index {block} out of range ({} blocks)", dec.blocks.len()));
    };
    if vs.len() < 3 {
        return bad_site(format!("block {block} has {} vertices, needs at least 3", vs.len()));
    }
    let cuts: Vec<Vertex> = vs.iter().copied().filter(|v| dec.cut_vertices.binary_search(v).is_ok()).collect();
    if cuts.len() > 1 {
        return bad_site(format!("block {block} contains {} cut vertices", cuts.len()));
    }
    let first = cuts.first().copied().unwrap_or(vs[0]);
    let mut order = vec![first];
    order.extend(vs.iter().copied().filter(|&v| v != first));
    Ok(order)
}

pub fn merge_cycles(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    let RewriteSite::MergeCycles { w, a, b } = *site else {
        return bad_site("expected a merge-cycles site");
    };
    let dec = invariants::blocks(g)?;
    let c1 = pendant_cycle_walk(g, &dec, w, a)?;
    let c2 = pendant_cycle_walk(g, &dec, w, b)?;
    if c1.contains(&b) {
        return bad_site(format!("{a} and {b} lie on the same cycle"));
    }
    if dec.blocks_of(w).len() < 3 {
        return bad_site(format!("nothing besides the two cycles is attached at {w}"));
    }
    let (x, y) = (c1[c1.len() - 1], c2[c2.len() - 1]);
    let mut out = g.to_builder();
    out.remove_edge(w, x)?;
    out.remove_edge(w, y)?;
    out.add_edge(x, y)?;
    Ok(out.build())
}

/// Vertices of the pendant cycle block through `w` and `first`, walked from
/// `first` around to the other neighbor of `w`.
fn pendant_cycle_walk(g: &Graph, dec: &BlockDecomposition, w: Vertex, first: Vertex) -> Result<Vec<Vertex>> {
    g.check_vertex(w)?;
    g.check_vertex(first)?;
    if !g.has_edge(w, first) {
        return bad_site(format!("{first} is not a neighbor of {w}"));
    }
    let i = dec
        .blocks_of(w)
        .into_iter()
        .find(|&i| dec.blocks[i].binary_search(&first).is_ok())
        .expect("an edge lies in a block");
    let vs = &dec.blocks[i];
    let edges = dec.block_edges(g, i).count();
    if vs.len() < 3 || edges != vs.len() {
        return bad_site(format!("block through {w} and {first} is not a cycle"));
    }
    if dec.cut_count_in(i) != 1 || dec.cut_vertices.binary_search(&w).is_err() {
        return bad_site(format!("cycle through {w} and {first} is not a pendant block at {w}"));
    }
    let mut walk = vec![first];
    let (mut prev, mut cur) = (w, first);
    loop {
        let next = g
            .neighbors(cur)
            .find(|&x| x != prev && vs.binary_search(&x).is_ok())
            .expect("cycle vertices have two block neighbors");
        if next == w {
            return Ok(walk);
        }
        walk.push(next);
        (prev, cur) = (cur, next);
    }
}

pub fn balance_paths(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    let RewriteSite::BalancePaths { long, short, clique } = site else {
        return bad_site("expected a balance-paths site");
    };
    let paths = clique_paths(g, clique)?;
    let find = |v: Vertex| {
        clique
            .iter()
            .position(|&c| c == v)
            .ok_or_else(|| site_err(format!("{v} is not in the clique")))
    };
    let (k, j) = (find(*long)?, find(*short)?);
    let lk = paths[k].len() + 1;
    let lj = paths[j].len() + 1;
    if paths.iter().any(|p| p.len() + 1 > lk) {
        return bad_site(format!("path at {long} is not a longest one"));
    }
    if lj + 2 > lk {
        return bad_site(format!("path lengths {lk} and {lj} differ by less than 2"));
    }
    let w1 = paths[k][paths[k].len() - 1];
    let w2 = paths[k][paths[k].len() - 2];
    let u1 = paths[j].last().copied().unwrap_or(*short);
    let mut b = g.to_builder();
    b.remove_edge(w1, w2)?;
    b.add_edge(u1, w1)?;
    Ok(b.build())
}

/// Checks that `g` is the complete graph on `clique` with one pendant path
/// per clique vertex and returns those paths (clique vertex excluded).
fn clique_paths(g: &Graph, clique: &[Vertex]) -> Result<Vec<Vec<Vertex>>> {
    if clique.len() < 2 {
        return bad_site("clique needs at least two vertices");
    }
    let mut in_clique = vec![false; g.order()];
    for &c in clique {
        g.check_vertex(c)?;
        if std::mem::replace(&mut in_clique[c], true) {
            return bad_site(format!("clique vertex {c} repeated"));
        }
    }
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            if !g.has_edge(a, b) {
                return bad_site(format!("clique vertices {a} and {b} are not adjacent"));
            }
        }
    }
    let mut total = clique.len();
    let mut paths = Vec::with_capacity(clique.len());
    for &c in clique {
        let outside: Vec<Vertex> = g.neighbors(c).filter(|&x| !in_clique[x]).collect();
        let path = match outside[..] {
            [] => Vec::new(),
            [x] => pendant_path(g, c, x).ok_or_else(|| site_err(format!("branch at {c} is not a path")))?,
            _ => return bad_site(format!("clique vertex {c} has {} outside neighbors", outside.len())),
        };
        total += path.len();
        paths.push(path);
    }
    if total != g.order() {
        return bad_site("graph is not a clique with pendant paths");
    }
    Ok(paths)
}

/// Replaces a pendant tadpole of girth at least 4 with a girth-3 tadpole on
/// the same vertices: with the tadpole's vertices listed as `v1..vr` from the
/// tail end, the result has the path `v1..v(r-2)` and the triangle
/// `v(r-2) v(r-1) vr`.
pub fn shrink_girth_to_3(g: &Graph, site: &RewriteSite) -> Result<Graph> {
    let RewriteSite::ShrinkGirth { attach, tail } = *site else {
        return bad_site("expected a shrink-girth site");
    };
    let vs = tadpole_labels(g, attach, tail)?;
    let r = vs.len();
    let mut b = g.to_builder();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            if g.has_edge(x, y) {
                b.remove_edge(x, y)?;
            }
        }
    }
    for i in 0..r - 1 {
        b.add_edge(vs[i], vs[i + 1])?;
    }
    b.add_edge(vs[r - 3], vs[r - 1])?;
    Ok(b.build())
}

/// Tadpole vertices in order: tail path from `tail`, then around the cycle
/// starting at the junction and leaving through its smaller cycle neighbor.
fn tadpole_labels(g: &Graph, attach: Vertex, tail: Vertex) -> Result<Vec<Vertex>> {
    g.check_vertex(attach)?;
    g.check_vertex(tail)?;
    if !g.has_edge(attach, tail) {
        return bad_site(format!("{tail} is not a neighbor of {attach}"));
    }
    if g.degree(tail) != 2 {
        return bad_site(format!("{tail} is not the end of a tadpole tail"));
    }
    let part: Vec<Vertex> = g.component_of(tail, Some(attach)).iter().collect();
    if part.len() + 2 > g.order() {
        return bad_site("the rest of the graph needs at least two vertices");
    }
    if g.neighbors(attach).filter(|x| part.binary_search(x).is_ok()).count() != 1 {
        return bad_site(format!("{attach} has more than one edge into the tadpole"));
    }
    let inner = |v: Vertex| g.degree(v) - usize::from(v == tail);
    let edges: usize = part.iter().map(|&v| inner(v)).sum::<usize>() / 2;
    if edges != part.len() {
        return bad_site("branch is not unicyclic");
    }
    let mut order = vec![tail];
    let (mut prev, mut cur) = (attach, tail);
    while inner(cur) != 3 {
        let expected = if cur == tail { 1 } else { 2 };
        if inner(cur) != expected || order.len() > part.len() {
            return bad_site("branch is not a tadpole");
        }
        let next = g.neighbors(cur).find(|&x| x != prev).expect("degree 2");
        order.push(next);
        (prev, cur) = (cur, next);
    }
    let junction = cur;
    let cyc: Vec<Vertex> = g.neighbors(junction).filter(|&x| x != prev).collect();
    let girth = part.len() - (order.len() - 1);
    if girth < 4 {
        return bad_site(format!("tadpole girth {girth} is below 4"));
    }
    let (mut p, mut c) = (junction, cyc[0].min(cyc[1]));
    while c != junction {
        if inner(c) != 2 {
            return bad_site("branch is not a tadpole");
        }
        order.push(c);
        let next = g.neighbors(c).find(|&x| x != p).expect("degree 2");
        (p, c) = (c, next);
    }
    if order.len() != part.len() {
        return bad_site("branch is not a tadpole");
    }
    Ok(order)
}

/// Vertices of the path hanging at `hub` through `first`, ending at a leaf;
/// `None` unless every vertex but the last has degree 2.
fn pendant_path(g: &Graph, hub: Vertex, first: Vertex) -> Option<Vec<Vertex>> {
    if !g.has_edge(hub, first) {
        return None;
    }
    let mut path = vec![first];
    let (mut prev, mut cur) = (hub, first);
    loop {
        match g.degree(cur) {
            1 => return Some(path),
            2 => {
                let next = g.neighbors(cur).find(|&x| x != prev)?;
                if next == hub || path.len() >= g.order() {
                    return None;
                }
                path.push(next);
                (prev, cur) = (cur, next);
            }
            _ => return None,
        }
    }
}

fn site_err(msg: String) -> Error {
    Error::InvalidSite(msg)
}

/// Every valid site of `kind` in `g`, sorted.
///
/// For relocate-path the moved part ranges over nonempty proper subsets of
/// the remaining branches at the glue vertex when there are at most ten of
/// them, and over single branches otherwise.
pub fn sites(g: &Graph, kind: RewriteKind) -> Vec<RewriteSite> {
    if !g.is_connected() {
        return Vec::new();
    }
    let mut out = match kind {
        RewriteKind::AddEdge => add_edge_sites(g),
        RewriteKind::Graft => graft_sites(g),
        RewriteKind::RelocatePath => relocate_sites(g),
        RewriteKind::BlockToCycle => block_sites(g),
        RewriteKind::MergeCycles => merge_sites(g),
        RewriteKind::BalancePaths => balance_sites(g),
        RewriteKind::ShrinkGirth => shrink_sites(g),
    };
    out.sort();
    out.dedup();
    out
}

fn add_edge_sites(g: &Graph) -> Vec<RewriteSite> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .map(|(u, v)| RewriteSite::AddEdge { u, v })
        .collect()
}

fn graft_sites(g: &Graph) -> Vec<RewriteSite> {
    let mut out = Vec::new();
    for hub in g.vertices().filter(|&v| g.degree(v) >= 3) {
        let tails: Vec<(Vertex, usize)> = g
            .neighbors(hub)
            .filter_map(|x| pendant_path(g, hub, x).map(|p| (x, p.len())))
            .collect();
        for &(s, ls) in &tails {
            for &(l, ll) in &tails {
                if s != l && ls <= ll {
                    out.push(RewriteSite::Graft { hub, short: s, long: l });
                }
            }
        }
    }
    out
}

fn relocate_sites(g: &Graph) -> Vec<RewriteSite> {
    let mut out = Vec::new();
    for glue in g.vertices() {
        // one root (smallest neighbor) per branch at glue
        let mut roots: Vec<Vertex> = Vec::new();
        let mut branch_of = vec![usize::MAX; g.order()];
        for x in g.neighbors(glue) {
            if branch_of[x] != usize::MAX {
                continue;
            }
            for y in g.component_of(x, Some(glue)).iter() {
                branch_of[y] = roots.len();
            }
            roots.push(x);
        }
        if roots.len() < 3 {
            continue;
        }
        for &p in &roots {
            if pendant_path(g, glue, p).is_none() {
                continue;
            }
            let others: Vec<Vertex> = roots.iter().copied().filter(|&r| r != p).collect();
            let t = others.len();
            if t <= 10 {
                for mask in 1u32..(1 << t) - 1 {
                    let h2 = (0..t).filter(|i| mask >> i & 1 == 1).map(|i| others[i]).collect();
                    out.push(RewriteSite::RelocatePath { glue, path_start: p, h2_roots: h2 });
                }
            } else {
                for &r in &others {
                    out.push(RewriteSite::RelocatePath { glue, path_start: p, h2_roots: vec![r] });
                }
            }
        }
    }
    out
}

fn block_sites(g: &Graph) -> Vec<RewriteSite> {
    let Ok(dec) = invariants::blocks(g) else {
        return Vec::new();
    };
    (0..dec.blocks.len())
        .filter(|&i| block_cycle_order(&dec, i).is_ok())
        .map(|block| RewriteSite::BlockToCycle { block })
        .collect()
}

fn merge_sites(g: &Graph) -> Vec<RewriteSite> {
    let Ok(dec) = invariants::blocks(g) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for &w in &dec.cut_vertices {
        if dec.blocks_of(w).len() < 3 {
            continue;
        }
        let entries: Vec<Vertex> = g
            .neighbors(w)
            .filter(|&x| pendant_cycle_walk(g, &dec, w, x).is_ok())
            .collect();
        for &a in &entries {
            for &b in &entries {
                let same = dec.blocks_of(a).iter().any(|i| dec.blocks[*i].binary_search(&b).is_ok());
                if a < b && !same {
                    out.push(RewriteSite::MergeCycles { w, a, b });
                }
            }
        }
    }
    out
}

fn balance_sites(g: &Graph) -> Vec<RewriteSite> {
    let Ok(dec) = invariants::blocks(g) else {
        return Vec::new();
    };
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    let is_path = g.order() >= 2 && g.edge_count() + 1 == g.order() && g.vertices().all(|v| g.degree(v) <= 2);
    if is_path {
        cliques.extend(g.edges().map(|(u, v)| vec![u, v]));
    } else {
        for (i, vs) in dec.blocks.iter().enumerate() {
            let r = vs.len();
            if r >= 3 && dec.block_edges(g, i).count() == r * (r - 1) / 2 {
                cliques.push(vs.clone());
            }
        }
    }
    let mut out = Vec::new();
    for clique in cliques {
        let Ok(paths) = clique_paths(g, &clique) else {
            continue;
        };
        let max = paths.iter().map(Vec::len).max().unwrap_or(0);
        for (k, pk) in paths.iter().enumerate() {
            for (j, pj) in paths.iter().enumerate() {
                if pk.len() == max && pj.len() + 2 <= pk.len() {
                    out.push(RewriteSite::BalancePaths { long: clique[k], short: clique[j], clique: clique.clone() });
                }
            }
        }
    }
    out
}

fn shrink_sites(g: &Graph) -> Vec<RewriteSite> {
    let mut out = Vec::new();
    for attach in g.vertices() {
        for tail in g.neighbors(attach) {
            if tadpole_labels(g, attach, tail).is_ok() {
                out.push(RewriteSite::ShrinkGirth { attach, tail });
            }
        }
    }
    out
}
