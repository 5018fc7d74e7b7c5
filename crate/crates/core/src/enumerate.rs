//! Isomorph-free generation of connected graphs by canonical augmentation,
//! and the graph classes used by the extremal searches.
//!
//! A connected graph on `n` vertices is produced from exactly one connected
//! parent on `n - 1` vertices: the one obtained by deleting its canonical
//! deletion vertex, the non-cut vertex of largest degree that comes last in
//! the canonical order. Each parent is extended by a new vertex joined to
//! every nonempty vertex subset, and a child is kept only when the new
//! vertex lies in the automorphism orbit of the child's canonical deletion
//! vertex. Children of one parent are deduplicated by canonical form.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::invariants::{self, Girth};

/// Largest order enumerated without opting in.
pub const DEFAULT_MAX_ORDER: usize = 9;
/// Largest order enumerated at all.
pub const OPT_IN_MAX_ORDER: usize = 10;

/// Graph class filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "kebab-case")]
pub enum ClassConstraint {
    All,
    /// Exactly `k` vertices of degree 1.
    PendantCount(usize),
    /// Exactly `s` cut vertices.
    CutCount(usize),
    Tree,
    /// Trees with exactly `k` leaves.
    TreeWithPendants(usize),
    /// Connected with exactly one cycle.
    Unicyclic,
    /// Unicyclic with the cycle of length `g`.
    UnicyclicGirth(usize),
}

impl ClassConstraint {
    /// Checks the parameter against the order `n`.
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            ClassConstraint::All | ClassConstraint::Tree | ClassConstraint::Unicyclic => true,
            ClassConstraint::PendantCount(k) | ClassConstraint::TreeWithPendants(k) => k <= n,
            ClassConstraint::CutCount(s) => s + 2 <= n.max(2),
            ClassConstraint::UnicyclicGirth(g) => (3..=n).contains(&g),
        };
        if ok {
            Ok(())
        } else {
            invalid(format!("class {self} is out of range for n = {n}"))
        }
    }

    pub fn matches(self, p: &Profile) -> bool {
        match self {
            ClassConstraint::All => true,
            ClassConstraint::PendantCount(k) => p.pendants == k,
            ClassConstraint::CutCount(s) => p.cuts == s,
            ClassConstraint::Tree => p.edges + 1 == p.order,
            ClassConstraint::TreeWithPendants(k) => p.edges + 1 == p.order && p.pendants == k,
            ClassConstraint::Unicyclic => p.edges == p.order,
            ClassConstraint::UnicyclicGirth(g) => p.edges == p.order && p.girth == Girth::Cycle(g as u32),
        }
    }

    fn tag(self) -> &'static str {
        match self {
            ClassConstraint::All => "all",
            ClassConstraint::PendantCount(_) => "pendant-count",
            ClassConstraint::CutCount(_) => "cut-count",
            ClassConstraint::Tree => "tree",
            ClassConstraint::TreeWithPendants(_) => "tree-with-pendants",
            ClassConstraint::Unicyclic => "unicyclic",
            ClassConstraint::UnicyclicGirth(_) => "unicyclic-girth",
        }
    }

    fn param(self) -> Option<usize> {
        match self {
            ClassConstraint::PendantCount(x)
            | ClassConstraint::CutCount(x)
            | ClassConstraint::TreeWithPendants(x)
            | ClassConstraint::UnicyclicGirth(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for ClassConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(x) => write!(f, "{}:{x}", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

/// Parses `all`, `tree`, `unicyclic`, or `<kind>:<k>` for the parameterized
/// classes (`pendant-count:2`, `cut-count:1`, `tree-with-pendants:3`,
/// `unicyclic-girth:4`).
impl FromStr for ClassConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, param) = match s.split_once([':', '=']) {
            Some((t, p)) => {
                let v = p
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameters(format!("bad class parameter in `{s}`")))?;
                (t.trim(), Some(v))
            }
            None => (s.trim(), None),
        };
        match (tag, param) {
            ("all", None) => Ok(ClassConstraint::All),
            ("tree", None) => Ok(ClassConstraint::Tree),
            ("unicyclic", None) => Ok(ClassConstraint::Unicyclic),
            ("pendant-count", Some(k)) => Ok(ClassConstraint::PendantCount(k)),
            ("cut-count", Some(k)) => Ok(ClassConstraint::CutCount(k)),
            ("tree-with-pendants", Some(k)) => Ok(ClassConstraint::TreeWithPendants(k)),
            ("unicyclic-girth", Some(k)) => Ok(ClassConstraint::UnicyclicGirth(k)),
            _ => invalid(format!("unknown class `{s}`")),
        }
    }
}

/// The invariants class membership depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub order: usize,
    pub edges: usize,
    pub pendants: usize,
    pub cuts: usize,
    pub girth: Girth,
}

impl Profile {
    pub fn of(g: &Graph) -> Result<Self> {
        Ok(Profile {
            order: g.order(),
            edges: g.edge_count(),
            pendants: invariants::pendant_vertices(g).len(),
            cuts: invariants::cut_vertices(g)?.len(),
            girth: invariants::girth(g)?,
        })
    }
}

fn check_order(n: usize, allow_large: bool) -> Result<()> {
    let max = if allow_large { OPT_IN_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    if (1..=max).contains(&n) {
        Ok(())
    } else if n == OPT_IN_MAX_ORDER {
        invalid(format!("n = {n} needs the explicit large-order opt-in"))
    } else {
        invalid(format!("exhaustive enumeration supports 1 <= n <= {max}, got {n}"))
    }
}

fn cache() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(Vec::new()))
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, for `1 <= n <= 9`, in a fixed order. Levels are cached.
pub fn connected_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_order(n, false)?;
    level(n)
}

fn level(n: usize) -> Result<Arc<Vec<Graph>>> {
    let mut levels = cache().lock().expect("cache lock");
    while levels.len() < n {
        let next: Vec<Graph> = match levels.last() {
            None => vec![Graph::empty(1)?],
            Some(parents) => parents.par_iter().map(children).collect::<Vec<_>>().into_iter().flatten().collect(),
        };
        levels.push(Arc::new(next));
    }
    Ok(Arc::clone(&levels[n - 1]))
}

/// Parallel fold over the connected graphs on `n` vertices without storing
/// the last level; `n = 10` requires `allow_large`. Each graph is passed in
/// canonical labeling. `fold` and `reduce` must not depend on visiting order.
pub fn fold_connected<T, F, R>(n: usize, allow_large: bool, identity: impl Fn() -> T + Sync + Send, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_order(n, allow_large)?;
    if n <= DEFAULT_MAX_ORDER {
        let all = level(n)?;
        return Ok(all.par_iter().fold(&identity, &fold).reduce(&identity, &reduce));
    }
    let parents = level(n - 1)?;
    Ok(parents
        .par_iter()
        .fold(&identity, |acc, p| children(p).iter().fold(acc, &fold))
        .reduce(&identity, &reduce))
}

/// Number of connected graphs on `n` vertices in class `c`.
pub fn count_class(n: usize, c: ClassConstraint, allow_large: bool) -> Result<u64> {
    c.validate(n)?;
    fold_connected(
        n,
        allow_large,
        || 0u64,
        |acc, g| acc + u64::from(c.matches(&Profile::of(g).expect("connected"))),
        |a, b| a + b,
    )
}

/// Members of `graphs` in class `c`, in their original order.
pub fn filter(graphs: &[Graph], c: ClassConstraint) -> Vec<Graph> {
    graphs
        .par_iter()
        .filter(|g| Profile::of(g).is_ok_and(|p| c.matches(&p)))
        .cloned()
        .collect()
}

/// Accepted children of `parent`, canonically labeled, in subset order.
fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let n = m + 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let mut b = parent.to_builder_with_order(n).expect("order within range");
        for i in 0..m {
            if mask >> i & 1 == 1 {
                b.add_edge(i, m).expect("new edge");
            }
        }
        let child = b.build();
        let cut = invariants::cut_vertices(&child).expect("connected");
        let mut is_cut = vec![false; n];
        cut.iter().for_each(|&v| is_cut[v] = true);
        let top = (0..n).filter(|&v| !is_cut[v]).map(|v| child.degree(v)).max().expect("non-cut vertex exists");
        if child.degree(m) != top {
            continue;
        }
        let lab = canon::canonical_labeling(&child);
        let pos = lab.positions();
        let w = (0..n)
            .filter(|&v| !is_cut[v] && child.degree(v) == top)
            .max_by_key(|&v| pos[v])
            .expect("new vertex qualifies");
        if w != m {
            let orb = lab.orbits();
            if orb[w] != orb[m] {
                continue;
            }
        }
        let form = lab.relabeled(&child);
        if seen.insert(form.clone()) {
            out.push(form);
        }
    }
    out
}

/// Reference enumeration: every one-vertex extension of every graph of the
/// previous level, deduplicated globally by canonical form and sorted by it.
/// Used to cross-check [`connected_graphs`] for small `n`.
pub fn connected_graphs_by_dedup(n: usize) -> Result<Vec<Graph>> {
    if !(1..=8).contains(&n) {
        return invalid(format!("reference enumeration supports 1 <= n <= 8, got {n}"));
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut forms: Vec<(String, Graph)> = level
            .par_iter()
            .flat_map_iter(|p| {
                (1u64..(1 << m)).map(move |mask| {
                    let mut b = p.to_builder_with_order(m + 1).expect("order within range");
                    for i in 0..m {
                        if mask >> i & 1 == 1 {
                            b.add_edge(i, m).expect("new edge");
                        }
                    }
                    let c = canon::canonical_graph(&b.build());
                    (crate::graph6::encode(&c), c)
                })
            })
            .collect();
        forms.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        forms.dedup_by(|a, b| a.0 == b.0);
        level = forms.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}
