#![allow(clippy::needless_range_loop)]
//! Oracles shared by the integration tests. Each one is written from scratch
//! here, without the library's BFS, canonical labeling or block code.

#![allow(dead_code)]

use total_ecc::families::FamilySpec;
use total_ecc::formulas;
use total_ecc::Graph;

const INF: u32 = u32::MAX / 2;

/// All-pairs distances by Floyd-Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn eps_oracle(g: &Graph) -> u64 {
    floyd(g).iter().map(|row| *row.iter().max().unwrap() as u64).sum()
}

pub fn wiener_oracle(g: &Graph) -> u64 {
    let d = floyd(g);
    let mut w = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            w += d[i][j] as u64;
        }
    }
    w
}

fn connected_without(g: &Graph, removed: usize) -> bool {
    let n = g.order();
    let Some(start) = (0..n).find(|&v| v != removed) else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if v != removed && !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| v == removed || seen[v])
}

pub fn connected(g: &Graph) -> bool {
    connected_without(g, usize::MAX)
}

/// Number of cut vertices by deleting each vertex in turn.
pub fn cut_count_oracle(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| !connected_without(g, v)).count()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_oracle(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(p[u], p[v])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Invariant used to bucket labeled graphs before the isomorphism oracle.
pub fn fingerprint(g: &Graph) -> (usize, Vec<usize>, Vec<Vec<u32>>) {
    let mut degs: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    let mut rows: Vec<Vec<u32>> = floyd(g)
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r
        })
        .collect();
    rows.sort();
    (g.edge_count(), degs, rows)
}

/// Isomorphism-class representatives of connected graphs on `n` vertices,
/// from all `2^(n(n-1)/2)` labeled graphs.
pub fn connected_classes_oracle(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut buckets: std::collections::HashMap<_, Vec<Graph>> = std::collections::HashMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if !connected(&g) {
            continue;
        }
        let reps = buckets.entry(fingerprint(&g)).or_default();
        if !reps.iter().any(|r| isomorphic_oracle(r, &g)) {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Orders up to 60, then every seventh order up to 200 (both parities),
/// plus 199 and 200.
pub fn sweep_orders(lo: usize) -> Vec<usize> {
    let mut ns: Vec<usize> = (lo..=60).collect();
    ns.extend((61..=200).step_by(7));
    ns.extend([199, 200]);
    ns.sort_unstable();
    ns.dedup();
    ns.retain(|&n| n >= lo);
    ns
}

/// A few values from `lo..=hi`: all of them when the range is short.
pub fn sample(lo: usize, hi: usize) -> Vec<usize> {
    if hi < lo {
        return Vec::new();
    }
    if hi - lo <= 12 {
        return (lo..=hi).collect();
    }
    let mut v: Vec<usize> = vec![lo, lo + 1, (lo + hi) / 2, (lo + hi) / 2 + 1, hi - 1, hi];
    v.extend((lo..=hi).step_by((hi - lo) / 5));
    v.sort_unstable();
    v.dedup();
    v
}

/// One closed-form check: formula name, family member and formula value.
pub struct Case {
    pub formula: &'static str,
    pub spec: FamilySpec,
    pub value: u64,
}

/// Every closed form paired with the family it describes, over the sweep.
pub fn formula_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let mut push = |formula, spec, value: total_ecc::Result<u64>| {
        out.push(Case {
            formula,
            spec,
            value: value.unwrap(),
        })
    };
    let u = |x: usize| x as u64;
    for n in sweep_orders(1) {
        push("eps_path", FamilySpec::Path(n), formulas::eps_path(u(n)));
        push("eps_complete", FamilySpec::Complete(n), formulas::eps_complete(u(n)));
        if n >= 2 {
            push("eps_star", FamilySpec::Star(n), formulas::eps_star(u(n)));
        }
        if n >= 3 {
            push("eps_cycle", FamilySpec::Cycle(n), formulas::eps_cycle(u(n)));
        }
        if n >= 4 {
            for k in sample(2, n - 2) {
                for l in sample(1, k - 1) {
                    push(
                        "eps_double_broom_max",
                        FamilySpec::DoubleBroom { l, m: k - l, d: n - k },
                        formulas::eps_double_broom_max(u(n), u(k)),
                    );
                }
            }
            push("eps_lollipop_max", FamilySpec::TadpoleL { n, g: n - 1 }, formulas::eps_lollipop_max(u(n)));
            for g in sample(3, n - 1) {
                push("eps_tadpole_p", FamilySpec::TadpoleP { n, g }, formulas::eps_tadpole_p(u(n), u(g)));
            }
        }
        if n >= 5 {
            push("eps_unicyclic_max", FamilySpec::TadpoleL { n, g: 3 }, formulas::eps_unicyclic_max(u(n)));
            for m2 in sample(3, n.div_ceil(2)) {
                let m1 = n + 1 - m2;
                push(
                    "eps_dumbbell_shared",
                    FamilySpec::Dumbbell { m1, m2, n },
                    formulas::eps_dumbbell_shared(u(m1), u(m2)),
                );
            }
        }
        if n >= 6 {
            push("eps_c33", FamilySpec::Dumbbell { m1: 3, m2: 3, n }, formulas::eps_c33(u(n)));
        }
        if n >= 2 {
            for s in sample(0, n - 2) {
                push(
                    "eps_kmn_balanced",
                    FamilySpec::CompleteWithPaths(total_ecc::families::balanced_lengths(n, s).unwrap()),
                    formulas::eps_kmn_balanced(u(n), u(s)),
                );
            }
        }
    }
    out
}

/// Violations of the comparison inequalities between closed forms, as
/// readable strings.
pub fn comparison_violations() -> Vec<String> {
    let mut bad = Vec::new();
    for n in 7..=200u64 {
        let c33 = formulas::eps_c33(n).unwrap();
        if c33 <= formulas::eps_cycle(n).unwrap() {
            bad.push(format!("c33({n}) <= cycle({n})"));
        }
        for m2 in 3..=n.div_ceil(2) {
            let m1 = n + 1 - m2;
            if (m1, m2) != (3, 3) && c33 <= formulas::eps_dumbbell_shared(m1, m2).unwrap() {
                bad.push(format!("c33({n}) <= dumbbell({m1},{m2})"));
            }
        }
    }
    for n in 5..=200u64 {
        let lolli = formulas::eps_lollipop_max(n).unwrap();
        for m2 in 3..=n.div_ceil(2) {
            let m1 = n + 1 - m2;
            let d = formulas::eps_dumbbell_shared(m1, m2).unwrap();
            let equal_expected = m1 % 2 == 0 && m2 == 3;
            if d > lolli || (d == lolli) != equal_expected {
                bad.push(format!("dumbbell({m1},{m2}) = {d} vs lollipop({n}) = {lolli}"));
            }
        }
    }
    for n in 5..=200u64 {
        for g in 3..=n - 2 {
            let (a, b) = (formulas::eps_tadpole_p(n, g).unwrap(), formulas::eps_tadpole_p(n, g + 1).unwrap());
            if a > b || (a == b) != (g % 2 == 0) {
                bad.push(format!("tadpole_p({n},{g}) = {a} vs tadpole_p({n},{}) = {b}", g + 1));
            }
        }
    }
    bad
}
