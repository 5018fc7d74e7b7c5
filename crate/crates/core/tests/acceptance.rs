//! Acceptance criteria 1 to 8, one line per criterion.
//!
//! Set `TOTECC_ACCEPT_N9=1` to extend the exhaustive criteria to n = 9.
//!
//! Two criteria fail on findings that are reproducible and checked against
//! independent code: they are listed in `KNOWN_FINDINGS`, printed as FAIL,
//! and do not change the exit status. Any other failure exits with status 1.

mod common;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use total_ecc::canon::canonical_graph6;
use total_ecc::enumerate::{connected_graphs, count_class, filter, ClassConstraint};
use total_ecc::extremal::{check_conjecture, Status, Theorem};
use total_ecc::invariants::{
    cut_vertices, cut_vertices_by_deletion, eccentricities, eccentricities_from_matrix, total_eccentricity,
    wiener_index,
};
use total_ecc::sampling::{random_connected, random_instance};
use total_ecc::transforms::{self, RewriteKind};
use total_ecc::{families, Graph};

/// Failures reproduced by exhaustive search and confirmed with an
/// independent implementation: `(criterion, failing instance)`.
const KNOWN_FINDINGS: &[(u8, &str)] = &[
    (5, "pendant-max n=5 k=0 uniqueness-fail"),
    (6, "conjecture n=8 s=2 conjecture-violated"),
    (6, "conjecture n=9 s=2 conjecture-violated"),
    (6, "conjecture n=9 s=3 conjecture-violated"),
];

struct Outcome {
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new(note: impl Into<String>) -> Self {
        Outcome {
            failures: Vec::new(),
            note: note.into(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn max_n() -> usize {
    match std::env::var("TOTECC_ACCEPT_N9") {
        Ok(v) if v == "1" => 9,
        _ => 8,
    }
}

fn example_one() -> Outcome {
    let mut o = Outcome::new("W and eps of the two five-vertex examples");
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    let g1 = Graph::from_edges(5, [(a, b), (b, c), (c, a), (a, d), (d, e), (e, c), (b, d)]).unwrap();
    let g2 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    for (name, g, want) in [("G1", &g1, (13, 10)), ("G2", &g2, (14, 9))] {
        let got = (wiener_index(g).unwrap(), total_eccentricity(g).unwrap());
        o.check(got == want, || format!("{name}: (W, eps) = {got:?}, expected {want:?}"));
    }
    o
}

fn formula_agreement() -> Outcome {
    let cases = common::formula_cases();
    let mut o = Outcome::new(format!("{} closed-form values against BFS, n <= 200", cases.len()));
    for c in &cases {
        let bfs = total_eccentricity(&c.spec.build().unwrap()).unwrap();
        o.check(bfs == c.value, || format!("{} on {}: formula {}, BFS {bfs}", c.formula, c.spec, c.value));
    }
    o
}

fn comparisons() -> Outcome {
    let mut o = Outcome::new("closed-form comparison inequalities and equality cases, n <= 200");
    o.failures = common::comparison_violations();
    o
}

fn rewrites() -> Outcome {
    const TRIALS: usize = 500;
    let mut o = Outcome::new(format!("{TRIALS} random applications of each of {} rewrites, n <= 12", RewriteKind::ALL.len()));
    let mut rng = StdRng::seed_from_u64(2024);
    for kind in RewriteKind::ALL {
        for _ in 0..TRIALS {
            let (g, site) = random_instance(&mut rng, kind, 12);
            let h = transforms::apply(&g, &site).unwrap();
            let (a, b) = (total_eccentricity(&g).unwrap(), total_eccentricity(&h).unwrap());
            o.check(kind.contract().holds(a, b), || {
                format!("{kind} at {site} on {}: {a} -> {b}", total_ecc::graph6::encode(&g))
            });
        }
    }
    o
}

fn theorems() -> Outcome {
    let top = max_n();
    let mut o = Outcome::new(format!("pendant, unicyclic, cut-vertex and tree verdicts for 3 <= n <= {top}"));
    let mut total = 0;
    for n in 3..=top {
        for t in Theorem::ALL {
            if n < t.min_order() {
                continue;
            }
            for v in t.verify(n).unwrap() {
                total += 1;
                if v.status != Status::Pass {
                    o.failures.push(format!("{} {} {}", v.theorem_id, v.instance, v.status));
                }
            }
        }
    }
    o.note = format!("{} ({total} verdicts)", o.note);
    o
}

fn conjecture() -> Outcome {
    let top = max_n();
    let mut o = Outcome::new(format!("cut-vertex conjecture for 5 <= n <= {top}, 2 <= s <= n-4"));
    for n in 5..=top {
        for v in check_conjecture(n).unwrap() {
            if v.status != Status::Pass {
                let obs = v.observed.as_ref().map_or(0, |r| r.value);
                eprintln!(
                    "    {} {}: observed {obs}, predicted {}, counterexamples {}",
                    v.theorem_id,
                    v.instance,
                    v.predicted_value.unwrap_or(0),
                    v.counterexamples.iter().map(|c| c.graph6.as_str()).collect::<Vec<_>>().join(" ")
                );
                o.failures.push(format!("{} {} {}", v.theorem_id, v.instance, v.status));
            }
        }
    }
    o
}

fn enumeration() -> Outcome {
    const CONNECTED: [u64; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
    const TREES: [u64; 8] = [1, 1, 1, 2, 3, 6, 11, 23];
    let mut o = Outcome::new("connected and tree counts for n <= 8, one-cut class on 4, paths");
    for n in 1..=8 {
        let c = count_class(n, ClassConstraint::All, false).unwrap();
        o.check(c == CONNECTED[n - 1], || format!("{c} connected graphs on {n}"));
        let t = count_class(n, ClassConstraint::Tree, false).unwrap();
        o.check(t == TREES[n - 1], || format!("{t} trees on {n}"));
    }
    let one_cut = filter(&connected_graphs(4).unwrap(), ClassConstraint::CutCount(1));
    let mut got: Vec<String> = one_cut.iter().map(canonical_graph6).collect();
    got.sort();
    let mut want =
        vec![canonical_graph6(&families::star(4).unwrap()), canonical_graph6(&families::tadpole_l(4, 3).unwrap())];
    want.sort();
    o.check(got == want, || format!("one-cut class on 4 is {got:?}"));
    o.check(one_cut.iter().all(|g| total_eccentricity(g).unwrap() == 7), || "one-cut class on 4 not all eps 7".into());
    for n in 2..=8 {
        let class = filter(&connected_graphs(n).unwrap(), ClassConstraint::CutCount(n - 2));
        let ok = class.len() == 1 && canonical_graph6(&class[0]) == canonical_graph6(&families::path(n).unwrap());
        o.check(ok, || format!("{} graphs with {} cut vertices on {n}", class.len(), n - 2));
    }
    o
}

fn cross_oracles() -> Outcome {
    let mut o = Outcome::new("");
    let mut count = 0;
    for n in 1..=7 {
        for g in connected_graphs(n).unwrap().iter() {
            count += 1;
            o.check(cut_vertices(g).unwrap() == cut_vertices_by_deletion(g).unwrap(), || {
                format!("cut vertices disagree on {}", total_ecc::graph6::encode(g))
            });
            o.check(eccentricities(g).unwrap() == eccentricities_from_matrix(g).unwrap(), || {
                format!("eccentricities disagree on {}", total_ecc::graph6::encode(g))
            });
        }
    }
    let mut rng = StdRng::seed_from_u64(8);
    for i in 0..2000 {
        let g = random_connected(&mut rng, 2 + i % 40, 0.1);
        o.check(eccentricities(&g).unwrap() == eccentricities_from_matrix(&g).unwrap(), || {
            format!("eccentricities disagree on {}", total_ecc::graph6::encode(&g))
        });
    }
    o.note = format!("DFS vs deletion cut vertices and BFS vs matrix eccentricities on {count} graphs (n <= 7) and 2000 random graphs");
    o
}

fn main() {
    let criteria: [(u8, fn() -> Outcome); 8] = [
        (1, example_one),
        (2, formula_agreement),
        (3, comparisons),
        (4, rewrites),
        (5, theorems),
        (6, conjecture),
        (7, enumeration),
        (8, cross_oracles),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        if o.failures.is_empty() {
            println!("criterion {id}: PASS  {} [{secs:.1}s]", o.note);
            continue;
        }
        failed += 1;
        let known = o.failures.iter().all(|f| KNOWN_FINDINGS.contains(&(id, f.as_str())));
        let tag = if known { "known finding" } else { "unexpected" };
        println!("criterion {id}: FAIL  {} [{secs:.1}s] ({tag}: {})", o.note, o.failures.join("; "));
        if !known {
            unexpected += 1;
        }
    }
    println!("acceptance: {} of 8 pass, {failed} fail, {unexpected} unexpected", 8 - failed);
    if unexpected > 0 {
        std::process::exit(1);
    }
}
