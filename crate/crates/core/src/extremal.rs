//! Exhaustive extremal search over graph classes and verdicts comparing the
//! observed extremes with predicted values and extremal graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon;
use crate::enumerate::{self, ClassConstraint, Profile};
use crate::error::{invalid, Error, Result};
use crate::families::{self, FamilySpec};
use crate::formulas;
use crate::graph::Graph;
use crate::graph6;
use crate::invariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            _ => invalid(format!("objective must be `min` or `max`, got `{s}`")),
        }
    }
}

/// One connected graph of the census with the data the searches use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    /// graph6 of the canonical labeling.
    pub graph6: String,
    pub eps: u64,
    pub profile: Profile,
}

impl Record {
    pub fn of(g: &Graph) -> Result<Self> {
        let c = canon::canonical_graph(g);
        Ok(Record {
            graph6: graph6::encode(&c),
            eps: invariants::total_eccentricity(&c)?,
            profile: Profile::of(&c)?,
        })
    }
}

/// Every connected graph on `n` vertices with its total eccentricity and
/// class profile.
#[derive(Debug)]
pub struct Census {
    pub n: usize,
    pub records: Vec<Record>,
}

impl Census {
    pub fn build(n: usize) -> Result<Self> {
        let graphs = enumerate::connected_graphs(n)?;
        // enumerated graphs are already canonically labeled
        let records = graphs
            .par_iter()
            .map(|g| -> Result<Record> {
                Ok(Record {
                    graph6: graph6::encode(g),
                    eps: invariants::total_eccentricity(g)?,
                    profile: Profile::of(g)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Census { n, records })
    }

    /// Shared census for `n`, built on first use.
    pub fn cached(n: usize) -> Result<Arc<Census>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Census>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(c) = cache.lock().expect("census lock").get(&n) {
            return Ok(Arc::clone(c));
        }
        let built = Arc::new(Census::build(n)?);
        Ok(Arc::clone(cache.lock().expect("census lock").entry(n).or_insert(built)))
    }

    pub fn class(&self, c: ClassConstraint) -> impl Iterator<Item = &Record> + '_ {
        self.records.iter().filter(move |r| c.matches(&r.profile))
    }
}

/// Extreme total eccentricity over a class, with every graph attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub constraint: ClassConstraint,
    pub objective: Objective,
    pub value: u64,
    /// Canonical graph6 strings, sorted.
    pub witnesses: Vec<String>,
    pub class_size: u64,
}

pub fn search(n: usize, constraint: ClassConstraint, objective: Objective) -> Result<ExtremalReport> {
    constraint.validate(n)?;
    let census = Census::cached(n)?;
    search_in(&census, constraint, objective)
}

/// [`search`] that also accepts `n = 10` when `allow_large` is set, folding
/// over the graphs without building a census.
pub fn search_streaming(n: usize, constraint: ClassConstraint, objective: Objective, allow_large: bool) -> Result<ExtremalReport> {
    constraint.validate(n)?;
    if n <= enumerate::DEFAULT_MAX_ORDER {
        return search(n, constraint, objective);
    }
    fold_search(n, constraint, objective, allow_large)
}

fn fold_search(n: usize, constraint: ClassConstraint, objective: Objective, allow_large: bool) -> Result<ExtremalReport> {
    type Acc = (Option<u64>, BTreeSet<String>, u64);
    let merge = |a: Acc, b: Acc| -> Acc {
        match (a.0, b.0) {
            (None, _) => (b.0, b.1, a.2 + b.2),
            (_, None) => (a.0, a.1, a.2 + b.2),
            (Some(x), Some(y)) if x == y => {
                let mut w = a.1;
                w.extend(b.1);
                (a.0, w, a.2 + b.2)
            }
            (Some(x), Some(y)) => {
                let a_wins = (objective == Objective::Max) == (x > y);
                if a_wins {
                    (a.0, a.1, a.2 + b.2)
                } else {
                    (b.0, b.1, a.2 + b.2)
                }
            }
        }
    };
    let (best, witnesses, size) = enumerate::fold_connected(
        n,
        allow_large,
        || (None, BTreeSet::new(), 0),
        |acc: Acc, g| {
            let p = Profile::of(g).expect("connected");
            if !constraint.matches(&p) {
                return acc;
            }
            let eps = invariants::total_eccentricity(g).expect("connected");
            merge(acc, (Some(eps), BTreeSet::from([graph6::encode(g)]), 1))
        },
        merge,
    )?;
    Ok(ExtremalReport {
        n,
        constraint,
        objective,
        value: best.ok_or(Error::EmptyClass)?,
        witnesses: witnesses.into_iter().collect(),
        class_size: size,
    })
}

pub fn search_in(census: &Census, constraint: ClassConstraint, objective: Objective) -> Result<ExtremalReport> {
    let mut best: Option<u64> = None;
    let mut witnesses = BTreeSet::new();
    let mut size = 0u64;
    for r in census.class(constraint) {
        size += 1;
        let better = match (best, objective) {
            (None, _) => true,
            (Some(b), Objective::Max) => r.eps > b,
            (Some(b), Objective::Min) => r.eps < b,
        };
        if better {
            best = Some(r.eps);
            witnesses.clear();
        }
        if best == Some(r.eps) {
            witnesses.insert(r.graph6.clone());
        }
    }
    let value = best.ok_or(Error::EmptyClass)?;
    Ok(ExtremalReport {
        n: census.n,
        constraint,
        objective,
        value,
        witnesses: witnesses.into_iter().collect(),
        class_size: size,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    UniquenessFail,
    ConjectureViolated,
    Skipped,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::UniquenessFail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::UniquenessFail => "uniqueness-fail",
            Status::ConjectureViolated => "conjecture-violated",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub n: usize,
    /// `k` for pendant and tree classes, `s` for cut-vertex classes.
    pub parameter: Option<String>,
    pub value: Option<usize>,
}

impl Instance {
    fn new(n: usize, name: &str, value: usize) -> Self {
        Instance {
            n,
            parameter: Some(name.into()),
            value: Some(value),
        }
    }

    fn plain(n: usize) -> Self {
        Instance {
            n,
            parameter: None,
            value: None,
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let (Some(p), Some(v)) = (&self.parameter, self.value) {
            write!(f, " {p}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedWitness {
    pub family: FamilySpec,
    pub graph6: String,
}

/// A graph with its main invariants, as reported for conjecture findings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub graph6: String,
    pub eps: u64,
    pub wiener: u64,
    pub edges: usize,
    pub pendants: usize,
    pub cut_vertices: usize,
    pub girth: invariants::Girth,
}

impl GraphSummary {
    pub fn of_graph6(s: &str) -> Result<Self> {
        let g = graph6::decode(s)?;
        let p = Profile::of(&g)?;
        Ok(GraphSummary {
            graph6: s.to_string(),
            eps: invariants::total_eccentricity(&g)?,
            wiener: invariants::wiener_index(&g)?,
            edges: p.edges,
            pendants: p.pendants,
            cut_vertices: p.cuts,
            girth: p.girth,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem_id: String,
    pub instance: Instance,
    pub predicted_value: Option<u64>,
    pub predicted_witnesses: Vec<PredictedWitness>,
    /// Whether the observed witnesses must be exactly the predicted ones.
    pub uniqueness_claimed: bool,
    pub observed: Option<ExtremalReport>,
    pub status: Status,
    pub detail: Option<String>,
    /// Graphs exceeding a conjectured bound.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<GraphSummary>,
}

/// What a theorem predicts for one class and objective.
struct Claim {
    id: &'static str,
    instance: Instance,
    constraint: ClassConstraint,
    objective: Objective,
    value: u64,
    witnesses: Vec<FamilySpec>,
    unique: bool,
}

fn witness(spec: FamilySpec) -> Result<PredictedWitness> {
    let g = spec.build()?;
    Ok(PredictedWitness {
        graph6: canon::canonical_graph6(&g),
        family: spec,
    })
}

fn eps_of(spec: &FamilySpec) -> Result<u64> {
    invariants::total_eccentricity(&spec.build()?)
}

fn judge(census: &Census, claim: Claim) -> Result<Verdict> {
    let mut predicted: Vec<PredictedWitness> = Vec::new();
    for spec in claim.witnesses {
        let w = witness(spec)?;
        if !predicted.iter().any(|p| p.graph6 == w.graph6) {
            predicted.push(w);
        }
    }
    let mut v = Verdict {
        theorem_id: claim.id.to_string(),
        instance: claim.instance,
        predicted_value: Some(claim.value),
        predicted_witnesses: predicted,
        uniqueness_claimed: claim.unique,
        observed: None,
        status: Status::Pass,
        detail: None,
        counterexamples: Vec::new(),
    };
    let report = match search_in(census, claim.constraint, claim.objective) {
        Ok(r) => r,
        Err(Error::EmptyClass) => {
            v.status = Status::Skipped;
            v.detail = Some(format!("class {} is empty", claim.constraint));
            return Ok(v);
        }
        Err(e) => return Err(e),
    };
    let missing: Vec<&str> = v
        .predicted_witnesses
        .iter()
        .filter(|p| report.witnesses.binary_search(&p.graph6).is_err())
        .map(|p| p.graph6.as_str())
        .collect();
    if report.value != claim.value {
        v.status = Status::Fail;
        v.detail = Some(format!("observed {} {}, predicted {}", claim.objective, report.value, claim.value));
    } else if !missing.is_empty() {
        v.status = Status::Fail;
        v.detail = Some(format!("predicted witnesses not extremal: {}", missing.join(" ")));
    } else if claim.unique && report.witnesses.len() != v.predicted_witnesses.len() {
        v.status = Status::UniquenessFail;
        let extra: Vec<&str> = report
            .witnesses
            .iter()
            .filter(|w| !v.predicted_witnesses.iter().any(|p| &p.graph6 == *w))
            .map(String::as_str)
            .collect();
        v.detail = Some(format!("additional extremal graphs: {}", extra.join(" ")));
    }
    v.observed = Some(report);
    Ok(v)
}

fn check_range(what: &str, n: usize, lo: usize) -> Result<()> {
    if (lo..=enumerate::DEFAULT_MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        invalid(format!("{what} is checked for {lo} <= n <= {}, got {n}", enumerate::DEFAULT_MAX_ORDER))
    }
}

/// Maximum over graphs with `k` pendant vertices, for every `0 <= k <= n-3`.
pub fn verify_pendant_max(n: usize) -> Result<Vec<Verdict>> {
    check_range("pendant-max", n, 3)?;
    let census = Census::cached(n)?;
    let un = n as u64;
    (0..=n - 3)
        .map(|k| {
            let inst = Instance::new(n, "k", k);
            let constraint = ClassConstraint::PendantCount(k);
            let claim = match k {
                0 if n >= 7 => Claim {
                    id: "pendant-max",
                    instance: inst,
                    constraint,
                    objective: Objective::Max,
                    value: formulas::eps_c33(un)?,
                    witnesses: vec![FamilySpec::Dumbbell { m1: 3, m2: 3, n }],
                    unique: true,
                },
                0 => Claim {
                    id: "pendant-max",
                    instance: inst,
                    constraint,
                    objective: Objective::Max,
                    value: formulas::eps_cycle(un)?,
                    witnesses: vec![FamilySpec::Cycle(n)],
                    unique: true,
                },
                1 => {
                    let spec = FamilySpec::TadpoleL { n, g: 3 };
                    let value = if n >= 5 { formulas::eps_unicyclic_max(un)? } else { eps_of(&spec)? };
                    Claim {
                        id: "pendant-max",
                        instance: inst,
                        constraint,
                        objective: Objective::Max,
                        value,
                        witnesses: vec![spec],
                        unique: true,
                    }
                }
                _ => Claim {
                    id: "pendant-max",
                    instance: inst,
                    constraint,
                    objective: Objective::Max,
                    value: formulas::eps_double_broom_max(un, k as u64)?,
                    witnesses: (1..k).map(|l| FamilySpec::DoubleBroom { l, m: k - l, d: n - k }).collect(),
                    unique: false,
                },
            };
            judge(&census, claim)
        })
        .collect()
}

/// Minimum over graphs with `k` pendant vertices, for every `0 <= k <= n-3`.
pub fn verify_pendant_min(n: usize) -> Result<Vec<Verdict>> {
    check_range("pendant-min", n, 3)?;
    let census = Census::cached(n)?;
    (0..=n - 3)
        .map(|k| {
            let claim = if k == 0 {
                Claim {
                    id: "pendant-min",
                    instance: Instance::new(n, "k", 0),
                    constraint: ClassConstraint::PendantCount(0),
                    objective: Objective::Min,
                    value: formulas::eps_complete(n as u64)?,
                    witnesses: vec![FamilySpec::Complete(n)],
                    unique: true,
                }
            } else {
                Claim {
                    id: "pendant-min",
                    instance: Instance::new(n, "k", k),
                    constraint: ClassConstraint::PendantCount(k),
                    objective: Objective::Min,
                    value: 2 * n as u64 - 1,
                    witnesses: vec![FamilySpec::CompleteWithPendants { n, k }],
                    unique: false,
                }
            };
            judge(&census, claim)
        })
        .collect()
}

/// Minimum and maximum over unicyclic graphs; two verdicts.
pub fn verify_unicyclic(n: usize) -> Result<Vec<Verdict>> {
    check_range("unicyclic", n, 5)?;
    let census = Census::cached(n)?;
    let un = n as u64;
    let claims = [
        Claim {
            id: "unicyclic-min",
            instance: Instance::plain(n),
            constraint: ClassConstraint::Unicyclic,
            objective: Objective::Min,
            value: 2 * un - 1,
            witnesses: vec![FamilySpec::TadpoleP { n, g: 3 }],
            unique: true,
        },
        Claim {
            id: "unicyclic-max",
            instance: Instance::plain(n),
            constraint: ClassConstraint::Unicyclic,
            objective: Objective::Max,
            value: formulas::eps_unicyclic_max(un)?,
            witnesses: vec![FamilySpec::TadpoleL { n, g: 3 }],
            unique: true,
        },
    ];
    claims.into_iter().map(|c| judge(&census, c)).collect()
}

/// Minimum over graphs with `s` cut vertices, for every `0 <= s <= n-2`.
pub fn verify_cut_min(n: usize) -> Result<Vec<Verdict>> {
    check_range("cut-min", n, 3)?;
    let census = Census::cached(n)?;
    (0..=n - 2)
        .map(|s| {
            let claim = Claim {
                id: "cut-min",
                instance: Instance::new(n, "s", s),
                constraint: ClassConstraint::CutCount(s),
                objective: Objective::Min,
                value: formulas::eps_kmn_balanced(n as u64, s as u64)?,
                witnesses: vec![FamilySpec::CompleteWithPaths(families::balanced_lengths(n, s)?)],
                unique: false,
            };
            judge(&census, claim)
        })
        .collect()
}

/// Maximum over graphs with `s` cut vertices for `s` in `{0, 1, n-3, n-2}`.
pub fn verify_cut_max(n: usize) -> Result<Vec<Verdict>> {
    check_range("cut-max", n, 3)?;
    let census = Census::cached(n)?;
    let un = n as u64;
    let mut ss: Vec<usize> = vec![0, 1, n - 3, n - 2];
    ss.sort_unstable();
    ss.dedup();
    ss.into_iter()
        .map(|s| {
            let inst = Instance::new(n, "s", s);
            let constraint = ClassConstraint::CutCount(s);
            let (value, witnesses, unique) = if s == n - 2 {
                (formulas::eps_path(un)?, vec![FamilySpec::Path(n)], true)
            } else if s == 0 {
                (formulas::eps_cycle(un)?, vec![FamilySpec::Cycle(n)], false)
            } else if s == 1 && n == 4 {
                // the class is exactly {K_{1,3}, U^l_{4,3}}, both with value 7
                let paw = FamilySpec::TadpoleL { n: 4, g: 3 };
                (eps_of(&paw)?, vec![FamilySpec::Star(4), paw], true)
            } else if s == 1 {
                (formulas::eps_lollipop_max(un)?, vec![FamilySpec::TadpoleL { n, g: n - 1 }], false)
            } else {
                (formulas::eps_unicyclic_max(un)?, vec![FamilySpec::TadpoleL { n, g: 3 }], false)
            };
            judge(
                &census,
                Claim {
                    id: "cut-max",
                    instance: inst,
                    constraint,
                    objective: Objective::Max,
                    value,
                    witnesses,
                    unique,
                },
            )
        })
        .collect()
}

/// Maximum and minimum over trees with `k` leaves, for every `2 <= k <= n-1`.
pub fn verify_tree_theorems(n: usize) -> Result<Vec<Verdict>> {
    check_range("tree", n, 4)?;
    let census = Census::cached(n)?;
    let mut out = Vec::new();
    for k in 2..n {
        let constraint = ClassConstraint::TreeWithPendants(k);
        let brooms: Vec<FamilySpec> = (1..k).map(|l| FamilySpec::DoubleBroom { l, m: k - l, d: n - k }).collect();
        let values = brooms.iter().map(eps_of).collect::<Result<BTreeSet<u64>>>()?;
        let mut max = judge(
            &census,
            Claim {
                id: "tree-max",
                instance: Instance::new(n, "k", k),
                constraint,
                objective: Objective::Max,
                value: *values.iter().next_back().expect("k >= 2"),
                witnesses: brooms,
                unique: false,
            },
        )?;
        if values.len() > 1 {
            max.status = Status::Fail;
            max.detail = Some(format!("double brooms disagree: {values:?}"));
        }
        out.push(max);
        let spiders: Vec<FamilySpec> = if (n - 2).is_multiple_of(k) && k < n - 1 {
            (1..k).map(|t| FamilySpec::DoubleSpider { n, k, t }).collect()
        } else {
            vec![FamilySpec::SpiderBalanced { n, k }]
        };
        let values = spiders.iter().map(eps_of).collect::<Result<BTreeSet<u64>>>()?;
        let mut min = judge(
            &census,
            Claim {
                id: "tree-min",
                instance: Instance::new(n, "k", k),
                constraint,
                objective: Objective::Min,
                value: *values.iter().next().expect("nonempty"),
                witnesses: spiders,
                unique: false,
            },
        )?;
        if values.len() > 1 {
            min.status = Status::Fail;
            min.detail = Some(format!("predicted minimizers disagree: {values:?}"));
        }
        out.push(min);
    }
    Ok(out)
}

/// Compares the maximum over graphs with `s` cut vertices with the tadpole
/// `U^l_{n,n-s}`, for every `2 <= s <= n-4`. A larger observed maximum is
/// reported as [`Status::ConjectureViolated`] with the offending graphs.
pub fn check_conjecture(n: usize) -> Result<Vec<Verdict>> {
    check_range("conjecture", n, 5)?;
    let census = Census::cached(n)?;
    (2..=n.saturating_sub(4))
        .map(|s| {
            let spec = FamilySpec::TadpoleL { n, g: n - s };
            let predicted = eps_of(&spec)?;
            let mut v = judge(
                &census,
                Claim {
                    id: "conjecture",
                    instance: Instance::new(n, "s", s),
                    constraint: ClassConstraint::CutCount(s),
                    objective: Objective::Max,
                    value: predicted,
                    witnesses: vec![spec],
                    unique: false,
                },
            )?;
            if let Some(obs) = &v.observed {
                if obs.value > predicted {
                    v.status = Status::ConjectureViolated;
                    v.counterexamples = obs
                        .witnesses
                        .iter()
                        .map(|w| GraphSummary::of_graph6(w))
                        .collect::<Result<_>>()?;
                }
            }
            Ok(v)
        })
        .collect()
}

/// Named groups of verdicts, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    PendantMax,
    PendantMin,
    Unicyclic,
    CutMin,
    CutMax,
    Tree,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::PendantMax,
        Theorem::PendantMin,
        Theorem::Unicyclic,
        Theorem::CutMin,
        Theorem::CutMax,
        Theorem::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::PendantMax => "pendant-max",
            Theorem::PendantMin => "pendant-min",
            Theorem::Unicyclic => "unicyclic",
            Theorem::CutMin => "cut-min",
            Theorem::CutMax => "cut-max",
            Theorem::Tree => "tree",
        }
    }

    /// Smallest order the verification is defined for.
    pub fn min_order(self) -> usize {
        match self {
            Theorem::Unicyclic => 5,
            Theorem::Tree => 4,
            _ => 3,
        }
    }

    pub fn verify(self, n: usize) -> Result<Vec<Verdict>> {
        match self {
            Theorem::PendantMax => verify_pendant_max(n),
            Theorem::PendantMin => verify_pendant_min(n),
            Theorem::Unicyclic => verify_unicyclic(n),
            Theorem::CutMin => verify_cut_min(n),
            Theorem::CutMax => verify_cut_max(n),
            Theorem::Tree => verify_tree_theorems(n),
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown theorem `{s}`")))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
