use std::fs;
use std::io::{self, BufRead};

use serde::Serialize;
use total_ecc::enumerate::{self, ClassConstraint, Profile};
use total_ecc::extremal::{self, Status, Theorem, Verdict};
use total_ecc::families::FamilySpec;
use total_ecc::formulas::closed_form;
use total_ecc::invariants;
use total_ecc::transforms::{self, Contract, RewriteSite};
use total_ecc::{graph6, Graph};

use crate::args::*;
use crate::output::Report;

/// Failure that maps to an exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input: status 2.
    Usage(String),
    /// A checked claim did not hold: status 1, after printing the report.
    Verification(Report),
}

impl From<total_ecc::Error> for Failure {
    fn from(e: total_ecc::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

pub struct Ctx {
    pub allow_large: bool,
    pub quiet: bool,
}

impl Ctx {
    fn progress(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("totecc: {}", msg.as_ref());
        }
    }
}

fn read_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    let mut lines: Vec<String> = input.graph6.clone();
    let mut read = |r: &mut dyn BufRead| -> Result<(), Failure> {
        for line in r.lines() {
            let line = line.map_err(|e| Failure::Usage(format!("reading input: {e}")))?;
            let t = line.trim();
            if !t.is_empty() {
                lines.push(t.to_string());
            }
        }
        Ok(())
    };
    if input.stdin {
        read(&mut io::stdin().lock())?;
    }
    if let Some(path) = &input.input {
        let f = fs::File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        read(&mut io::BufReader::new(f))?;
    }
    lines
        .into_iter()
        .map(|s| {
            let g = graph6::decode(&s).map_err(|e| Failure::Usage(format!("`{s}`: {e}")))?;
            Ok((s, g))
        })
        .collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

#[derive(Serialize)]
struct EpsResult {
    graph6: String,
    n: usize,
    edges: usize,
    eps: u64,
    wiener: u64,
    average_eccentricity: String,
    radius: u32,
    diameter: u32,
    pendants: usize,
    cut_vertices: usize,
    girth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<FamilySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_agrees: Option<bool>,
}

fn eps_result(g: &Graph, graph6: String, family: Option<FamilySpec>) -> Result<EpsResult, Failure> {
    let p = Profile::of(g)?;
    let eps = invariants::total_eccentricity(g)?;
    let form = family.as_ref().and_then(closed_form);
    Ok(EpsResult {
        graph6,
        n: p.order,
        edges: p.edges,
        eps,
        wiener: invariants::wiener_index(g)?,
        average_eccentricity: invariants::average_eccentricity(g)?.to_string(),
        radius: invariants::radius(g)?,
        diameter: invariants::diameter(g)?,
        pendants: p.pendants,
        cut_vertices: p.cuts,
        girth: p.girth.length(),
        formula: form.map(|(f, _)| f.name()),
        formula_value: form.map(|(_, v)| v),
        formula_agrees: form.map(|(_, v)| v == eps),
        family,
    })
}

pub fn eps(args: &EpsArgs) -> Outcome {
    let mut rep = Report::new(
        "eps",
        &["graph6", "n", "m", "eps", "W", "avg_ecc", "rad", "diam", "pendants", "cuts", "girth", "family", "formula", "agrees"],
    );
    let mut items: Vec<EpsResult> = Vec::new();
    for (s, g) in read_graphs(&args.input)? {
        items.push(eps_result(&g, s, None)?);
    }
    for spec in &args.family {
        let g = spec.build()?;
        items.push(eps_result(&g, graph6::encode(&g), Some(spec.clone()))?);
    }
    if items.is_empty() {
        return Err(Failure::Usage("no input graphs: use --graph6, --stdin, --input or --family".into()));
    }
    let mut mismatch = false;
    for r in &items {
        mismatch |= r.formula_agrees == Some(false);
        rep.push(
            r,
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.edges.to_string(),
                r.eps.to_string(),
                r.wiener.to_string(),
                r.average_eccentricity.clone(),
                r.radius.to_string(),
                r.diameter.to_string(),
                r.pendants.to_string(),
                r.cut_vertices.to_string(),
                opt(r.girth),
                opt(r.family.as_ref()),
                match (r.formula, r.formula_value) {
                    (Some(f), Some(v)) => format!("{f}={v}"),
                    _ => "-".into(),
                },
                opt(r.formula_agrees),
            ],
        );
    }
    if mismatch {
        Err(Failure::Verification(rep))
    } else {
        Ok(rep)
    }
}

#[derive(Serialize)]
struct FamilyResult {
    family: FamilySpec,
    graph6: String,
    n: usize,
    edges: usize,
    eps: u64,
}

pub fn family(args: &FamilyArgs) -> Outcome {
    let spec = FamilySpec::from_parts(&args.tag, &args.params)?;
    let g = spec.build()?;
    let r = FamilyResult {
        graph6: graph6::encode(&g),
        n: g.order(),
        edges: g.edge_count(),
        eps: invariants::total_eccentricity(&g)?,
        family: spec,
    };
    let mut rep = Report::new("family", &["family", "graph6", "n", "m", "eps"]);
    rep.plain = Some(vec![r.graph6.clone()]);
    rep.push(
        &r,
        vec![r.family.to_string(), r.graph6.clone(), r.n.to_string(), r.edges.to_string(), r.eps.to_string()],
    );
    Ok(rep)
}

#[derive(Serialize)]
struct SiteResult<'a> {
    graph6: &'a str,
    site: &'a RewriteSite,
    anchors: Vec<usize>,
}

#[derive(Serialize)]
struct RewriteResult<'a> {
    site: &'a RewriteSite,
    before: &'a str,
    after: String,
    eps_before: u64,
    eps_after: u64,
    delta: i64,
    contract: Contract,
    contract_holds: bool,
}

pub fn rewrite(args: &RewriteArgs) -> Outcome {
    let graphs = read_graphs(&args.input)?;
    if graphs.is_empty() {
        return Err(Failure::Usage("no input graph: use --graph6, --stdin or --input".into()));
    }
    if args.list {
        let mut rep = Report::new("rewrite", &["graph6", "site"]);
        for (s, g) in &graphs {
            for site in transforms::sites(g, args.kind) {
                let r = SiteResult {
                    graph6: s,
                    site: &site,
                    anchors: site.anchors(),
                };
                rep.push(&r, vec![s.clone(), site.to_string()]);
            }
        }
        return Ok(rep);
    }
    let mut rep = Report::new("rewrite", &["site", "before", "after", "eps_before", "eps_after", "delta", "contract", "holds"]);
    let mut violated = false;
    for (s, g) in &graphs {
        let sites = match &args.site {
            Some(a) => vec![RewriteSite::from_anchors(args.kind, a)?],
            None if args.all => transforms::sites(g, args.kind),
            None => {
                return Err(Failure::Usage(format!(
                    "give --site ({}), --list or --all",
                    args.kind.anchor_layout()
                )))
            }
        };
        for site in &sites {
            let a = transforms::apply_measured(g, site)?;
            let r = RewriteResult {
                site,
                before: s,
                after: graph6::encode(&a.after),
                eps_before: a.eps_before,
                eps_after: a.eps_after,
                delta: a.eps_after as i64 - a.eps_before as i64,
                contract: a.contract,
                contract_holds: a.contract_holds(),
            };
            violated |= !r.contract_holds;
            rep.push(
                &r,
                vec![
                    site.to_string(),
                    s.clone(),
                    r.after.clone(),
                    r.eps_before.to_string(),
                    r.eps_after.to_string(),
                    format!("{:+}", r.delta),
                    format!("after {} before", r.contract.symbol()),
                    r.contract_holds.to_string(),
                ],
            );
        }
    }
    if violated {
        Err(Failure::Verification(rep))
    } else {
        Ok(rep)
    }
}

#[derive(Serialize)]
struct CountResult {
    n: usize,
    class: ClassConstraint,
    count: u64,
}

#[derive(Serialize)]
struct GraphResult {
    n: usize,
    graph6: String,
    eps: u64,
}

pub fn enumerate(args: &EnumerateArgs, ctx: &Ctx) -> Outcome {
    if args.count {
        let mut rep = Report::new("enumerate", &["n", "class", "count"]);
        for n in args.n.iter() {
            ctx.progress(format!("counting {} on n={n}", args.class));
            let count = enumerate::count_class(n, args.class, ctx.allow_large)?;
            let r = CountResult { n, class: args.class, count };
            rep.push(&r, vec![n.to_string(), args.class.to_string(), count.to_string()]);
        }
        return Ok(rep);
    }
    let mut rep = Report::new("enumerate", &["n", "graph6", "eps"]);
    let mut plain = Vec::new();
    for n in args.n.iter() {
        args.class.validate(n)?;
        if n > enumerate::DEFAULT_MAX_ORDER {
            return Err(Failure::Usage(format!("listing supports n <= {}; use --count", enumerate::DEFAULT_MAX_ORDER)));
        }
        ctx.progress(format!("enumerating n={n}"));
        for g in enumerate::filter(&enumerate::connected_graphs(n)?, args.class) {
            let r = GraphResult {
                n,
                graph6: graph6::encode(&g),
                eps: invariants::total_eccentricity(&g)?,
            };
            plain.push(r.graph6.clone());
            rep.push(&r, vec![n.to_string(), r.graph6.clone(), r.eps.to_string()]);
        }
    }
    rep.plain = Some(plain);
    Ok(rep)
}

pub fn search(args: &SearchArgs, ctx: &Ctx) -> Outcome {
    let mut rep = Report::new("search", &["n", "class", "objective", "value", "class_size", "witnesses"]);
    for n in args.n.iter() {
        ctx.progress(format!("searching {} {} on n={n}", args.objective, args.class));
        let r = match extremal::search_streaming(n, args.class, args.objective, ctx.allow_large) {
            Err(total_ecc::Error::EmptyClass) => {
                ctx.progress(format!("class {} is empty on n={n}", args.class));
                continue;
            }
            other => other?,
        };
        rep.push(
            &r,
            vec![
                n.to_string(),
                r.constraint.to_string(),
                r.objective.to_string(),
                r.value.to_string(),
                r.class_size.to_string(),
                r.witnesses.join(" "),
            ],
        );
    }
    Ok(rep)
}

#[derive(Serialize)]
struct VerdictGroup<'a> {
    theorem: &'a str,
    n: usize,
    verdicts: Vec<Verdict>,
}

const VERDICT_COLUMNS: [&str; 7] = ["theorem", "instance", "predicted", "observed", "extremal", "status", "detail"];

fn verdict_row(v: &Verdict) -> Vec<String> {
    vec![
        v.theorem_id.clone(),
        v.instance.to_string(),
        opt(v.predicted_value),
        opt(v.observed.as_ref().map(|r| r.value)),
        opt(v.observed.as_ref().map(|r| r.witnesses.len())),
        v.status.to_string(),
        v.detail.clone().unwrap_or_default(),
    ]
}

fn check_verify_range(r: NRange, lo: usize) -> Result<(), Failure> {
    let hi = enumerate::DEFAULT_MAX_ORDER;
    if r.hi > hi {
        return Err(Failure::Usage(format!("exhaustive verification supports n <= {hi}")));
    }
    if r.lo < lo {
        return Err(Failure::Usage(format!("verification needs n >= {lo}")));
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, ctx: &Ctx) -> Outcome {
    let theorems: Vec<Theorem> = if args.theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![args.theorem.parse::<Theorem>()?]
    };
    let lo = theorems.iter().map(|t| t.min_order()).min().unwrap_or(3);
    check_verify_range(args.n, lo)?;
    let mut rep = Report::new("verify", &VERDICT_COLUMNS);
    let mut failed = 0;
    for t in theorems {
        for n in args.n.iter().filter(|&n| n >= t.min_order()) {
            ctx.progress(format!("verifying {t} on n={n}"));
            let verdicts = t.verify(n)?;
            for v in &verdicts {
                failed += usize::from(v.status.is_failure());
                rep.push_row(verdict_row(v));
            }
            rep.push_result(&VerdictGroup {
                theorem: t.name(),
                n,
                verdicts,
            });
        }
    }
    if failed > 0 {
        ctx.progress(format!("{failed} verdict(s) failed"));
        Err(Failure::Verification(rep))
    } else {
        Ok(rep)
    }
}

pub fn conjecture(args: &ConjectureArgs, ctx: &Ctx) -> Outcome {
    check_verify_range(args.n, 5)?;
    let mut rep = Report::new("conjecture", &VERDICT_COLUMNS);
    for n in args.n.iter() {
        ctx.progress(format!("checking the conjecture on n={n}"));
        let verdicts = extremal::check_conjecture(n)?;
        for v in &verdicts {
            if v.status == Status::ConjectureViolated {
                // findings are reported but do not affect the exit status
                eprintln!(
                    "totecc: conjecture refuted at {}: max {} exceeds {} ({} graph(s): {})",
                    v.instance,
                    opt(v.observed.as_ref().map(|r| r.value)),
                    opt(v.predicted_value),
                    v.counterexamples.len(),
                    v.counterexamples.iter().map(|c| c.graph6.as_str()).collect::<Vec<_>>().join(" ")
                );
            }
            rep.push_row(verdict_row(v));
        }
        rep.push_result(&VerdictGroup {
            theorem: "conjecture",
            n,
            verdicts,
        });
    }
    Ok(rep)
}
