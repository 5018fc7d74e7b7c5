use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use total_ecc::enumerate::ClassConstraint;
use total_ecc::extremal::Objective;
use total_ecc::families::FamilySpec;
use total_ecc::transforms::RewriteKind;

#[derive(Debug, Parser)]
#[command(name = "totecc", version, about = "Total eccentricity index: invariants, families, rewrites and exhaustive checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write results to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    /// Allow n = 10 where exhaustive enumeration is involved (slow).
    #[arg(long, global = true)]
    pub allow_large: bool,

    /// Suppress progress messages on stderr.
    #[arg(long, short = 'q', global = true)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of graphs given as graph6 or as a family member.
    Eps(EpsArgs),
    /// Build a family member and print it as graph6.
    Family(FamilyArgs),
    /// List or apply rewrite sites on a graph.
    Rewrite(RewriteArgs),
    /// Count or list connected graphs on n vertices.
    Enumerate(EnumerateArgs),
    /// Extreme total eccentricity over a graph class.
    Search(SearchArgs),
    /// Check the extremal theorems exhaustively.
    Verify(VerifyArgs),
    /// Check the cut-vertex conjecture exhaustively.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph in graph6 (repeatable).
    #[arg(long = "graph6", short = 'g')]
    pub graph6: Vec<String>,

    /// Read graph6 strings, one per line, from stdin.
    #[arg(long)]
    pub stdin: bool,

    /// Read graph6 strings, one per line, from a file.
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EpsArgs {
    #[command(flatten)]
    pub input: GraphInput,

    /// Family member such as "dumbbell 3 3 7"; also reports the closed form.
    #[arg(long, short = 'f')]
    pub family: Vec<FamilySpec>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family tag: path, cycle, complete, star, double-broom, spider,
    /// double-spider, tadpole-l, tadpole-p, dumbbell, complete-with-paths,
    /// complete-with-pendants.
    pub tag: String,

    /// Integer parameters of the family.
    pub params: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct RewriteArgs {
    #[command(flatten)]
    pub input: GraphInput,

    /// Rewrite kind.
    #[arg(long, short = 'k')]
    pub kind: RewriteKind,

    /// Site anchors, comma separated, in the kind's anchor order.
    #[arg(long, short = 's', value_delimiter = ',', conflicts_with_all = ["list", "all"])]
    pub site: Option<Vec<usize>>,

    /// List the valid sites instead of applying one.
    #[arg(long, conflicts_with = "all")]
    pub list: bool,

    /// Apply every valid site, one result per site.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Vertex count or range such as 5..8.
    #[arg(short = 'n')]
    pub n: NRange,

    /// Class filter such as cut-count:2 or tree.
    #[arg(long, short = 'c', default_value = "all")]
    pub class: ClassConstraint,

    /// Print only the number of graphs.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short = 'n')]
    pub n: NRange,

    #[arg(long, short = 'c', default_value = "all")]
    pub class: ClassConstraint,

    #[arg(long, default_value = "max")]
    pub objective: Objective,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem: pendant-max, pendant-min, unicyclic, cut-min, cut-max, tree,
    /// or all.
    #[arg(long, short = 't', default_value = "all")]
    pub theorem: String,

    #[arg(short = 'n')]
    pub n: NRange,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(short = 'n')]
    pub n: NRange,
}

/// Inclusive range of vertex counts: `7`, `5..8`, `5..=8` or `5-8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex count `{t}`"));
        let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
            (num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once("..").or_else(|| s.split_once('-')) {
            (num(a)?, num(b)?)
        } else {
            let v = num(s)?;
            (v, v)
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}
