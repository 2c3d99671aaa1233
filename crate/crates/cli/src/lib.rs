//! Command-line front end: `compute`, `analyze`, `product`, `verify` and
//! `generate`.
//!
//! Every JSON report is one object per line and carries the run seed. Exit
//! status is 0 on success, 2 when a verification reports `MISMATCH` or
//! `VIOLATED`, and 1 on usage, I/O or parse errors.

pub mod family;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use edim::io::{read_edge_list, read_graph6, write_edge_list, write_graph6};
use edim::products::{complete_multipartite, corona, join, lexicographic};
use edim::solver::{edim_exact_with, edim_greedy_upper, EdimResult, Method, SolverOptions};
use edim::structure::{
    edge_twin_partition, in_class_g, satellites, total_domination_number, tree_stats,
    twin_deletion, twin_partition, TotalDomination, TreeStats, DEFAULT_GAMMA_T_CAP,
};
use edim::theorems::{
    corpus, lex_reference_corpus, verify, TheoremId, TheoremReport, Verdict, VerifyOptions,
};
use edim::Graph;
use serde::Serialize;
use thiserror::Error;

use family::{expand_all, parse_family, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED_CHECK: i32 = 2;

const SPEC_HELP: &str = "\
Graph specs:
  P4, path(4)             path 0-1-2-3
  C5, cycle(5)            cycle, at least 3 vertices
  K4, complete(4)         complete graph
  N3, empty(3)            edgeless graph
  S4, star(4)             star with center 0 and 4 leaves
  paw                     triangle 0-1-2 with pendant 3 on 2
  K(2,3), multipartite(2,3)
                          complete multipartite, parts in consecutive ranges
  gnp(6,0.5,seed=7)       seeded G(n,p)
  P3+K1                   disjoint union, later terms shifted up
  graphs(n), connected(n), trees(n)
                          every graph of order n up to isomorphism
                          (generate and compute only)

Environment:
  EDIM_THREADS            worker threads for verify";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "edim",
    version,
    about = "Edge metric dimension of graphs and graph products"
)]
#[command(after_help = SPEC_HELP)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Compute the edge metric dimension and a basis.
    Compute(ComputeArgs),
    /// Report twin classes, twin edges, total domination and tree statistics.
    Analyze(AnalyzeArgs),
    /// Build a join, lexicographic, corona or complete multipartite graph.
    Product(ProductArgs),
    /// Check a closed-form result against the exact solver.
    Verify(VerifyArgs),
    /// Write the graphs a spec denotes.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct InputArgs {
    /// Inline graph spec, e.g. P4 or K(2,3).
    #[arg(conflicts_with = "input")]
    pub spec: Option<String>,
    /// Graph file, or - for stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Input format; inferred from a .g6 extension, edge list otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct OutputArgs {
    /// One JSON object per line.
    #[arg(long)]
    pub json: bool,
    /// Recorded in every JSON report; drives all randomness.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Also list minimum bases, up to this many.
    #[arg(long, value_name = "CAP", conflicts_with = "greedy_only")]
    pub all_bases: Option<usize>,
    /// Only run the greedy upper bound.
    #[arg(long)]
    pub greedy_only: bool,
    /// Budget for the exact search; past it the greedy bound is reported.
    #[arg(long, default_value_t = 60_000)]
    pub time_budget_ms: u64,
    /// Leave out elapsed_ms so output is reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Largest total dominating set size searched.
    #[arg(long, default_value_t = DEFAULT_GAMMA_T_CAP)]
    pub gamma_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Join,
    Lex,
    Corona,
    Multipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ProductArgs {
    pub kind: ProductKind,
    /// Two graph specs, or the part sizes for multipartite.
    #[arg(required = true, num_args = 1..)]
    pub operands: Vec<String>,
    /// Output file, or - for stdout.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: TheoremId,
    /// Largest instance order in the exhaustive corpus.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Number of seeded random instances appended to the corpus.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// For lex and satellite: use the small reference corpus of first
    /// factors instead of every graph, with --max-n bounding |V(G)||V(H)|.
    #[arg(long)]
    pub reference_corpus: bool,
    /// Basis enumeration cap for the satellite check.
    #[arg(long, default_value_t = 100_000)]
    pub cap: usize,
    #[arg(long, default_value_t = 60_000)]
    pub time_budget_ms: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct GenerateArgs {
    pub spec: String,
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

/// Parses arguments, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    RunConfig::try_parse_from(argv)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Graph(#[from] edim::Error),
    #[error("{0}")]
    Usage(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Runs a parsed command against stdout and stderr.
pub fn run(config: &RunConfig) -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(config, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs a parsed command; reports go to `out`, errors to `err`.
pub fn run_with(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "edim: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    match &config.command {
        Command::Compute(args) => compute(args, out)?,
        Command::Analyze(args) => analyze(args, out)?,
        Command::Product(args) => product(args, out)?,
        Command::Verify(args) => return run_verify(args, out),
        Command::Generate(args) => generate(args, out)?,
    }
    Ok(EXIT_OK)
}

fn read_input(args: &InputArgs) -> Result<Vec<Graph>, CliError> {
    if let Some(spec) = &args.spec {
        return Ok(expand_all(&parse_family(spec)?));
    }
    let Some(path) = &args.input else {
        return Err(CliError::Usage(
            "give a graph spec or --input <path>".into(),
        ));
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err(path))?
    };
    let format = args.format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "g6") {
            Format::Graph6
        } else {
            Format::Edgelist
        }
    });
    match format {
        Format::Edgelist => Ok(vec![read_edge_list(&text)?]),
        Format::Graph6 => {
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(read_graph6)
                .collect::<Result<Vec<_>, _>>()?;
            if graphs.is_empty() {
                return Err(CliError::Usage(format!(
                    "{}: no graphs found",
                    path.display()
                )));
            }
            Ok(graphs)
        }
    }
}

#[derive(Serialize)]
struct ComputeReport<'a> {
    seed: u64,
    n: usize,
    m: usize,
    edim: usize,
    basis: &'a [usize],
    method: Method,
    pairs_total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_bases: Option<&'a Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_bases_truncated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = read_input(&args.input)?;
    let opts = SolverOptions {
        time_budget: Some(Duration::from_millis(args.time_budget_ms)),
        all_bases_cap: args.all_bases,
    };
    for g in &graphs {
        let start = Instant::now();
        let r: EdimResult = if args.greedy_only {
            edim_greedy_upper(g)
        } else {
            edim_exact_with(g, &opts)
        };
        let elapsed = (!args.no_timing).then(|| start.elapsed().as_millis() as u64);
        let written = if args.output.json {
            let report = ComputeReport {
                seed: args.output.seed,
                n: g.n(),
                m: g.m(),
                edim: r.value,
                basis: &r.basis,
                method: r.method,
                pairs_total: r.pairs_total,
                all_bases: r.all_bases.as_ref(),
                all_bases_truncated: r.all_bases.as_ref().map(|_| r.all_bases_truncated),
                elapsed_ms: elapsed,
            };
            json_line(out, &report)
        } else {
            write_compute_human(out, g, &r, elapsed)
        };
        written.map_err(io_err(Path::new("<stdout>")))?;
    }
    Ok(())
}

fn write_compute_human(
    out: &mut dyn Write,
    g: &Graph,
    r: &EdimResult,
    elapsed: Option<u64>,
) -> io::Result<()> {
    let method = match r.method {
        Method::Exact => "exact",
        Method::GreedyUpper => "greedy upper bound, not proven minimal",
    };
    writeln!(out, "graph   n={} m={}", g.n(), g.m())?;
    writeln!(out, "edim    {} ({method})", r.value)?;
    writeln!(out, "basis   {:?}", r.basis)?;
    writeln!(out, "pairs   {}", r.pairs_total)?;
    if let Some(all) = &r.all_bases {
        let more = if r.all_bases_truncated {
            ", truncated"
        } else {
            ""
        };
        writeln!(out, "bases   {} listed{more}", all.len())?;
        for b in all {
            writeln!(out, "        {b:?}")?;
        }
    }
    if let Some(ms) = elapsed {
        writeln!(out, "time    {ms} ms")?;
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(untagged)]
enum GammaT {
    Value(usize),
    Status(&'static str),
}

impl From<TotalDomination> for GammaT {
    fn from(t: TotalDomination) -> Self {
        match t {
            TotalDomination::Value(v) => GammaT::Value(v),
            TotalDomination::Undefined => GammaT::Status("UNDEFINED"),
            TotalDomination::CapExceeded => GammaT::Status("CAP_EXCEEDED"),
        }
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    seed: u64,
    n: usize,
    m: usize,
    f: usize,
    f_prime: usize,
    t: usize,
    t_prime: usize,
    /// Twin-edge statistics of the twin-deleted graph.
    q: usize,
    q_prime: usize,
    gamma_t: GammaT,
    #[serde(rename = "in_class_G")]
    in_class_g: bool,
    satellites: Vec<(usize, usize)>,
    false_twin_classes: Vec<Vec<usize>>,
    true_twin_classes: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree_stats: Option<TreeStats>,
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    for g in read_input(&args.input)? {
        let twins = twin_partition(&g);
        let reduced = twin_deletion(&g);
        let edge_twins = edge_twin_partition(&reduced.graph);
        let report = AnalyzeReport {
            seed: args.output.seed,
            n: g.n(),
            m: g.m(),
            f: twins.f,
            f_prime: twins.f_prime,
            t: twins.t,
            t_prime: twins.t_prime,
            q: edge_twins.q,
            q_prime: edge_twins.q_prime,
            gamma_t: total_domination_number(&g, args.gamma_cap).into(),
            in_class_g: in_class_g(&g),
            satellites: satellites(&g),
            false_twin_classes: twins.false_classes,
            true_twin_classes: twins.true_classes,
            tree_stats: tree_stats(&g).ok(),
        };
        let written = if args.output.json {
            json_line(out, &report)
        } else {
            write_analyze_human(out, &report)
        };
        written.map_err(io_err(Path::new("<stdout>")))?;
    }
    Ok(())
}

fn write_analyze_human(out: &mut dyn Write, r: &AnalyzeReport) -> io::Result<()> {
    let gamma = match r.gamma_t {
        GammaT::Value(v) => v.to_string(),
        GammaT::Status(s) => s.to_string(),
    };
    writeln!(out, "graph        n={} m={}", r.n, r.m)?;
    writeln!(
        out,
        "false twins  f={} f'={} {:?}",
        r.f, r.f_prime, r.false_twin_classes
    )?;
    writeln!(
        out,
        "true twins   t={} t'={} {:?}",
        r.t, r.t_prime, r.true_twin_classes
    )?;
    writeln!(
        out,
        "twin edges   q={} q'={} (after twin deletion)",
        r.q, r.q_prime
    )?;
    writeln!(out, "gamma_t      {gamma}")?;
    writeln!(out, "in class G   {}", r.in_class_g)?;
    writeln!(out, "satellites   {:?}", r.satellites)?;
    if let Some(ts) = r.tree_stats {
        writeln!(
            out,
            "tree         n1={} ex={} path={}",
            ts.n1, ts.ex, ts.is_path
        )?;
    }
    Ok(())
}

fn single_graph(spec: &str) -> Result<Graph, CliError> {
    Ok(family::expand_family(&parse_family(spec)?)?)
}

fn build_product(args: &ProductArgs) -> Result<Graph, CliError> {
    if args.kind == ProductKind::Multipartite {
        let parts = args
            .operands
            .iter()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("part size {s:?} is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(complete_multipartite(&parts)?);
    }
    let [g, h] = args.operands.as_slice() else {
        return Err(CliError::Usage(format!(
            "{:?} takes exactly two graph specs",
            args.kind
        )));
    };
    let (g, h) = (single_graph(g)?, single_graph(h)?);
    Ok(match args.kind {
        ProductKind::Join => join(&g, &h)?,
        ProductKind::Lex => lexicographic(&g, &h)?,
        ProductKind::Corona => corona(&g, &h)?,
        ProductKind::Multipartite => unreachable!(),
    })
}

fn product(args: &ProductArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = build_product(args)?;
    write_graphs(&[g], args.format, &args.output, &args.out, out)
}

#[derive(Serialize)]
struct GraphRecord<'a> {
    seed: u64,
    n: usize,
    m: usize,
    graph6: String,
    edges: &'a [edim::Edge],
}

fn write_graphs(
    graphs: &[Graph],
    format: Format,
    output: &OutputArgs,
    path: &Path,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut text = String::new();
    for (i, g) in graphs.iter().enumerate() {
        if output.json {
            let record = GraphRecord {
                seed: output.seed,
                n: g.n(),
                m: g.m(),
                graph6: write_graph6(g),
                edges: g.edges(),
            };
            text.push_str(&serde_json::to_string(&record).expect("plain data serializes"));
            text.push('\n');
            continue;
        }
        match format {
            Format::Graph6 => {
                text.push_str(&write_graph6(g));
                text.push('\n');
            }
            Format::Edgelist => {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(&write_edge_list(g));
            }
        }
    }
    if path.as_os_str() == "-" {
        out.write_all(text.as_bytes())
            .map_err(io_err(Path::new("<stdout>")))
    } else {
        fs::write(path, text).map_err(io_err(path))
    }
}

fn generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = expand_all(&parse_family(&args.spec)?);
    write_graphs(&graphs, args.format, &args.output, &args.out, out)
}

/// Worker count from `EDIM_THREADS`, if set.
fn thread_override() -> Result<Option<usize>, CliError> {
    match std::env::var("EDIM_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "EDIM_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

#[derive(Serialize)]
struct VerifyLine<'a> {
    seed: u64,
    #[serde(flatten)]
    report: &'a TheoremReport,
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let instances = if args.reference_corpus {
        if !matches!(args.theorem, TheoremId::Lex | TheoremId::Satellite) {
            return Err(CliError::Usage(
                "--reference-corpus applies to lex and satellite only".into(),
            ));
        }
        lex_reference_corpus(args.theorem, args.max_n)
    } else {
        corpus(args.theorem, args.max_n, args.random, args.output.seed)
    };
    let opts = VerifyOptions {
        solver: SolverOptions {
            time_budget: Some(Duration::from_millis(args.time_budget_ms)),
            all_bases_cap: None,
        },
        basis_cap: args.cap,
    };
    let reports = match thread_override()? {
        None => verify(args.theorem, &instances, &opts),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} threads: {e}")))?
            .install(|| verify(args.theorem, &instances, &opts)),
    };
    let stdout = io_err(Path::new("<stdout>"));
    write_verify(args, &reports, out).map_err(stdout)?;
    let failed = reports.iter().any(|r| r.verdict.is_failure());
    Ok(if failed { EXIT_FAILED_CHECK } else { EXIT_OK })
}

fn write_verify(
    args: &VerifyArgs,
    reports: &[TheoremReport],
    out: &mut dyn Write,
) -> io::Result<()> {
    if args.output.json {
        for report in reports {
            json_line(
                out,
                &VerifyLine {
                    seed: args.output.seed,
                    report,
                },
            )?;
        }
        return Ok(());
    }
    for r in reports {
        let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
        let formula = r
            .formula_value
            .map_or("-".to_string(), |f| f.value().to_string());
        let solver = r.solver_value.map_or("-".to_string(), |v| v.to_string());
        write!(
            out,
            "{:<12} {} formula={formula} solver={solver}",
            verdict.as_str().unwrap_or("?"),
            r.instance
        )?;
        if let Some(s) = r.seed {
            write!(out, " instance_seed={s}")?;
        }
        for reason in r.reasons.iter().chain(&r.notes) {
            write!(out, " [{reason}]")?;
        }
        writeln!(out)?;
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    writeln!(
        out,
        "{}: {} instances, match {}, bound holds {}, holds {}, skipped {}, cap exceeded {}, mismatch {}, violated {}",
        args.theorem,
        reports.len(),
        count(Verdict::Match),
        count(Verdict::BoundHolds),
        count(Verdict::Holds),
        count(Verdict::Skipped),
        count(Verdict::CapExceeded),
        count(Verdict::Mismatch),
        count(Verdict::Violated),
    )
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}
