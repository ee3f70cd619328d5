//! Command-line front end: `solve`, `eval`, `gen`, `verify`, `params` and
//! `bench`.
//!
//! Exit status: 0 success, 1 usage, 2 parse or validation error, 3 solver
//! guard tripped, 4 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{parse_graph, write_graph, ParseError, Record, SolutionFile};
use crate::generators::{
    gen_random_dag, gen_single_source_tree, gen_x3c_planted, label_sidecar, GenError,
};
use crate::graph::{Dag, Edge};
use crate::reach::count_pairs;
use crate::solvers::{brute_force, solve, SolveError, SolveOptions, SolveOutcome, StrategyChoice};
use crate::structure::{
    max_matching, minimal_representatives, neighborhood_classes, Side, Solution, SolutionError,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Guard(String),
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Verify(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Guard(m) | CliError::Verify(m) => m,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::TooLarge { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mci",
    version,
    about = "Maximum connectivity improvement on DAGs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Add at most B edges maximizing the number of reachable pairs.
    Solve(SolveArgs),
    /// Print f(G), or f(G + N) for a solution file.
    Eval(EvalArgs),
    /// Generate an instance.
    Gen(GenArgs),
    /// Check a solution file against a graph.
    Verify(VerifyArgs),
    /// Report the structural parameters the solvers depend on.
    Params(ParamsArgs),
    /// Run a catalog of instances through several strategies.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Human,
    Records,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub budget: usize,
    #[arg(long, default_value = "auto")]
    pub strategy: StrategyChoice,
    #[arg(long, default_value_t = SolveOptions::default().max_explored)]
    pub max_explored: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Write the solution file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub solution: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    X3c,
    Random,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YesNo {
    Yes,
    No,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value = "yes")]
    pub planted: YesNo,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Graph output path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the `id role name` label sidecar here (x3c only).
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub solution: PathBuf,
    /// Also require the solution to use at most this many edges.
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Catalog file, one instance per line: `random N P SEED`, `tree N SEED`,
    /// `x3c Q M yes|no SEED` or `file PATH`.
    #[arg(long)]
    pub catalog: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
    pub budgets: Vec<usize>,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "st,v-minus-b,matching,oracle"
    )]
    pub strategies: Vec<StrategyChoice>,
    /// Largest enumeration the reference oracle may attempt per row.
    #[arg(long, default_value_t = 2_000_000)]
    pub oracle_cap: u64,
    #[arg(long, default_value_t = SolveOptions::default().max_explored)]
    pub max_explored: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Params(a) => cmd_params(&a),
        Command::Bench(a) => cmd_bench(&a),
    };
    match result {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Dag, CliError> {
    parse_graph(&read(path)?)
        .map_err(|e: ParseError| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_solution(path: &Path) -> Result<SolutionFile, CliError> {
    SolutionFile::parse(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn edge_list(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("({u},{v})")).collect();
    parts.join(" ")
}

fn solution_file(out: &SolveOutcome) -> SolutionFile {
    SolutionFile {
        edges: out.solution.added().to_vec(),
        guessed_k: out.guessed_k,
        value: Some(out.value),
    }
}

pub fn cmd_solve(a: &SolveArgs) -> Result<String, CliError> {
    let g = load_graph(&a.input)?;
    let threshold = g.classify().threshold();
    let opts = SolveOptions {
        max_explored: a.max_explored,
    };
    let start = Instant::now();
    let out = solve(&g, a.budget, a.strategy, &opts)?;
    let elapsed = start.elapsed();
    if let Some(path) = &a.out {
        write(path, &solution_file(&out).to_string())?;
    }
    let k = out.guessed_k.map_or("-".to_string(), |k| k.to_string());
    Ok(match a.format {
        OutputFormat::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "n = {}, m = {}", g.vertex_count(), g.edge_count());
            let _ = writeln!(
                s,
                "budget B = {}, threshold max(|S|,|T|)+|Q| = {threshold}",
                a.budget
            );
            let _ = writeln!(s, "value = {}", out.value);
            let _ = writeln!(s, "edges = [{}]", edge_list(out.solution.added()));
            let _ = writeln!(
                s,
                "strategy = {}, guessed k = {k}, explored = {}",
                out.strategy, out.explored
            );
            let _ = writeln!(s, "time = {:.3} ms", elapsed.as_secs_f64() * 1e3);
            s
        }
        OutputFormat::Records => {
            let edges: Vec<String> = out
                .solution
                .added()
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            let r = Record::new()
                .field("n", g.vertex_count())
                .field("m", g.edge_count())
                .field("budget", a.budget)
                .field("threshold", threshold)
                .field("strategy", out.strategy)
                .field("value", out.value)
                .field(
                    "edges",
                    if edges.is_empty() {
                        "-".to_string()
                    } else {
                        edges.join(",")
                    },
                )
                .field("guessed_k", k)
                .field("explored", out.explored);
            format!("{r}\n")
        }
    })
}

pub fn cmd_eval(a: &EvalArgs) -> Result<String, CliError> {
    let g = load_graph(&a.input)?;
    let base = count_pairs(&g);
    let with = match &a.solution {
        Some(path) => {
            let file = load_solution(path)?;
            let sol =
                Solution::evaluate(&g, file.edges).map_err(|e| CliError::Parse(e.to_string()))?;
            Some(sol.value())
        }
        None => None,
    };
    Ok(match (a.format, with) {
        (OutputFormat::Human, None) => format!("f = {base}\n"),
        (OutputFormat::Human, Some(v)) => format!("f = {base}\nf with solution = {v}\n"),
        (OutputFormat::Records, w) => {
            let mut r = Record::new().field("n", g.vertex_count()).field("f", base);
            if let Some(v) = w {
                r = r.field("f_solution", v);
            }
            format!("{r}\n")
        }
    })
}

fn required<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --kind {kind}")))
}

pub fn cmd_gen(a: &GenArgs) -> Result<String, CliError> {
    let (text, labels) = match a.kind {
        GenKind::X3c => {
            let q = required(a.q, "q", "x3c")?;
            let m = required(a.m, "m", "x3c")?;
            let (_, red) = gen_x3c_planted(q, m, a.planted == YesNo::Yes, a.seed)?;
            let header = format!(
                "# x3c q={q} m={m} planted={} seed={} budget={} target={}\n",
                if a.planted == YesNo::Yes { "yes" } else { "no" },
                a.seed,
                red.budget,
                red.target
            );
            (
                header + &write_graph(&red.graph),
                Some(label_sidecar(&red.labels)),
            )
        }
        GenKind::Random => {
            let n = required(a.n, "n", "random")?;
            let p = required(a.p, "p", "random")?;
            if !(0.0..=1.0).contains(&p) || n == 0 {
                return Err(CliError::Usage("need n >= 1 and 0 <= p <= 1".into()));
            }
            (write_graph(&gen_random_dag(n, p, a.seed)), None)
        }
        GenKind::Tree => {
            let n = required(a.n, "n", "tree")?;
            if n == 0 {
                return Err(CliError::Usage("need n >= 1".into()));
            }
            (write_graph(&gen_single_source_tree(n, a.seed)), None)
        }
    };
    if let Some(path) = &a.labels {
        let labels =
            labels.ok_or_else(|| CliError::Usage("--labels only applies to --kind x3c".into()))?;
        write(path, &labels)?;
    }
    match &a.out {
        Some(path) => {
            write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<String, CliError> {
    let g = load_graph(&a.input)?;
    let file = load_solution(&a.solution)?;
    if let Some(b) = a.budget {
        if file.edges.len() > b {
            return Err(CliError::Verify(format!(
                "budget exceeded: {} edges, budget {b}",
                file.edges.len()
            )));
        }
    }
    let sol = Solution::evaluate(&g, file.edges)
        .map_err(|e: SolutionError| CliError::Verify(e.to_string()))?;
    if let Some(claimed) = file.value {
        if claimed != sol.value() {
            return Err(CliError::Verify(format!(
                "value mismatch: claimed {claimed}, actual {}",
                sol.value()
            )));
        }
    }
    Ok(format!(
        "ok: {} edges, value {}\n",
        sol.budget_used(),
        sol.value()
    ))
}

pub fn cmd_params(a: &ParamsArgs) -> Result<String, CliError> {
    let g = load_graph(&a.input)?;
    let c = g.classify();
    let keep: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| !c.is_isolated(v))
        .collect();
    let core = g.induced(&keep);
    let reps = |side| minimal_representatives(&core, side).map_or(0, |r| r.len());
    let r = Record::new()
        .field("n", g.vertex_count())
        .field("m", g.edge_count())
        .field("sources", c.sources.len())
        .field("sinks", c.sinks.len())
        .field("isolated", c.isolated.len())
        .field("matching", max_matching(&g))
        .field("s0", reps(Side::Source))
        .field("t0", reps(Side::Sink))
        .field(
            "source_classes",
            neighborhood_classes(&core, Side::Source).class_count(),
        )
        .field(
            "sink_classes",
            neighborhood_classes(&core, Side::Sink).class_count(),
        )
        .field("threshold", c.threshold());
    Ok(match a.format {
        OutputFormat::Records => format!("{r}\n"),
        OutputFormat::Human => {
            let mut s = String::new();
            for key in [
                "n",
                "m",
                "sources",
                "sinks",
                "isolated",
                "matching",
                "s0",
                "t0",
                "source_classes",
                "sink_classes",
                "threshold",
            ] {
                let _ = writeln!(s, "{key:>14} = {}", r.get(key).unwrap_or("?"));
            }
            s
        }
    })
}

/// One catalog entry, named for the records.
fn catalog_instance(line: &str, base: &Path) -> Result<(String, Dag), CliError> {
    let f: Vec<&str> = line.split_whitespace().collect();
    let bad = || CliError::Parse(format!("bad catalog line {line:?}"));
    let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
    match f.as_slice() {
        ["random", n, p, seed] => {
            let p: f64 = p.parse().map_err(|_| bad())?;
            let n = num(n)? as usize;
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return Err(bad());
            }
            Ok((
                format!("random-{n}-{p}-{seed}"),
                gen_random_dag(n, p, num(seed)?),
            ))
        }
        ["tree", n, seed] => {
            let n = num(n)? as usize;
            if n == 0 {
                return Err(bad());
            }
            Ok((
                format!("tree-{n}-{seed}"),
                gen_single_source_tree(n, num(seed)?),
            ))
        }
        ["x3c", q, m, yes, seed] => {
            let yes = match *yes {
                "yes" => true,
                "no" => false,
                _ => return Err(bad()),
            };
            let (_, red) = gen_x3c_planted(num(q)? as usize, num(m)? as usize, yes, num(seed)?)?;
            Ok((format!("x3c-{q}-{m}-{}-{seed}", f[3]), red.graph))
        }
        ["file", path] => {
            let path = base.join(path);
            Ok((path.display().to_string(), load_graph(&path)?))
        }
        _ => Err(bad()),
    }
}

pub fn cmd_bench(a: &BenchArgs) -> Result<String, CliError> {
    let text = read(&a.catalog)?;
    let base = a.catalog.parent().unwrap_or(Path::new("."));
    let instances = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| catalog_instance(l, base))
        .collect::<Result<Vec<_>, _>>()?;
    let opts = SolveOptions {
        max_explored: a.max_explored,
    };
    let oracle_opts = SolveOptions {
        max_explored: a.oracle_cap,
    };
    let mut out = String::new();
    for (name, g) in &instances {
        let threshold = g.classify().threshold();
        for &b in &a.budgets {
            let reference = brute_force(g, b, &oracle_opts).ok().map(|o| o.value);
            for &strategy in &a.strategies {
                let opts = if strategy == StrategyChoice::Oracle {
                    oracle_opts
                } else {
                    opts
                };
                let mut r = Record::new()
                    .field("instance", name)
                    .field("n", g.vertex_count())
                    .field("m", g.edge_count())
                    .field("budget", b)
                    .field("threshold", threshold)
                    .field("strategy", strategy);
                r = match solve(g, b, strategy, &opts) {
                    Ok(o) => {
                        let agree =
                            reference.map_or("na", |v| if v == o.value { "yes" } else { "no" });
                        r.field("status", "ok")
                            .field("value", o.value)
                            .field("explored", o.explored)
                            .field("oracle_agree", agree)
                    }
                    Err(SolveError::TooLarge { .. }) => r.field("status", "guard-tripped"),
                    Err(SolveError::AtThreshold { .. }) => r.field("status", "at-threshold"),
                    Err(e) => r.field("status", "error").field("message", e),
                };
                let _ = writeln!(out, "{r}");
            }
        }
    }
    if let Some(path) = &a.out {
        write(path, &out)?;
        return Ok(String::new());
    }
    Ok(out)
}
