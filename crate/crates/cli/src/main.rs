use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use pmc_core::bench::{self, BenchConfig, BenchRecord, Measurement};
use pmc_core::enumerate::{DfsStream, EnumOptions, Gate, GateSet};
use pmc_core::families::{all_labeled_graphs, FamilyKind};
use pmc_core::oracle::{pmc_oracle_scan, pmc_oracle_triangulation};
use pmc_core::validate::{counterexample_dump, validate, ValidationReport};
use pmc_core::{
    enumerate, is_minimal_separator, is_pmc, separators, Algorithm, Graph, GraphFormat, VertexSet,
};

/// Potential maximal clique enumeration.
#[derive(Parser)]
#[command(name = "pmc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every PMC of a graph, one per line.
    Enumerate(EnumerateArgs),
    /// Print every minimal separator of a graph, one per line.
    Separators(SeparatorsArgs),
    /// Test whether a vertex set is a PMC.
    Check(CheckArgs),
    /// Print the PMCs computed by a brute-force oracle.
    Oracle(OracleArgs),
    /// Compare all enumerators against both oracles.
    Validate(ValidateArgs),
    /// Benchmark the enumerators over a graph family and write CSV.
    Bench(BenchArgs),
    /// Write a member of a graph family to a file.
    Gen(GenArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for standard input.
    input: PathBuf,
    /// Input format: edgelist or dimacs.
    #[arg(long, default_value = "edgelist")]
    format: GraphFormat,
    /// Use a random vertex ordering drawn from this seed.
    #[arg(long, conflicts_with = "order_file")]
    seed: Option<u64>,
    /// Read the vertex ordering from a file of whitespace-separated labels.
    #[arg(long)]
    order_file: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, default_value = "dfs")]
    algo: Algorithm,
    /// Sort the output instead of printing in emission order.
    #[arg(long)]
    sorted: bool,
    /// Write the metrics record here instead of to standard error.
    #[arg(long)]
    metrics: Option<PathBuf>,
    /// Print `-` in the ms column of the metrics record.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct SeparatorsArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Work on the prefix graph `G_i` instead of the whole graph.
    #[arg(long)]
    level: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Comma-separated vertex labels, e.g. "1,2,3".
    #[arg(long)]
    set: String,
    /// Test against the prefix graph `G_i` instead of the whole graph.
    #[arg(long)]
    level: Option<usize>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum OracleMethod {
    Scan,
    Triangulation,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, value_enum, default_value = "scan")]
    method: OracleMethod,
}

#[derive(Args)]
struct ValidateArgs {
    /// Graph file, or `-` for standard input.
    #[arg(required_unless_present = "all5", conflicts_with = "all5")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "edgelist")]
    format: GraphFormat,
    #[arg(long, conflicts_with = "order_file")]
    seed: Option<u64>,
    #[arg(long)]
    order_file: Option<PathBuf>,
    /// Validate every labelled graph on 5 vertices.
    #[arg(long)]
    all5: bool,
    /// Switch off one duplicate-avoidance gate (i to v).
    #[arg(long, hide = true)]
    disable_gate: Option<Gate>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    family: FamilyKind,
    /// Smallest size (k for theta, n otherwise).
    #[arg(long)]
    from: usize,
    /// Largest size.
    #[arg(long)]
    to: usize,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "bt,nondup,dfs")]
    algos: Vec<Algorithm>,
    /// Edge probability for random graphs.
    #[arg(long, default_value_t = 0.4)]
    p: f64,
    /// Seed for random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip bt on graphs with more vertices than this.
    #[arg(long)]
    bt_cutoff: Option<usize>,
    /// Write the CSV here instead of to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print `-` in the ms column so that repeated runs are identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilyKind,
    /// k for theta, n otherwise.
    #[arg(long)]
    size: usize,
    #[arg(long, default_value_t = 0.4)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "edgelist")]
    format: GraphFormat,
}

/// A failure with a specific exit code.
#[derive(Debug)]
struct Exit(u8);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for Exit {}

const EXIT_DISAGREEMENT: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Exit>() {
            Some(Exit(code)) => ExitCode::from(*code),
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
        },
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Separators(a) => cmd_separators(a),
        Command::Check(a) => cmd_check(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Gen(a) => cmd_gen(a),
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(
    path: &Path,
    format: GraphFormat,
    seed: Option<u64>,
    order_file: Option<&Path>,
) -> Result<Graph> {
    let text = read_text(path)?;
    let g = Graph::parse(&text, format).with_context(|| format!("parsing {}", path.display()))?;
    if let Some(seed) = seed {
        return Ok(g.with_seeded_ordering(seed));
    }
    if let Some(file) = order_file {
        let text = read_text(file)?;
        let order = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .with_context(|| format!("bad vertex '{t}' in {}", file.display()))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(g.with_ordering(&order)?);
    }
    Ok(g)
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        load_graph(
            &self.input,
            self.format,
            self.seed,
            self.order_file.as_deref(),
        )
    }

    fn id(&self) -> String {
        self.input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .filter(|s| s != "-")
            .unwrap_or_else(|| "stdin".to_string())
    }
}

fn parse_set(text: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().with_context(|| format!("bad vertex '{tok}'"))?;
        if v == 0 || v > pmc_core::MAX_VERTICES {
            bail!("vertex {v} out of range");
        }
        set.insert(v);
    }
    Ok(set)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<()> {
    let g = a.graph.load()?;
    if a.algo == Algorithm::Bt {
        eprintln!("warning: bt stores every PMC of every prefix graph; memory grows exponentially");
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let (count, metrics) = if a.algo == Algorithm::Dfs && !a.sorted {
        // stream in emission order
        let mut stream = DfsStream::with_options(&g, &EnumOptions::default());
        let mut count = 0;
        for pmc in stream.by_ref() {
            writeln!(out, "{}", pmc?)?;
            count += 1;
        }
        (count, stream.metrics())
    } else {
        let run = enumerate(&g, a.algo, &EnumOptions::default())?;
        let sets = if a.sorted {
            run.sorted()
        } else {
            run.pmcs.clone()
        };
        for s in &sets {
            writeln!(out, "{s}")?;
        }
        (sets.len(), run.metrics)
    };
    out.flush()?;

    let record = BenchRecord {
        graph: a.graph.id(),
        n: g.n(),
        m: g.m(),
        algorithm: a.algo,
        measurement: Some(Measurement {
            pmcs: count,
            seps: separators(&g.view()).count(),
            ispmc_calls: metrics.is_pmc_calls,
            peak_sets: metrics.peak_retained_sets,
            ms: metrics.wall_time.as_secs_f64() * 1e3,
        }),
    };
    let text = bench::to_csv(&[record], !a.no_timing);
    match a.metrics {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => eprint!("{text}"),
    }
    Ok(())
}

fn cmd_separators(a: SeparatorsArgs) -> Result<()> {
    let g = a.graph.load()?;
    let view = match a.level {
        Some(i) => g.prefix(i)?,
        None => g.view(),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for s in separators(&view) {
        if s.is_empty() {
            writeln!(out, "-")?;
        } else {
            writeln!(out, "{s}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_check(a: CheckArgs) -> Result<()> {
    let g = a.graph.load()?;
    let set = parse_set(&a.set)?;
    let view = match a.level {
        Some(i) => g.prefix(i)?,
        None => g.view(),
    };
    let pmc = is_pmc(&view, &set)?;
    println!("pmc: {pmc}");
    println!("minimal separator: {}", is_minimal_separator(&view, &set));
    Ok(())
}

fn cmd_oracle(a: OracleArgs) -> Result<()> {
    let g = a.graph.load()?;
    let sets = match a.method {
        OracleMethod::Scan => pmc_oracle_scan(&g.view())?,
        OracleMethod::Triangulation => pmc_oracle_triangulation(&g.view())?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for s in &sets {
        writeln!(out, "{s}")?;
    }
    out.flush()?;
    Ok(())
}

fn summary(report: &ValidationReport) -> String {
    let mut lines = Vec::new();
    for r in &report.results {
        lines.push(format!(
            "{:<21} {:>6} sets {:>4} duplicates",
            r.method.tag(),
            r.distinct.len(),
            r.duplicates
        ));
    }
    for m in &report.skipped {
        lines.push(format!("{:<21} skipped (graph over budget)", m.tag()));
    }
    lines.join("\n")
}

fn cmd_validate(a: ValidateArgs) -> Result<()> {
    let options = EnumOptions {
        gates: match a.disable_gate {
            Some(gate) => GateSet::all().without(gate),
            None => GateSet::all(),
        },
        ..Default::default()
    };
    if a.all5 {
        let mut checked = 0;
        for g in all_labeled_graphs(5) {
            let report = validate(&g, &options)?;
            if !report.is_ok() {
                println!("disagreement after {checked} agreeing graphs");
                eprint!("{}", counterexample_dump(&g, &report));
                return Err(Exit(EXIT_DISAGREEMENT).into());
            }
            checked += 1;
        }
        println!("agreement on all {checked} labelled graphs with 5 vertices");
        return Ok(());
    }
    let input = a.input.expect("clap requires an input without --all5");
    let g = load_graph(&input, a.format, a.seed, a.order_file.as_deref())?;
    let report = validate(&g, &options)?;
    println!("{}", summary(&report));
    if report.is_ok() {
        println!("agreement");
        Ok(())
    } else {
        println!("disagreement");
        eprint!("{}", counterexample_dump(&g, &report));
        Err(Exit(EXIT_DISAGREEMENT).into())
    }
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let config = BenchConfig {
        algorithms: a.algos,
        bt_cutoff: a.bt_cutoff,
        options: EnumOptions::default(),
    };
    let rows = bench::bench_family(a.family, a.from, a.to, a.p, a.seed, &config)?;
    write_output(a.out.as_deref(), &bench::to_csv(&rows, !a.no_timing))
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let g = a.family.with_size(a.size, a.p, a.seed).build()?;
    let text = match a.format {
        GraphFormat::EdgeList => g.to_edge_list(),
        GraphFormat::Dimacs => g.to_dimacs(),
    };
    write_output(a.out.as_deref(), &text)
}
