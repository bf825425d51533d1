mod report;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use zf_core::structure::{forbidden_induced_test, krs_free_bound};
use zf_core::{
    enumerate_family, generate, parse_graph6, predict_complement_zf, zero_forcing_number_within,
    Budget, EnumFamily, Error, GenFamily, GenParams, GenSpec, Graph,
};

use report::{BoundsOut, Format, Interval, PredictionOut, Report, ReportWriter, Status};

const CHUNK: usize = 4096;

#[derive(Parser)]
#[command(
    name = "zfc",
    version,
    about = "Exact and predicted zero forcing numbers of graphs and their complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact zero forcing number of each input graph.
    Exact(RunOpts),
    /// Exact zero forcing number of the complement of each input graph.
    ComplementExact(RunOpts),
    /// Closed-form value or interval for Z of the complement.
    Predict(RunOpts),
    /// Lower bounds for Z of the complement.
    Bounds(RunOpts),
    /// Compare predictions against exact values; exits 1 on any disagreement.
    Verify(VerifyArgs),
    /// Print graph6 lines from a named or seeded random family.
    Gen(GenArgs),
}

#[derive(Args, Clone)]
struct RunOpts {
    /// graph6 file, one graph per line; standard input when omitted.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum candidate sets the exact solver may test per graph.
    #[arg(long)]
    budget: Option<u64>,
    /// Wall-clock limit per graph for the exact solver. Output then depends
    /// on machine speed.
    #[arg(long)]
    timeout_ms: Option<u64>,
    /// Largest order solved exactly; larger graphs are reported as `too_large`.
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    /// Fill in `elapsed_ms`.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    run: RunOpts,
    /// Enumerate a whole labeled family instead of reading input:
    /// trees, unicyclic, all_graphs or connected_graphs.
    #[arg(long, value_parser = parse_enum_family, requires = "n", conflicts_with = "input")]
    family: Option<EnumFamily>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// path, cycle, star, complete, star_plus_edge, sunlet, book, random_tree,
    /// random_unicyclic, random_cactus or random_graph.
    #[arg(long, value_parser = parse_gen_family)]
    family: GenFamily,
    /// Vertex count; the cycle length for `sunlet`.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs, using seeds `seed`, `seed + 1`, ...
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long)]
    pages: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    /// Edge probability for `random_graph`.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    cycle_bias: Option<f64>,
}

fn parse_enum_family(s: &str) -> Result<EnumFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_gen_family(s: &str) -> Result<GenFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Task {
    Exact,
    ComplementExact,
    Predict,
    Bounds,
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let (task, opts) = match cli.command {
        Command::Exact(o) => (Task::Exact, o),
        Command::ComplementExact(o) => (Task::ComplementExact, o),
        Command::Predict(o) => (Task::Predict, o),
        Command::Bounds(o) => (Task::Bounds, o),
        Command::Verify(v) => {
            if let (Some(family), Some(n)) = (v.family, v.n) {
                let graphs = enumerate_family(family, n)?.map(|g| (0, Ok(g)));
                return process(Task::Verify, &v.run, graphs);
            }
            (Task::Verify, v.run)
        }
        Command::Gen(g) => return gen(&g),
    };
    let reader: Box<dyn BufRead> = match &opts.input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    let graphs = reader
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| line.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|(no, line)| match line {
            Ok(l) => (no, parse_graph6(&l).map_err(|e| e.to_string())),
            Err(e) => (no, Err(e.to_string())),
        });
    process(task, &opts, graphs)
}

/// Runs `task` over `(line number, parsed graph)` pairs in parallel chunks,
/// writing reports in input order.
fn process(
    task: Task,
    opts: &RunOpts,
    input: impl Iterator<Item = (usize, Result<Graph, String>)>,
) -> Result<ExitCode> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()?;
    let stdout = io::stdout().lock();
    let mut out = ReportWriter::new(opts.format, BufWriter::new(stdout))?;
    let mut tally = Tally::default();
    let mut chunk = Vec::with_capacity(CHUNK);
    let mut input = input.peekable();
    while input.peek().is_some() {
        chunk.clear();
        for (no, parsed) in input.by_ref() {
            match parsed {
                Ok(g) => chunk.push(g),
                Err(e) => {
                    tally.parse_errors += 1;
                    eprintln!("line {no}: {e}");
                }
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        let reports: Vec<Report> =
            pool.install(|| chunk.par_iter().map(|g| report(task, g, opts)).collect());
        for r in &reports {
            tally.add(r);
            out.write(r)?;
        }
    }
    out.finish()?;
    if task == Task::Verify {
        eprintln!(
            "verify: {} graphs, {} agree, {} disagree, {} without an exact prediction",
            tally.graphs, tally.agree, tally.disagree, tally.unchecked
        );
    }
    Ok(if tally.graphs == 0 && tally.parse_errors > 0 {
        ExitCode::from(3)
    } else if tally.disagree > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    parse_errors: usize,
    agree: usize,
    disagree: usize,
    unchecked: usize,
}

impl Tally {
    fn add(&mut self, r: &Report) {
        self.graphs += 1;
        match r.agree {
            Some(true) => self.agree += 1,
            Some(false) => self.disagree += 1,
            None => self.unchecked += 1,
        }
    }
}

enum Solved {
    Exact(usize),
    Interval(Interval),
    TooLarge,
}

fn solve(g: &Graph, opts: &RunOpts) -> Solved {
    if g.n() > opts.max_n {
        return Solved::TooLarge;
    }
    let budget = Budget {
        max_subsets: opts.budget,
        deadline: opts
            .timeout_ms
            .map(|ms| Instant::now() + Duration::from_millis(ms)),
    };
    match zero_forcing_number_within(g, &budget) {
        Ok(r) => Solved::Exact(r.value),
        Err(Error::BudgetExhausted { lo, hi, .. }) => Solved::Interval(Interval { lo, hi }),
        Err(e) => unreachable!("the exact solver only fails by exhausting its budget: {e}"),
    }
}

fn report(task: Task, g: &Graph, opts: &RunOpts) -> Report {
    let start = Instant::now();
    let mut r = Report {
        graph6: g.to_graph6(),
        n: g.n(),
        status: Status::Ok,
        z_exact: None,
        z_complement_exact: None,
        z_interval: None,
        prediction: None,
        bounds: None,
        agree: None,
        note: None,
        elapsed_ms: None,
    };
    let exact = |target: &Graph, r: &mut Report| match solve(target, opts) {
        Solved::Exact(z) => Some(z),
        Solved::Interval(i) => {
            r.status = Status::BudgetExhausted;
            r.z_interval = Some(i);
            None
        }
        Solved::TooLarge => {
            r.status = Status::TooLarge;
            r.note = Some(format!("n = {} exceeds --max-n {}", g.n(), opts.max_n));
            None
        }
    };
    match task {
        Task::Exact => r.z_exact = exact(g, &mut r),
        Task::ComplementExact => r.z_complement_exact = exact(&g.complement(), &mut r),
        Task::Predict => attach_prediction(g, &mut r),
        Task::Bounds => {
            let c = g.complement();
            r.bounds = Some(BoundsOut::new(
                krs_free_bound(g),
                c.min_degree(),
                forbidden_induced_test(&c),
            ));
        }
        Task::Verify => {
            r.z_complement_exact = exact(&g.complement(), &mut r);
            attach_prediction(g, &mut r);
            if let (Some(z), Some(p)) = (r.z_complement_exact, &r.prediction) {
                if p.rule != "GENERIC_BOUNDS" {
                    r.agree = Some(z == p.lo && z == p.hi);
                }
            }
        }
    }
    if opts.timings {
        r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    r
}

fn attach_prediction(g: &Graph, r: &mut Report) {
    match predict_complement_zf(g) {
        Ok(p) => r.prediction = Some(PredictionOut::from(p)),
        Err(e) => r.note = Some(e.to_string()),
    }
}

fn gen(args: &GenArgs) -> Result<ExitCode> {
    let params = GenParams {
        pages: args.pages,
        girth: args.girth,
        p: args.p,
        cycle_bias: args.cycle_bias,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for i in 0..args.count {
        let spec = GenSpec::new(args.family, args.n)
            .with_params(params)
            .with_seed(args.seed.wrapping_add(i));
        let g = generate(&spec)?;
        writeln!(out, "{}", g.to_graph6())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
