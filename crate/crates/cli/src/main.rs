//! `ddgraph`: verify published record graphs, measure Cayley graphs, run
//! seeded generator-set searches, and export graphs.
//!
//! Exit codes: 0 success, 1 verification mismatch or runtime failure,
//! 2 usage or input error, 3 infeasible target or overflow.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ddgraph::cayley::{bfs_stats, close_under_inverses, export_graph, CayleyStats, ExportFormat};
use ddgraph::records::{self, RecordId, RecordSource, Status, VerifySummary};
use ddgraph::search::{moore_bound, random_search, SearchConfig};
use ddgraph::{Element, Error, GroupSpec};

/// Default vertex budget for `verify`.
const DEFAULT_MAX_ORDER: u64 = 2_500_000;

#[derive(Parser)]
#[command(name = "ddgraph", version, about = "Cayley graphs for the degree/diameter problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the claims of the embedded record table.
    Verify(VerifyArgs),
    /// Breadth-first search from the identity of one Cayley graph.
    Bfs(GraphArgs),
    /// Seeded random generator-set search on a fixed group.
    Search(SearchArgs),
    /// Print the Moore bound.
    Moore(MooreArgs),
    /// Write a Cayley graph as an edge list or in DIMACS format.
    Export(ExportArgs),
    /// Print the embedded record dataset verbatim.
    RecordsDump(DumpArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every record (the default).
    #[arg(long, conflicts_with = "record")]
    all: bool,
    /// Verify a single record, given as DELTA,DIAMETER.
    #[arg(long, value_name = "DELTA,D")]
    record: Option<RecordId>,
    /// Skip groups with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GraphArgs {
    /// Group spec as JSON, or @FILE.
    #[arg(long)]
    group: String,
    /// Generators as a JSON array of elements, or @FILE.
    #[arg(long)]
    gens: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Group spec as JSON, or @FILE.
    #[arg(long)]
    group: String,
    #[arg(long)]
    delta: usize,
    #[arg(long)]
    target_diameter: u32,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    max_hits: usize,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct MooreArgs {
    #[arg(long)]
    delta: u64,
    #[arg(long)]
    diameter: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Group spec as JSON, or @FILE.
    #[arg(long)]
    group: String,
    /// Generators as a JSON array of elements, or @FILE.
    #[arg(long)]
    gens: String,
    #[arg(long, value_parser = ["edgelist", "dimacs"])]
    format: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MooreInfeasible { .. }
        | Error::MooreOverflow { .. }
        | Error::InfeasibleDegree(_)
        | Error::MemoryBudgetExceeded { .. } => 3,
        Error::BadParameter(_)
        | Error::NotAUnit { .. }
        | Error::OrderMismatch { .. }
        | Error::CoordinateOutOfRange { .. }
        | Error::IndexOutOfRange { .. }
        | Error::EmptySet
        | Error::ContainsIdentity
        | Error::Parse { .. }
        | Error::SpecInvalid { .. }
        | Error::InvalidRecord { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Bfs(args) => bfs(args),
        Command::Search(args) => search(args),
        Command::Moore(args) => moore(args),
        Command::Export(args) => export(args),
        Command::RecordsDump(args) => {
            match args.out {
                Some(path) => fs::write(path, records::EMBEDDED_RECORDS)?,
                None => io::stdout().write_all(records::EMBEDDED_RECORDS.as_bytes())?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Inline JSON, or the contents of a file when prefixed with `@`.
fn read_arg(arg: &str) -> Result<String, Error> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(fs::read_to_string(path)?),
        None => Ok(arg.to_string()),
    }
}

fn parse_group(arg: &str) -> Result<GroupSpec, Error> {
    let raw: ddgraph::RawGroupSpec = serde_json::from_str(&read_arg(arg)?)?;
    raw.validate()
}

fn parse_gens(arg: &str) -> Result<Vec<Element>, Error> {
    Ok(serde_json::from_str(&read_arg(arg)?)?)
}

fn threads(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut entries = records::load_records(RecordSource::Embedded)?;
    if let Some(id) = args.record {
        entries.retain(|r| r.id() == id);
        if entries.is_empty() {
            return Err(Error::BadParameter(format!("no record {id} in the dataset")));
        }
    }
    let summary = records::verify_all(&entries, args.max_order, threads(args.threads));
    if args.json {
        print_json(&summary)?;
    } else {
        print_verify_table(&summary)?;
    }
    Ok(if summary.has_mismatch() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn print_verify_table(summary: &VerifySummary) -> io::Result<()> {
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "{:<8} {:>10}  {:<34} {:<8} {:>8} {:>10}",
        "(Δ,D)", "order", "group", "status", "diameter", "time"
    )?;
    for r in &summary.reports {
        let (status, diameter) = match &r.status {
            Status::Pass => ("pass", r.stats.as_ref().and_then(|s| s.diameter)),
            Status::Mismatch { .. } => ("MISMATCH", r.stats.as_ref().and_then(|s| s.diameter)),
            Status::Skipped { .. } => ("skipped", None),
        };
        let diameter = diameter.map_or("-".to_string(), |d| d.to_string());
        let time = if r.is_skipped() { "-".to_string() } else { format!("{:.3}s", r.elapsed.as_secs_f64()) };
        writeln!(
            out,
            "{:<8} {:>10}  {:<34} {:<8} {:>8} {:>10}",
            r.record.to_string(),
            r.claimed_order,
            r.group,
            status,
            diameter,
            time
        )?;
        if let Status::Mismatch { details } = &r.status {
            for d in details {
                writeln!(out, "    {d}")?;
            }
        }
        for w in &r.warnings {
            writeln!(out, "    warning: {w}")?;
        }
    }
    writeln!(out, "{} passed, {} mismatched, {} skipped", summary.passed, summary.mismatched, summary.skipped)
}

#[derive(Serialize)]
struct BfsOutput<'a> {
    group: &'a GroupSpec,
    generators: &'a [Element],
    stats: &'a CayleyStats,
}

fn bfs(args: GraphArgs) -> Result<ExitCode, Error> {
    let spec = parse_group(&args.group)?;
    let set = close_under_inverses(&spec, &parse_gens(&args.gens)?)?;
    let stats = bfs_stats(&spec, &set, u64::MAX)?;
    if args.json {
        print_json(&BfsOutput { group: &spec, generators: set.elements(), stats: &stats })?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = io::stdout().lock();
    writeln!(out, "group      {spec}")?;
    writeln!(out, "order      {}", stats.order)?;
    writeln!(out, "degree     {}", stats.degree)?;
    match stats.diameter {
        Some(d) => writeln!(out, "diameter   {d}")?,
        None => writeln!(out, "diameter   unreachable ({} of {} reached)", stats.reached, stats.order)?,
    }
    writeln!(out, "connected  {}", stats.connected)?;
    let hist: Vec<String> = stats.distance_histogram.iter().map(u64::to_string).collect();
    writeln!(out, "histogram  {}", hist.join(" "))?;
    Ok(ExitCode::SUCCESS)
}

fn search(args: SearchArgs) -> Result<ExitCode, Error> {
    let config = SearchConfig {
        spec: parse_group(&args.group)?,
        delta: args.delta,
        target_diameter: args.target_diameter,
        trials: args.trials,
        seed: args.seed,
        max_hits: args.max_hits,
    };
    let outcome = random_search(&config, threads(args.threads))?;
    let report = outcome.report();
    if args.json {
        print_json(&report)?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "{}: degree {}, target diameter {}, {} trials, seed {}",
        config.spec, config.delta, config.target_diameter, config.trials, config.seed
    )?;
    for hit in &report.hits {
        let gens: Vec<String> = hit.generators.iter().map(Element::to_string).collect();
        writeln!(out, "trial {:>8}  diameter {}  {}", hit.trial, hit.diameter, gens.join(" "))?;
    }
    let best = report.summary.best_diameter.map_or("-".to_string(), |d| d.to_string());
    writeln!(
        out,
        "{} hits, {} connected of {} trials, best diameter {best}",
        report.hits.len(),
        report.summary.connected,
        report.summary.trials
    )?;
    Ok(ExitCode::SUCCESS)
}

fn moore(args: MooreArgs) -> Result<ExitCode, Error> {
    let bound = moore_bound(args.delta, args.diameter)?;
    if args.json {
        print_json(&serde_json::json!({
            "delta": args.delta,
            "diameter": args.diameter,
            "bound": bound,
        }))?;
    } else {
        println!("{bound}");
    }
    Ok(ExitCode::SUCCESS)
}

fn export(args: ExportArgs) -> Result<ExitCode, Error> {
    let spec = parse_group(&args.group)?;
    let set = close_under_inverses(&spec, &parse_gens(&args.gens)?)?;
    let format: ExportFormat = args.format.parse()?;
    let file = fs::File::create(&args.out)?;
    export_graph(&spec, &set, format, file)?;
    Ok(ExitCode::SUCCESS)
}
