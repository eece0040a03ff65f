use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use randic_core::enumeration::{read_graphs, serialize_graph6, InputLine};
use randic_core::report::{Format, ReportHeader, ReportRecord, TableWriter};
use randic_core::{enumerate_connected, hunt, survey, Claim, CorpusFilter, Graph, DEFAULT_TOL};

mod rows;

/// Graphs are processed in batches of this many input lines.
const BATCH: usize = 4096;

#[derive(Parser)]
#[command(name = "randic", version, about = "Randić index, diameter and average distance checks for graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Absolute tolerance for every inequality.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Output format: csv or jsonl.
    #[arg(long, default_value = "jsonl")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every graph in a graph6 / sparse6 stream.
    Check {
        /// Input file; standard input when omitted or `-`.
        input: Option<PathBuf>,
        /// Stop at the first malformed line.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Write one graph6 line per isomorphism class of connected graphs on N vertices.
    Enumerate {
        n: usize,
        #[arg(long)]
        min_degree: Option<usize>,
        /// Keep disconnected graphs too.
        #[arg(long)]
        include_disconnected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the analytic bound families over the (n, k) grid.
    Survey {
        #[arg(long, default_value_t = 2000)]
        n_max: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Local search for a graph with negative slack.
    Hunt {
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_degree: usize,
        /// C1_ADD, C1_RATIO or C2.
        #[arg(long)]
        claim: Claim,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the step-by-step trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

/// Exit status: 0 clean, 1 a claim or bound failed, 2 bad input or usage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Clean = 0,
    Violation = 1,
    InputError = 2,
}

fn open_output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn open_input(path: Option<&PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
        _ => Box::new(BufReader::new(io::stdin().lock())),
    })
}

fn command_line() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn run_check(input: Option<&PathBuf>, strict: bool, output: &Output) -> io::Result<Status> {
    let reader = open_input(input)?;
    let mut header = ReportHeader::new(command_line(), output.tol);
    header.filter = Some(if strict { "strict" } else { "none" }.into());
    let mut out = TableWriter::new(open_output(output.out.as_ref())?, output.format, &header)?;

    let mut status = Status::Clean;
    let (mut records, mut malformed) = (0usize, 0usize);
    let mut lines = read_graphs(reader);
    'outer: loop {
        let mut batch: Vec<InputLine> = Vec::with_capacity(BATCH);
        for item in lines.by_ref().take(BATCH) {
            batch.push(item?);
        }
        if batch.is_empty() {
            break;
        }
        let stop = if strict { batch.iter().position(|l| l.graph.is_err()) } else { None };
        let usable = stop.map_or(&batch[..], |i| &batch[..i]);
        let results: Vec<Option<ReportRecord>> = usable
            .par_iter()
            .map(|l| l.graph.as_ref().ok().map(|g| ReportRecord::new(g, Some(l.line_no), output.tol)))
            .collect();
        for (line, rec) in usable.iter().zip(results) {
            match (rec, &line.graph) {
                (Some(rec), _) => {
                    if rec.has_violation() {
                        status = status.max(Status::Violation);
                    }
                    out.write_row(&rec.row())?;
                    records += 1;
                }
                (None, Err(e)) => {
                    eprintln!("line {}: {e}: {:?}", line.line_no, line.text);
                    malformed += 1;
                    status = Status::InputError;
                }
                (None, Ok(_)) => unreachable!(),
            }
        }
        if let Some(i) = stop {
            let line = &batch[i];
            eprintln!("line {}: {}: {:?}", line.line_no, line.graph.as_ref().unwrap_err(), line.text);
            eprintln!("stopping at first malformed line (--strict)");
            malformed += 1;
            status = Status::InputError;
            break 'outer;
        }
    }
    out.flush()?;
    eprintln!("{records} records, {malformed} malformed lines");
    Ok(status)
}

fn run_enumerate(n: usize, min_degree: Option<usize>, include_disconnected: bool, out: Option<&PathBuf>) -> io::Result<Status> {
    let filter = CorpusFilter { n, min_degree_at_least: min_degree, connected_only: !include_disconnected };
    let corpus = match enumerate_connected(&filter) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(Status::InputError);
        }
    };
    let mut w = open_output(out)?;
    let mut count = 0;
    for g in corpus {
        writeln!(w, "{}", serialize_graph6(&g).expect("enumerated orders fit graph6"))?;
        count += 1;
    }
    w.flush()?;
    eprintln!("{count} graphs");
    Ok(Status::Clean)
}

fn run_survey(n_max: usize, output: &Output) -> io::Result<Status> {
    if n_max < 4 {
        eprintln!("error: --n-max must be at least 4");
        return Ok(Status::InputError);
    }
    let report = survey(n_max, output.tol);
    let header = ReportHeader::new(command_line(), output.tol);
    let mut out = TableWriter::new(open_output(output.out.as_ref())?, output.format, &header)?;
    for row in rows::survey_rows(&report) {
        out.write_row(&row)?;
    }
    out.flush()?;
    for f in &report.families {
        eprintln!(
            "{:<28} {:>9} claim cells, {} violations, {} boundary",
            f.family.name(),
            f.claim_cells,
            f.violations,
            f.boundary
        );
    }
    Ok(if report.passed() { Status::Clean } else { Status::Violation })
}

#[allow(clippy::too_many_arguments)]
fn run_hunt(
    n: usize,
    delta: usize,
    claim: Claim,
    budget: usize,
    seed: u64,
    trace: Option<&PathBuf>,
    output: &Output,
) -> io::Result<Status> {
    let outcome = match hunt(n, delta, claim, budget, seed) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(Status::InputError);
        }
    };
    let mut header = ReportHeader::new(command_line(), output.tol);
    header.seed = Some(seed);
    header.filter = Some(format!("connected, n = {n}, min degree >= {delta}"));
    let mut out = TableWriter::new(open_output(output.out.as_ref())?, output.format, &header)?;
    out.write_row(&rows::hunt_row(&outcome, budget, output.tol))?;
    out.flush()?;
    if let Some(path) = trace {
        let mut t = TableWriter::new(open_output(Some(path))?, output.format, &header)?;
        for e in &outcome.trace {
            t.write_row(&rows::trace_row(e))?;
        }
        t.flush()?;
    }
    let best: &Graph = &outcome.best;
    eprintln!(
        "best slack {} at {}",
        randic_core::report::format_float(outcome.state.best_slack),
        serialize_graph6(best).unwrap_or_default()
    );
    Ok(if outcome.state.best_slack < -output.tol { Status::Violation } else { Status::Clean })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { input, strict, output } => run_check(input.as_ref(), *strict, output),
        Command::Enumerate { n, min_degree, include_disconnected, out } => {
            run_enumerate(*n, *min_degree, *include_disconnected, out.as_ref())
        }
        Command::Survey { n_max, output } => run_survey(*n_max, output),
        Command::Hunt { n, min_degree, claim, budget, seed, trace, output } => {
            run_hunt(*n, *min_degree, *claim, *budget, *seed, trace.as_ref(), output)
        }
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
