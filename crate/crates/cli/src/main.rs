//! `hhkit` command-line front end.
//!
//! Exit codes: 0 success or verified, 1 a violation was found (or the
//! sequence is not graphical), 2 usage or parse error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hhkit::analysis::{analyze_lines, MaxineMode, CSV_HEADER};
use hhkit::degseq::{hh_reduce, DegreeSequence};
use hhkit::graph6::emit_graph6;
use hhkit::independence::MaxineStrategy;
use hhkit::verify::{self, enumerate_graphs, TheoremId, ENUMERATION_MAX_ORDER};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hhkit",
    version,
    about = "Havel-Hakimi residues, the strong Havel-Hakimi class, and Maxine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the Havel-Hakimi reduction on a comma-separated sequence.
    Residue {
        /// e.g. 3,2,2,2,2,1
        sequence: String,
        /// Print the trace as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Analyze a stream of graph6 lines.
    Analyze {
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Strategy::AllBranches)]
        strategy: Strategy,
        /// Seed for `--strategy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a theorem on every graph up to a given order.
    Verify {
        /// One of: forb-equivalence, minimal-forbidden, residue-bounds,
        /// r-equals-alpha-S, lemma-c4-p5, class-chain, maxine-c4-p5-free.
        theorem: String,
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one graph6 line per isomorphism class of the given orders.
    Enumerate {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Only this order instead of 1..=max-n.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    First,
    Last,
    Random,
    AllBranches,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn parse_sequence(s: &str) -> Result<DegreeSequence> {
    let terms = s
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("{t:?} is not a nonnegative integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeSequence::new(terms))
}

fn residue(sequence: &str, json: bool) -> Result<u8> {
    let trace = hh_reduce(&parse_sequence(sequence)?);
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer_pretty(&mut out, &trace)?;
        writeln!(out)?;
    } else {
        for line in trace.lines() {
            writeln!(out, "{line}")?;
        }
    }
    Ok(if trace.is_graphical() {
        0
    } else {
        EXIT_VIOLATION
    })
}

fn analyze(
    input: &Option<PathBuf>,
    format: Format,
    out: &Option<PathBuf>,
    strategy: Strategy,
    seed: u64,
) -> Result<u8> {
    let text = match input {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let mode = match strategy {
        Strategy::First => MaxineMode::Single(MaxineStrategy::FirstIndex),
        Strategy::Last => MaxineMode::Single(MaxineStrategy::LastIndex),
        Strategy::Random => MaxineMode::Single(MaxineStrategy::SeededRandom(seed)),
        Strategy::AllBranches => MaxineMode::AllBranches,
    };
    let results = analyze_lines(&text, mode);

    let mut sink = output(out)?;
    let mut csv = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            Some(w)
        }
        Format::Json => None,
    };
    let mut status = 0;
    for result in &results {
        match result {
            Ok(record) => {
                if let Err(msg) = record.check_invariants() {
                    eprintln!("{}: {msg}", record.graph6);
                    status = status.max(EXIT_VIOLATION);
                }
                match csv.as_mut() {
                    Some(w) => w.write_record(record.csv_row())?,
                    None => {
                        serde_json::to_writer(&mut sink, record)?;
                        writeln!(sink)?;
                    }
                }
            }
            Err(e) => {
                eprintln!("{e}");
                status = EXIT_USAGE;
            }
        }
    }
    if let Some(w) = csv {
        sink.write_all(&w.into_inner()?)?;
    }
    sink.flush()?;
    Ok(status)
}

fn verify_cmd(theorem: &str, max_n: usize, out: &Option<PathBuf>) -> Result<u8> {
    let id: TheoremId = theorem.parse()?;
    let report = verify::verify(id, max_n)?;
    let mut sink = output(out)?;
    serde_json::to_writer_pretty(&mut sink, &report)?;
    writeln!(sink)?;
    sink.flush()?;
    if !report.passed {
        eprintln!(
            "{}: {} violation(s) up to n = {max_n}",
            report.theorem_id,
            report.violations.len()
        );
    }
    Ok(if report.passed { 0 } else { EXIT_VIOLATION })
}

fn enumerate(max_n: usize, exact: bool, out: &Option<PathBuf>) -> Result<u8> {
    if !(1..=ENUMERATION_MAX_ORDER).contains(&max_n) {
        bail!("--max-n must be in 1..={ENUMERATION_MAX_ORDER}");
    }
    let orders = if exact { max_n..=max_n } else { 1..=max_n };
    let mut sink = output(out)?;
    for n in orders {
        for g in enumerate_graphs(n)?.iter() {
            writeln!(sink, "{}", emit_graph6(g))?;
        }
    }
    sink.flush()?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Residue { sequence, json } => residue(sequence, *json),
        Command::Analyze {
            input,
            format,
            out,
            strategy,
            seed,
        } => analyze(input, *format, out, *strategy, *seed),
        Command::Verify {
            theorem,
            max_n,
            out,
        } => verify_cmd(theorem, *max_n, out),
        Command::Enumerate { max_n, exact, out } => enumerate(*max_n, *exact, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
