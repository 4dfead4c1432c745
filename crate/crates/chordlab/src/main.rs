use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chordlab::io::{read_graph_file, stream_corpus, write_graph6, IoError};
use chordlab::lemmas::{run_lemmas, Which};
use chordlab::report::{run_verify, write_csv, write_json, Mode};
use chordlab_core::enumeration::enumerate_cubic;
use chordlab_core::extender::{extend_path, extend_path_adjacent, precheck, Classification};
use chordlab_core::search::internal_bound_vertices;
use chordlab_core::{Error as CoreError, Path, VertexSet};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chordlab", version, about = "Bound vertices of longest paths in cubic graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every connected cubic graph on n vertices as graph6 lines.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a graph6 corpus against a bound-vertex or chord threshold.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Add per-graph wall time to the report.
        #[arg(long)]
        timings: bool,
    },
    /// Build a longer path with the same ends and print it.
    Extend {
        /// Edge list or single graph6 record.
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertices, e.g. "0,3,1,4".
        #[arg(long)]
        path: String,
        /// Write the JSON trace here instead of stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Run the seeded lemma suites.
    Lemmas {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        seeds: u64,
        /// Inclusive range of k, e.g. 2..4.
        #[arg(long, default_value = "2..4")]
        k: String,
    },
}

enum Fail {
    Violation(String),
    Usage(String),
    Io(String),
}

impl From<IoError> for Fail {
    fn from(e: IoError) -> Fail {
        Fail::Io(e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Fail {
        Fail::Io(e.to_string())
    }
}

fn base_seed() -> Result<u64, Fail> {
    match std::env::var("CHORDLAB_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Fail::Usage(format!("CHORDLAB_SEED must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(0),
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Fail> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_path_spec(spec: &str) -> Result<Vec<usize>, Fail> {
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Fail::Usage(format!("bad path spec `{spec}`: `{t}` is not a vertex")))
        })
        .collect()
}

fn parse_k_range(s: &str) -> Result<(usize, usize), Fail> {
    let bad = || Fail::Usage(format!("--k expects MIN..MAX with 2 <= MIN <= MAX, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a < 2 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn generate(n: usize, out: Option<PathBuf>) -> Result<(), Fail> {
    if !(4..=14).contains(&n) || n % 2 == 1 {
        return Err(Fail::Usage(format!("--n must be even and between 4 and 14, got {n}")));
    }
    let graphs = enumerate_cubic(n).map_err(|e| Fail::Usage(e.to_string()))?;
    let mut w = output(out.as_ref())?;
    for g in &graphs {
        writeln!(w, "{}", write_graph6(g)?)?;
    }
    w.flush()?;
    log::info!("{} graphs on {n} vertices", graphs.len());
    Ok(())
}

fn verify(mode: Mode, input: PathBuf, jobs: usize, format: Format, timings: bool) -> Result<(), Fail> {
    let f = File::open(&input).map_err(|e| Fail::Io(format!("{}: {e}", input.display())))?;
    let corpus = stream_corpus(BufReader::new(f)).collect::<Result<Vec<_>, _>>()?;
    let report = run_verify(&corpus, mode, jobs, timings)?;
    let out = BufWriter::new(io::stdout().lock());
    match format {
        Format::Json => write_json(&report, out)?,
        Format::Csv => write_csv(&report, out)?,
    }
    log::info!(
        "{} graphs, {} checked, {} violations",
        report.graphs,
        report.checked,
        report.violations
    );
    if report.passed() {
        Ok(())
    } else {
        Err(Fail::Violation(format!("{} graphs fall below the threshold", report.violations)))
    }
}

fn core_fail(e: CoreError) -> Fail {
    match e {
        CoreError::Invariant { .. } => Fail::Violation(e.to_string()),
        _ => Fail::Usage(e.to_string()),
    }
}

fn bound_list(set: VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn extend(graph: PathBuf, spec: String, trace_out: Option<PathBuf>) -> Result<(), Fail> {
    let vs = parse_path_spec(&spec)?;
    let g = read_graph_file(&graph)?;
    let p = Path::new(&g, vs).map_err(core_fail)?;
    let (q, trace) = match precheck(&g, &p).map_err(core_fail)? {
        Classification::Extendable => extend_path(&g, &p).map_err(core_fail)?,
        Classification::SpanningPath => {
            let bound = bound_list(internal_bound_vertices(&g, &p));
            return Err(Fail::Usage(format!(
                "the path spans every vertex; internal bound vertices at v={bound}"
            )));
        }
        Classification::HasBoundVertex(bound) => {
            let refuse = || Fail::Usage(format!("the path has internal bound vertices at v={}", bound_list(bound)));
            if !g.has_edge(p.start(), p.end()) {
                return Err(refuse());
            }
            match extend_path_adjacent(&g, &p) {
                Ok(r) => r,
                Err(CoreError::Hypothesis(_)) => return Err(refuse()),
                Err(e) => return Err(core_fail(e)),
            }
        }
    };
    let line: Vec<String> = q.vertices().iter().map(|v| v.to_string()).collect();
    let json = serde_json::to_string_pretty(&trace).map_err(|e| Fail::Io(e.to_string()))?;
    let mut stdout = io::stdout().lock();
    writeln!(stdout, "{}", line.join(","))?;
    match trace_out {
        Some(path) => std::fs::write(&path, json + "\n")?,
        None => writeln!(stdout, "{json}")?,
    }
    Ok(())
}

fn lemmas(which: Which, seeds: u64, k: String) -> Result<(), Fail> {
    let range = parse_k_range(&k)?;
    let report = run_lemmas(which, seeds, base_seed()?, range);
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &report).map_err(|e| Fail::Io(e.to_string()))?;
    writeln!(out)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Fail::Violation(format!("{} of {} instances failed", report.failures.len(), report.instances)))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Generate { n, out } => generate(n, out),
        Cmd::Verify {
            mode,
            input,
            jobs,
            format,
            timings,
        } => verify(mode, input, jobs, format, timings),
        Cmd::Extend { graph, path, trace } => extend(graph, path, trace),
        Cmd::Lemmas { which, seeds, k } => lemmas(which, seeds, k),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Violation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
