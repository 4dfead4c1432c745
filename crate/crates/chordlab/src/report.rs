//! Verification rows and their JSON / CSV rendering.

use std::io::Write;
use std::time::Instant;

use chordlab_core::extender::{verify_chords, verify_bound_vertices, PairMode};
use chordlab_core::{connectivity_at_least, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{write_graph6, IoError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every pair, 2-connected graphs, at least one internal bound vertex.
    #[value(name = "zhan2")]
    #[serde(rename = "zhan2")]
    AllPairs,
    /// Every edge, 3-connected graphs, at least two internal bound vertices.
    #[value(name = "zhan3adj")]
    #[serde(rename = "zhan3adj")]
    AdjacentPairs,
    /// Every longest cycle of a 3-connected graph has two chords.
    Chords,
}

impl Mode {
    pub fn connectivity(self) -> u8 {
        match self {
            Mode::AllPairs => 2,
            Mode::AdjacentPairs | Mode::Chords => 3,
        }
    }

    pub fn threshold(self) -> usize {
        match self {
            Mode::AllPairs => 1,
            Mode::AdjacentPairs | Mode::Chords => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Violation,
    /// Not cubic, or below the mode's connectivity gate.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    /// 1-based line in the input corpus.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    /// Largest k in 0..=3 with the graph k-connected.
    pub connectivity: u8,
    pub cubic: bool,
    pub mode: Mode,
    /// Minimum internal bound-vertex count, or minimum chord count.
    pub value: Option<usize>,
    pub status: Status,
    /// Path or cycle attaining `value` when it falls below the threshold.
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub mode: Mode,
    pub threshold: usize,
    pub graphs: usize,
    pub checked: usize,
    pub violations: usize,
    pub rows: Vec<Row>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn connectivity_class(g: &Graph) -> u8 {
    (1..=3).rev().find(|&k| connectivity_at_least(g, k as usize)).unwrap_or(0)
}

/// Verifies one graph. `timed` adds the wall time, which makes reports
/// differ between runs.
pub fn verify_graph(line: usize, g: &Graph, mode: Mode, timed: bool) -> Result<Row, IoError> {
    let start = Instant::now();
    let connectivity = connectivity_class(g);
    let cubic = g.is_cubic() && g.is_simple();
    let mut row = Row {
        line,
        graph6: write_graph6(g)?,
        n: g.order(),
        connectivity,
        cubic,
        mode,
        value: None,
        status: Status::Skipped,
        witness: None,
        wall_ms: None,
    };
    if cubic && connectivity >= mode.connectivity() {
        let (value, witness) = match mode {
            Mode::AllPairs | Mode::AdjacentPairs => {
                let pm = if mode == Mode::AllPairs { PairMode::AllPairs } else { PairMode::Adjacent };
                let r = verify_bound_vertices(g, pm)?;
                (r.min_bound.unwrap_or(0), r.worst.map(|w| w.path))
            }
            Mode::Chords => {
                let r = verify_chords(g)?;
                (r.min_chords, Some(r.witness))
            }
        };
        row.value = Some(value);
        if value >= mode.threshold() {
            row.status = Status::Pass;
        } else {
            row.status = Status::Violation;
            row.witness = witness;
        }
    }
    if timed {
        row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(row)
}

/// Verifies a corpus on `jobs` threads. Rows keep the input order.
pub fn run_verify(corpus: &[(usize, Graph)], mode: Mode, jobs: usize, timed: bool) -> Result<RunReport, IoError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| IoError::Io(std::io::Error::other(e)))?;
    let rows = pool.install(|| {
        corpus
            .par_iter()
            .map(|(line, g)| verify_graph(*line, g, mode, timed))
            .collect::<Result<Vec<Row>, IoError>>()
    })?;
    Ok(RunReport {
        mode,
        threshold: mode.threshold(),
        graphs: rows.len(),
        checked: rows.iter().filter(|r| r.status != Status::Skipped).count(),
        violations: rows.iter().filter(|r| r.status == Status::Violation).count(),
        rows,
    })
}

pub fn write_json<W: Write>(report: &RunReport, mut out: W) -> Result<(), IoError> {
    serde_json::to_writer_pretty(&mut out, report).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    line: usize,
    graph6: &'a str,
    n: usize,
    connectivity: u8,
    cubic: bool,
    mode: Mode,
    value: Option<usize>,
    status: Status,
    witness: String,
    wall_ms: Option<f64>,
}

pub fn write_csv<W: Write>(report: &RunReport, out: W) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    for r in &report.rows {
        let witness = r
            .witness
            .as_ref()
            .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        w.serialize(CsvRow {
            line: r.line,
            graph6: &r.graph6,
            n: r.n,
            connectivity: r.connectivity,
            cubic: r.cubic,
            mode: r.mode,
            value: r.value,
            status: r.status,
            witness,
            wall_ms: r.wall_ms,
        })
        .map_err(|e| IoError::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}
