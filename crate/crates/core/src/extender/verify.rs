//! Exhaustive checks of the bound-vertex thresholds and of chords on longest cycles.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::check_host;
use crate::error::Result;
use crate::graph::Graph;
use crate::search::{chords, internal_bound_vertices, longest_cycles, longest_xy_paths, SearchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    /// Every pair of distinct vertices, 2-connected graphs, threshold 1.
    AllPairs,
    /// Every edge, 3-connected graphs, threshold 2.
    Adjacent,
}

impl PairMode {
    pub fn threshold(self) -> usize {
        match self {
            PairMode::AllPairs => 1,
            PairMode::Adjacent => 2,
        }
    }

    fn connectivity(self) -> usize {
        match self {
            PairMode::AllPairs => 2,
            PairMode::Adjacent => 3,
        }
    }
}

/// A longest `(x,y)`-path with its internal bound vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
    pub bound: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub mode: PairMode,
    pub threshold: usize,
    pub pairs: usize,
    /// Fewest internal bound vertices over every longest path of every pair.
    pub min_bound: Option<usize>,
    /// A longest path attaining `min_bound`.
    pub worst: Option<PairWitness>,
    /// Longest paths below the threshold.
    pub violations: Vec<PairWitness>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every longest `(x,y)`-path of every pair (or every edge) of `g`.
pub fn verify_bound_vertices(g: &Graph, mode: PairMode) -> Result<BoundReport> {
    check_host(g, mode.connectivity())?;
    let pairs: Vec<(usize, usize)> = match mode {
        PairMode::AllPairs => (0..g.order())
            .flat_map(|x| ((x + 1)..g.order()).map(move |y| (x, y)))
            .collect(),
        PairMode::Adjacent => g.edges().to_vec(),
    };
    let threshold = mode.threshold();
    let mut report = BoundReport {
        mode,
        threshold,
        pairs: pairs.len(),
        min_bound: None,
        worst: None,
        violations: Vec::new(),
    };
    for &(x, y) in &pairs {
        let rep = longest_xy_paths(g, x, y, SearchMode::All)?;
        for (p, b) in rep.witnesses.iter().zip(&rep.bound_sets) {
            let witness = || PairWitness {
                x,
                y,
                path: p.vertices().to_vec(),
                bound: b.iter().collect(),
            };
            if report.min_bound.is_none_or(|m| b.len() < m) {
                report.min_bound = Some(b.len());
                report.worst = Some(witness());
            }
            if b.len() < threshold {
                report.violations.push(witness());
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordReport {
    pub circumference: usize,
    pub longest_cycles: usize,
    /// Fewest chords on a longest cycle.
    pub min_chords: usize,
    /// Fewest internal bound vertices on a longest cycle opened at one of its
    /// edges; at least two whenever every longest cycle has two chords.
    pub min_opened_bound: usize,
    /// A longest cycle attaining `min_chords`.
    pub witness: Vec<usize>,
}

impl ChordReport {
    pub fn passed(&self) -> bool {
        self.min_chords >= 2 && self.min_opened_bound >= 2
    }
}

/// Counts chords on every longest cycle of the 3-connected cubic graph `g`.
pub fn verify_chords(g: &Graph) -> Result<ChordReport> {
    check_host(g, 3)?;
    let cycles = longest_cycles(g, SearchMode::All)?;
    let mut min_chords = usize::MAX;
    let mut min_opened_bound = usize::MAX;
    let mut witness = Vec::new();
    for c in &cycles {
        let k = chords(g, c).len();
        if k < min_chords {
            min_chords = k;
            witness = c.vertices().to_vec();
        }
        for (u, v) in c.edges() {
            let p = c.open_at(u, v).expect("cycle edge");
            min_opened_bound = min_opened_bound.min(internal_bound_vertices(g, &p).len());
        }
    }
    Ok(ChordReport {
        circumference: cycles.first().map_or(0, |c| c.len()),
        longest_cycles: cycles.len(),
        min_chords,
        min_opened_bound,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn small_named_graphs_pass() {
        for g in [named::complete(4), named::k33(), named::prism(), named::petersen()] {
            let r = verify_bound_vertices(&g, PairMode::AllPairs).unwrap();
            assert!(r.passed() && r.min_bound >= Some(1));
            let r = verify_bound_vertices(&g, PairMode::Adjacent).unwrap();
            assert!(r.passed() && r.min_bound >= Some(2));
            let r = verify_chords(&g).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn rejects_low_connectivity() {
        let g = named::double_diamond();
        assert!(verify_bound_vertices(&g, PairMode::AllPairs).is_ok());
        assert!(verify_bound_vertices(&g, PairMode::Adjacent).is_err());
        assert!(verify_chords(&g).is_err());
    }
}
