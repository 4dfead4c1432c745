//! Path extension: given an `(x,y)`-path of a 2-connected cubic graph with no
//! internal bound vertex, build a strictly longer `(x,y)`-path.
//!
//! The pipeline tries, in order: a direct splice when every off-path component
//! touches an end of the path, a detour when a component has two selected
//! attachments that are consecutive on the path, and otherwise the reduction
//! (3-coloring of an auxiliary cycle-plus-triangles graph, contraction to a
//! reduced graph whose path closes to a Hamilton cycle, a second cycle through
//! the closing edge covering every odd vertex, and lifting back). When the lift
//! is no longer than the closed path, the matching step finishes the job.
//!
//! [`extend_path_adjacent`] handles closed paths with exactly one chord, for
//! 3-connected graphs. Every run records an [`ExtensionTrace`].

mod adjacent;
mod matching;
mod paths;
mod reduce;
mod verify;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{pick_color_class, three_color_cycle_plus};
use crate::error::{invariant, Error, Result};
use crate::graph::{build_graph, components_after_deletion, connectivity_at_least, Graph};
use crate::search::{for_each_edge_cycle_through, internal_bound_vertices, is_valid_path, Cycle, EdgeCycle, Path};
use crate::vertex_set::VertexSet;

pub use adjacent::extend_path_adjacent;
pub(crate) use adjacent::closed_chords;
pub use matching::{matching_step, MatchingOutcome};
pub use paths::host_path;
pub use reduce::{
    build_reduced_g2, compute_stats, find_odd_cover_cycle, lift_to_host, BlueSubpathStats, EdgeColor, EdgeOrigin,
    Lifted, ReducedGraph, TwoSubpath,
};
pub use verify::{verify_chords, verify_bound_vertices, ChordReport, PairWitness, PairMode, BoundReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// Internal bound vertices present.
    HasBoundVertex(VertexSet),
    /// The path covers every vertex, so every internal vertex is bound.
    SpanningPath,
    /// No internal bound vertex and some vertex is off the path.
    Extendable,
}

/// Three chosen attachments of an off-path component, as host vertices; `w` is
/// the one in the chosen color class once a class has been picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentTriple {
    pub component_index: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl AttachmentTriple {
    pub fn as_array(&self) -> [usize; 3] {
        [self.u, self.v, self.w]
    }
}

/// A component of `G - V(P)` with its attachment positions on `P` (sorted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffPathComponent {
    pub vertices: VertexSet,
    pub attachments: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    /// Every component touches an end of the path and a splice was found, or
    /// `certificate` names a component attached only to the path interior.
    ComponentClaim {
        components: usize,
        certificate: Option<usize>,
        splice: Option<String>,
    },
    /// A component with two consecutive attachments replaced the edge between them.
    Detour { component: usize, edge: (usize, usize) },
    /// Color class and reduced graph (vertex `j` is the `j`-th path vertex).
    Reduce {
        a: Vec<usize>,
        triples: Vec<AttachmentTriple>,
        reduced_order: usize,
        reduced_edges: Vec<(usize, usize, EdgeColor)>,
    },
    OddCoverCycle { cycle: Vec<usize> },
    Stats(BlueSubpathStats),
    Lift { closed_len: usize, lifted_len: usize, lower_bound: usize },
    MatchingStep {
        compressed_order: usize,
        matching: usize,
        hypotheses_hold: bool,
        cycle_len: usize,
    },
    /// One-chord configuration, the two added edges disjoint.
    #[serde(rename = "case-1")]
    Case1(AdjacentReport),
    /// One-chord configuration, the two added edges sharing a vertex.
    #[serde(rename = "case-2")]
    Case2(AdjacentReport),
}

/// Bookkeeping of a one-chord run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacentReport {
    /// Far end of the chord at `x`.
    pub w: usize,
    /// `a`: path neighbor of `x`; `b`, `c`: path neighbors of `w`.
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub color_class: Vec<usize>,
    pub triples: Vec<AttachmentTriple>,
    pub second_cycle: Vec<usize>,
    pub exchange_vertex: usize,
    pub q: usize,
    pub p: usize,
    pub lifted_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionTrace {
    pub input: Vec<usize>,
    pub steps: Vec<TraceStep>,
    pub output: Vec<usize>,
}

impl ExtensionTrace {
    fn new(input: &[usize]) -> Self {
        ExtensionTrace {
            input: input.to_vec(),
            steps: Vec::new(),
            output: Vec::new(),
        }
    }

    pub fn step_names(&self) -> Vec<&'static str> {
        self.steps
            .iter()
            .map(|s| match s {
                TraceStep::ComponentClaim { .. } => "component-claim",
                TraceStep::Detour { .. } => "detour",
                TraceStep::Reduce { .. } => "reduce",
                TraceStep::OddCoverCycle { .. } => "odd-cover-cycle",
                TraceStep::Stats(_) => "stats",
                TraceStep::Lift { .. } => "lift",
                TraceStep::MatchingStep { .. } => "matching-step",
                TraceStep::Case1(_) => "case-1",
                TraceStep::Case2(_) => "case-2",
            })
            .collect()
    }
}

fn check_host(g: &Graph, k: usize) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Hypothesis("graph has parallel edges".into()));
    }
    if !g.is_cubic() {
        return Err(Error::Hypothesis("graph is not cubic".into()));
    }
    if !connectivity_at_least(g, k) {
        return Err(Error::Hypothesis(format!("graph is not {k}-connected")));
    }
    Ok(())
}

/// Sorts an `(x,y)`-path of a 2-connected cubic graph into one of the three
/// [`Classification`] outcomes. An extendable path is checked to be induced
/// apart from a possible edge `xy`.
pub fn precheck(g: &Graph, p: &Path) -> Result<Classification> {
    check_host(g, 2)?;
    if !p.is_valid_in(g) || p.is_empty() {
        return Err(Error::InvalidPath(format!("{:?} is not a path with two ends", p.vertices())));
    }
    if p.vertices().len() == g.order() {
        return Ok(Classification::SpanningPath);
    }
    let bound = internal_bound_vertices(g, p);
    if !bound.is_empty() {
        return Ok(Classification::HasBoundVertex(bound));
    }
    let vs = p.vertices();
    let last = vs.len() - 1;
    for i in 0..vs.len() {
        for j in (i + 2)..vs.len() {
            if g.has_edge(vs[i], vs[j]) && !(i == 0 && j == last) {
                return Err(invariant(
                    "precheck",
                    format!("chord {}-{} on a path without bound vertices", vs[i], vs[j]),
                ));
            }
        }
    }
    Ok(Classification::Extendable)
}

pub(crate) fn off_path_components(g: &Graph, path: &[usize]) -> Vec<OffPathComponent> {
    let on: VertexSet = path.iter().collect();
    components_after_deletion(g, on)
        .components
        .into_iter()
        .map(|vertices| {
            let touch = g.boundary(vertices).intersection(on);
            let attachments = (0..path.len()).filter(|&i| touch.contains(path[i])).collect();
            OffPathComponent { vertices, attachments }
        })
        .collect()
}

/// Replaces the path edge at positions `i, i+1` by a path through `comp`.
fn detour(g: &Graph, path: &[usize], i: usize, comp: VertexSet) -> Result<Vec<usize>> {
    let d = host_path(g, path[i], path[i + 1], comp, 2)
        .ok_or_else(|| invariant("detour", format!("no path through {comp:?} for edge {}-{}", path[i], path[i + 1])))?;
    Ok(paths::splice(path, i, &d))
}

/// Outcome of [`find_direct_extension`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectOutcome {
    /// A longer path, with a short description of the splice.
    Extended(Vec<usize>, &'static str),
    /// Index of a component attached only to the interior of the path.
    Interior(usize),
}

/// If every off-path component touches an end of the path, splices in a longer
/// path; otherwise names a component attached only to the path interior.
pub fn find_direct_extension(g: &Graph, p: &Path) -> Result<DirectOutcome> {
    let path = p.vertices();
    let comps = off_path_components(g, path);
    direct_extension(g, path, &comps)
}

fn direct_extension(g: &Graph, path: &[usize], comps: &[OffPathComponent]) -> Result<DirectOutcome> {
    let last = path.len() - 1;
    if last == 1 {
        let (x, y) = (path[0], path[1]);
        let rest = g.vertices().difference(VertexSet::from_iter([x, y]));
        let q = host_path(g, x, y, rest, 2).ok_or_else(|| invariant("component-claim", "no second x-y path"))?;
        return Ok(DirectOutcome::Extended(q, "second path between adjacent ends"));
    }
    if let Some(i) = comps
        .iter()
        .position(|c| !c.attachments.contains(&0) && !c.attachments.contains(&last))
    {
        return Ok(DirectOutcome::Interior(i));
    }
    let touching = |pos: usize| comps.iter().position(|c| c.attachments.contains(&pos));
    let (u, v) = (1, last - 1);
    let hi = touching(u).ok_or_else(|| invariant("component-claim", "second path vertex is bound"))?;
    if comps[hi].attachments.contains(&0) {
        return Ok(DirectOutcome::Extended(detour(g, path, 0, comps[hi].vertices)?, "x and u share a component"));
    }
    if comps[hi].attachments.contains(&v) {
        return Ok(DirectOutcome::Extended(detour(g, path, v, comps[hi].vertices)?, "v and y share a component"));
    }
    let hj = touching(v).ok_or_else(|| invariant("component-claim", "second-last path vertex is bound"))?;
    if comps[hj].attachments.contains(&last) {
        return Ok(DirectOutcome::Extended(detour(g, path, v, comps[hj].vertices)?, "v and y share a component"));
    }
    if comps[hj].attachments.contains(&u) {
        return Ok(DirectOutcome::Extended(detour(g, path, 0, comps[hj].vertices)?, "x and u share a component"));
    }
    // x - H_j - v, back along the path to u, then u - H_i - y
    let (x, y) = (path[0], path[last]);
    let pxv = host_path(g, x, path[v], comps[hj].vertices, 2)
        .ok_or_else(|| invariant("component-claim", "no x-v path through its component"))?;
    let puy = host_path(g, path[u], y, comps[hi].vertices, 2)
        .ok_or_else(|| invariant("component-claim", "no u-y path through its component"))?;
    let mut out = pxv;
    let back: Vec<usize> = (u..=v).rev().map(|i| path[i]).collect();
    paths::append(&mut out, &back);
    paths::append(&mut out, &puy);
    Ok(DirectOutcome::Extended(out, "x-v and u-y through two components"))
}

fn finish(g: &Graph, input: &[usize], out: Vec<usize>, mut trace: ExtensionTrace) -> Result<(Path, ExtensionTrace)> {
    let (x, y) = (input[0], input[input.len() - 1]);
    if !is_valid_path(g, &out) || out[0] != x || out[out.len() - 1] != y {
        return Err(invariant("output", format!("{out:?} is not an ({x},{y})-path")));
    }
    if out.len() <= input.len() {
        return Err(invariant("output", format!("{out:?} is not longer than the input")));
    }
    trace.output = out.clone();
    Ok((Path::new(g, out)?, trace))
}

/// The three lowest-position attachments of every component in `which` that
/// has at least three.
fn select_triples(path: &[usize], comps: &[OffPathComponent], which: impl Fn(usize) -> bool) -> Vec<AttachmentTriple> {
    comps
        .iter()
        .enumerate()
        .filter(|&(i, c)| which(i) && c.attachments.len() >= 3)
        .map(|(i, c)| AttachmentTriple {
            component_index: i,
            u: path[c.attachments[0]],
            v: path[c.attachments[1]],
            w: path[c.attachments[2]],
        })
        .collect()
}

/// Positions `(i, i+1)` of two path-consecutive vertices in some triple.
fn consecutive_pair(pos: &[Option<usize>], triples: &[AttachmentTriple]) -> Option<(usize, usize)> {
    for t in triples {
        let mut ps: Vec<usize> = t.as_array().iter().map(|&v| pos[v].expect("on path")).collect();
        ps.sort_unstable();
        for k in 0..2 {
            if ps[k] + 1 == ps[k + 1] {
                return Some((t.component_index, ps[k]));
            }
        }
    }
    None
}

pub(crate) fn positions(n: usize, seq: &[usize]) -> Vec<Option<usize>> {
    let mut pos = alloc::vec![None; n];
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = Some(i);
    }
    pos
}

/// Colors the cycle `seq` (closed by its first and last vertex) plus one
/// triangle per triple, with parallel edges merged, and picks the class
/// avoiding both ends of `seq`. Triples come back relabeled so that `w` is the
/// class member.
pub(crate) fn color_cycle(seq: &[usize], triples: &mut [AttachmentTriple]) -> Result<VertexSet> {
    let m = seq.len();
    let local = |v: usize| seq.iter().position(|&s| s == v).expect("triple on the cycle");
    let mut keys: Vec<(usize, usize)> = (0..m).map(|i| crate::graph::edge_key(i, (i + 1) % m)).collect();
    for t in triples.iter() {
        let [a, b, c] = t.as_array().map(local);
        keys.extend([(a, b), (b, c), (a, c)].map(|(p, q)| crate::graph::edge_key(p, q)));
    }
    keys.sort_unstable();
    keys.dedup();
    let g1 = build_graph(m, &keys)?;
    let cyc: Vec<usize> = (0..m).collect();
    let c = Cycle::new(&g1, &cyc)?;
    let col = three_color_cycle_plus(&g1, &c)?;
    let mut local_triples: Vec<[usize; 3]> = triples.iter().map(|t| t.as_array().map(local)).collect();
    let a_local = pick_color_class(&col, VertexSet::from_iter([0, m - 1]), &mut local_triples)?;
    for (t, lt) in triples.iter_mut().zip(&local_triples) {
        t.u = seq[lt[0]];
        t.v = seq[lt[1]];
        t.w = seq[lt[2]];
    }
    Ok(a_local.iter().map(|i| seq[i]).collect())
}

/// State after the reduced graph is built: the path, its off-path components,
/// and the reduced multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub path: Vec<usize>,
    pub comps: Vec<OffPathComponent>,
    pub a: VertexSet,
    pub triples: Vec<AttachmentTriple>,
    pub red: ReducedGraph,
}

enum Early {
    Done(Vec<usize>),
    Reduced(Box<Reduction>),
}

fn classify_for_extension(g: &Graph, p: &Path) -> Result<()> {
    match precheck(g, p)? {
        Classification::Extendable => Ok(()),
        Classification::SpanningPath => {
            Err(Error::Hypothesis("the path spans every vertex; all internal vertices are bound".into()))
        }
        Classification::HasBoundVertex(b) => {
            let list: Vec<usize> = b.iter().collect();
            Err(Error::Hypothesis(format!("internal P-bound vertex present at v={list:?}")))
        }
    }
}

fn early_steps(g: &Graph, p: &Path, trace: &mut ExtensionTrace) -> Result<Early> {
    classify_for_extension(g, p)?;
    let path = p.vertices();
    let comps = off_path_components(g, path);
    for (i, c) in comps.iter().enumerate() {
        if c.attachments.len() < 2 {
            return Err(invariant("component-claim", format!("component {i} has a single attachment")));
        }
    }
    match direct_extension(g, path, &comps)? {
        DirectOutcome::Extended(out, how) => {
            trace.steps.push(TraceStep::ComponentClaim {
                components: comps.len(),
                certificate: None,
                splice: Some(how.into()),
            });
            return Ok(Early::Done(out));
        }
        DirectOutcome::Interior(i) => trace.steps.push(TraceStep::ComponentClaim {
            components: comps.len(),
            certificate: Some(i),
            splice: None,
        }),
    }
    let last = path.len() - 1;
    let pos = positions(g.order(), path);
    let interior = |i: usize| !comps[i].attachments.contains(&0) && !comps[i].attachments.contains(&last);
    let mut triples = select_triples(path, &comps, interior);
    if let Some((ci, i)) = consecutive_pair(&pos, &triples) {
        trace.steps.push(TraceStep::Detour {
            component: ci,
            edge: (path[i], path[i + 1]),
        });
        return Ok(Early::Done(detour(g, path, i, comps[ci].vertices)?));
    }
    let a = if triples.is_empty() {
        VertexSet::EMPTY
    } else {
        color_cycle(&path[1..last], &mut triples)?
    };
    let red = build_reduced_g2(g, path, &comps, a, &triples)?;
    trace.steps.push(TraceStep::Reduce {
        a: a.iter().collect(),
        triples: triples.clone(),
        reduced_order: red.g.order(),
        reduced_edges: (0..red.g.size())
            .map(|e| {
                let (s, t) = red.g.edge(e);
                (s, t, red.color(e))
            })
            .collect(),
    });
    Ok(Early::Reduced(Box::new(Reduction {
        path: path.to_vec(),
        comps,
        a,
        triples,
        red,
    })))
}

/// Runs the steps up to the reduced graph. `None` when a direct splice or a
/// detour already extends `p`.
pub fn reduce_path(g: &Graph, p: &Path) -> Result<Option<Reduction>> {
    let mut scratch = ExtensionTrace::new(p.vertices());
    Ok(match early_steps(g, p, &mut scratch)? {
        Early::Done(_) => None,
        Early::Reduced(r) => Some(*r),
    })
}

/// Stats, lift and (in the tight case) the matching step for a chosen second
/// cycle `c_prime` of the reduced graph.
fn from_second_cycle(g: &Graph, r: &Reduction, c_prime: &EdgeCycle, trace: &mut ExtensionTrace) -> Result<Vec<usize>> {
    let red = &r.red;
    trace.steps.push(TraceStep::OddCoverCycle {
        cycle: c_prime.vertices.iter().map(|&j| red.host[j]).collect(),
    });
    let stats = compute_stats(red, c_prime)?;
    trace.steps.push(TraceStep::Stats(stats));
    let lifted = lift_to_host(g, red, &r.comps, c_prime)?;
    let closed_len = r.path.len();
    let lower = (closed_len + 2 * stats.q + 3 * stats.c).saturating_sub(stats.k);
    let lifted_len = lifted.path.len();
    trace.steps.push(TraceStep::Lift {
        closed_len,
        lifted_len,
        lower_bound: lower,
    });
    if lifted_len < lower {
        return Err(invariant(
            "lift",
            format!("lifted cycle has length {lifted_len}, below the bound {lower}"),
        ));
    }
    if lifted_len > closed_len {
        return Ok(lifted.path);
    }
    if !stats.is_tight() {
        return Err(invariant("lift", format!("lift is not longer but stats are not tight: {stats:?}")));
    }
    let outcome = matching_step(g, &r.path, &r.comps, &lifted)?;
    trace.steps.push(TraceStep::MatchingStep {
        compressed_order: outcome.compressed_order,
        matching: outcome.matching,
        hypotheses_hold: outcome.hypotheses_hold,
        cycle_len: outcome.path.len(),
    });
    Ok(outcome.path)
}

/// Finishes an extension from a reduction with a caller-chosen second cycle,
/// which must pass through the closing edge and every odd-degree vertex.
pub fn extend_with_cycle(g: &Graph, r: &Reduction, c_prime: &EdgeCycle) -> Result<(Path, ExtensionTrace)> {
    let odd: VertexSet = (0..r.red.g.order()).filter(|&v| r.red.g.degree(v) % 2 == 1).collect();
    if !c_prime.is_valid_in(&r.red.g) || !c_prime.contains_edge_id(r.red.closing) || !odd.is_subset(c_prime.vertex_set()) {
        return Err(Error::Hypothesis("not a cycle through xy covering the odd vertices".into()));
    }
    let mut trace = ExtensionTrace::new(&r.path);
    let out = from_second_cycle(g, r, c_prime, &mut trace)?;
    finish(g, &r.path, out, trace)
}

/// Every cycle of the reduced graph through the closing edge that covers the
/// odd-degree vertices, other than the Hamilton cycle.
pub fn odd_cover_cycles(red: &ReducedGraph) -> Vec<EdgeCycle> {
    let odd: VertexSet = (0..red.g.order()).filter(|&v| red.g.degree(v) % 2 == 1).collect();
    let mut base = red.cycle_edges.clone();
    base.sort_unstable();
    let mut out = Vec::new();
    for_each_edge_cycle_through(&red.g, red.closing, odd, |c| {
        let mut es = c.edges.clone();
        es.sort_unstable();
        if es != base {
            out.push(c.clone());
        }
        ControlFlow::Continue(())
    });
    out
}

/// Builds an `(x,y)`-path strictly longer than `p`, where `p` has no internal
/// bound vertex in the 2-connected cubic graph `g`.
pub fn extend_path(g: &Graph, p: &Path) -> Result<(Path, ExtensionTrace)> {
    let mut trace = ExtensionTrace::new(p.vertices());
    let out = match early_steps(g, p, &mut trace)? {
        Early::Done(out) => out,
        Early::Reduced(r) => {
            let c_prime = find_odd_cover_cycle(&r.red)?;
            from_second_cycle(g, &r, &c_prime, &mut trace)?
        }
    };
    finish(g, p.vertices(), out, trace)
}

/// Repeatedly extends until the path has an internal bound vertex or spans the
/// graph. Returns every path of the chain, starting with `p`.
pub fn extend_to_fixed_point(g: &Graph, p: &Path) -> Result<Vec<Path>> {
    let mut chain = alloc::vec![p.clone()];
    loop {
        let cur = chain.last().expect("nonempty");
        match precheck(g, cur)? {
            Classification::Extendable => {
                let (next, _) = extend_path(g, cur)?;
                chain.push(next);
            }
            _ => return Ok(chain),
        }
    }
}
