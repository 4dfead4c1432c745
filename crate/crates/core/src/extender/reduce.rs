//! The reduced multigraph on the path vertices, its second cycle, the counting
//! quantities of that cycle, and the lift of a reduced cycle back to the host.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::paths::host_path;
use super::{AttachmentTriple, OffPathComponent};
use crate::error::{invariant, Result};
use crate::graph::Graph;
use crate::search::{for_each_edge_cycle_through, EdgeCycle};
use crate::vertex_set::VertexSet;

/// Where a reduced edge comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeOrigin {
    Host(usize),
    /// Added edge; `via` is a host vertex that sits between its ends when lifted.
    Virtual { via: Option<usize> },
    /// Stands for a component attached to exactly its two ends.
    Red { component: usize },
    /// A host edge leaving a contracted component.
    Blue { component: usize, host_edge: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeColor {
    Black,
    Red,
    Blue,
}

/// A multigraph whose vertex `j` is the host vertex `host[j]`, with a Hamilton
/// cycle made of its first `cycle_edges.len()` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedGraph {
    pub g: Graph,
    pub origin: Vec<EdgeOrigin>,
    pub host: Vec<usize>,
    /// Host vertices merged into each reduced vertex.
    pub vertex_origin: Vec<VertexSet>,
    /// Edge ids of the Hamilton cycle, in cycle order from vertex 0.
    pub cycle_edges: Vec<usize>,
    /// The cycle edge closing the path (`xy` or `ay`).
    pub closing: usize,
    /// Reduced vertex each off-path component was contracted into.
    pub reps: Vec<Option<usize>>,
}

impl ReducedGraph {
    pub fn color(&self, e: usize) -> EdgeColor {
        match self.origin[e] {
            EdgeOrigin::Host(_) | EdgeOrigin::Virtual { .. } => EdgeColor::Black,
            EdgeOrigin::Red { .. } => EdgeColor::Red,
            EdgeOrigin::Blue { .. } => EdgeColor::Blue,
        }
    }

    /// Starts from the cycle `host` (reduced vertex `j` = `host[j]`) with the
    /// given origins of the cycle edges `j, j+1`.
    pub(crate) fn from_cycle(host: Vec<usize>, cycle_origin: Vec<EdgeOrigin>, closing: usize) -> Result<Self> {
        let m = host.len();
        let mut g = Graph::empty(m)?;
        for j in 0..m {
            g.add_edge(j, (j + 1) % m)?;
        }
        let vertex_origin = host.iter().map(|&h| VertexSet::singleton(h)).collect();
        Ok(ReducedGraph {
            g,
            origin: cycle_origin,
            host,
            vertex_origin,
            cycle_edges: (0..m).collect(),
            closing,
            reps: Vec::new(),
        })
    }

    /// Contracts component `ci` into reduced vertex `rep`: each host edge from
    /// the component to another reduced vertex becomes a blue edge.
    pub(crate) fn contract(&mut self, host_g: &Graph, ci: usize, comp: VertexSet, rep: usize) -> Result<()> {
        let rep_host = self.host[rep];
        self.vertex_origin[rep] = self.vertex_origin[rep].union(comp);
        self.reps[ci] = Some(rep);
        for (id, &(s, t)) in host_g.edges().iter().enumerate() {
            let z = match (comp.contains(s), comp.contains(t)) {
                (true, false) => t,
                (false, true) => s,
                _ => continue,
            };
            if z == rep_host {
                continue;
            }
            let j = self.reduced_of(z)?;
            self.g.add_edge(rep, j)?;
            self.origin.push(EdgeOrigin::Blue {
                component: ci,
                host_edge: id,
            });
        }
        Ok(())
    }

    fn reduced_of(&self, h: usize) -> Result<usize> {
        self.host
            .iter()
            .position(|&v| v == h)
            .ok_or_else(|| invariant("reduce", format!("host vertex {h} is not on the cycle")))
    }
}

/// Builds the reduced graph on the path: path edges and `xy` black, components
/// with two attachments as red edges, components with a triple contracted into
/// the triple's class member, and the rest into `y` (if adjacent) or `x`.
pub fn build_reduced_g2(
    g: &Graph,
    path: &[usize],
    comps: &[OffPathComponent],
    a: VertexSet,
    triples: &[AttachmentTriple],
) -> Result<ReducedGraph> {
    let last = path.len() - 1;
    let mut origin = Vec::with_capacity(path.len());
    for i in 0..last {
        let id = g.edge_id(path[i], path[i + 1]).ok_or_else(|| invariant("reduce", "path edge missing"))?;
        origin.push(EdgeOrigin::Host(id));
    }
    origin.push(match g.edge_id(path[last], path[0]) {
        Some(id) => EdgeOrigin::Host(id),
        None => EdgeOrigin::Virtual { via: None },
    });
    let mut red = ReducedGraph::from_cycle(path.to_vec(), origin, last)?;
    red.reps = vec![None; comps.len()];
    for (ci, c) in comps.iter().enumerate() {
        match c.attachments.len() {
            0 | 1 => {
                return Err(invariant(
                    "reduce",
                    format!("component {ci} has {} attachments", c.attachments.len()),
                ))
            }
            2 => {
                red.g.add_edge(c.attachments[0], c.attachments[1])?;
                red.origin.push(EdgeOrigin::Red { component: ci });
            }
            _ => {
                let rep = if let Some(t) = triples.iter().find(|t| t.component_index == ci) {
                    if !a.contains(t.w) {
                        return Err(invariant("reduce", format!("triple {t:?} has no member in the class")));
                    }
                    red.reduced_of(t.w)?
                } else if c.attachments.contains(&last) {
                    last
                } else if c.attachments.contains(&0) {
                    0
                } else {
                    return Err(invariant("reduce", format!("interior component {ci} has no triple")));
                };
                red.contract(g, ci, c.vertices, rep)?;
            }
        }
    }
    Ok(red)
}

/// A cycle through the closing edge, other than the Hamilton cycle, that
/// contains every odd-degree vertex of the reduced graph.
pub fn find_odd_cover_cycle(red: &ReducedGraph) -> Result<EdgeCycle> {
    let odd: VertexSet = (0..red.g.order()).filter(|&v| red.g.degree(v) % 2 == 1).collect();
    let mut base = red.cycle_edges.clone();
    base.sort_unstable();
    let mut found = None;
    for_each_edge_cycle_through(&red.g, red.closing, odd, |c| {
        let mut es = c.edges.clone();
        es.sort_unstable();
        if es != base {
            found = Some(c.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found.ok_or_else(|| invariant("odd-cover-cycle", "no second cycle through xy covers the odd vertices"))
}

/// Counting quantities of a second cycle `C'` against the Hamilton cycle `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlueSubpathStats {
    /// Vertices of `C` missed by `C'`.
    pub r: usize,
    /// Edges of `C` not on `C'`.
    pub k: usize,
    /// `k - 2r`.
    pub d: usize,
    /// Blue edges on `C'`.
    pub b: usize,
    /// Red edges on `C'`.
    pub c: usize,
    /// Maximal blue subpaths of `C'`.
    pub q: usize,
    /// Those of length two.
    pub p: usize,
}

impl BlueSubpathStats {
    pub fn is_tight(&self) -> bool {
        self.c == 0 && self.q == self.p && self.r == 0 && self.d == 2 * self.p
    }
}

/// Lengths of the maximal runs of blue edges along a cycle.
pub(crate) fn blue_runs(red: &ReducedGraph, cycle: &EdgeCycle) -> Vec<usize> {
    let colors: Vec<EdgeColor> = cycle.edges.iter().map(|&e| red.color(e)).collect();
    let len = colors.len();
    let Some(start) = colors.iter().position(|&c| c != EdgeColor::Blue) else {
        return vec![len];
    };
    let mut runs = Vec::new();
    let mut cur = 0;
    for i in 1..=len {
        if colors[(start + i) % len] == EdgeColor::Blue {
            cur += 1;
        } else if cur > 0 {
            runs.push(cur);
            cur = 0;
        }
    }
    runs
}

pub fn compute_stats(red: &ReducedGraph, c_prime: &EdgeCycle) -> Result<BlueSubpathStats> {
    let r = red.g.order() - c_prime.vertices.len();
    let k = red.cycle_edges.iter().filter(|&&e| !c_prime.contains_edge_id(e)).count();
    let count = |col| c_prime.edges.iter().filter(|&&e| red.color(e) == col).count();
    let (b, c) = (count(EdgeColor::Blue), count(EdgeColor::Red));
    let runs = blue_runs(red, c_prime);
    let q = runs.len();
    let p = runs.iter().filter(|&&l| l == 2).count();
    let fail = |what: &str| invariant("stats", format!("{what}: r={r} k={k} b={b} c={c} q={q} p={p} runs={runs:?}"));
    if k < 2 * r {
        return Err(fail("d < 0"));
    }
    let d = k - 2 * r;
    if b != q + p {
        return Err(fail("a blue subpath is longer than two"));
    }
    if r + d != b + c {
        return Err(fail("r + d != b + c"));
    }
    if d < 2 * p || (q > p && d < 2 * p + 1) {
        return Err(fail("d is below its bound"));
    }
    Ok(BlueSubpathStats { r, k, d, b, c, q, p })
}

/// A blue 2-subpath `a - w - b` of the reduced cycle, lifted to
/// `a - star - b` with `star` inside one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSubpath {
    pub center: usize,
    pub component: usize,
    pub a: usize,
    pub b: usize,
    pub star: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lifted {
    /// The lifted cycle minus the closing edge, from `x` to `y`.
    pub path: Vec<usize>,
    pub two_subpaths: Vec<TwoSubpath>,
}

fn component_of(comps: &[OffPathComponent], v: usize) -> Option<usize> {
    comps.iter().position(|c| c.vertices.contains(v))
}

/// Host vertex at reduced vertex `s` where edge `e` attaches.
fn end_at(g: &Graph, red: &ReducedGraph, comps: &[OffPathComponent], e: usize, s: usize) -> usize {
    match red.origin[e] {
        EdgeOrigin::Blue { component, host_edge } if red.reps[component] == Some(s) => {
            let (p, q) = g.edge(host_edge);
            if comps[component].vertices.contains(p) {
                p
            } else {
                q
            }
        }
        _ => red.host[s],
    }
}

/// The host walk through reduced vertex `s`, entered at `e_in` and left at `e_out`.
fn segment(g: &Graph, comps: &[OffPathComponent], hs: usize, e_in: usize, e_out: usize) -> Result<Vec<usize>> {
    if e_in == e_out {
        return Ok(vec![e_in]);
    }
    let miss = || invariant("lift", format!("no host walk {e_in} -> {hs} -> {e_out}"));
    let comp = |v: usize| component_of(comps, v).ok_or_else(miss);
    if e_in == hs {
        let h = comp(e_out)?;
        return host_path(g, hs, e_out, comps[h].vertices, 1).ok_or_else(miss);
    }
    if e_out == hs {
        let h = comp(e_in)?;
        return host_path(g, e_in, hs, comps[h].vertices, 1).ok_or_else(miss);
    }
    let (ha, hb) = (comp(e_in)?, comp(e_out)?);
    if ha == hb {
        return host_path(g, e_in, e_out, comps[ha].vertices, 0).ok_or_else(miss);
    }
    let mut out = host_path(g, e_in, hs, comps[ha].vertices, 1).ok_or_else(miss)?;
    let tail = host_path(g, hs, e_out, comps[hb].vertices, 1).ok_or_else(miss)?;
    super::paths::append(&mut out, &tail);
    Ok(out)
}

/// Lifts a reduced cycle to a cyclic host sequence. Consecutive entries are
/// host-adjacent except possibly across a virtual edge without a `via` vertex.
pub(crate) fn lift_cycle(
    g: &Graph,
    red: &ReducedGraph,
    comps: &[OffPathComponent],
    cycle: &EdgeCycle,
) -> Result<(Vec<usize>, Vec<TwoSubpath>)> {
    let len = cycle.vertices.len();
    let mut seq = Vec::new();
    let mut twos = Vec::new();
    for i in 0..len {
        let s = cycle.vertices[i];
        let hs = red.host[s];
        let e_prev = cycle.edges[(i + len - 1) % len];
        let e_next = cycle.edges[i];
        let e_in = end_at(g, red, comps, e_prev, s);
        let e_out = end_at(g, red, comps, e_next, s);
        let seg = segment(g, comps, hs, e_in, e_out)?;
        if e_in != hs && e_out != hs {
            let (ca, cb) = (component_of(comps, e_in), component_of(comps, e_out));
            if ca == cb {
                twos.push(TwoSubpath {
                    center: hs,
                    component: ca.expect("inside a component"),
                    a: red.host[cycle.vertices[(i + len - 1) % len]],
                    b: red.host[cycle.vertices[(i + 1) % len]],
                    star: seg.clone(),
                });
            }
        }
        seq.extend_from_slice(&seg);
        let t = cycle.vertices[(i + 1) % len];
        match red.origin[e_next] {
            EdgeOrigin::Host(_) | EdgeOrigin::Blue { .. } | EdgeOrigin::Virtual { via: None } => {}
            EdgeOrigin::Virtual { via: Some(v) } => seq.push(v),
            EdgeOrigin::Red { component } => {
                let q = host_path(g, hs, red.host[t], comps[component].vertices, 3)
                    .ok_or_else(|| invariant("lift", format!("red component {component} has no path of length 3")))?;
                seq.extend_from_slice(&q[1..q.len() - 1]);
            }
        }
    }
    let set: VertexSet = seq.iter().collect();
    if set.len() != seq.len() {
        return Err(invariant("lift", format!("lifted sequence {seq:?} repeats a vertex")));
    }
    Ok((seq, twos))
}

/// Cuts a cyclic sequence at the consecutive pair `x, y`, giving the walk from
/// `x` to `y` the long way round.
pub(crate) fn open_between(seq: &[usize], x: usize, y: usize) -> Option<Vec<usize>> {
    let len = seq.len();
    let i = seq.iter().position(|&v| v == x)?;
    if seq[(i + 1) % len] == y {
        Some((0..len).map(|k| seq[(i + len - k) % len]).collect())
    } else if seq[(i + len - 1) % len] == y {
        Some((0..len).map(|k| seq[(i + k) % len]).collect())
    } else {
        None
    }
}

/// Lifts the second cycle of the reduced graph to an `(x,y)`-path of the host.
pub fn lift_to_host(
    g: &Graph,
    red: &ReducedGraph,
    comps: &[OffPathComponent],
    c_prime: &EdgeCycle,
) -> Result<Lifted> {
    let (seq, two_subpaths) = lift_cycle(g, red, comps, c_prime)?;
    let (x, y) = (red.host[0], red.host[red.host.len() - 1]);
    let path = open_between(&seq, x, y).ok_or_else(|| invariant("lift", "x and y are not consecutive on the lift"))?;
    if !crate::search::is_valid_path(g, &path) {
        return Err(invariant("lift", format!("{path:?} is not a host path")));
    }
    Ok(Lifted { path, two_subpaths })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_between_orients() {
        assert_eq!(open_between(&[0, 1, 2, 3], 0, 3), Some(vec![0, 1, 2, 3]));
        assert_eq!(open_between(&[0, 1, 2, 3], 0, 1), Some(vec![0, 3, 2, 1]));
        assert_eq!(open_between(&[0, 1, 2, 3], 0, 2), None);
    }

    #[test]
    fn tight_stats() {
        let s = BlueSubpathStats {
            r: 0,
            k: 2,
            d: 2,
            b: 2,
            c: 0,
            q: 1,
            p: 1,
        };
        assert!(s.is_tight());
        assert!(!BlueSubpathStats { c: 1, ..s }.is_tight());
    }
}
