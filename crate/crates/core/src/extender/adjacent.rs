//! Extension of an `(x,y)`-path with `xy` an edge, in a 3-connected cubic
//! graph, when the closed cycle `P + xy` has a single chord, at `x` or `y`.
//!
//! With the chord `xw` and path neighbors `a` of `x` and `b, c` of `w`, the
//! cycle loses `x` and `w` and gains the virtual edges `ay` and `bc`. Off-cycle
//! components are contracted onto a color class, a second Hamilton cycle is
//! taken from the exchange lemma, and the lift puts `x` and `w` back.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::reduce::{blue_runs, lift_cycle, open_between, EdgeOrigin, ReducedGraph};
use super::{
    check_host, color_cycle, detour, finish, off_path_components, paths, select_triples, AdjacentReport,
    ExtensionTrace, OffPathComponent, TraceStep,
};
use crate::enumeration::LemmaInstance;
use crate::error::{invariant, Error, Result};
use crate::graph::Graph;
use crate::search::Path;
use crate::second_cycle::second_hamilton_cycle;
use crate::vertex_set::VertexSet;

/// Chords of the cycle closing `path`, as position pairs.
pub(crate) fn closed_chords(g: &Graph, path: &[usize]) -> Vec<(usize, usize)> {
    let last = path.len() - 1;
    let mut out = Vec::new();
    for i in 0..path.len() {
        for j in (i + 2)..path.len() {
            if g.has_edge(path[i], path[j]) && !(i == 0 && j == last) {
                out.push((i, j));
            }
        }
    }
    out
}

/// First pair of path-consecutive attachments of any component.
fn any_consecutive(comps: &[OffPathComponent]) -> Option<(usize, usize)> {
    comps.iter().enumerate().find_map(|(ci, c)| {
        c.attachments
            .windows(2)
            .find(|w| w[0] + 1 == w[1])
            .map(|w| (ci, w[0]))
    })
}

/// The splices available when the two virtual edges share a vertex.
fn shared_vertex_splice(g: &Graph, path: &[usize], j: usize, comps: &[OffPathComponent]) -> Option<Vec<usize>> {
    let last = path.len() - 1;
    let both = |p: usize, q: usize| {
        comps
            .iter()
            .find(|c| c.attachments.contains(&p) && c.attachments.contains(&q))
    };
    if j == last - 1 {
        // c = y: x w b ... a, then a to y through the component
        if let Some(h) = both(1, last) {
            let mut out = vec![path[0], path[j]];
            out.extend((1..j).rev().map(|i| path[i]));
            let tail = paths::host_path(g, path[1], path[last], h.vertices, 2)?;
            paths::append(&mut out, &tail);
            return Some(out);
        }
    }
    if j == 2 {
        // b = a: x w a, a to c through the component, then c ... y
        if let Some(h) = both(1, 3) {
            let mut out = vec![path[0], path[2], path[1]];
            let mid = paths::host_path(g, path[1], path[3], h.vertices, 2)?;
            paths::append(&mut out, &mid);
            paths::append(&mut out, &path[3..]);
            return Some(out);
        }
    }
    None
}

/// Components of `cycle - a` as runs along the cycle.
fn runs_outside(cycle_len: usize, a: VertexSet) -> Vec<Vec<usize>> {
    let s0 = (0..cycle_len).find(|&i| a.contains(i)).expect("nonempty class");
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    for k in 1..=cycle_len {
        let i = (s0 + k) % cycle_len;
        if a.contains(i) {
            if !cur.is_empty() {
                out.push(core::mem::take(&mut cur));
            }
        } else {
            cur.push(i);
        }
    }
    out
}

/// Builds an `(x,y)`-path longer than `p`, where `xy` is an edge of the
/// 3-connected cubic graph `g` and `P + xy` has exactly one chord, at an end.
pub fn extend_path_adjacent(g: &Graph, p: &Path) -> Result<(Path, ExtensionTrace)> {
    check_host(g, 3)?;
    if !p.is_valid_in(g) || p.len() < 2 {
        return Err(Error::InvalidPath(format!("{:?} is not a path with two ends", p.vertices())));
    }
    if !g.has_edge(p.start(), p.end()) {
        return Err(Error::Hypothesis("the ends of the path are not adjacent".into()));
    }
    let chords = closed_chords(g, p.vertices());
    let last = p.len();
    let path: Vec<usize> = match chords.as_slice() {
        [(0, _)] => p.vertices().to_vec(),
        [(_, j)] if *j == last => p.reversed().into_vertices(),
        _ => {
            return Err(Error::Hypothesis(format!(
                "closing the path must give exactly one chord, at an end; found {}",
                chords.len()
            )))
        }
    };
    let input = p.vertices();
    let mut trace = ExtensionTrace::new(input);
    let orient = |out: Vec<usize>| if path[0] == input[0] { out } else { out.into_iter().rev().collect() };

    let j = closed_chords(g, &path)[0].1;
    let (x, y) = (path[0], path[last]);
    let (a, w, b, c) = (path[1], path[j], path[j - 1], path[j + 1]);
    let comps = off_path_components(g, &path);
    if comps.is_empty() {
        return Err(Error::Hypothesis("the path spans every vertex".into()));
    }
    if let Some((ci, i)) = any_consecutive(&comps) {
        trace.steps.push(TraceStep::Detour {
            component: ci,
            edge: (path[i], path[i + 1]),
        });
        let out = detour(g, &path, i, comps[ci].vertices)?;
        return finish(g, input, orient(out), trace);
    }
    let shared = a == b || c == y;
    if shared {
        if let Some(out) = shared_vertex_splice(g, &path, j, &comps) {
            trace.steps.push(TraceStep::ComponentClaim {
                components: comps.len(),
                certificate: None,
                splice: Some("component joined to both ends of a virtual edge".into()),
            });
            return finish(g, input, orient(out), trace);
        }
    }
    if comps.len() < 2 {
        return Err(invariant("case", "a single off-cycle component without consecutive attachments"));
    }
    if let Some((ci, c)) = comps.iter().enumerate().find(|(_, c)| c.attachments.len() < 3) {
        return Err(invariant("case", format!("component {ci} has only {} attachments", c.attachments.len())));
    }

    // C' = a .. b c .. y, closed by ay
    let seq: Vec<usize> = path[1..j].iter().chain(&path[j + 1..]).copied().collect();
    let m = seq.len();
    let (ib, ic) = (j - 2, j - 1);
    let mut origin = Vec::with_capacity(m);
    for i in 0..m - 1 {
        origin.push(if i == ib {
            EdgeOrigin::Virtual { via: Some(w) }
        } else {
            EdgeOrigin::Host(g.edge_id(seq[i], seq[i + 1]).ok_or_else(|| invariant("case", "path edge missing"))?)
        });
    }
    origin.push(EdgeOrigin::Virtual { via: Some(x) });
    let mut red = ReducedGraph::from_cycle(seq.clone(), origin, m - 1)?;
    red.reps = vec![None; comps.len()];

    let mut triples = select_triples(&path, &comps, |_| true);
    let class = color_cycle(&seq, &mut triples)?;
    let local: VertexSet = class.iter().map(|v| seq.iter().position(|&s| s == v).expect("on cycle")).collect();
    for t in &triples {
        let rep = seq.iter().position(|&s| s == t.w).expect("on cycle");
        red.contract(g, t.component_index, comps[t.component_index].vertices, rep)?;
    }

    let components = runs_outside(m, local);
    let comp_of = |i: usize| components.iter().position(|h| h.contains(&i));
    let (x1, y1, distinguished) = if local.contains(ic) {
        (ib, ic, comp_of(ib))
    } else if local.contains(ib) {
        (ic, ib, comp_of(ic))
    } else {
        let k = comp_of(ib).expect("b outside the class");
        let first = components[k][0];
        (first, (first + m - 1) % m, Some(k))
    };
    let distinguished = distinguished.ok_or_else(|| invariant("case", "end of bc is not outside the class"))?;
    let inst = LemmaInstance {
        g: red.g.clone(),
        cycle: (0..m).collect(),
        a: local,
        components,
        distinguished,
    };
    let cert = second_hamilton_cycle(&inst, x1, y1)?;
    let runs = blue_runs(&red, &cert.c_prime);
    let q = runs.len();
    let pp = runs.iter().filter(|&&l| l == 2).count();
    let (seq_lift, _) = lift_cycle(g, &red, &comps, &cert.c_prime)?;
    let out = open_between(&seq_lift, x, y).ok_or_else(|| invariant("lift", "x and y are not consecutive on the lift"))?;
    let report = AdjacentReport {
        w,
        a,
        b,
        c,
        color_class: class.iter().collect(),
        triples,
        second_cycle: cert.c_prime.vertices.iter().map(|&i| seq[i]).collect(),
        exchange_vertex: seq[cert.exchange_vertex],
        q,
        p: pp,
        lifted_len: out.len(),
    };
    trace.steps.push(if shared { TraceStep::Case2(report) } else { TraceStep::Case1(report) });
    finish(g, input, orient(out), trace)
}
