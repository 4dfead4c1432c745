//! Last resort of the extension: when the lifted cycle is exactly as long as
//! the closed path, merge the two cycles with the attachment paths of the
//! blue 2-subpaths, compress shared chains into matching edges, and search
//! the compressed cubic graph for a longer cycle through every chain.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::paths::host_path;
use super::reduce::{open_between, Lifted};
use super::OffPathComponent;
use crate::error::{invariant, Result};
use crate::graph::{edge_key, Graph};
use crate::search::for_each_edge_cycle_through;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingOutcome {
    pub path: Vec<usize>,
    /// Order of the compressed graph.
    pub compressed_order: usize,
    /// Number of compressed shared chains.
    pub matching: usize,
    /// Whether the compressed graph met the cubic two-matching shape.
    pub hypotheses_hold: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Chain,
    Attachment,
    Plain,
}

struct Compressed {
    g: Graph,
    host: Vec<usize>,
    /// Host walk of each edge, from its lower local end.
    walk: Vec<Vec<usize>>,
    kind: Vec<Kind>,
}

fn closed_pairs(seq: &[usize]) -> BTreeSet<(usize, usize)> {
    let len = seq.len();
    (0..len).map(|i| edge_key(seq[i], seq[(i + 1) % len])).collect()
}

/// Walks shared edges from `start` through vertices of degree two.
fn chain_from(start: usize, first: usize, common_adj: &BTreeMap<usize, Vec<usize>>, degree: &BTreeMap<usize, usize>) -> Vec<usize> {
    let mut out = vec![start, first];
    while degree[out.last().expect("nonempty")] == 2 {
        let cur = out[out.len() - 1];
        let prev = out[out.len() - 2];
        match common_adj[&cur].iter().find(|&&w| w != prev) {
            Some(&w) => out.push(w),
            None => break,
        }
    }
    out
}

fn compress(
    c: &BTreeSet<(usize, usize)>,
    s: &BTreeSet<(usize, usize)>,
    attach: &[Vec<usize>],
) -> Result<Compressed> {
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in c.union(s) {
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    for p in attach {
        *degree.entry(p[0]).or_default() += 1;
        *degree.entry(p[p.len() - 1]).or_default() += 1;
    }
    let common: Vec<(usize, usize)> = c.intersection(s).copied().collect();
    let mut common_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &common {
        common_adj.entry(u).or_default().push(v);
        common_adj.entry(v).or_default().push(u);
    }
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut covered = BTreeSet::new();
    for (&u, nbrs) in &common_adj {
        if degree[&u] == 2 {
            continue;
        }
        for &w in nbrs {
            if covered.contains(&edge_key(u, w)) {
                continue;
            }
            let ch = chain_from(u, w, &common_adj, &degree);
            for k in 0..ch.len() - 1 {
                covered.insert(edge_key(ch[k], ch[k + 1]));
            }
            chains.push(ch);
        }
    }
    if covered.len() != common.len() {
        return Err(invariant("matching-step", "shared edges contain a cycle of degree-2 vertices"));
    }
    let internal: VertexSet = chains.iter().flat_map(|ch| ch[1..ch.len() - 1].iter().copied()).collect();
    let host: Vec<usize> = degree.keys().copied().filter(|&v| !internal.contains(v)).collect();
    let local = |v: usize| host.binary_search(&v).expect("compressed vertex");
    let mut g = Graph::empty(host.len())?;
    let mut walk = Vec::new();
    let mut kind = Vec::new();
    let mut push = |g: &mut Graph, seq: Vec<usize>, k: Kind| -> Result<()> {
        let (a, b) = (local(seq[0]), local(seq[seq.len() - 1]));
        g.add_edge(a, b)?;
        walk.push(if a <= b { seq } else { seq.into_iter().rev().collect() });
        kind.push(k);
        Ok(())
    };
    for ch in chains {
        push(&mut g, ch, Kind::Chain)?;
    }
    for p in attach {
        push(&mut g, p.clone(), Kind::Attachment)?;
    }
    for &(u, v) in c.symmetric_difference(s) {
        push(&mut g, vec![u, v], Kind::Plain)?;
    }
    Ok(Compressed { g, host, walk, kind })
}

/// Cubic, chains and attachment edges each a perfect matching of a half of the
/// vertices, and the compressed lifted cycle of length `3k` for `k` chains.
fn hypotheses_hold(cg: &Compressed, compressed_len: usize) -> bool {
    let ends = |k: Kind| {
        let mut set = VertexSet::EMPTY;
        let mut count = 0;
        for e in (0..cg.g.size()).filter(|&e| cg.kind[e] == k) {
            let (a, b) = cg.g.edge(e);
            set.insert(a);
            set.insert(b);
            count += 1;
        }
        (set, count)
    };
    let (m, km) = ends(Kind::Chain);
    let (mp, kp) = ends(Kind::Attachment);
    cg.g.is_cubic()
        && m.len() == 2 * km
        && mp.len() == 2 * kp
        && km == kp
        && m.is_disjoint(mp)
        && m.union(mp) == cg.g.vertices()
        && compressed_len == 3 * km
}

/// Finds an `(x,y)`-path longer than `path` from the tight-case lift.
pub fn matching_step(
    g: &Graph,
    path: &[usize],
    comps: &[OffPathComponent],
    lifted: &Lifted,
) -> Result<MatchingOutcome> {
    let (x, y) = (path[0], path[path.len() - 1]);
    let c = closed_pairs(path);
    let s = closed_pairs(&lifted.path);
    let mut attach = Vec::new();
    for t in &lifted.two_subpaths {
        if t.star.len() != 1 {
            return Err(invariant(
                "matching-step",
                format!("blue 2-subpath at {} lifts through {} vertices", t.center, t.star.len()),
            ));
        }
        let p = host_path(g, t.center, t.star[0], comps[t.component].vertices, 1)
            .ok_or_else(|| invariant("matching-step", format!("no attachment path from {}", t.center)))?;
        attach.push(p);
    }
    let cg = compress(&c, &s, &attach)?;
    let weight = |e: usize| cg.walk[e].len() - 1;
    let chain_ids: Vec<usize> = (0..cg.g.size()).filter(|&e| cg.kind[e] == Kind::Chain).collect();
    let compressed_len = chain_ids.len() + (0..cg.g.size()).filter(|&e| cg.kind[e] == Kind::Plain && s.contains(&edge_key(cg.walk[e][0], cg.walk[e][1]))).count();
    let holds = hypotheses_hold(&cg, compressed_len);
    if !holds {
        log::warn!("compressed graph misses the cubic two-matching shape; searching anyway");
    }
    let xy_key = edge_key(x, y);
    let through = chain_ids
        .iter()
        .copied()
        .find(|&e| cg.walk[e].windows(2).any(|w| edge_key(w[0], w[1]) == xy_key))
        .ok_or_else(|| invariant("matching-step", "xy is on no shared chain"))?;
    let required: VertexSet = chain_ids
        .iter()
        .flat_map(|&e| {
            let (a, b) = cg.g.edge(e);
            [a, b]
        })
        .collect();
    let target = lifted.path.len();
    let mut found = None;
    for_each_edge_cycle_through(&cg.g, through, required, |cyc| {
        if chain_ids.iter().all(|&e| cyc.contains_edge_id(e)) && cyc.edges.iter().map(|&e| weight(e)).sum::<usize>() > target {
            found = Some(cyc.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let cyc = found.ok_or_else(|| invariant("matching-step", "no longer cycle through every chain"))?;
    let mut seq = Vec::new();
    for (i, &e) in cyc.edges.iter().enumerate() {
        let from = cg.host[cyc.vertices[i]];
        let w = &cg.walk[e];
        if w[0] == from {
            seq.extend_from_slice(&w[..w.len() - 1]);
        } else {
            seq.extend(w.iter().rev().take(w.len() - 1));
        }
    }
    let out = open_between(&seq, x, y).ok_or_else(|| invariant("matching-step", "x and y are not consecutive"))?;
    Ok(MatchingOutcome {
        path: out,
        compressed_order: cg.g.order(),
        matching: chain_ids.len(),
        hypotheses_hold: holds,
    })
}
