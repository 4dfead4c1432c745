//! Undirected (multi)graphs on dense vertex ids, plus the connectivity and
//! contraction primitives the rest of the crate is built on.
//!
//! Host graphs are simple. Graphs derived during the extension constructions
//! may carry parallel edges, so every edge has a stable id and adjacency lists
//! store `(neighbor, edge id)` pairs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Normalized undirected edge `(min, max)`.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    nbr: Vec<VertexSet>,
    simple: bool,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Builds a graph on `0..n` from an edge list. Parallel edges are kept and
/// clear the simplicity flag; self-loops are rejected.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &(u, v) in edge_list {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            nbr: vec![VertexSet::EMPTY; n],
            simple: true,
        })
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.nbr[u].contains(v) {
            self.simple = false;
        }
        let id = self.edges.len();
        self.edges.push(edge_key(u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.nbr[u].insert(v);
        self.nbr[v].insert(u);
        Ok(id)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// The endpoint of edge `id` that is not `v`.
    #[inline]
    pub fn other_end(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Neighbors with multiplicity.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.nbr[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.nbr[u].contains(v)
    }

    /// Ids of all edges joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        if u >= self.n {
            return Vec::new();
        }
        let mut ids: Vec<usize> = self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
            .collect();
        ids.sort_unstable();
        ids
    }

    /// Lowest edge id joining `u` and `v`.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges_between(u, v).first().copied()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn reach_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.nbr[v]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(s) => self.reach_within(s, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Neighbors of the vertex set `set` outside it.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out = out.union(self.nbr[v]);
        }
        out.difference(set)
    }
}

/// `g.is_cubic()` as a free function.
pub fn is_cubic(g: &Graph) -> bool {
    g.is_cubic()
}

/// True iff `g` has more than `k` vertices, is connected, and stays connected
/// after deleting any set of fewer than `k` vertices. Only `k <= 3` is supported;
/// cuts are enumerated directly.
pub fn connectivity_at_least(g: &Graph, k: usize) -> bool {
    assert!((1..=3).contains(&k), "connectivity is only checked for k in 1..=3");
    let n = g.order();
    if n <= k {
        return false;
    }
    let all = g.vertices();
    if !g.is_connected_within(all) {
        return false;
    }
    if k >= 2 {
        for a in 0..n {
            let rest = all.difference(VertexSet::singleton(a));
            if !g.is_connected_within(rest) {
                return false;
            }
            if k >= 3 {
                for b in (a + 1)..n {
                    if !g.is_connected_within(rest.difference(VertexSet::singleton(b))) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Connected components of a vertex-deleted subgraph, ordered by lowest id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDecomposition {
    pub components: Vec<VertexSet>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains(v))
    }

    pub fn union(&self) -> VertexSet {
        self.components
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc.union(c))
    }
}

pub fn components_after_deletion(g: &Graph, removed: VertexSet) -> ComponentDecomposition {
    let mut left = g.vertices().difference(removed);
    let mut components = Vec::new();
    while let Some(s) = left.first() {
        let c = g.reach_within(s, left);
        components.push(c);
        left = left.difference(c);
    }
    ComponentDecomposition { components }
}

/// Provenance of a contracted graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionMap {
    /// Reduced vertex -> host vertices merged into it.
    pub vertex_origin: Vec<VertexSet>,
    /// Reduced edge id -> host edge id.
    pub edge_origin: Vec<usize>,
    /// Host vertex -> reduced vertex.
    pub host_to_reduced: Vec<usize>,
    /// Host edges that became self-loops and were dropped.
    pub dropped_loops: Vec<usize>,
    /// Per block: whether the representative was a member of the block.
    pub rep_in_block: Vec<bool>,
}

/// Merges every vertex of `block` onto `representative`.
///
/// The representative may lie inside the block or outside it; in the latter
/// case it must be adjacent to the block and `block ∪ {representative}` must be
/// connected. Parallel edges survive; self-loops created by the merge are dropped.
pub fn contract_set(
    g: &Graph,
    block: VertexSet,
    representative: usize,
) -> Result<(Graph, ContractionMap)> {
    contract_sets(g, &[(block, representative)])
}

/// Simultaneous version of [`contract_set`] for pairwise disjoint blocks.
/// Surviving vertices are renumbered in increasing host order.
pub fn contract_sets(g: &Graph, blocks: &[(VertexSet, usize)]) -> Result<(Graph, ContractionMap)> {
    let n = g.order();
    let mut owner: Vec<usize> = (0..n).collect();
    let mut seen = VertexSet::EMPTY;
    let mut rep_in_block = Vec::with_capacity(blocks.len());
    for &(block, rep) in blocks {
        if rep >= n {
            return Err(Error::VertexOutOfRange { v: rep, n });
        }
        if !block.is_subset(g.vertices()) {
            return Err(Error::Hypothesis(format!("block {block:?} not inside the graph")));
        }
        let whole = block.union(VertexSet::singleton(rep));
        if !whole.is_disjoint(seen) {
            return Err(Error::Hypothesis(format!("block {block:?} overlaps another block")));
        }
        if !g.is_connected_within(whole) {
            return Err(Error::Hypothesis(format!(
                "block {block:?} is not connected to representative {rep}"
            )));
        }
        seen = seen.union(whole);
        rep_in_block.push(block.contains(rep));
        for v in block {
            owner[v] = rep;
        }
    }
    let mut host_to_reduced = vec![usize::MAX; n];
    let mut vertex_origin = Vec::new();
    for v in 0..n {
        if owner[v] == v {
            host_to_reduced[v] = vertex_origin.len();
            vertex_origin.push(VertexSet::singleton(v));
        }
    }
    for v in 0..n {
        let r = host_to_reduced[owner[v]];
        host_to_reduced[v] = r;
        vertex_origin[r].insert(v);
    }
    let mut out = Graph::empty(vertex_origin.len())?;
    let mut edge_origin = Vec::new();
    let mut dropped_loops = Vec::new();
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        let (ra, rb) = (host_to_reduced[a], host_to_reduced[b]);
        if ra == rb {
            dropped_loops.push(id);
        } else {
            out.add_edge(ra, rb)?;
            edge_origin.push(id);
        }
    }
    Ok((
        out,
        ContractionMap {
            vertex_origin,
            edge_origin,
            host_to_reduced,
            dropped_loops,
            rep_in_block,
        },
    ))
}
