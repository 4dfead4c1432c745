//! Exact search kernels: longest `(x,y)`-paths, longest cycles, Hamilton cycles,
//! bound vertices and chords.
//!
//! All searches are depth-first over bitmask visited sets. The bound used for
//! pruning is "current length + number of unvisited vertices still reachable
//! from the current end", which never cuts off an optimal branch. Children are
//! tried in ascending id order, so results are deterministic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_key, Graph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    First,
    All,
}

/// Whether `seq` is a path in `g`: consecutive vertices adjacent, no repeats.
pub fn is_valid_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.is_empty() || seq.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let set: VertexSet = seq.iter().collect();
    set.len() == seq.len() && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Whether `seq` is a cycle in `g` (length at least 3, closing edge present).
pub fn is_valid_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3 && is_valid_path(g, seq) && g.has_edge(seq[seq.len() - 1], seq[0])
}

/// A path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if !is_valid_path(g, &vertices) {
            return Err(Error::InvalidPath(format!("{vertices:?}")));
        }
        Ok(Path { vertices })
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<usize>) -> Path {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn internal(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.vertices.clone();
        v.reverse();
        Path { vertices: v }
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        is_valid_path(g, &self.vertices)
    }
}

/// A cycle in canonical form: lowest id first, then its lower neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

/// Rotates and orients `seq` so that the minimum comes first, followed by its smaller neighbor.
pub fn canonical_cycle_order(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let (i, _) = seq.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
    let next = seq[(i + 1) % len];
    let prev = seq[(i + len - 1) % len];
    if next <= prev {
        (0..len).map(|k| seq[(i + k) % len]).collect()
    } else {
        (0..len).map(|k| seq[(i + len - k) % len]).collect()
    }
}

impl Cycle {
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Cycle> {
        if !is_valid_cycle(g, vertices) {
            return Err(Error::InvalidCycle(format!("{vertices:?}")));
        }
        Ok(Cycle {
            vertices: canonical_cycle_order(vertices),
        })
    }

    pub(crate) fn from_vertices_unchecked(vertices: &[usize]) -> Cycle {
        Cycle {
            vertices: canonical_cycle_order(vertices),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Length in edges (equal to the number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// Normalized edges, in cyclic order starting at the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| edge_key(self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let k = edge_key(u, v);
        self.edges().any(|e| e == k)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        is_valid_cycle(g, &self.vertices)
    }

    /// The path obtained by deleting the cycle edge `uv`, running from `u` to `v`.
    pub fn open_at(&self, u: usize, v: usize) -> Option<Path> {
        let len = self.vertices.len();
        let i = self.vertices.iter().position(|&w| w == u)?;
        let seq: Vec<usize> = if self.vertices[(i + 1) % len] == v {
            (0..len).map(|k| self.vertices[(i + len - k) % len]).collect()
        } else if self.vertices[(i + len - 1) % len] == v {
            (0..len).map(|k| self.vertices[(i + k) % len]).collect()
        } else {
            return None;
        };
        Some(Path::from_vertices_unchecked(seq))
    }
}

/// Longest `(x,y)`-paths of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub x: usize,
    pub y: usize,
    /// Length in edges.
    pub max_length: usize,
    pub witnesses: Vec<Path>,
    /// Internal bound vertices of each witness, against the whole graph.
    pub bound_sets: Vec<VertexSet>,
}

impl PathReport {
    pub fn min_bound_count(&self) -> Option<usize> {
        self.bound_sets.iter().map(|s| s.len()).min()
    }
}

struct XyState<'g> {
    g: &'g Graph,
    y: usize,
    mode: SearchMode,
    best: usize,
    found: bool,
    stack: Vec<usize>,
    witnesses: Vec<Vec<usize>>,
}

impl XyState<'_> {
    fn dfs(&mut self, cur: usize, visited: VertexSet) {
        let len = self.stack.len() - 1;
        if cur == self.y {
            if !self.found || len > self.best {
                self.best = len;
                self.found = true;
                self.witnesses.clear();
            }
            if len == self.best && (self.mode == SearchMode::All || self.witnesses.is_empty()) {
                self.witnesses.push(self.stack.clone());
            }
            return;
        }
        let free = self.g.vertices().difference(visited);
        let reach = self.g.reach_within(cur, free.union(VertexSet::singleton(cur)));
        if !reach.contains(self.y) {
            return;
        }
        let bound = len + reach.len() - 1;
        if self.found {
            match self.mode {
                SearchMode::All if bound < self.best => return,
                SearchMode::First if bound <= self.best => return,
                _ => {}
            }
        }
        for w in self.g.neighbor_set(cur).difference(visited) {
            self.stack.push(w);
            let mut next = visited;
            next.insert(w);
            self.dfs(w, next);
            self.stack.pop();
        }
    }
}

/// Maximum-length `(x,y)`-paths. With [`SearchMode::All`] every maximum path
/// is returned (each stored from `x` to `y`), in lexicographic order.
pub fn longest_xy_paths(g: &Graph, x: usize, y: usize, mode: SearchMode) -> Result<PathReport> {
    let n = g.order();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(Error::Hypothesis(format!("endpoints coincide ({x})")));
    }
    let mut st = XyState {
        g,
        y,
        mode,
        best: 0,
        found: false,
        stack: vec![x],
        witnesses: Vec::new(),
    };
    st.dfs(x, VertexSet::singleton(x));
    if !st.found {
        return Err(Error::Hypothesis(format!("no path joins {x} and {y}")));
    }
    let witnesses: Vec<Path> = st
        .witnesses
        .into_iter()
        .map(Path::from_vertices_unchecked)
        .collect();
    debug_assert!(witnesses.iter().all(|p| p.is_valid_in(g)));
    let bound_sets = witnesses
        .iter()
        .map(|p| internal_bound_vertices(g, p))
        .collect();
    Ok(PathReport {
        x,
        y,
        max_length: st.best,
        witnesses,
        bound_sets,
    })
}

/// Internal vertices of `p` all of whose neighbors lie on `p`.
pub fn internal_bound_vertices(g: &Graph, p: &Path) -> VertexSet {
    let on = p.vertex_set();
    p.internal()
        .iter()
        .copied()
        .filter(|&v| g.neighbor_set(v).is_subset(on))
        .collect()
}

struct CycleState<'g> {
    g: &'g Graph,
    mode: SearchMode,
    only_len: Option<usize>,
    best: usize,
    stack: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl CycleState<'_> {
    fn dfs(&mut self, start: usize, cur: usize, visited: VertexSet, allowed: VertexSet) {
        let len = self.stack.len();
        if len >= 3
            && self.g.has_edge(cur, start)
            && self.stack[1] < cur
            && self.only_len.is_none_or(|l| l == len)
        {
            if len > self.best {
                self.best = len;
                self.found.clear();
            }
            if len == self.best && (self.mode == SearchMode::All || self.found.is_empty()) {
                self.found.push(self.stack.clone());
            }
        }
        let free = allowed.difference(visited);
        let reach = self.g.reach_within(cur, free.union(VertexSet::singleton(cur)));
        let bound = len + reach.len() - 1;
        let target = self.only_len.unwrap_or(self.best.max(3));
        if bound < target || (self.mode == SearchMode::First && !self.found.is_empty() && bound <= self.best) {
            return;
        }
        if let Some(l) = self.only_len {
            if len >= l {
                return;
            }
        }
        for w in self.g.neighbor_set(cur).intersection(free) {
            self.stack.push(w);
            let mut next = visited;
            next.insert(w);
            self.dfs(start, w, next, allowed);
            self.stack.pop();
        }
    }
}

fn search_cycles(g: &Graph, mode: SearchMode, only_len: Option<usize>) -> Vec<Cycle> {
    let n = g.order();
    let mut st = CycleState {
        g,
        mode,
        only_len,
        best: 0,
        stack: Vec::new(),
        found: Vec::new(),
    };
    let starts = match only_len {
        Some(l) if l == n => 0..n.min(1),
        _ => 0..n,
    };
    for s in starts {
        // every vertex of a cycle found from `s` is at least `s`
        let allowed = g.vertices().difference(VertexSet::full(s));
        if only_len.is_none() && allowed.len() < st.best {
            break;
        }
        st.stack.clear();
        st.stack.push(s);
        st.dfs(s, s, VertexSet::singleton(s), allowed);
    }
    let mut out: Vec<Cycle> = st
        .found
        .into_iter()
        .map(|c| Cycle::from_vertices_unchecked(&c))
        .collect();
    out.sort();
    out.dedup();
    debug_assert!(out.iter().all(|c| c.is_valid_in(g)));
    out
}

/// All (or one) cycles of maximum length, canonical and deduplicated.
pub fn longest_cycles(g: &Graph, mode: SearchMode) -> Result<Vec<Cycle>> {
    let out = search_cycles(g, mode, None);
    if out.is_empty() {
        return Err(Error::Acyclic);
    }
    Ok(out)
}

/// All Hamilton cycles, canonical and deduplicated.
pub fn hamilton_cycles(g: &Graph) -> Vec<Cycle> {
    if g.order() < 3 {
        return Vec::new();
    }
    search_cycles(g, SearchMode::All, Some(g.order()))
}

/// Number of Hamilton cycles containing the edge `uv`.
pub fn hamilton_count_through_edge(g: &Graph, e: (usize, usize)) -> Result<usize> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::EdgeAbsent(e.0, e.1));
    }
    Ok(hamilton_cycles(g)
        .iter()
        .filter(|c| c.contains_edge(e.0, e.1))
        .count())
}

/// Edges of `g` with both ends on `c` that are not edges of `c`.
pub fn chords(g: &Graph, c: &Cycle) -> Vec<(usize, usize)> {
    let on = c.vertex_set();
    let mut cyc: Vec<(usize, usize)> = c.edges().collect();
    cyc.sort_unstable();
    let mut out: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| on.contains(a) && on.contains(b))
        .collect();
    out.sort_unstable();
    // drop one copy of every cycle edge; parallel copies of a cycle edge count as chords
    let mut result = Vec::with_capacity(out.len());
    let mut i = 0;
    for e in out {
        while i < cyc.len() && cyc[i] < e {
            i += 1;
        }
        if i < cyc.len() && cyc[i] == e {
            i += 1;
        } else {
            result.push(e);
        }
    }
    result
}

/// A cycle in a multigraph, carrying edge ids so parallel edges are distinguished.
/// `edges[i]` joins `vertices[i]` and `vertices[(i+1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl EdgeCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    pub fn contains_edge_id(&self, id: usize) -> bool {
        self.edges.contains(&id)
    }

    /// The two edge ids of the cycle at `v`, if `v` is on it.
    pub fn edges_at(&self, v: usize) -> Option<(usize, usize)> {
        let len = self.vertices.len();
        let i = self.vertices.iter().position(|&w| w == v)?;
        Some((self.edges[(i + len - 1) % len], self.edges[i]))
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.vertices.len();
        if len < 2 || self.edges.len() != len {
            return false;
        }
        let set = self.vertex_set();
        if set.len() != len {
            return false;
        }
        let mut ids = self.edges.clone();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let id = self.edges[i];
            id < g.size() && g.edge(id) == edge_key(self.vertices[i], self.vertices[(i + 1) % len])
        })
    }

    /// Rotation and orientation with the lowest vertex first; ties in direction
    /// are broken by (neighbor id, edge id).
    pub fn canonical(vertices: &[usize], edges: &[usize]) -> EdgeCycle {
        let len = vertices.len();
        let (i, _) = vertices.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
        let fwd = (vertices[(i + 1) % len], edges[i]);
        let bwd = (vertices[(i + len - 1) % len], edges[(i + len - 1) % len]);
        if fwd <= bwd {
            EdgeCycle {
                vertices: (0..len).map(|k| vertices[(i + k) % len]).collect(),
                edges: (0..len).map(|k| edges[(i + k) % len]).collect(),
            }
        } else {
            EdgeCycle {
                vertices: (0..len).map(|k| vertices[(i + len - k) % len]).collect(),
                edges: (0..len).map(|k| edges[(i + 2 * len - k - 1) % len]).collect(),
            }
        }
    }
}

/// Visits every cycle of a multigraph exactly once (2-cycles on parallel edges included),
/// in canonical form, until the visitor breaks.
pub fn for_each_edge_cycle<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&EdgeCycle) -> ControlFlow<()>,
{
    fn dfs<F: FnMut(&EdgeCycle) -> ControlFlow<()>>(
        g: &Graph,
        start: usize,
        cur: usize,
        visited: VertexSet,
        vs: &mut Vec<usize>,
        es: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        for &(w, id) in g.incident(cur) {
            if w == start && !es.is_empty() {
                if id == es[0] {
                    continue;
                }
                // orientation filter: keep the direction whose first step is smaller
                let first = (vs[1], es[0]);
                let last = (cur, id);
                if first < last {
                    es.push(id);
                    let c = EdgeCycle {
                        vertices: vs.clone(),
                        edges: es.clone(),
                    };
                    es.pop();
                    visit(&c)?;
                }
                continue;
            }
            if w < start || visited.contains(w) {
                continue;
            }
            vs.push(w);
            es.push(id);
            let mut next = visited;
            next.insert(w);
            let r = dfs(g, start, w, next, vs, es, visit);
            vs.pop();
            es.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    for s in 0..g.order() {
        let mut vs = vec![s];
        let mut es = Vec::new();
        if dfs(g, s, s, VertexSet::singleton(s), &mut vs, &mut es, &mut visit).is_break() {
            return;
        }
    }
}

/// All cycles of a multigraph, canonical, sorted.
pub fn all_edge_cycles(g: &Graph) -> Vec<EdgeCycle> {
    let mut out = Vec::new();
    for_each_edge_cycle(g, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Visits every cycle containing edge `id` exactly once, walking it from the
/// lower end of `id` across `id` first. Branches that can no longer pick up every
/// vertex of `required` are pruned.
pub fn for_each_edge_cycle_through<F>(g: &Graph, id: usize, required: VertexSet, mut visit: F)
where
    F: FnMut(&EdgeCycle) -> ControlFlow<()>,
{
    struct Walk<'g, F> {
        g: &'g Graph,
        start: usize,
        first: usize,
        required: VertexSet,
        vs: Vec<usize>,
        es: Vec<usize>,
        visit: F,
    }
    impl<F: FnMut(&EdgeCycle) -> ControlFlow<()>> Walk<'_, F> {
        fn dfs(&mut self, cur: usize, visited: VertexSet) -> ControlFlow<()> {
            let missing = self.required.difference(visited);
            if !missing.is_empty() {
                let free = self.g.vertices().difference(visited);
                let reach = self
                    .g
                    .reach_within(cur, free.union(VertexSet::from_iter([cur, self.start])));
                if !missing.is_subset(reach) {
                    return ControlFlow::Continue(());
                }
            }
            for &(w, e) in self.g.incident(cur) {
                if e == self.first || e == *self.es.last().expect("first edge pushed") {
                    continue;
                }
                if w == self.start {
                    if missing.is_empty() {
                        self.es.push(e);
                        let c = EdgeCycle {
                            vertices: self.vs.clone(),
                            edges: self.es.clone(),
                        };
                        self.es.pop();
                        (self.visit)(&c)?;
                    }
                    continue;
                }
                if visited.contains(w) {
                    continue;
                }
                self.vs.push(w);
                self.es.push(e);
                let mut next = visited;
                next.insert(w);
                let r = self.dfs(w, next);
                self.vs.pop();
                self.es.pop();
                r?;
            }
            ControlFlow::Continue(())
        }
    }
    let (u, v) = g.edge(id);
    let mut walk = Walk {
        g,
        start: u,
        first: id,
        required,
        vs: vec![u, v],
        es: vec![id],
        visit: &mut visit,
    };
    let _ = walk.dfs(v, VertexSet::from_iter([u, v]));
}

/// Hamilton cycles of a multigraph that use edge `id`, sorted.
pub fn hamilton_edge_cycles_through(g: &Graph, id: usize) -> Vec<EdgeCycle> {
    let mut out = Vec::new();
    for_each_edge_cycle_through(g, id, g.vertices(), |c| {
        out.push(EdgeCycle::canonical(&c.vertices, &c.edges));
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Hamilton cycles of a multigraph (edge-aware), sorted.
pub fn hamilton_edge_cycles(g: &Graph) -> Vec<EdgeCycle> {
    let n = g.order();
    if n < 2 {
        return Vec::new();
    }
    // every Hamilton cycle uses exactly one of the edges at vertex 0 as its
    // lower-id edge there, so collect per incident edge and keep those
    let mut out = Vec::new();
    for &(_, id) in g.incident(0) {
        for c in hamilton_edge_cycles_through(g, id) {
            let (e1, e2) = c.edges_at(0).expect("spanning");
            if e1.min(e2) == id {
                out.push(c);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::named;

    #[test]
    fn k4_adjacent_pair() {
        let r = longest_xy_paths(&named::complete(4), 0, 1, SearchMode::All).unwrap();
        assert_eq!(r.max_length, 3);
        assert_eq!(r.witnesses.len(), 2);
        assert!(r.bound_sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn triangle_pair() {
        let r = longest_xy_paths(&named::cycle(3), 0, 1, SearchMode::All).unwrap();
        assert_eq!(r.max_length, 2);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn petersen_adjacent_pair() {
        let g = named::petersen();
        let r = longest_xy_paths(&g, 0, 1, SearchMode::All).unwrap();
        assert_eq!(r.max_length, 8);
        assert!(r.bound_sets.iter().all(|s| s.len() >= 2));
        let first = longest_xy_paths(&g, 0, 1, SearchMode::First).unwrap();
        assert_eq!(first.max_length, 8);
        assert_eq!(first.witnesses.len(), 1);
    }

    #[test]
    fn xy_errors() {
        let g = named::complete(4);
        assert!(longest_xy_paths(&g, 0, 4, SearchMode::First).is_err());
        assert!(longest_xy_paths(&g, 2, 2, SearchMode::First).is_err());
    }

    #[test]
    fn bound_vertices_examples() {
        let k4 = named::complete(4);
        let p = Path::new(&k4, vec![0, 2, 3, 1]).unwrap();
        assert_eq!(internal_bound_vertices(&k4, &p), [2usize, 3].iter().collect());
        // K3,3 parts {x=0,a=1,b=2} and {y=3,c=4,d=5}; path x-c-a-y
        let k33 = named::k33();
        let p = Path::new(&k33, vec![0, 4, 1, 3]).unwrap();
        assert!(internal_bound_vertices(&k33, &p).is_empty());
    }

    #[test]
    fn longest_cycle_examples() {
        let k4 = longest_cycles(&named::complete(4), SearchMode::All).unwrap();
        assert_eq!(k4.len(), 3);
        assert!(k4.iter().all(|c| c.len() == 4));
        let c5 = longest_cycles(&named::cycle(5), SearchMode::All).unwrap();
        assert_eq!(c5, [Cycle::new(&named::cycle(5), &[0, 1, 2, 3, 4]).unwrap()]);
        let pet = longest_cycles(&named::petersen(), SearchMode::First).unwrap();
        assert_eq!(pet[0].len(), 9);
        assert_eq!(longest_cycles(&named::path(4), SearchMode::All), Err(Error::Acyclic));
    }

    #[test]
    fn chord_examples() {
        let k4 = named::complete(4);
        let c = &hamilton_cycles(&k4)[0];
        assert_eq!(chords(&k4, c).len(), 2);
        let c5 = named::cycle(5);
        let c = Cycle::new(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(chords(&c5, &c).is_empty());
        let pet = named::petersen();
        for c in longest_cycles(&pet, SearchMode::All).unwrap() {
            assert_eq!(chords(&pet, &c).len(), 3);
        }
    }

    #[test]
    fn hamilton_examples() {
        assert_eq!(hamilton_cycles(&named::complete(4)).len(), 3);
        assert!(hamilton_cycles(&named::petersen()).is_empty());
        assert_eq!(hamilton_cycles(&named::cycle(6)).len(), 1);
        assert_eq!(hamilton_count_through_edge(&named::complete(4), (0, 1)), Ok(2));
        assert_eq!(hamilton_count_through_edge(&named::petersen(), (0, 1)), Ok(0));
        assert_eq!(hamilton_count_through_edge(&named::cycle(6), (2, 3)), Ok(1));
        assert_eq!(
            hamilton_count_through_edge(&named::cycle(6), (0, 3)),
            Err(Error::EdgeAbsent(0, 3))
        );
    }

    #[test]
    fn canonical_order() {
        assert_eq!(canonical_cycle_order(&[3, 1, 4, 2]), [1, 3, 2, 4]);
        let c = Cycle::from_vertices_unchecked(&[2, 0, 1]);
        assert_eq!(c.vertices(), [0, 1, 2]);
        let p = c.open_at(0, 1).unwrap();
        assert_eq!(p.vertices(), [0, 2, 1]);
    }

    #[test]
    fn edge_cycles_see_parallel_edges() {
        let g = build_graph(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let cycles = all_edge_cycles(&g);
        // one 2-cycle and two triangles
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.is_valid_in(&g)));
        assert_eq!(hamilton_edge_cycles(&g).len(), 2);
        let k4 = named::complete(4);
        assert_eq!(all_edge_cycles(&k4).len(), 7);
        assert_eq!(hamilton_edge_cycles(&k4).len(), 3);
    }
}
