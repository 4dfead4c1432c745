//! 3-coloring of graphs that are a Hamilton cycle plus vertex-disjoint
//! triangles and paths of order 3.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{invariant, Error, Result};
use crate::graph::{build_graph, components_after_deletion, edge_key, Graph};
use crate::search::Cycle;
use crate::vertex_set::VertexSet;

/// Colors in `1..=3`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    pub color: Vec<u8>,
}

impl VertexColoring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color.len() == g.order()
            && self.color.iter().all(|&c| (1..=3).contains(&c))
            && g.edges().iter().all(|&(a, b)| self.color[a] != self.color[b])
    }

    pub fn class(&self, c: u8) -> VertexSet {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }
}

/// Result of closing every order-3 path into a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivided {
    pub g: Graph,
    /// Hamilton cycle of `g`, running through the new vertices.
    pub cycle: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
    /// `(u, w, z)`: cycle edge `uw` was subdivided by the new vertex `z`.
    pub subdivisions: Vec<(usize, usize, usize)>,
}

/// Nontrivial components of `g - E(c)`, each as `(vertices, is_triangle)`;
/// paths are listed end, middle, end.
fn off_cycle_pieces(g: &Graph, c: &Cycle) -> Result<Vec<([usize; 3], bool)>> {
    let n = g.order();
    if c.len() != n {
        return Err(Error::Hypothesis(format!("cycle has {} of {} vertices", c.len(), n)));
    }
    let mut rest = Graph::empty(n)?;
    for &(a, b) in g.edges() {
        if !c.contains_edge(a, b) {
            rest.add_edge(a, b)?;
        }
    }
    let mut pieces = Vec::new();
    for comp in components_after_deletion(&rest, VertexSet::EMPTY).components {
        if comp.len() == 1 {
            continue;
        }
        let vs: Vec<usize> = comp.iter().collect();
        let m: usize = vs.iter().map(|&v| rest.degree(v)).sum::<usize>() / 2;
        if vs.len() != 3 || !rest.is_simple() {
            return Err(Error::Hypothesis(format!(
                "off-cycle component {comp:?} is neither a triangle nor a path of order 3"
            )));
        }
        if m == 3 {
            pieces.push(([vs[0], vs[1], vs[2]], true));
        } else {
            let mid = *vs.iter().find(|&&v| rest.degree(v) == 2).expect("path of order 3");
            let ends: Vec<usize> = vs.iter().copied().filter(|&v| v != mid).collect();
            pieces.push(([ends[0], mid, ends[1]], false));
        }
    }
    Ok(pieces)
}

/// Closes each order-3 path `u v w` of `g - E(c)` into a triangle by adding `uw`;
/// when `uw` is a cycle edge it is first subdivided by a fresh vertex.
pub fn subdivision_transform(g: &Graph, c: &Cycle) -> Result<Subdivided> {
    let pieces = off_cycle_pieces(g, c)?;
    let n = g.order();
    let mut cycle: Vec<usize> = c.vertices().to_vec();
    let mut extra = Vec::new();
    let mut subdivisions = Vec::new();
    let mut triangles = Vec::new();
    let mut next = n;
    for &(t, tri) in &pieces {
        triangles.push(t);
        if tri {
            continue;
        }
        let (u, w) = (t[0], t[2]);
        if c.contains_edge(u, w) {
            let len = cycle.len();
            let i = cycle.iter().position(|&v| v == u).expect("u on cycle");
            if cycle[(i + 1) % len] == w {
                cycle.insert(i + 1, next);
            } else {
                cycle.insert(i, next);
            }
            subdivisions.push((u, w, next));
            next += 1;
        }
        extra.push(edge_key(u, w));
    }
    let len = cycle.len();
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| edge_key(cycle[i], cycle[(i + 1) % len])).collect();
    for &(a, b) in g.edges() {
        if !c.contains_edge(a, b) {
            edges.push((a, b));
        }
    }
    edges.extend(extra);
    let out = build_graph(next, &edges)?;
    Ok(Subdivided {
        g: out,
        cycle,
        triangles,
        subdivisions,
    })
}

/// Exact 3-coloring by backtracking in saturation order (ties by degree, then id).
pub fn three_color(g: &Graph) -> Option<VertexColoring> {
    fn go(g: &Graph, color: &mut [u8], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let n = color.len();
        let mut best = None;
        let mut best_key = (0usize, 0usize);
        for v in 0..n {
            if color[v] != 0 {
                continue;
            }
            let mut seen = 0u8;
            for w in g.neighbors(v) {
                if color[w] != 0 {
                    seen |= 1 << color[w];
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if best.is_none() || key > best_key {
                best = Some((v, seen));
                best_key = key;
            }
        }
        let (v, seen) = best.expect("an uncolored vertex exists");
        for c in 1..=3u8 {
            if seen >> c & 1 == 0 {
                color[v] = c;
                if go(g, color, left - 1) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    let mut color = vec![0u8; g.order()];
    if go(g, &mut color, g.order()) {
        Some(VertexColoring { color })
    } else {
        None
    }
}

/// A proper 3-coloring of `g`, found on the triangle-closed graph and restricted
/// back to `V(g)`.
pub fn three_color_cycle_plus(g: &Graph, c: &Cycle) -> Result<VertexColoring> {
    let sub = subdivision_transform(g, c)?;
    let full = three_color(&sub.g)
        .ok_or_else(|| invariant("coloring", format!("no 3-coloring of {:?}", sub.g)))?;
    let col = VertexColoring {
        color: full.color[..g.order()].to_vec(),
    };
    if !col.is_proper(g) {
        return Err(invariant("coloring", "restricted coloring is not proper"));
    }
    Ok(col)
}

/// Picks the lowest color class avoiding `forbidden` and reorders each triple so
/// that its member in the class comes last.
pub fn pick_color_class(
    coloring: &VertexColoring,
    forbidden: VertexSet,
    triples: &mut [[usize; 3]],
) -> Result<VertexSet> {
    for c in 1..=3u8 {
        let class = coloring.class(c);
        if !class.is_disjoint(forbidden) {
            continue;
        }
        for t in triples.iter_mut() {
            let hits: Vec<usize> = (0..3).filter(|&i| class.contains(t[i])).collect();
            if hits.len() != 1 {
                return Err(invariant(
                    "coloring",
                    format!("triple {t:?} has {} vertices in class {c}", hits.len()),
                ));
            }
            t.swap(hits[0], 2);
        }
        return Ok(class);
    }
    Err(invariant("coloring", format!("every color class meets {forbidden:?}")))
}

/// Is `sub` an edge-disjoint union of its Hamilton cycle and its triangles?
pub fn is_cycle_plus_triangles(sub: &Subdivided) -> bool {
    let g = &sub.g;
    let len = sub.cycle.len();
    if len != g.order() || !crate::search::is_valid_cycle(g, &sub.cycle) {
        return false;
    }
    let mut want: Vec<(usize, usize)> = (0..len).map(|i| edge_key(sub.cycle[i], sub.cycle[(i + 1) % len])).collect();
    let mut used = VertexSet::EMPTY;
    for t in &sub.triangles {
        let set: VertexSet = t.iter().collect();
        if set.len() != 3 || !set.is_disjoint(used) {
            return false;
        }
        used = used.union(set);
        want.extend([edge_key(t[0], t[1]), edge_key(t[1], t[2]), edge_key(t[0], t[2])]);
    }
    want.sort_unstable();
    let mut have = g.edges().to_vec();
    have.sort_unstable();
    want == have
}
