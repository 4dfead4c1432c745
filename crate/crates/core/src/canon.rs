//! Canonical labeling of simple graphs by individualization and refinement.
//!
//! Partitions are refined with a label-invariant rule (a vertex's new cell is
//! ranked by its old cell and the sorted multiset of its neighbors' cells).
//! The search branches on the first non-singleton cell and keeps the
//! lexicographically smallest adjacency code over all discrete leaves. No
//! automorphism pruning is done; at the orders used here that is unnecessary.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Canonical code: the order followed by the adjacency rows under the canonical labeling.
pub type CanonCode = Vec<u64>;

fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut cells = colors.iter().copied().max().map_or(0, |m| m + 1) as usize;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank as usize + 1 };
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn code_of(g: &Graph, colors: &[u32]) -> CanonCode {
    let n = colors.len();
    let mut rows = vec![0u64; n + 1];
    rows[0] = n as u64;
    for v in 0..n {
        let mut row = 0u64;
        for w in g.neighbors(v) {
            row |= 1u64 << colors[w];
        }
        rows[colors[v] as usize + 1] = row;
    }
    rows
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(CanonCode, Vec<u32>)>) {
    let n = colors.len();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let target = (0..n).find(|&c| size[c] > 1);
    match target {
        None => {
            let code = code_of(g, &colors);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, colors));
            }
        }
        Some(cell) => {
            let cell = cell as u32;
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let mut next: Vec<u32> = colors
                    .iter()
                    .enumerate()
                    .map(|(w, &c)| if c > cell || (c == cell && w != v) { c + 1 } else { c })
                    .collect();
                next[v] = cell;
                refine(g, &mut next);
                search(g, next, best);
            }
        }
    }
}

/// Canonical code and canonical labeling (`labeling[v]` is the new id of `v`).
/// Parallel edges are ignored; intended for simple graphs.
pub fn canonical_form(g: &Graph) -> (CanonCode, Vec<usize>) {
    let n = g.order();
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    match best {
        Some((code, labeling)) => (code, labeling.into_iter().map(|c| c as usize).collect()),
        None => (vec![0], Vec::new()),
    }
}

pub fn canonical_code(g: &Graph) -> CanonCode {
    canonical_form(g).0
}

/// `g` relabeled by `labeling` (`labeling[v]` is the new id of `v`).
pub fn relabel(g: &Graph, labeling: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| crate::graph::edge_key(labeling[a], labeling[b]))
        .collect();
    edges.sort_unstable();
    crate::graph::build_graph(g.order(), &edges).expect("relabeling preserves validity")
}

pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, lab) = canonical_form(g);
    relabel(g, &lab)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn relabeled_graphs_share_code() {
        let p = named::petersen();
        let lab = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_code(&p), canonical_code(&relabel(&p, &lab)));
        assert!(!are_isomorphic(&named::k33(), &named::prism()));
        assert!(are_isomorphic(&named::k33(), &relabel(&named::k33(), &[5, 4, 3, 2, 1, 0])));
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = canonical_graph(&named::double_diamond());
        assert_eq!(canonical_graph(&g), g);
    }
}
