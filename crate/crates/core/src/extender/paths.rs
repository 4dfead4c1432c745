//! Host-graph path helpers shared by the extension steps.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Shortest path from `from` to `to` with at least `min_len` edges whose interior
/// lies in `interior`; ties go to the lexicographically smallest sequence.
/// `from == to` yields the one-vertex path when `min_len == 0`.
pub fn host_path(g: &Graph, from: usize, to: usize, interior: VertexSet, min_len: usize) -> Option<Vec<usize>> {
    if from == to {
        return (min_len == 0).then(|| vec![from]);
    }
    struct St<'g> {
        g: &'g Graph,
        to: usize,
        interior: VertexSet,
        min_len: usize,
        stack: Vec<usize>,
        best: Option<Vec<usize>>,
    }
    impl St<'_> {
        fn dfs(&mut self, cur: usize, visited: VertexSet) {
            let len = self.stack.len() - 1;
            if let Some(b) = &self.best {
                if len >= b.len() - 1 {
                    return;
                }
            }
            for w in self.g.neighbor_set(cur) {
                if w == self.to {
                    if len + 1 >= self.min_len {
                        self.stack.push(w);
                        let better = match &self.best {
                            None => true,
                            Some(b) => self.stack.len() < b.len() || (self.stack.len() == b.len() && self.stack < *b),
                        };
                        if better {
                            self.best = Some(self.stack.clone());
                        }
                        self.stack.pop();
                    }
                    continue;
                }
                if !self.interior.contains(w) || visited.contains(w) {
                    continue;
                }
                self.stack.push(w);
                let mut next = visited;
                next.insert(w);
                self.dfs(w, next);
                self.stack.pop();
            }
        }
    }
    let mut st = St {
        g,
        to,
        interior: interior.difference(VertexSet::from_iter([from, to])),
        min_len,
        stack: vec![from],
        best: None,
    };
    st.dfs(from, VertexSet::singleton(from));
    st.best
}

/// Replaces the consecutive pair `seq[i], seq[i+1]` by `detour` (which starts
/// with `seq[i]` and ends with `seq[i+1]`).
pub fn splice(seq: &[usize], i: usize, detour: &[usize]) -> Vec<usize> {
    let mut out = seq[..i].to_vec();
    out.extend_from_slice(detour);
    out.extend_from_slice(&seq[i + 2..]);
    out
}

/// Appends `tail` to `acc`, dropping `tail[0]` when it repeats the last vertex.
pub fn append(acc: &mut Vec<usize>, tail: &[usize]) {
    match (acc.last(), tail.first()) {
        (Some(a), Some(b)) if a == b => acc.extend_from_slice(&tail[1..]),
        _ => acc.extend_from_slice(tail),
    }
}
