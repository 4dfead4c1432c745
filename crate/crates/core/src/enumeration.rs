//! The test universe: connected cubic graphs up to isomorphism, random cubic
//! graphs, and seeded instances for the Hamilton-cycle lemmas and the coloring lemma.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, relabel, CanonCode};
use crate::error::{Error, Result};
use crate::graph::{build_graph, components_after_deletion, Graph};
use crate::search::{is_valid_cycle, Cycle, Path};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`enumerate_cubic`].
pub const MAX_ENUM_ORDER: usize = 14;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Filler {
    n: usize,
    deg: Vec<u8>,
    nbr: Vec<u64>,
    edges: Vec<(usize, usize)>,
    fresh: usize,
    out: BTreeMap<CanonCode, Graph>,
    labeled: u64,
}

impl Filler {
    // Vertices are completed in id order. New neighbors are always the next unused
    // ids, so every emitted labeling is a breadth-first numbering of a connected graph.
    fn fill(&mut self, v: usize) {
        if v == self.n {
            self.labeled += 1;
            let g = build_graph(self.n, &self.edges).expect("filler edges are valid");
            let (code, lab) = canonical_form(&g);
            self.out.entry(code).or_insert_with(|| relabel(&g, &lab));
            return;
        }
        if v >= self.fresh {
            return;
        }
        let need = 3 - self.deg[v] as usize;
        let cands: Vec<usize> = ((v + 1)..self.fresh)
            .filter(|&w| self.deg[w] < 3 && self.nbr[v] >> w & 1 == 0)
            .collect();
        for take in 0..=need.min(cands.len()) {
            let fresh_needed = need - take;
            if self.fresh + fresh_needed > self.n {
                continue;
            }
            self.choose(v, &cands, 0, take, fresh_needed);
        }
    }

    fn choose(&mut self, v: usize, cands: &[usize], from: usize, left: usize, fresh_needed: usize) {
        if left == 0 {
            let start = self.fresh;
            for w in start..start + fresh_needed {
                self.link(v, w);
            }
            self.fresh += fresh_needed;
            self.fill(v + 1);
            self.fresh -= fresh_needed;
            for w in (start..start + fresh_needed).rev() {
                self.unlink(v, w);
            }
            return;
        }
        for i in from..cands.len() {
            if cands.len() - i < left {
                break;
            }
            let w = cands[i];
            self.link(v, w);
            self.choose(v, cands, i + 1, left - 1, fresh_needed);
            self.unlink(v, w);
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.deg[a] += 1;
        self.deg[b] += 1;
        self.nbr[a] |= 1 << b;
        self.nbr[b] |= 1 << a;
        self.edges.push((a, b));
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.nbr[a] &= !(1 << b);
        self.nbr[b] &= !(1 << a);
        self.edges.pop();
    }
}

/// All connected cubic graphs on `n` vertices, one per isomorphism class, in
/// canonical labeling, ordered by canonical code.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 || !(4..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::BadOrder(n));
    }
    let mut f = Filler {
        n,
        deg: vec![0; n],
        nbr: vec![0; n],
        edges: Vec::new(),
        fresh: 1,
        out: BTreeMap::new(),
        labeled: 0,
    };
    f.fill(0);
    log::debug!("n={n}: {} labelings, {} classes", f.labeled, f.out.len());
    Ok(f.out.into_values().collect())
}

/// A random simple cubic graph from the pairing model, rejecting loops and
/// parallel edges. Deterministic per `(n, seed)`.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n % 2 == 1 || !(4..=crate::vertex_set::MAX_VERTICES).contains(&n) {
        return Err(Error::BadOrder(n));
    }
    let mut rng = rng_for(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'retry: loop {
        points.shuffle(&mut rng);
        let mut nbr = vec![0u64; n];
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || nbr[a] >> b & 1 == 1 {
                continue 'retry;
            }
            nbr[a] |= 1 << b;
            nbr[b] |= 1 << a;
            edges.push(crate::graph::edge_key(a, b));
        }
        edges.sort_unstable();
        return build_graph(n, &edges);
    }
}

/// A graph with a Hamilton cycle `C` and an independent set `A` on `C` such that
/// `C - A` has `|A|` components `H_1..H_k`, and for every `i < k` both ends of
/// `H_i` are joined to `A` by chords of `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaInstance {
    pub g: Graph,
    /// The Hamilton cycle in traversal order (not rotated to canonical form).
    pub cycle: Vec<usize>,
    pub a: VertexSet,
    /// Components of `C - A` as vertex sequences along `cycle`.
    pub components: Vec<Vec<usize>>,
    /// Index of the exceptional component `H_k`.
    pub distinguished: usize,
}

impl LemmaInstance {
    /// The 6-vertex instance `C = v1 a1 v2 v3 a2 v4` with chords `v2a2`, `v3a1`,
    /// labeled `v1=0, a1=1, v2=2, v3=3, a2=4, v4=5`; `H_k = v4 v1`.
    pub fn six_vertex() -> LemmaInstance {
        let g = build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 4), (3, 1)])
            .expect("six-vertex instance");
        LemmaInstance {
            g,
            cycle: vec![0, 1, 2, 3, 4, 5],
            a: [1usize, 4].iter().collect(),
            components: vec![vec![2, 3], vec![5, 0]],
            distinguished: 1,
        }
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn hamilton_cycle(&self) -> Cycle {
        Cycle::from_vertices_unchecked(&self.cycle)
    }

    pub fn is_hamilton(&self) -> bool {
        self.cycle.len() == self.g.order() && is_valid_cycle(&self.g, &self.cycle)
    }

    pub fn a_independent_on_cycle(&self) -> bool {
        let len = self.cycle.len();
        (0..len).all(|i| !(self.a.contains(self.cycle[i]) && self.a.contains(self.cycle[(i + 1) % len])))
    }

    /// `|A|` equals the number of components of `C - A`, and `components` lists exactly them.
    pub fn component_count_matches(&self) -> bool {
        let cyc = crate::search::canonical_cycle_order(&self.cycle);
        let c = build_graph(
            self.g.order(),
            &(0..cyc.len()).map(|i| (cyc[i], cyc[(i + 1) % cyc.len()])).collect::<Vec<_>>(),
        );
        let Ok(c) = c else { return false };
        let comps = components_after_deletion(&c, self.a);
        let mut listed: Vec<VertexSet> = self.components.iter().map(|h| h.iter().collect()).collect();
        listed.sort();
        let mut actual = comps.components.clone();
        actual.sort();
        self.a.len() == comps.len() && listed == actual && self.components.len() == self.a.len()
    }

    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        let h = &self.components[i];
        (h[0], h[h.len() - 1])
    }

    /// The first end `x` of the distinguished component with its cycle neighbor
    /// `y` in `A`: the edge the second-cycle construction is asked to keep.
    pub fn distinguished_exit(&self) -> (usize, usize) {
        let (x, _) = self.endpoints(self.distinguished);
        let len = self.cycle.len();
        let i = self.cycle.iter().position(|&v| v == x).expect("vertex on cycle");
        let y = [self.cycle[(i + 1) % len], self.cycle[(i + len - 1) % len]]
            .into_iter()
            .find(|&w| self.a.contains(w))
            .expect("an end of a component neighbors A");
        (x, y)
    }

    /// Every end of every non-distinguished component has a chord of `C` into `A`.
    pub fn endpoints_have_chords(&self) -> bool {
        (0..self.k())
            .filter(|&i| i != self.distinguished)
            .all(|i| {
                let (s, t) = self.endpoints(i);
                [s, t].iter().all(|&z| !self.chords_to_a(z).is_empty())
            })
    }

    /// `A`-vertices joined to `z` by an edge that is not a cycle edge.
    pub fn chords_to_a(&self, z: usize) -> Vec<usize> {
        let len = self.cycle.len();
        let i = self.cycle.iter().position(|&w| w == z).expect("vertex on cycle");
        let (prev, next) = (self.cycle[(i + len - 1) % len], self.cycle[(i + 1) % len]);
        self.g
            .neighbors(z)
            .filter(|&w| self.a.contains(w) && w != prev && w != next)
            .collect()
    }

    /// Runs every invariant predicate, naming the first that fails.
    pub fn check(&self) -> Result<()> {
        let checks: [(&str, bool); 4] = [
            ("C is a Hamilton cycle", self.is_hamilton()),
            ("A is independent on C", self.a_independent_on_cycle()),
            ("C - A has |A| components", self.component_count_matches()),
            ("component ends are joined to A by chords", self.endpoints_have_chords()),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(Error::Hypothesis(format!("lemma instance: {name}")));
            }
        }
        if self.distinguished >= self.k() || self.k() < 2 {
            return Err(Error::Hypothesis(format!("lemma instance: need k >= 2, got {}", self.k())));
        }
        Ok(())
    }
}

/// A seeded [`LemmaInstance`] with `k` components. Component ends other than
/// those of `H_k` get exactly one chord each, so they have degree 3; `H_k`'s ends
/// and interior vertices get a chord at random. Vertex ids are shuffled.
pub fn gen_lemma_instance(k: usize, seed: u64) -> Result<LemmaInstance> {
    if k < 2 {
        return Err(Error::Hypothesis(format!("lemma instance needs k >= 2, got {k}")));
    }
    let mut rng = rng_for(seed ^ 0x6c65_6d6d_6100_0000);
    loop {
        // A at every third position, or random component lengths
        let lens: Vec<usize> = if rng.gen_bool(0.5) {
            vec![2; k]
        } else {
            (0..k).map(|_| rng.gen_range(1..=3)).collect()
        };
        let total = k + lens.iter().sum::<usize>();
        if total > crate::vertex_set::MAX_VERTICES {
            return Err(Error::Hypothesis(format!("k = {k} is too large")));
        }
        let mut cycle = Vec::with_capacity(total);
        let mut a_pos = Vec::with_capacity(k);
        let mut comps_pos: Vec<Vec<usize>> = Vec::with_capacity(k);
        for &l in &lens {
            a_pos.push(cycle.len());
            cycle.push(cycle.len());
            comps_pos.push((cycle.len()..cycle.len() + l).collect());
            for _ in 0..l {
                cycle.push(cycle.len());
            }
        }
        let mut edges: Vec<(usize, usize)> = (0..total).map(|i| (i, (i + 1) % total)).collect();
        let mut nbr = vec![0u64; total];
        for &(a, b) in &edges {
            nbr[a] |= 1 << b;
            nbr[b] |= 1 << a;
        }
        let add = |a: usize, b: usize, edges: &mut Vec<(usize, usize)>, nbr: &mut Vec<u64>| -> bool {
            if a == b || nbr[a] >> b & 1 == 1 {
                return false;
            }
            nbr[a] |= 1 << b;
            nbr[b] |= 1 << a;
            edges.push((a, b));
            true
        };
        let mut ok = true;
        let mut pointer = rng.gen_range(0..k);
        for (i, h) in comps_pos.iter().enumerate() {
            let ends: Vec<usize> = if h.len() == 1 { vec![h[0]] } else { vec![h[0], h[h.len() - 1]] };
            for &z in &ends {
                let mandatory = i != k - 1;
                if !mandatory && rng.gen_bool(0.5) {
                    continue;
                }
                let mut placed = false;
                for step in 0..k {
                    let a = a_pos[(pointer + step) % k];
                    if add(z, a, &mut edges, &mut nbr) {
                        pointer = (pointer + step + 1) % k;
                        placed = true;
                        break;
                    }
                }
                if mandatory && !placed {
                    ok = false;
                }
            }
            for &z in h.iter().skip(1).take(h.len().saturating_sub(2)) {
                if rng.gen_bool(0.3) {
                    let a = a_pos[rng.gen_range(0..k)];
                    add(z, a, &mut edges, &mut nbr);
                }
            }
        }
        if !ok {
            continue;
        }
        let mut perm: Vec<usize> = (0..total).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let g = build_graph(total, &edges)?;
        let inst = LemmaInstance {
            g,
            cycle: cycle.iter().map(|&v| perm[v]).collect(),
            a: a_pos.iter().map(|&p| perm[p]).collect(),
            components: comps_pos
                .iter()
                .map(|h| h.iter().map(|&v| perm[v]).collect())
                .collect(),
            distinguished: k - 1,
        };
        inst.check()?;
        return Ok(inst);
    }
}

/// A graph made of a Hamilton cycle plus vertex-disjoint triangles and paths of
/// order 3 whose edges avoid the cycle (a path's closing pair may be a cycle edge).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePlusInstance {
    pub g: Graph,
    pub cycle: Vec<usize>,
    /// Triples `(u, v, w)`; for paths `v` is the middle vertex.
    pub triples: Vec<[usize; 3]>,
    pub is_triangle: Vec<bool>,
}

pub fn gen_cycle_plus_instance(n: usize, seed: u64) -> Result<CyclePlusInstance> {
    if !(4..=crate::vertex_set::MAX_VERTICES).contains(&n) {
        return Err(Error::BadOrder(n));
    }
    let mut rng = rng_for(seed ^ 0x636f_6c6f_7200_0000);
    let mut cycle: Vec<usize> = (0..n).collect();
    cycle.shuffle(&mut rng);
    let mut pos = vec![0usize; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let on_cycle = |a: usize, b: usize| {
        let d = pos[a].abs_diff(pos[b]);
        d == 1 || d == n - 1
    };
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (cycle[i], cycle[(i + 1) % n])).collect();
    let mut used = VertexSet::EMPTY;
    let mut triples = Vec::new();
    let mut is_triangle = Vec::new();
    let wanted = rng.gen_range(1..=n / 3);
    let mut attempts = 0;
    while triples.len() < wanted && attempts < 200 {
        attempts += 1;
        let free: Vec<usize> = (0..n).filter(|&v| !used.contains(v)).collect();
        if free.len() < 3 {
            break;
        }
        let mut pick: Vec<usize> = free.choose_multiple(&mut rng, 3).copied().collect();
        pick.sort_unstable();
        let (u, v, w) = (pick[0], pick[1], pick[2]);
        let triangle = rng.gen_bool(0.5);
        if triangle {
            if on_cycle(u, v) || on_cycle(v, w) || on_cycle(u, w) {
                continue;
            }
            edges.extend([(u, v), (v, w), (u, w)]);
            triples.push([u, v, w]);
        } else {
            // choose a middle vertex whose two path edges avoid the cycle
            let orders = [[u, v, w], [v, u, w], [u, w, v]];
            let Some(&[a, m, b]) = orders
                .iter()
                .filter(|t| !on_cycle(t[0], t[1]) && !on_cycle(t[1], t[2]))
                .max_by_key(|t| on_cycle(t[0], t[2]))
            else {
                continue;
            };
            edges.extend([(a, m), (m, b)]);
            triples.push([a, m, b]);
        }
        is_triangle.push(triangle);
        used = used.union([u, v, w].iter().collect());
    }
    let g = build_graph(n, &edges)?;
    Ok(CyclePlusInstance {
        g,
        cycle,
        triples,
        is_triangle,
    })
}

/// A random self-avoiding walk from a random start, run until stuck.
fn random_walk(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut walk = vec![rng.gen_range(0..g.order())];
    let mut seen = VertexSet::singleton(walk[0]);
    loop {
        let cur = walk[walk.len() - 1];
        let free: Vec<usize> = g.neighbor_set(cur).difference(seen).iter().collect();
        let Some(&next) = free.choose(rng) else { return walk };
        seen.insert(next);
        walk.push(next);
    }
}

/// Samples a path with no internal bound vertex that misses some vertex: a
/// random prefix, among the qualifying ones, of a random self-avoiding walk.
/// `None` when the walk has no such prefix.
pub fn sample_extendable_path(g: &Graph, seed: u64) -> Option<Path> {
    let mut rng = rng_for(seed ^ 0x7061_7468);
    let walk = random_walk(g, &mut rng);
    let ok: Vec<Path> = (2..=walk.len())
        .filter_map(|k| Path::new(g, walk[..k].to_vec()).ok())
        .filter(|p| matches!(crate::extender::precheck(g, p), Ok(crate::extender::Classification::Extendable)))
        .collect();
    ok.choose(&mut rng).cloned()
}

/// Samples a path with adjacent ends whose closing cycle has exactly one chord,
/// at an end of the path.
pub fn sample_one_chord_path(g: &Graph, seed: u64) -> Option<Path> {
    let mut rng = rng_for(seed ^ 0x63_686f_7264);
    let walk = random_walk(g, &mut rng);
    let ok: Vec<Path> = (3..=walk.len())
        .filter(|&k| g.has_edge(walk[0], walk[k - 1]) && k < g.order())
        .filter(|&k| {
            let ch = crate::extender::closed_chords(g, &walk[..k]);
            ch.len() == 1 && (ch[0].0 == 0 || ch[0].1 == k - 1)
        })
        .filter_map(|k| Path::new(g, walk[..k].to_vec()).ok())
        .collect();
    ok.choose(&mut rng).cloned()
}
