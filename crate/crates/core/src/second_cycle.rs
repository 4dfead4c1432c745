//! The two Hamilton-cycle exchange lemmas, run on concrete instances: the
//! parity statement for edges at an end of the exceptional component, and the
//! construction of a second Hamilton cycle through a prescribed edge.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::enumeration::LemmaInstance;
use crate::error::{invariant, Error, Result};
use crate::graph::{components_after_deletion, edge_key, Graph};
use crate::search::{hamilton_edge_cycles, hamilton_edge_cycles_through, EdgeCycle};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondCycleCertificate {
    /// The new Hamilton cycle; edge ids refer to the instance graph.
    pub c_prime: EdgeCycle,
    /// A vertex of `A` with exactly one of its two cycle edges on the old cycle.
    pub exchange_vertex: usize,
    /// Whether the new cycle agrees with the old one outside `A`.
    pub preserved: bool,
    /// Exchange rounds needed after the extremal choice (always 0 in practice).
    pub exchange_rounds: usize,
}

/// Edge ids of the instance cycle: between consecutive vertices, the lowest id.
pub fn cycle_edge_ids(g: &Graph, cycle: &[usize]) -> Result<Vec<usize>> {
    let len = cycle.len();
    (0..len)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % len]);
            g.edge_id(a, b).ok_or(Error::EdgeAbsent(a, b))
        })
        .collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Edge ids of `cycle` with no end in `a`.
fn outside(g: &Graph, edges: &[usize], a: VertexSet) -> Vec<usize> {
    sorted(
        edges
            .iter()
            .copied()
            .filter(|&e| {
                let (p, q) = g.edge(e);
                !a.contains(p) && !a.contains(q)
            })
            .collect(),
    )
}

/// `C' - A = C - A`, compared as edge sets (with vertex sets equal, since both span).
pub fn agrees_outside(g: &Graph, c: &[usize], c_prime: &[usize], a: VertexSet) -> bool {
    outside(g, c, a) == outside(g, c_prime, a)
}

/// Vertices of `a` with exactly one of their `c_prime` edges in `c`.
pub fn exchange_vertices(c_edges: &[usize], c_prime: &EdgeCycle, a: VertexSet) -> VertexSet {
    a.iter()
        .filter(|&v| match c_prime.edges_at(v) {
            Some((e1, e2)) => c_edges.contains(&e1) != c_edges.contains(&e2),
            None => false,
        })
        .collect()
}

fn overlap(c_edges: &[usize], c: &EdgeCycle) -> usize {
    c.edges.iter().filter(|e| c_edges.contains(e)).count()
}

/// The subgraph spanned by `keep` edge ids, with the id map back to `g`.
fn edge_subgraph(g: &Graph, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut sub = Graph::empty(g.order())?;
    let mut back = Vec::with_capacity(keep.len());
    for &e in keep {
        let (a, b) = g.edge(e);
        sub.add_edge(a, b)?;
        back.push(e);
    }
    Ok((sub, back))
}

fn lift(c: &EdgeCycle, back: &[usize]) -> EdgeCycle {
    EdgeCycle::canonical(&c.vertices, &c.edges.iter().map(|&e| back[e]).collect::<Vec<_>>())
}

/// For every component of `inst` other than the distinguished one, the chords
/// from its ends into `A` with the lowest `A` end (lowest edge id among parallels).
pub fn endpoint_chords(inst: &LemmaInstance, c_edges: &[usize]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..inst.k() {
        if i == inst.distinguished {
            continue;
        }
        let (s, t) = inst.endpoints(i);
        let ends = if s == t { [s, s] } else { [s, t] };
        for (j, &z) in ends.iter().enumerate() {
            if j == 1 && s == t {
                break;
            }
            let best = inst
                .g
                .incident(z)
                .iter()
                .filter(|&&(w, e)| inst.a.contains(w) && !c_edges.contains(&e))
                .min()
                .copied();
            match best {
                Some((_, e)) => out.push(e),
                None => {
                    return Err(Error::Hypothesis(format!(
                        "end {z} of component {i} has no chord into A"
                    )))
                }
            }
        }
    }
    Ok(out)
}

/// One exchange round: from a Hamilton cycle `c1` of `g1` that violates the
/// single-switch condition, build the union with `c` and return a Hamilton cycle
/// of it through the same edge at a switching vertex with strictly larger
/// overlap with `c`. Edge ids refer to `g1`.
pub fn exchange_step(g1: &Graph, c_edges: &[usize], c1: &EdgeCycle, a: VertexSet) -> Result<EdgeCycle> {
    let mut union: Vec<usize> = c_edges.iter().chain(c1.edges.iter()).copied().collect();
    union.sort_unstable();
    union.dedup();
    let (g2, back) = edge_subgraph(g1, &union)?;
    let a4: VertexSet = a.iter().filter(|&v| g2.degree(v) == 4).collect();
    if a4.len() < 2 {
        return Err(invariant(
            "exchange",
            format!("expected at least two degree-4 vertices in A, found {a4:?}"),
        ));
    }
    let w = a4.first().expect("nonempty");
    let (e_in, _) = c1.edges_at(w).expect("c1 spans");
    let local = back.iter().position(|&e| e == e_in).expect("edge in union");
    let c1_local: Vec<usize> = c1
        .edges
        .iter()
        .map(|e| back.iter().position(|b| b == e).expect("edge in union"))
        .collect();
    let base = overlap(c_edges, c1);
    for cand in hamilton_edge_cycles_through(&g2, local) {
        if sorted(cand.edges.clone()) == sorted(c1_local.clone()) {
            continue;
        }
        let lifted = lift(&cand, &back);
        if !agrees_outside(g1, &c1.edges, &lifted.edges, a4) {
            return Err(invariant(
                "exchange",
                format!("Hamilton cycle {lifted:?} of the union differs from c1 outside A'"),
            ));
        }
        if overlap(c_edges, &lifted) <= base {
            return Err(invariant("exchange", "second cycle does not increase the overlap"));
        }
        return Ok(lifted);
    }
    Err(invariant("exchange", "edge lies on a single Hamilton cycle of the union"))
}

/// A Hamilton cycle of the instance, distinct from its cycle `C`, through the
/// edge `xy` (`x` an end of the distinguished component, `y` its cycle neighbor
/// outside it), agreeing with `C` outside `A` and switching at some vertex of `A`.
pub fn second_hamilton_cycle(inst: &LemmaInstance, x: usize, y: usize) -> Result<SecondCycleCertificate> {
    inst.check()?;
    let c_edges = cycle_edge_ids(&inst.g, &inst.cycle)?;
    let hk = &inst.components[inst.distinguished];
    let (s, t) = inst.endpoints(inst.distinguished);
    if x != s && x != t {
        return Err(Error::Hypothesis(format!("{x} is not an end of the distinguished component")));
    }
    if hk.contains(&y) || !inst.a.contains(y) {
        return Err(Error::Hypothesis(format!("{x}{y} is not a cycle edge leaving the distinguished component")));
    }
    let len = inst.cycle.len();
    let xy = (0..len)
        .find(|&i| edge_key(inst.cycle[i], inst.cycle[(i + 1) % len]) == edge_key(x, y))
        .map(|i| c_edges[i])
        .ok_or(Error::EdgeAbsent(x, y))?;

    let mut keep = c_edges.clone();
    keep.extend(endpoint_chords(inst, &c_edges)?);
    keep.sort_unstable();
    keep.dedup();
    let (g1, back) = edge_subgraph(&inst.g, &keep)?;
    let local_xy = back.iter().position(|&e| e == xy).expect("xy kept");
    let local_c: Vec<usize> = c_edges
        .iter()
        .map(|e| back.iter().position(|b| b == e).expect("cycle kept"))
        .collect();
    let c_sorted = sorted(local_c.clone());

    let mut best: Option<EdgeCycle> = None;
    for cand in hamilton_edge_cycles_through(&g1, local_xy) {
        if sorted(cand.edges.clone()) == c_sorted {
            continue;
        }
        if !agrees_outside(&g1, &local_c, &cand.edges, inst.a) {
            return Err(invariant(
                "second-cycle",
                format!("Hamilton cycle {cand:?} differs from C outside A"),
            ));
        }
        if best.as_ref().is_none_or(|b| overlap(&local_c, &cand) > overlap(&local_c, b)) {
            best = Some(cand);
        }
    }
    let mut c1 = best.ok_or_else(|| invariant("second-cycle", "xy lies on no other Hamilton cycle"))?;
    let mut rounds = 0;
    while exchange_vertices(&local_c, &c1, inst.a).is_empty() {
        c1 = exchange_step(&g1, &local_c, &c1, inst.a)?;
        rounds += 1;
        if rounds > len {
            return Err(invariant("second-cycle", "exchange did not terminate"));
        }
    }
    let v = exchange_vertices(&local_c, &c1, inst.a).first().expect("nonempty");
    let c_prime = lift(&c1, &back);
    let preserved = agrees_outside(&inst.g, &c_edges, &c_prime.edges, inst.a);
    Ok(SecondCycleCertificate {
        c_prime,
        exchange_vertex: v,
        preserved,
        exchange_rounds: rounds,
    })
}

/// Re-checks a certificate from scratch: a Hamilton cycle of the instance graph,
/// not the instance cycle, containing `xy`, agreeing outside `A`, and switching
/// at the named vertex.
pub fn check_certificate(inst: &LemmaInstance, x: usize, y: usize, cert: &SecondCycleCertificate) -> Result<()> {
    let c = &cert.c_prime;
    let fail = |what: &str| Err(Error::Hypothesis(format!("certificate: {what}")));
    if !c.is_valid_in(&inst.g) || c.vertices.len() != inst.g.order() {
        return fail("not a Hamilton cycle");
    }
    let c_edges = cycle_edge_ids(&inst.g, &inst.cycle)?;
    if sorted(c.edges.clone()) == sorted(c_edges.clone()) {
        return fail("equals the original cycle");
    }
    if !c.edges.iter().any(|&e| inst.g.edge(e) == edge_key(x, y)) {
        return fail("misses xy");
    }
    if !cert.preserved || !agrees_outside(&inst.g, &c_edges, &c.edges, inst.a) {
        return fail("differs outside A");
    }
    if !exchange_vertices(&c_edges, c, inst.a).contains(cert.exchange_vertex) {
        return fail("no single switch at the exchange vertex");
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Checked edges with the number of Hamilton cycles through each.
    pub checked: Vec<((usize, usize), usize)>,
    pub hamilton_cycles: usize,
    /// Every Hamilton cycle agrees with the instance cycle outside `A`.
    pub all_preserved: bool,
}

impl ParityReport {
    pub fn all_even(&self) -> bool {
        self.checked.iter().all(|&(_, c)| c % 2 == 0)
    }
}

/// Counts Hamilton cycles through every edge at an end of the distinguished
/// component (other than its own edges) and checks that every Hamilton cycle
/// agrees with the instance cycle outside `A`.
///
/// Hypotheses are checked first: `G - A` must consist of exactly the listed
/// paths, and the ends of every other component must have odd degree.
pub fn verify_parity_lemma(inst: &LemmaInstance) -> Result<ParityReport> {
    let g = &inst.g;
    let comps = components_after_deletion(g, inst.a);
    if comps.len() != inst.k() || inst.a.len() != inst.k() || inst.k() < 2 {
        return Err(Error::Hypothesis(format!(
            "G - A has {} components, |A| = {}",
            comps.len(),
            inst.a.len()
        )));
    }
    for (i, h) in inst.components.iter().enumerate() {
        let set: VertexSet = h.iter().collect();
        let inner_edges = g
            .edges()
            .iter()
            .filter(|&&(p, q)| set.contains(p) && set.contains(q))
            .count();
        if !comps.components.contains(&set) || inner_edges + 1 != h.len() || !crate::search::is_valid_path(g, h) {
            return Err(Error::Hypothesis(format!("component {i} of G - A is not the path {h:?}")));
        }
        if i != inst.distinguished {
            let (s, t) = inst.endpoints(i);
            for z in [s, t] {
                if g.degree(z).is_multiple_of(2) {
                    return Err(Error::Hypothesis(format!("end {z} of component {i} has even degree")));
                }
            }
        }
    }
    let hk = &inst.components[inst.distinguished];
    let hk_set: VertexSet = hk.iter().collect();
    let (s, t) = inst.endpoints(inst.distinguished);
    let mut ids = Vec::new();
    for z in [s, t] {
        for &(w, e) in g.incident(z) {
            if !hk_set.contains(w) && !ids.contains(&e) {
                ids.push(e);
            }
        }
    }
    ids.sort_unstable();
    let all = hamilton_edge_cycles(g);
    let c_edges = cycle_edge_ids(g, &inst.cycle)?;
    let all_preserved = all.iter().all(|h| agrees_outside(g, &c_edges, &h.edges, inst.a));
    let checked = ids
        .iter()
        .map(|&e| (g.edge(e), all.iter().filter(|h| h.contains_edge_id(e)).count()))
        .collect();
    Ok(ParityReport {
        checked,
        hamilton_cycles: all.len(),
        all_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::gen_lemma_instance;

    #[test]
    fn six_vertex_second_cycle() {
        let inst = LemmaInstance::six_vertex();
        let cert = second_hamilton_cycle(&inst, 5, 4).unwrap();
        assert_eq!(cert.c_prime.vertices, [0, 1, 3, 2, 4, 5]);
        assert_eq!(cert.exchange_vertex, 1);
        assert!(cert.preserved);
        check_certificate(&inst, 5, 4, &cert).unwrap();
    }

    #[test]
    fn six_vertex_parity() {
        let rep = verify_parity_lemma(&LemmaInstance::six_vertex()).unwrap();
        assert!(rep.all_even() && rep.all_preserved);
        let at = |e: (usize, usize)| rep.checked.iter().find(|c| c.0 == e).map(|c| c.1);
        assert_eq!(at((4, 5)), Some(2));
        assert_eq!(at((0, 1)), Some(2));
    }

    #[test]
    fn generated_instances() {
        for k in 2..=4 {
            for seed in 0..15 {
                let inst = gen_lemma_instance(k, seed).unwrap();
                let rep = verify_parity_lemma(&inst).unwrap();
                assert!(rep.all_even(), "k={k} seed={seed}: {rep:?}");
                assert!(rep.all_preserved);
                let (x, y) = inst.distinguished_exit();
                let cert = second_hamilton_cycle(&inst, x, y).unwrap();
                check_certificate(&inst, x, y, &cert).unwrap();
            }
        }
    }

    #[test]
    fn bad_edge_is_rejected() {
        let inst = LemmaInstance::six_vertex();
        assert!(matches!(second_hamilton_cycle(&inst, 2, 1), Err(Error::Hypothesis(_))));
    }
}
