use std::collections::BTreeSet;

use chordlab_core::enumeration::{enumerate_cubic, sample_extendable_path, sample_one_chord_path};
use chordlab_core::error::Error;
use chordlab_core::extender::{
    extend_path, extend_path_adjacent, extend_to_fixed_point, extend_with_cycle, odd_cover_cycles, precheck,
    reduce_path, Classification, TraceStep,
};
use chordlab_core::graph::{build_graph, connectivity_at_least, Graph};
use chordlab_core::named;
use chordlab_core::search::{internal_bound_vertices, Path};

fn all_paths(g: &Graph) -> Vec<Path> {
    fn go(g: &Graph, st: &mut Vec<usize>, out: &mut Vec<Path>) {
        if st.len() >= 2 && st[0] < st[st.len() - 1] {
            out.push(Path::new(g, st.clone()).unwrap());
        }
        let cur = st[st.len() - 1];
        for w in g.neighbors(cur).collect::<Vec<_>>() {
            if !st.contains(&w) {
                st.push(w);
                go(g, st, out);
                st.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        go(g, &mut vec![s], &mut out);
    }
    out
}

fn two_connected(n: usize) -> Vec<Graph> {
    enumerate_cubic(n)
        .unwrap()
        .into_iter()
        .filter(|g| connectivity_at_least(g, 2))
        .collect()
}

fn assert_longer(g: &Graph, p: &Path, q: &Path) {
    assert!(q.is_valid_in(g));
    assert_eq!((q.start(), q.end()), (p.start(), p.end()));
    assert!(q.len() > p.len(), "{:?} -> {:?}", p.vertices(), q.vertices());
}

#[test]
fn k33_path_extends() {
    let g = named::k33();
    let p = Path::new(&g, vec![0, 3, 1, 4]).unwrap();
    let (q, trace) = extend_path(&g, &p).unwrap();
    assert_longer(&g, &p, &q);
    assert_eq!(trace.step_names()[0], "component-claim");
}

#[test]
fn every_extendable_path_up_to_eight() {
    for n in [4, 6, 8] {
        for g in two_connected(n) {
            for p in all_paths(&g) {
                if precheck(&g, &p).unwrap() == Classification::Extendable {
                    let (q, trace) = extend_path(&g, &p).unwrap();
                    assert_longer(&g, &p, &q);
                    assert_eq!(trace.output, q.vertices());
                }
            }
        }
    }
}

#[test]
fn every_second_cycle_lifts_up_to_ten() {
    let mut names = BTreeSet::new();
    for n in [6, 8, 10] {
        for g in two_connected(n) {
            for p in all_paths(&g) {
                if precheck(&g, &p).unwrap() != Classification::Extendable {
                    continue;
                }
                let Some(r) = reduce_path(&g, &p).unwrap() else { continue };
                for c in odd_cover_cycles(&r.red) {
                    let (q, trace) = extend_with_cycle(&g, &r, &c).unwrap();
                    assert_longer(&g, &p, &q);
                    names.insert(trace.step_names().join(">"));
                }
            }
        }
    }
    assert!(names.contains("odd-cover-cycle>stats>lift"));
}

#[test]
fn tight_lift_goes_through_the_matching_step() {
    let g = build_graph(
        12,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 5),
            (4, 6),
            (4, 7),
            (5, 8),
            (5, 9),
            (6, 8),
            (6, 10),
            (7, 9),
            (7, 10),
            (8, 11),
            (9, 11),
            (10, 11),
        ],
    )
    .unwrap();
    let p = Path::new(&g, vec![2, 4, 6, 10, 11, 9, 5, 3]).unwrap();
    let r = reduce_path(&g, &p).unwrap().expect("reaches the reduced graph");
    let c = odd_cover_cycles(&r.red)
        .into_iter()
        .find(|c| c.vertices == [0, 7, 6, 2, 4, 3, 5, 1])
        .expect("the tight second cycle");
    let (q, trace) = extend_with_cycle(&g, &r, &c).unwrap();
    assert_eq!(q.vertices(), [2, 4, 7, 9, 11, 10, 6, 8, 5, 3]);
    match trace.steps.last().unwrap() {
        TraceStep::MatchingStep { hypotheses_hold, .. } => assert!(hypotheses_hold),
        s => panic!("expected the matching step, got {s:?}"),
    }
    let stats = trace
        .steps
        .iter()
        .find_map(|s| match s {
            TraceStep::Stats(st) => Some(*st),
            _ => None,
        })
        .unwrap();
    assert!(stats.is_tight());
    // the default choice of second cycle lifts longer directly
    let (q2, _) = extend_path(&g, &p).unwrap();
    assert_longer(&g, &p, &q2);
}

#[test]
fn sampled_paths_reach_a_fixed_point() {
    for n in [4, 6, 8, 10] {
        for g in two_connected(n) {
            for seed in 0..50 {
                let Some(p) = sample_extendable_path(&g, seed) else { continue };
                let chain = extend_to_fixed_point(&g, &p).unwrap();
                for w in chain.windows(2) {
                    assert_longer(&g, &w[0], &w[1]);
                }
                let last = chain.last().unwrap();
                assert!(last.len() + 1 == g.order() || !internal_bound_vertices(&g, last).is_empty());
            }
        }
    }
}

#[test]
fn one_chord_configurations() {
    let mut cases = BTreeSet::new();
    for n in [6, 8, 10, 12] {
        for g in enumerate_cubic(n).unwrap() {
            if !connectivity_at_least(&g, 3) {
                continue;
            }
            for seed in 0..30 {
                let Some(p) = sample_one_chord_path(&g, seed) else { continue };
                let (q, trace) = extend_path_adjacent(&g, &p).unwrap();
                assert_longer(&g, &p, &q);
                cases.insert(trace.step_names()[0]);
            }
        }
    }
    assert!(cases.contains("case-1") && cases.contains("case-2"), "{cases:?}");
}

#[test]
fn refusals() {
    let pet = named::petersen();
    let p = Path::new(&pet, vec![0, 1, 2]).unwrap();
    assert!(matches!(extend_path_adjacent(&pet, &p), Err(Error::Hypothesis(_))));
    let dd = named::double_diamond();
    let p = Path::new(&dd, vec![dd.edges()[0].0, dd.edges()[0].1]).unwrap();
    assert!(matches!(extend_path_adjacent(&dd, &p), Err(Error::Hypothesis(_))));
}
