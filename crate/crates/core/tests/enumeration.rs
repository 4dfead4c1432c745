use chordlab_core::canon::{are_isomorphic, canonical_code, relabel};
use chordlab_core::enumeration::{enumerate_cubic, gen_lemma_instance, random_cubic, rng_for, LemmaInstance};
use chordlab_core::graph::{connectivity_at_least, Graph};
use chordlab_core::named;
use rand::seq::SliceRandom;

/// Automorphism count by plain backtracking.
fn automorphisms(g: &Graph) -> u64 {
    fn go(g: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let v = map.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for img in 0..g.order() {
            if used[img] || g.degree(img) != g.degree(v) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], img));
            if ok {
                map.push(img);
                used[img] = true;
                total += go(g, map, used);
                used[img] = false;
                map.pop();
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.order()])
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn class_counts() {
    for (n, want) in [(4, 1), (6, 2), (8, 5), (10, 19)] {
        assert_eq!(enumerate_cubic(n).unwrap().len(), want, "n={n}");
    }
}

#[test]
fn labeled_counts_match_orbit_sums() {
    // labeled connected cubic graphs; the all-graphs sequence 1, 70, 19355,
    // 11180820, 11555272575 minus the disconnected ones by the exponential formula
    for (n, want) in [(4u64, 1u64), (6, 70), (8, 19320), (10, 11166120)] {
        let sum: u64 = enumerate_cubic(n as usize)
            .unwrap()
            .iter()
            .map(|g| factorial(n) / automorphisms(g))
            .sum();
        assert_eq!(sum, want, "n={n}");
    }
}

#[test]
fn order_twelve_orbit_sum() {
    let gs = enumerate_cubic(12).unwrap();
    assert_eq!(gs.len(), 85);
    let sum: u64 = gs.iter().map(|g| factorial(12) / automorphisms(g)).sum();
    assert_eq!(sum, 11_543_439_600);
}

#[test]
fn classes_are_distinct_connected_and_cubic() {
    for n in [4, 6, 8, 10] {
        let gs = enumerate_cubic(n).unwrap();
        for (i, g) in gs.iter().enumerate() {
            assert!(g.is_cubic() && g.is_simple() && g.is_connected());
            for h in &gs[i + 1..] {
                assert!(!are_isomorphic(g, h));
            }
        }
    }
}

#[test]
fn named_graphs_are_found() {
    let six = enumerate_cubic(6).unwrap();
    for g in [named::k33(), named::prism()] {
        assert!(six.iter().any(|h| are_isomorphic(&g, h)));
    }
    let ten = enumerate_cubic(10).unwrap();
    assert!(ten.iter().any(|h| are_isomorphic(&named::petersen(), h)));
    let four = enumerate_cubic(4).unwrap();
    assert!(are_isomorphic(&four[0], &named::complete(4)));
}

#[test]
fn canonical_code_ignores_labels() {
    let mut rng = rng_for(7);
    for g in enumerate_cubic(10).unwrap() {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        assert_eq!(canonical_code(&relabel(&g, &perm)), canonical_code(&g));
    }
}

#[test]
fn connectivity_split() {
    let eight = enumerate_cubic(8).unwrap();
    let two = eight.iter().filter(|g| connectivity_at_least(g, 2)).count();
    let three = eight.iter().filter(|g| connectivity_at_least(g, 3)).count();
    assert_eq!((two, three), (5, 4));
}

#[test]
fn bad_orders() {
    assert!(enumerate_cubic(7).is_err());
    assert!(enumerate_cubic(2).is_err());
    assert!(enumerate_cubic(16).is_err());
    assert!(random_cubic(5, 0).is_err());
}

#[test]
fn random_cubic_simple_on_twenty() {
    for seed in 0..1000 {
        let g = random_cubic(20, seed).unwrap();
        assert!(g.is_cubic() && g.is_simple());
    }
    assert_eq!(random_cubic(20, 3).unwrap(), random_cubic(20, 3).unwrap());
    assert!(are_isomorphic(&random_cubic(4, 11).unwrap(), &named::complete(4)));
}

#[test]
fn lemma_instances_satisfy_hypotheses() {
    LemmaInstance::six_vertex().check().unwrap();
    for seed in 0..100 {
        let inst = gen_lemma_instance(3, seed).unwrap();
        assert!(inst.is_hamilton());
        assert!(inst.a_independent_on_cycle());
        assert!(inst.component_count_matches());
        assert!(inst.endpoints_have_chords());
        assert_eq!(inst.k(), 3);
    }
}
