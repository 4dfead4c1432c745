use chordlab_core::canon::{canonical_code, relabel};
use chordlab_core::coloring::three_color_cycle_plus;
use chordlab_core::enumeration::{gen_cycle_plus_instance, gen_lemma_instance, random_cubic, sample_extendable_path};
use chordlab_core::extender::extend_path;
use chordlab_core::graph::connectivity_at_least;
use chordlab_core::search::Cycle;
use chordlab_core::second_cycle::{check_certificate, second_hamilton_cycle};
use chordlab_core::vertex_set::VertexSet;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_cubic_is_simple_and_deterministic(half in 2usize..13, seed in any::<u64>()) {
        let g = random_cubic(2 * half, seed).unwrap();
        prop_assert!(g.is_cubic() && g.is_simple());
        prop_assert_eq!(g, random_cubic(2 * half, seed).unwrap());
    }

    #[test]
    fn canonical_code_is_label_free(half in 2usize..7, seed in any::<u64>(), perm in Just((0..12).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = 2 * half;
        let g = random_cubic(n, seed).unwrap();
        let labels: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        prop_assert_eq!(canonical_code(&relabel(&g, &labels)), canonical_code(&g));
    }

    #[test]
    fn extension_is_strictly_longer(half in 3usize..9, seed in any::<u64>(), pseed in any::<u64>()) {
        let g = random_cubic(2 * half, seed).unwrap();
        prop_assume!(connectivity_at_least(&g, 2));
        if let Some(p) = sample_extendable_path(&g, pseed) {
            let (q, trace) = extend_path(&g, &p).unwrap();
            prop_assert!(q.is_valid_in(&g));
            prop_assert_eq!((q.start(), q.end()), (p.start(), p.end()));
            prop_assert!(q.len() > p.len());
            prop_assert_eq!(trace.output, q.vertices().to_vec());
        }
    }

    #[test]
    fn cycle_plus_instances_color(n in 6usize..30, seed in any::<u64>()) {
        let inst = gen_cycle_plus_instance(n, seed).unwrap();
        let c = Cycle::new(&inst.g, &inst.cycle).unwrap();
        let col = three_color_cycle_plus(&inst.g, &c).unwrap();
        prop_assert!(col.is_proper(&inst.g));
    }

    #[test]
    fn second_cycle_certificates_check(k in 2usize..5, seed in any::<u64>()) {
        let inst = gen_lemma_instance(k, seed).unwrap();
        inst.check().unwrap();
        let (x, y) = inst.distinguished_exit();
        let cert = second_hamilton_cycle(&inst, x, y).unwrap();
        check_certificate(&inst, x, y, &cert).unwrap();
    }

    #[test]
    fn vertex_set_algebra(a in any::<u64>(), b in any::<u64>()) {
        let (s, t) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
        prop_assert_eq!(s.union(t).len() + s.intersection(t).len(), s.len() + t.len());
        prop_assert!(s.difference(t).is_disjoint(t));
        prop_assert_eq!(s.iter().collect::<VertexSet>(), s);
    }
}
