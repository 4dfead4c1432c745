use chordlab_core::coloring::{is_cycle_plus_triangles, subdivision_transform, three_color_cycle_plus};
use chordlab_core::enumeration::{gen_cycle_plus_instance, gen_lemma_instance, LemmaInstance};
use chordlab_core::search::{hamilton_count_through_edge, Cycle};
use chordlab_core::second_cycle::{check_certificate, second_hamilton_cycle, verify_parity_lemma};

#[test]
fn coloring_on_seeded_instances() {
    for seed in 0..200u64 {
        let n = 6 + (seed as usize * 7) % 19;
        let inst = gen_cycle_plus_instance(n, seed).unwrap();
        let c = Cycle::new(&inst.g, &inst.cycle).unwrap();
        let sub = subdivision_transform(&inst.g, &c).unwrap();
        assert!(is_cycle_plus_triangles(&sub), "seed {seed}");
        let col = three_color_cycle_plus(&inst.g, &c).unwrap();
        assert!(col.is_proper(&inst.g));
        for (t, &tri) in inst.triples.iter().zip(&inst.is_triangle) {
            if tri {
                let mut cs = t.map(|v| col.color[v]);
                cs.sort_unstable();
                assert_eq!(cs, [1, 2, 3], "seed {seed}: triangle {t:?}");
            }
        }
    }
}

#[test]
fn parity_counts_are_even() {
    for seed in 0..100u64 {
        let k = 2 + (seed as usize % 3);
        let inst = gen_lemma_instance(k, seed).unwrap();
        let rep = verify_parity_lemma(&inst).unwrap();
        assert!(rep.all_even(), "k={k} seed={seed}: {rep:?}");
        assert!(rep.all_preserved);
        for &(e, count) in &rep.checked {
            assert_eq!(hamilton_count_through_edge(&inst.g, e).unwrap(), count);
        }
    }
}

#[test]
fn second_cycle_certificates() {
    let six = LemmaInstance::six_vertex();
    let (x, y) = six.distinguished_exit();
    check_certificate(&six, x, y, &second_hamilton_cycle(&six, x, y).unwrap()).unwrap();
    for seed in 0..100u64 {
        let k = 2 + (seed as usize % 3);
        let inst = gen_lemma_instance(k, seed).unwrap();
        let (x, y) = inst.distinguished_exit();
        let cert = second_hamilton_cycle(&inst, x, y).unwrap();
        assert!(cert.preserved);
        check_certificate(&inst, x, y, &cert).unwrap();
    }
}
