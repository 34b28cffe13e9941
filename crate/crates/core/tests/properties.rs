use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twoswitch::characterize::{classify_p_switch, classify_u_switch};
use twoswitch::planner::{
    break_to_forest, forest_transition, glue_to_unicyclic, pseudoforest_transition,
    unicyclic_transition, SwitchSequence,
};
use twoswitch::random::{
    random_all_cyclic, random_graph, random_pseudoforest, random_switch, random_tree,
    random_unicyclic, random_walk,
};
use twoswitch::structure::{cycles, is_forest, is_unicyclic, zeta};
use twoswitch::{classify_switch_direct, verify_sequence, Edge, Family, Graph, Vertex};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn assert_reaches(seq: &SwitchSequence, target: &Graph) {
    let r = verify_sequence(seq);
    assert!(r.is_ok(), "{:?}", r.violation);
    assert_eq!(&r.final_graph, target);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switches_preserve_degrees_and_invert(seed in any::<u64>(), n in 4usize..20, p in 0.1f64..0.9) {
        let mut r = rng(seed);
        let g = random_graph(n, p, &mut r);
        if let Some(m) = random_switch(&g, 100, &mut r) {
            let h = m.apply(&g);
            prop_assert_eq!(h.degree_function(), g.degree_function());
            prop_assert!(m.inverse().is_interchangeable(&h));
            prop_assert_eq!(m.inverse().apply(&h), g.clone());
            prop_assert!(h.kappa().abs_diff(g.kappa()) <= 1);
            for e in m.equivalents() {
                prop_assert_eq!(e.apply(&g), h.clone());
            }
        }
    }

    #[test]
    fn u_classifier_matches_definition(seed in any::<u64>(), n in 4usize..30) {
        let mut r = rng(seed);
        let u = random_unicyclic(n, &mut r);
        for _ in 0..8 {
            if let Some(m) = random_switch(&u, 100, &mut r) {
                prop_assert_eq!(classify_u_switch(m, &u).unwrap(), classify_switch_direct(m, &u).u_switch);
            }
        }
    }

    #[test]
    fn p_classifier_matches_definition(seed in any::<u64>(), n in 4usize..30, cyclic in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = random_pseudoforest(n, cyclic, &mut r);
        for _ in 0..8 {
            if let Some(m) = random_switch(&g, 100, &mut r) {
                prop_assert_eq!(classify_p_switch(m, &g).unwrap(), classify_switch_direct(m, &g).p_switch);
            }
        }
    }

    #[test]
    fn edge_count_identity(seed in any::<u64>(), n in 1usize..60, cyclic in 0.0f64..1.0) {
        let g = random_pseudoforest(n, cyclic, &mut rng(seed));
        let c = cycles(&g).unwrap();
        prop_assert_eq!(g.size() + g.kappa(), g.order() + c);
        prop_assert_eq!(zeta(&g).unwrap(), g.order() - g.size());
    }

    #[test]
    fn forest_transitions(seed in any::<u64>(), n in 1usize..40, tree in any::<bool>()) {
        let mut r = rng(seed);
        let (a, family) = if tree {
            (random_tree(n, &mut r), Family::Tree)
        } else {
            (random_pseudoforest(n, 0.0, &mut r), Family::Forest)
        };
        let b = random_walk(&a, family, 300, &mut r);
        let seq = forest_transition(&a, &b).unwrap();
        prop_assert!(seq.family == family || !tree);
        assert_reaches(&seq, &b);
    }

    #[test]
    fn unicyclic_transitions(seed in any::<u64>(), n in 3usize..30) {
        let mut r = rng(seed);
        let a = random_unicyclic(n, &mut r);
        let b = random_walk(&a, Family::Unicyclic, 300, &mut r);
        let seq = unicyclic_transition(&a, &b).unwrap();
        assert_reaches(&seq, &b);
        prop_assert_eq!(seq.is_empty(), a == b);
        assert_reaches(&seq.reversed(), &a);
    }

    #[test]
    fn pseudoforest_transitions(seed in any::<u64>(), n in 1usize..30, cyclic in 0.0f64..1.0) {
        let mut r = rng(seed);
        let a = random_pseudoforest(n, cyclic, &mut r);
        let b = random_walk(&a, Family::Pseudoforest, 300, &mut r);
        let seq = pseudoforest_transition(&a, &b).unwrap();
        assert_reaches(&seq, &b);
    }

    #[test]
    fn glue_length_is_components_minus_one(seed in any::<u64>(), n in 3usize..40) {
        let g = random_all_cyclic(n, &mut rng(seed));
        let seq = glue_to_unicyclic(&g).unwrap();
        prop_assert_eq!(seq.len(), g.kappa() - 1);
        let graphs = seq.graphs();
        for w in graphs.windows(2) {
            prop_assert_eq!(w[1].kappa() + 1, w[0].kappa());
        }
        prop_assert!(is_unicyclic(&seq.end()));
        prop_assert!(verify_sequence(&seq).is_ok());
    }

    #[test]
    fn break_reaches_a_forest(seed in any::<u64>(), n in 4usize..40) {
        let g = random_pseudoforest(n, 0.6, &mut rng(seed));
        let has_tree_edge = g.components().parts().iter().any(|p| {
            p.len() > 1 && g.edges().iter().filter(|e| p.contains(&e.lo())).count() < p.len()
        });
        if cycles(&g).unwrap() < g.kappa() && has_tree_edge {
            let seq = break_to_forest(&g).unwrap();
            let end = seq.end();
            prop_assert!(is_forest(&end));
            prop_assert_eq!(zeta(&end), zeta(&g));
            prop_assert!(verify_sequence(&seq).is_ok());
        }
    }

    /// A u-switch walk on `U - l` stays valid verbatim on `U` when `l` is a
    /// leaf hanging off it.
    #[test]
    fn leaf_lifting(seed in any::<u64>(), n in 4usize..20) {
        let mut r = rng(seed);
        let small = random_unicyclic(n - 1, &mut r);
        let anchor = (seed % (n as u64 - 1)) as Vertex + 1;
        let mut edges: Vec<Edge> = small.edges().to_vec();
        edges.push(Edge::new(anchor, n as Vertex));
        let pairs: Vec<(Vertex, Vertex)> = edges.iter().map(|e| e.endpoints()).collect();
        let big = Graph::new(n, &pairs).unwrap();
        let mut cur = small.clone();
        let mut steps = Vec::new();
        for _ in 0..30 {
            if let Some(m) = random_switch(&cur, 50, &mut r) {
                let next = m.apply(&cur);
                if is_unicyclic(&next) {
                    steps.push(m);
                    cur = next;
                }
            }
        }
        let lifted = SwitchSequence::new(Family::Unicyclic, big, steps);
        let report = verify_sequence(&lifted);
        prop_assert!(report.is_ok());
        prop_assert!(report.final_graph.has_edge(anchor, n as Vertex));
    }
}
