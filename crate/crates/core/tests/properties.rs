use proptest::prelude::*;

use lcec::aux::{count_colourings, recognize, verify_locally_complete, RecognitionResult};
use lcec::graph::{complement, is_connected, Graph};
use lcec::kaleidoscope::{extract_kaleidoscope, verify_kaleidoscope};
use lcec::oracle::brute::BRUTE_EDGE_LIMIT;
use lcec::oracle::{brute_force_colourings, brute_force_round, brute_force_straight, generate, GeneratorSpec};
use lcec::orderings::{find_round, find_straight, verify_round, verify_straight};
use lcec::structure::structural_recognize;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut adj = vec![vec![false; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let b = it.next().unwrap();
                    adj[i][j] = b;
                    adj[j][i] = b;
                }
            }
            Graph::from_fn(n, |i, j| adj[i][j])
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decision_and_count_match_brute_force(g in graph(8)) {
        prop_assume!(g.m() <= BRUTE_EDGE_LIMIT);
        let bf = brute_force_colourings(&g, 0).unwrap();
        let r = recognize(&g);
        prop_assert_eq!(r.is_colourable(), bf.count > 0);
        prop_assert_eq!(count_colourings(&g).to_string(), bf.count.to_string());
    }

    #[test]
    fn certificates_verify(g in graph(9)) {
        match recognize(&g) {
            RecognitionResult::Colourable(c) => {
                prop_assert_eq!(verify_locally_complete(&g, &c).unwrap(), None);
                prop_assert_eq!(verify_locally_complete(&g, &c.switched()).unwrap(), None);
            }
            RecognitionResult::NotColourable(cycle) => {
                prop_assert_eq!(cycle.len() % 2, 1);
                let kal = extract_kaleidoscope(&g, &cycle).unwrap();
                prop_assert_eq!(kal.total_length(), cycle.len());
                prop_assert_eq!(verify_kaleidoscope(&complement(&g), &kal).unwrap(), None);
            }
        }
    }

    #[test]
    fn decision_is_label_invariant(g in graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(recognize(&g).is_colourable(), recognize(&h).is_colourable());
        prop_assert_eq!(count_colourings(&g), count_colourings(&h));
    }

    #[test]
    fn straight_search_is_exact(g in connected(7)) {
        let found = find_straight(&g).unwrap();
        if let Some(o) = &found {
            prop_assert_eq!(verify_straight(&g, o).unwrap(), None);
        }
        prop_assert_eq!(found.is_some(), brute_force_straight(&g).unwrap().is_some());
    }

    #[test]
    fn round_search_is_exact(g in connected(7)) {
        let found = find_round(&g).unwrap();
        if let Some(o) = &found {
            prop_assert_eq!(verify_round(&g, o).unwrap(), None);
        }
        prop_assert_eq!(found.is_some(), brute_force_round(&g).unwrap().is_some());
    }

    #[test]
    fn structural_agrees_with_auxiliary(g in graph(9)) {
        let aux = recognize(&g).is_colourable();
        if let Ok(report) = structural_recognize(&g) {
            prop_assert_eq!(report.is_colourable(), aux);
            if let Some(c) = report.colouring() {
                prop_assert_eq!(verify_locally_complete(&g, c).unwrap(), None);
            }
        }
    }

    #[test]
    fn circular_arc_graphs_get_round_orderings(n in 4usize..60, arc in 0.05f64..0.7, seed in any::<u64>()) {
        let g = generate(&GeneratorSpec::CircularArcPca { n, arc, seed, even: false, shuffle: true }).unwrap().graph;
        prop_assume!(is_connected(&g));
        let o = find_round(&g).unwrap();
        prop_assert!(o.is_some(), "no round ordering for {}", g.to_edge_list());
        prop_assert_eq!(verify_round(&g, o.as_ref().unwrap()).unwrap(), None);
    }
}
