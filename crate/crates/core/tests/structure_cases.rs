use std::collections::BTreeMap;

use lcec::aux::{recognize, verify_locally_complete};
use lcec::graph::{parse_graph, Graph};
use lcec::oracle::corpus::reduced_pcas;
use lcec::orderings::find_round;
use lcec::structure::cases::{case_colouring, case_setup, CaseKind, CaseSetup};
use lcec::structure::pseudo_cutvertices;

/// Colourable reduced PCA graphs without pseudo-cutvertices, found by
/// scanning seeded circular-arc corpora.
const FIXTURES: [(&str, CaseKind); 4] = [
    (
        "13 31;0 3;0 9;0 10;0 11;1 2;1 4;1 6;1 8;1 12;2 4;2 8;2 12;3 8;3 9;3 10;4 8;4 10;5 6;5 7;5 9;5 11;5 12;\
         6 7;6 11;6 12;7 11;7 12;8 10;9 10;9 11;11 12",
        CaseKind::Type4Far,
    ),
    (
        "17 55;0 2;0 4;0 6;0 9;0 11;0 12;0 16;1 3;1 7;1 8;1 11;1 14;1 15;1 16;2 4;2 6;2 11;2 12;2 16;3 5;3 7;3 8;\
         3 14;3 15;4 5;4 6;4 9;4 10;4 13;5 6;5 8;5 9;5 10;5 13;5 15;6 9;6 10;6 12;6 13;7 8;7 14;7 15;8 10;8 13;\
         8 14;8 15;9 10;9 13;10 13;11 12;11 16;12 16;13 15;14 15;14 16",
        CaseKind::Type4Far,
    ),
    (
        "14 38;0 4;0 6;0 10;0 11;1 4;1 5;1 7;1 9;1 10;2 3;2 8;2 11;2 12;2 13;3 7;3 8;3 12;3 13;4 6;4 10;4 11;5 7;\
         5 8;5 9;5 10;6 11;6 13;7 8;7 9;7 10;7 12;8 9;8 12;8 13;9 10;9 12;11 13;12 13",
        CaseKind::Type2,
    ),
    (
        "15 42;0 3;0 4;0 7;0 8;0 12;0 14;1 2;1 3;1 5;1 7;1 10;1 13;2 5;2 6;2 9;2 10;2 11;2 13;3 7;3 8;3 14;4 6;\
         4 9;4 11;4 12;5 7;5 10;5 13;6 9;6 11;6 12;7 8;7 14;8 12;8 14;9 10;9 11;9 12;9 13;10 13;11 12;11 13",
        CaseKind::Type4Near,
    ),
];

fn fixture(text: &str) -> Graph {
    parse_graph(&text.replace(';', "\n")).unwrap().graph
}

fn check_setup(g: &Graph, setup: &CaseSetup) {
    assert!(
        !matches!(setup.kind, CaseKind::Type1 | CaseKind::Type3 | CaseKind::Other | CaseKind::NotTyped),
        "configuration {:?} on a colourable graph: {}",
        setup.kind,
        g.to_edge_list()
    );
    assert_eq!(setup.us[0], 1);
    assert_eq!(setup.ut[0], setup.a - 1);
    assert_eq!(setup.ut[setup.k - 1], setup.b);
    if let Some(c) = case_colouring(g, setup) {
        assert_eq!(
            verify_locally_complete(g, &c).unwrap(),
            None,
            "{:?} colouring fails on {} with setup {setup:?}",
            setup.kind,
            g.to_edge_list()
        );
    }
}

#[test]
fn fixtures_take_the_expected_configuration() {
    for (text, kind) in FIXTURES {
        let g = fixture(text);
        assert!(recognize(&g).is_colourable());
        let o = find_round(&g).unwrap().unwrap();
        assert!(pseudo_cutvertices(&g, &o).unwrap().pseudo_cut.is_empty());
        let setup = case_setup(&g, &o).unwrap().expect("three pairwise non-adjacent vertices");
        assert_eq!(setup.kind, kind);
        assert!(case_colouring(&g, &setup).is_some());
        check_setup(&g, &setup);
    }
}

#[test]
fn configurations_in_a_random_pool() {
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for g in reduced_pcas(20000, 16, 2) {
        let o = find_round(&g).unwrap().expect("corpus graphs are PCA");
        if !pseudo_cutvertices(&g, &o).unwrap().pseudo_cut.is_empty() {
            continue;
        }
        let Some(setup) = case_setup(&g, &o).unwrap() else { continue };
        if !recognize(&g).is_colourable() {
            continue;
        }
        *tally.entry(format!("{:?}", setup.kind)).or_default() += 1;
        check_setup(&g, &setup);
    }
    assert!(tally.values().sum::<usize>() > 0, "no colourable graph without pseudo-cutvertices: {tally:?}");
}

#[test]
fn four_cycle_has_no_independent_triple() {
    let c4 = fixture("4 4;0 1;1 2;2 3;0 3");
    let o = find_round(&c4).unwrap().unwrap();
    assert!(case_setup(&c4, &o).unwrap().is_none());
}
