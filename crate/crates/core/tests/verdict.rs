//! Bounded verification runs, witness mining and intersections.

use econn::atlas::{named, pattern, pattern_set};
use econn::enumerate::{enumerate_connected, filter_free};
use econn::iso::{pattern_equivalent, pattern_preceq};
use econn::verdict::*;
use econn::{are_isomorphic, from_graph6, to_graph6, Graph, GraphBuilder, PatternSet};

fn bridged_k4s() -> Graph {
    let mut b = GraphBuilder::new(8);
    b.add_clique(&[0, 1, 2, 3]).unwrap();
    b.add_clique(&[4, 5, 6, 7]).unwrap();
    b.add_edge(3, 4).unwrap();
    b.build()
}

fn bridged_c4s() -> Graph {
    Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (3, 4),
        ],
    )
    .unwrap()
}

fn contains_class(list: &[String], g: &Graph) -> bool {
    list.iter()
        .any(|s| are_isomorphic(&from_graph6(s).unwrap(), g))
}

#[test]
fn p4_free_graphs_satisfy_the_equality() {
    let rec = verify_single(&pattern("P4").unwrap(), 8, Target::KappaPrimeDelta).unwrap();
    assert!(rec.held());
}

#[test]
fn p5_free_graphs_include_bridged_cliques() {
    let rec = verify_single(&pattern("P5").unwrap(), 8, Target::KappaPrimeDelta).unwrap();
    assert!(!rec.held());
    assert!(contains_class(&rec.counterexamples, &bridged_k4s()));
}

#[test]
fn p3_free_graphs_have_equal_connectivities() {
    let rec = verify_single(&pattern("P3").unwrap(), 7, Target::KappaKappaPrime).unwrap();
    assert!(rec.held());
    assert_eq!(rec.graphs_scanned, 6);
}

#[test]
fn characterized_pair_holds() {
    let rec = verify_pair(&pattern_set("{Z2,P6}").unwrap(), 9, Target::KappaPrimeDelta).unwrap();
    assert!(rec.held());
}

#[test]
fn longer_path_admits_bridged_squares() {
    let rec = verify_pair(&pattern_set("{Z2,P7}").unwrap(), 8, Target::KappaPrimeDelta).unwrap();
    assert!(!rec.held());
    assert!(contains_class(&rec.counterexamples, &bridged_c4s()));
}

#[test]
fn vertex_connectivity_pair_holds() {
    let rec = verify_pair(&pattern_set("{Z1,P5}").unwrap(), 8, Target::KappaDelta).unwrap();
    assert!(rec.held());
}

#[test]
fn range_errors() {
    let p = pattern("P4").unwrap();
    assert!(verify_single(&p, 1, Target::KappaDelta).is_err());
    assert!(verify_single(&p, 11, Target::KappaDelta).is_err());
    assert!(mine_witness(&pattern_set("{P5}").unwrap(), 11).is_err());
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let mut r = verify_single(&pattern("P5").unwrap(), 7, Target::KappaPrimeDelta).unwrap();
        r.elapsed_ms = 0;
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn mined_witnesses() {
    let w = mine_witness(&pattern_set("{H1,P6}").unwrap(), 9)
        .unwrap()
        .unwrap();
    let dumbbell = Graph::from_edges(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 4),
        ],
    )
    .unwrap();
    assert!(are_isomorphic(&w.graph().unwrap(), &dumbbell));
    w.revalidate().unwrap();

    let w = mine_witness(&pattern_set("{K1_4,P5}").unwrap(), 9)
        .unwrap()
        .unwrap();
    assert!(are_isomorphic(&w.graph().unwrap(), &named("H1").unwrap()));

    assert!(mine_witness(&pattern_set("{Z2,P6}").unwrap(), 9)
        .unwrap()
        .is_none());
}

#[test]
fn enumeration_agrees_with_the_family_table() {
    for pair in [
        "{H1,P6}",
        "{Z3,P6}",
        "{Z2,P7}",
        "{Z2,T{1,1,4}}",
        "{K1_4,P5}",
    ] {
        let pair = pattern_set(pair).unwrap();
        let table = mine_witness(&pair, 9).unwrap().unwrap();
        assert_eq!(table.origin, WitnessOrigin::Family);
        let found = mine_enumerated(&pair, 9).unwrap().unwrap();
        assert_eq!(found.origin, WitnessOrigin::Enumerated);
        found.revalidate().unwrap();
        assert!(
            found.graph().unwrap().n() <= table.graph().unwrap().n(),
            "{pair}"
        );
    }
    assert!(mine_enumerated(&pattern_set("{K1_3,K3}").unwrap(), 8)
        .unwrap()
        .is_none());
}

#[test]
fn maximality_sweep_finds_all_witnesses() {
    let base = kappa_prime_delta_pairs();
    let ext: Vec<PatternSet> = ["{H1,P6}", "{Z3,P6}", "{Z2,P7}", "{Z2,T{1,1,4}}"]
        .iter()
        .map(|s| pattern_set(s).unwrap())
        .collect();
    let out = maximality_sweep(&base, &ext, 9).unwrap();
    assert_eq!(out.len(), 4);
    for (set, w) in out {
        let w = w.unwrap_or_else(|| panic!("no witness for {set}"));
        w.revalidate().unwrap();
        assert!(w.kappa_prime < w.delta);
        assert!(from_graph6(&w.witness).unwrap().n() <= 9);
    }
}

#[test]
fn free_sets_shrink_down_the_order() {
    let pairs = [
        ("{K3,K1_3}", "{Z2,T{1,1,3}}"),
        ("{Z1,P5}", "{H1,P5}"),
        ("{P4}", "{P5}"),
    ];
    for (low, high) in pairs {
        let (low, high) = (pattern_set(low).unwrap(), pattern_set(high).unwrap());
        assert!(pattern_preceq(&low, &high));
        for n in 2..=6 {
            let a: Vec<String> = filter_free(enumerate_connected(n).unwrap(), low.clone())
                .map(|g| to_graph6(&g.unwrap()).unwrap())
                .collect();
            let b: Vec<String> = filter_free(enumerate_connected(n).unwrap(), high.clone())
                .map(|g| to_graph6(&g.unwrap()).unwrap())
                .collect();
            assert!(a.iter().all(|s| b.contains(s)));
        }
    }
}

#[test]
fn characterized_pairs_hold_up_to_nine() {
    for pair in kappa_prime_delta_pairs() {
        let rec = verify_pair(&pair, 9, Target::KappaPrimeDelta).unwrap();
        assert!(rec.held(), "{pair}: {:?}", rec.counterexamples);
    }
}

#[test]
fn intersection_contains_the_expected_pairs() {
    let out = intersect_characterizations(
        &kappa_kappa_prime_characterization(),
        &kappa_prime_delta_characterization(),
        7,
    )
    .unwrap();
    for want in kappa_delta_pairs() {
        assert!(
            out.iter().any(|s| pattern_equivalent(s, &want)),
            "missing {want}"
        );
    }
}

#[test]
fn intersection_is_idempotent_up_to_domination() {
    let a = kappa_prime_delta_pairs();
    let out = intersect_characterizations(&a, &a, 7).unwrap();
    for s in &out {
        assert!(a.iter().any(|t| pattern_equivalent(s, t)), "unexpected {s}");
    }
    for t in &a {
        assert!(out.iter().any(|s| pattern_equivalent(s, t)), "missing {t}");
    }
}
