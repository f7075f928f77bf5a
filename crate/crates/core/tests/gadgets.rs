//! Construction-level checks: paste arithmetic, distance soundness, the
//! first gadget's behavior by full enumeration, freezing round trips and
//! search invariants.

mod common;

use std::collections::BTreeSet;

use steinberg::coloring::{forced_unequal, solve_3coloring, ColorAssignment, Pattern};
use steinberg::formats::json::GadgetFile;
use steinberg::gadget::{
    build_counterexample, build_counterexample_pasted, build_g2, g2_recipe, paste, verify_contract,
    CounterexampleSlots, GadgetError, InterfaceContract, PastePart, PasteRecipe, TerminalGadget,
};
use steinberg::search::{
    certify_and_freeze, find_frozen, gadget_key, search_gadget, shrink_counterexample, verify_counterexample,
    SearchSpec,
};
use steinberg::structure::{cycles_of_length, distance};
use steinberg::Graph;

use common::{frozen_g1, realized_patterns};

#[test]
fn first_gadget_realizes_some_unequal_pattern() {
    let g1 = frozen_g1();
    let realized = realized_patterns(g1.graph(), g1.terminals());
    assert!(!realized.contains(&vec![0, 0, 0]));
    assert!(!realized.is_empty());
    assert!(forced_unequal(&g1).unwrap());
}

#[test]
fn paste_arithmetic() {
    let g1 = frozen_g1();
    let pasted = paste(&g2_recipe(&g1)).unwrap();
    let (n1, m1) = (g1.graph().n(), g1.graph().m());
    // Three copies share the slots a, b, c pairwise; d, e, f are one copy each.
    assert_eq!(pasted.graph.n(), 3 * n1 - 3);
    assert_eq!(pasted.graph.m(), 3 * m1 + 3);
    assert_eq!(pasted.identifications, 3);
    assert_eq!(pasted.owner_of_edge(3, 4), None);

    let g2 = build_g2(&g1).unwrap();
    let g = build_counterexample_pasted(&g2).unwrap();
    assert_eq!(g.graph.n(), 4 * g2.graph().n() - 5 + 3);
    assert_eq!(g.graph.m(), 4 * g2.graph().m() + 12);
    // Slot a sits in all four copies.
    assert_eq!(g.parts_of_vertex(CounterexampleSlots::A), vec![0, 1, 2, 3]);
    assert!(g.parts_of_vertex(CounterexampleSlots::B).is_empty());
}

#[test]
fn paste_rejects_bad_recipes() {
    let tri = TerminalGadget::new(Graph::cycle(3), vec![0, 1, 2]).unwrap();
    let part = |slots: Vec<usize>| PastePart {
        gadget: tri.clone(),
        slots,
        name: "T".into(),
    };
    let recipe = |parts, extra_edges| PasteRecipe {
        slot_names: vec!["x".into(), "y".into(), "z".into()],
        parts,
        extra_edges,
    };
    assert!(matches!(
        paste(&recipe(vec![part(vec![0, 0, 1])], vec![])),
        Err(GadgetError::SelfIdentification { .. })
    ));
    assert!(matches!(paste(&recipe(vec![part(vec![0, 1])], vec![])), Err(GadgetError::SlotArity { .. })));
    assert!(matches!(
        paste(&recipe(vec![part(vec![0, 1, 2])], vec![(0, 1)])),
        Err(GadgetError::ParallelEdge(0, 1))
    ));
    assert!(matches!(
        paste(&recipe(vec![part(vec![0, 1, 2])], vec![(2, 2)])),
        Err(GadgetError::LoopEdge(2))
    ));
}

#[test]
fn distance_soundness() {
    let g1 = frozen_g1();
    let pasted = paste(&g2_recipe(&g1)).unwrap();
    let g = &pasted.graph;
    // Contact vertices of different copies stay at distance >= 3.
    let contacts: Vec<usize> = (0..pasted.slot_count).collect();
    for &u in &contacts {
        for &v in &contacts {
            if u < v && !g.has_edge(u, v) {
                assert!(distance(g, u, v).unwrap().unwrap() >= 3, "{u}-{v}");
            }
        }
    }
    // Every short cycle of the final graph lies inside one copy or among
    // the extra edges; none of length 4 or 5 exists at all.
    let g2 = build_g2(&g1).unwrap();
    let fin = build_counterexample_pasted(&g2).unwrap();
    for k in [4, 5] {
        assert!(cycles_of_length(&fin.graph, k).unwrap().is_empty());
    }
    for c in cycles_of_length(&fin.graph, 3).unwrap() {
        let owners: BTreeSet<_> = c.edges().map(|(u, v)| fin.owner_of_edge(u, v)).collect();
        assert_eq!(owners.len(), 1, "triangle {:?} spans parts", c.0);
    }
}

#[test]
fn composition_is_interface_based() {
    // Any second gadget meeting the interface gives a non-colorable result;
    // here, the built one with its interior relabeled.
    let g2 = build_g2(&frozen_g1()).unwrap();
    let n = g2.graph().n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm[3..].reverse();
    let moved = TerminalGadget::new(g2.graph().permuted(&perm), vec![0, 1, 2])
        .unwrap()
        .with_contract(InterfaceContract::second_gadget());
    assert!(verify_contract(&moved).overall);
    let g = build_counterexample(&moved).unwrap();
    assert!(!solve_3coloring(&g, &ColorAssignment::empty(g.n())).unwrap().is_sat());
}

#[test]
fn builders_check_preconditions() {
    let tri = TerminalGadget::new(Graph::cycle(3), vec![0, 1, 2]).unwrap();
    match build_g2(&tri) {
        Err(GadgetError::Contract { clause, .. }) => assert_eq!(clause, "distance(0,1) >= 3"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn frozen_file_round_trips_and_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = frozen_g1();
    let path = certify_and_freeze(&g1, dir.path(), "g1").unwrap();
    let (_, back) = find_frozen(dir.path(), "g1").unwrap().unwrap();
    assert_eq!(back.graph(), g1.graph());
    assert!(verify_contract(&back).overall);
    let shipped = std::fs::read(steinberg::search::locate_frozen(std::path::Path::new(steinberg::search::DATA_DIR), "g1").unwrap().unwrap()).unwrap();
    assert_eq!(std::fs::read(path).unwrap(), shipped);
}

#[test]
fn freezing_rejects_a_broken_distance_clause() {
    let g1 = frozen_g1();
    let mut c = InterfaceContract::first_gadget();
    c.exact_terminal_distances = Some(vec![vec![0, 3, 3], vec![3, 0, 3], vec![3, 3, 0]]);
    c.min_terminal_distances = c.exact_terminal_distances.clone().unwrap();
    let bad = g1.clone().with_contract(c);
    let dir = tempfile::tempdir().unwrap();
    assert!(certify_and_freeze(&bad, dir.path(), "bad").is_err());
}

#[test]
fn template_search_results_are_oracle_confirmed_and_distinct() {
    let out = search_gadget(&SearchSpec::first_gadget(), 10, 2, &mut |_| {}).unwrap();
    assert!(!out.gadgets.is_empty());
    let mut keys = BTreeSet::new();
    for g in &out.gadgets {
        assert_eq!(g.graph().n(), 15);
        // Freezing runs the enumeration oracle on the all-equal pattern.
        let dir = tempfile::tempdir().unwrap();
        certify_and_freeze(g, dir.path(), "x").unwrap();
        assert!(keys.insert(gadget_key(g, &InterfaceContract::first_gadget())));
    }
    let first = &out.gadgets[0];
    assert_eq!(first.graph(), frozen_g1().graph());
}

#[test]
fn search_is_deterministic_across_job_counts() {
    let a = search_gadget(&SearchSpec::first_gadget(), 5, 1, &mut |_| {}).unwrap();
    let b = search_gadget(&SearchSpec::first_gadget(), 5, 3, &mut |_| {}).unwrap();
    assert_eq!(a.gadgets, b.gadgets);
}

#[test]
fn triangle_is_found_by_raw_search() {
    let spec = SearchSpec {
        max_vertices: 3,
        terminals: 3,
        template: None,
        contract: InterfaceContract::forcing_unequal(3),
        dedup: true,
    };
    let out = search_gadget(&spec, 10, 1, &mut |_| {}).unwrap();
    assert!(out.gadgets.iter().any(|g| g.graph().same_structure(&Graph::cycle(3))));
    let dir = tempfile::tempdir().unwrap();
    let tri = out.gadgets.iter().find(|g| g.graph().m() == 3).unwrap();
    certify_and_freeze(tri, dir.path(), "tri").unwrap();
}

#[test]
fn search_spec_json_round_trips() {
    let text = include_str!("../specs/first_gadget.json");
    let spec: SearchSpec = serde_json::from_str(text).unwrap();
    assert_eq!(spec, SearchSpec::first_gadget());
}

#[test]
fn shrink_output_reverifies() {
    let g = build_counterexample(&build_g2(&frozen_g1()).unwrap()).unwrap();
    let out = shrink_counterexample(&g, 30).unwrap();
    assert!(out.graph.n() <= g.n());
    assert_eq!(verify_counterexample(&out.graph), Ok(()));
}

#[test]
fn gadget_file_keeps_contract() {
    let g1 = frozen_g1();
    let json = g1.to_file().to_json();
    let back = TerminalGadget::from_file(&GadgetFile::from_json(json.as_bytes()).unwrap()).unwrap();
    assert_eq!(back, g1);
    assert_eq!(
        back.contract().forbidden_patterns,
        [Pattern::all_equal(3)].into_iter().collect()
    );
}
