//! The library against independent reference implementations.

mod common;

use std::collections::BTreeSet;

use greechie::catalog::{build_l27, build_loop, catalog_list};
use greechie::diagram::find_loops;
use greechie::states::{pure_states, two_valued_states, DEFAULT_DIM_CAP};
use greechie::GreechieDiagram;
use proptest::prelude::*;

fn pure_set(d: &GreechieDiagram) -> BTreeSet<Vec<greechie::Rational>> {
    pure_states(d, DEFAULT_DIM_CAP)
        .unwrap()
        .into_iter()
        .map(|s| s.values().to_vec())
        .collect()
}

fn supports(d: &GreechieDiagram) -> Vec<Vec<usize>> {
    two_valued_states(d)
        .into_iter()
        .map(|f| f.support().to_vec())
        .collect()
}

#[test]
fn pure_states_match_subset_oracle_on_catalog() {
    for e in catalog_list() {
        assert_eq!(
            pure_set(&e.diagram),
            common::vertices_by_subsets(&e.diagram),
            "{}",
            e.key
        );
    }
}

#[test]
fn two_valued_states_match_filter_on_catalog() {
    for e in catalog_list()
        .into_iter()
        .filter(|e| e.diagram.atom_count() <= 20)
    {
        assert_eq!(
            supports(&e.diagram),
            common::two_valued_by_filter(&e.diagram),
            "{}",
            e.key
        );
    }
}

#[test]
fn l27_supports_are_latin_squares() {
    let d = build_l27();
    let found: BTreeSet<Vec<String>> = two_valued_states(&d)
        .iter()
        .map(|f| {
            let mut s: Vec<String> = f
                .support_labels(&d)
                .into_iter()
                .map(str::to_string)
                .collect();
            s.sort();
            s
        })
        .collect();
    assert_eq!(found, common::latin_square_supports());
}

#[test]
fn loops_match_naive_search_on_small_loops() {
    for n in 3..=8 {
        let d = build_loop(n).unwrap();
        let fast: BTreeSet<Vec<usize>> = find_loops(&d, 8).into_iter().map(|l| l.blocks).collect();
        assert_eq!(fast, common::loops_by_dfs(&d, 8), "l_{n}");
    }
}

/// Block systems on `x0..`, with two to four atoms per block and every atom
/// in some block.
fn arbitrary_diagram(atoms: usize, max_blocks: usize) -> impl Strategy<Value = GreechieDiagram> {
    let block = proptest::collection::btree_set(0..atoms, 2..=4);
    proptest::collection::vec(block, 1..=max_blocks).prop_map(|blocks| {
        let blocks: Vec<Vec<String>> = blocks
            .into_iter()
            .map(|b| b.into_iter().map(|a| format!("x{a}")).collect())
            .collect();
        GreechieDiagram::from_labeled_blocks(None, &blocks)
    })
}

/// As above, keeping only blocks that meet every earlier block in at most one atom.
fn arbitrary_greechie(atoms: usize, max_blocks: usize) -> impl Strategy<Value = GreechieDiagram> {
    let block = proptest::collection::btree_set(0..atoms, 2..=4);
    proptest::collection::vec(block, 1..=max_blocks).prop_map(|blocks| {
        let mut kept: Vec<std::collections::BTreeSet<usize>> = Vec::new();
        for b in blocks {
            if kept.iter().all(|k| k.intersection(&b).count() <= 1) {
                kept.push(b);
            }
        }
        let blocks: Vec<Vec<String>> = kept
            .into_iter()
            .map(|b| b.into_iter().map(|a| format!("x{a}")).collect())
            .collect();
        GreechieDiagram::from_labeled_blocks(None, &blocks)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_valued_matches_filter(d in arbitrary_diagram(10, 8)) {
        prop_assert_eq!(supports(&d), common::two_valued_by_filter(&d));
    }

    #[test]
    fn vertices_match_subsets(d in arbitrary_diagram(8, 5)) {
        prop_assert_eq!(pure_set(&d), common::vertices_by_subsets(&d));
    }

    #[test]
    fn loops_match_naive_search(d in arbitrary_greechie(9, 8)) {
        let fast: BTreeSet<Vec<usize>> = find_loops(&d, 8).into_iter().map(|l| l.blocks).collect();
        prop_assert_eq!(fast, common::loops_by_dfs(&d, 8));
    }
}
