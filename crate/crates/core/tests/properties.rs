mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use pmc_core::enumerate::{enumerate, Algorithm, EnumOptions};
use pmc_core::families::{gen_family, Family};
use pmc_core::oracle::pmc_oracle_scan;
use pmc_core::validate::validate;
use pmc_core::{is_pmc, DfsStream, Graph, VertexSet};

use common::random_corpus;

#[test]
fn enumerators_match_oracle_on_reordered_corpus() {
    for (idx, (f, g)) in random_corpus().into_iter().enumerate() {
        let g = g.with_seeded_ordering(idx as u64 * 31 + 1);
        let want: Vec<VertexSet> = pmc_oracle_scan(&g.view()).unwrap().into_iter().collect();
        for a in Algorithm::ALL {
            let run = enumerate(&g, a, &EnumOptions::default()).unwrap();
            assert_eq!(run.pmcs.len(), want.len(), "{f} {a}");
            assert_eq!(run.sorted(), want, "{f} {a}");
        }
    }
}

#[test]
fn every_pmc_has_exactly_one_seed() {
    for (f, g) in random_corpus().into_iter().step_by(5) {
        let mut stream = DfsStream::with_options(&g, &EnumOptions::default());
        let mut seeds = BTreeSet::new();
        let mut outputs = BTreeSet::new();
        while let Some(e) = stream.next_emission() {
            let e = e.unwrap();
            assert!(
                seeds.insert((e.origin_level, e.origin)),
                "{f}: seed repeated"
            );
            assert!(outputs.insert(e.pmc), "{f}: output repeated");
            // the seed survives to the top level unchanged or grown
            assert!(e.origin.is_subset(&e.pmc));
            let top = g.prefix(e.origin_level).unwrap();
            assert!(is_pmc(&top, &e.origin).unwrap());
        }
        assert_eq!(outputs, pmc_oracle_scan(&g.view()).unwrap(), "{f}");
    }
}

#[test]
fn depth_first_metrics() {
    let g = gen_family(&Family::Theta { k: 4 }).unwrap();
    let mut stream = DfsStream::with_options(&g, &EnumOptions::default());
    let first = stream.next().unwrap().unwrap();
    let partial = stream.metrics();
    assert_eq!(partial.pmc_yields, 1);
    assert!(!first.is_empty());
    let rest = stream.by_ref().count();
    let done = stream.metrics();
    assert_eq!(done.pmc_yields as usize, rest + 1);
    assert!(done.is_pmc_calls >= partial.is_pmc_calls);
    assert!(done.separator_yields > 0);
}

#[test]
fn validation_harness_on_corpus_sample() {
    for (f, g) in random_corpus().into_iter().take(12) {
        let report = validate(&g, &EnumOptions::default()).unwrap();
        assert!(report.is_ok(), "{f}: {:?}", report.first_problem());
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.0f64..1.0, any::<u64>(), any::<u64>()).prop_map(|(n, p, seed, order)| {
        gen_family(&Family::Random { n, p, seed })
            .unwrap()
            .with_seeded_ordering(order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn components_partition_and_flags(g in arb_graph(), mask in any::<u16>()) {
        let view = g.view();
        let s: VertexSet = (1..=g.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let report = view.components_of(&s);
        let mut union = s;
        for (c, full) in report.components.iter().zip(&report.full) {
            prop_assert!(c.is_disjoint(&union));
            union = union.union(c);
            let brute = s.iter().all(|x| c.iter().any(|y| g.has_edge(x, y)));
            prop_assert_eq!(*full, brute);
        }
        prop_assert_eq!(union, g.vertices());
    }

    #[test]
    fn full_prefix_is_the_graph(g in arb_graph()) {
        let whole = g.prefix(g.n()).unwrap();
        prop_assert_eq!(whole.vertices(), g.view().vertices());
        prop_assert_eq!(pmc_oracle_scan(&whole).unwrap(), pmc_oracle_scan(&g.view()).unwrap());
    }

    #[test]
    fn orderings_do_not_change_the_result(g in arb_graph(), other in any::<u64>()) {
        let a = enumerate(&g, Algorithm::Dfs, &EnumOptions::default()).unwrap().sorted();
        let b = enumerate(&g.with_seeded_ordering(other), Algorithm::Nondup, &EnumOptions::default()).unwrap().sorted();
        prop_assert_eq!(a, b);
    }
}
