use std::collections::HashSet;

use proptest::prelude::*;

use ddgraph::cayley::neighbors;
use ddgraph::records::{verify_all, RecordEntry};
use ddgraph::search::{moore_bound, random_search, SearchConfig};
use ddgraph::{
    bfs_stats, close_under_inverses, export_graph, load_records, Element, ExportFormat, GeneratorSet,
    GroupSpec, RecordSource,
};

fn specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::cyclic(2, 3, 2).unwrap(),
        GroupSpec::cyclic(15, 77, 4).unwrap(),
        GroupSpec::cyclic(238, 3973, 81).unwrap(),
        GroupSpec::square(16, 3, [[1, 1], [1, 0]]).unwrap(),
        GroupSpec::square(48, 16, [[1, 15], [7, 8]]).unwrap(),
        GroupSpec::doubled(2, 3, 2).unwrap(),
        GroupSpec::doubled(5, 11, 4).unwrap(),
        GroupSpec::doubled(16, 97, 8).unwrap(),
    ]
}

fn records() -> Vec<RecordEntry> {
    load_records(RecordSource::Embedded).unwrap()
}

fn record_set(entry: &RecordEntry) -> GeneratorSet {
    close_under_inverses(&entry.spec, &entry.generators).unwrap()
}

#[test]
fn index_is_a_bijection_on_small_groups() {
    for spec in specs().into_iter().filter(|s| s.order() <= 10_000) {
        let mut seen = HashSet::new();
        for i in 0..spec.order() {
            let g = spec.unindex(i).unwrap();
            assert!(spec.contains(&g));
            assert_eq!(spec.index(&g).unwrap(), i, "{spec}");
            assert!(seen.insert(g));
        }
        assert!(spec.unindex(spec.order()).is_err());
    }
}

#[test]
fn power_tables_match_repeated_multiplication() {
    for spec in specs() {
        match &spec {
            GroupSpec::Cyclic(g) => {
                let mut x = 1 % g.n();
                for k in 0..2 * g.m() {
                    assert_eq!(g.powers().get(k), x, "{spec} a^{k}");
                    x = x * g.a() % g.n();
                }
            }
            GroupSpec::Square(g) => {
                let n = g.n();
                let s = g.sigma();
                let mut x = [[1 % n, 0], [0, 1 % n]];
                for k in 0..2 * g.m() {
                    assert_eq!(g.powers().get(k), x, "{spec} s^{k}");
                    let mut y = [[0; 2]; 2];
                    for i in 0..2 {
                        for j in 0..2 {
                            y[i][j] = (x[i][0] * s[0][j] + x[i][1] * s[1][j]) % n;
                        }
                    }
                    x = y;
                }
            }
            GroupSpec::Doubled(d) => assert_eq!(d.base().powers().len() as u64, d.base().m()),
        }
    }
}

#[test]
fn every_record_has_non_commuting_generators() {
    for entry in records() {
        let spec = &entry.spec;
        assert!(!spec.is_abelian(), "{}", entry.id());
        let witness = entry.generators.iter().enumerate().any(|(i, x)| {
            entry.generators[i + 1..]
                .iter()
                .any(|y| spec.multiply(x, y).unwrap() != spec.multiply(y, x).unwrap())
        });
        assert!(witness, "{}: listed generators commute pairwise", entry.id());
    }
}

#[test]
fn histograms_respect_the_moore_bound_level_by_level() {
    for entry in records().into_iter().filter(|e| e.order <= 100_000) {
        let stats = bfs_stats(&entry.spec, &record_set(&entry), u64::MAX).unwrap();
        let delta = entry.delta;
        assert_eq!(stats.distance_histogram[0], 1);
        let mut cap = delta;
        for (d, &count) in stats.distance_histogram.iter().enumerate().skip(1) {
            assert!(count <= cap, "{} level {d}: {count} > {cap}", entry.id());
            cap = cap.saturating_mul(delta - 1);
        }
        let total: u64 = stats.distance_histogram.iter().sum();
        assert!(total <= moore_bound(delta, entry.diameter).unwrap());
    }
}

#[test]
fn exports_are_regular_and_deterministic() {
    for (delta, diameter) in [(4, 7), (7, 3), (4, 8)] {
        let entry = records().into_iter().find(|e| (e.delta, e.diameter) == (delta, diameter)).unwrap();
        let set = record_set(&entry);
        let mut first = Vec::new();
        let mut second = Vec::new();
        export_graph(&entry.spec, &set, ExportFormat::EdgeList, &mut first).unwrap();
        export_graph(&entry.spec, &set, ExportFormat::EdgeList, &mut second).unwrap();
        assert_eq!(first, second);

        let mut degree = vec![0u64; entry.order as usize];
        for line in String::from_utf8(first).unwrap().lines() {
            let (u, v) = line.split_once(' ').unwrap();
            let (u, v): (usize, usize) = (u.parse().unwrap(), v.parse().unwrap());
            assert!(u < v);
            degree[u] += 1;
            degree[v] += 1;
        }
        assert!(degree.iter().all(|&d| d == delta), "({delta},{diameter}) not regular");
    }
}

#[test]
fn search_hits_reverify() {
    let config = SearchConfig {
        spec: GroupSpec::cyclic(15, 77, 4).unwrap(),
        delta: 4,
        target_diameter: 8,
        trials: 300,
        seed: 99,
        max_hits: 20,
    };
    let outcome = random_search(&config, 2).unwrap();
    assert!(!outcome.hits.is_empty());
    for hit in &outcome.hits {
        let set = close_under_inverses(&config.spec, hit.generators.elements()).unwrap();
        assert_eq!(set.degree(), 4);
        let stats = bfs_stats(&config.spec, &set, u64::MAX).unwrap();
        assert_eq!(stats, hit.stats);
        assert!(stats.diameter.unwrap() <= 8);
    }
}

#[test]
fn budget_of_one_hundred_thousand_attempts_29_records() {
    let summary = verify_all(&records(), 100_000, 4);
    assert_eq!(summary.reports.len(), 51);
    assert_eq!(summary.passed, 29);
    assert_eq!(summary.skipped, 22);
    assert!(!summary.has_mismatch());
}

fn spec_and_element() -> impl Strategy<Value = (GroupSpec, Element, Element, Element)> {
    (0..specs().len(), any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(i, a, b, c)| {
        let spec = specs().swap_remove(i);
        let o = spec.order();
        let (x, y, z) =
            (spec.unindex(a % o).unwrap(), spec.unindex(b % o).unwrap(), spec.unindex(c % o).unwrap());
        (spec, x, y, z)
    })
}

proptest! {
    #[test]
    fn element_orders_divide_the_group_order((spec, x, _, _) in spec_and_element()) {
        let k = spec.element_order(&x).unwrap();
        prop_assert_eq!(spec.order() % k, 0);
        prop_assert_eq!(spec.pow(&x, k as i64).unwrap(), spec.identity());
    }

    #[test]
    fn multiplication_is_associative((spec, x, y, z) in spec_and_element()) {
        let lhs = spec.multiply(&spec.multiply(&x, &y).unwrap(), &z).unwrap();
        let rhs = spec.multiply(&x, &spec.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_multiplication_matches_elements((spec, x, y, _) in spec_and_element()) {
        let v = spec.index(&x).unwrap();
        prop_assert_eq!(spec.mul_index(v, &y), spec.index(&spec.multiply(&x, &y).unwrap()).unwrap());
    }

    #[test]
    fn cayley_edges_are_symmetric((spec, x, y, z) in spec_and_element()) {
        prop_assume!(y != spec.identity() && z != spec.identity());
        let set = close_under_inverses(&spec, &[y, z]).unwrap();
        for w in neighbors(&spec, &set, &x).unwrap() {
            prop_assert!(neighbors(&spec, &set, &w).unwrap().contains(&x));
        }
    }
}
