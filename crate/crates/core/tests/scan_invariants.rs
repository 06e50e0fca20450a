use std::collections::BTreeSet;

use alphaspec_core::exactpoly::rat;
use alphaspec_core::graph::Graph;
use alphaspec_core::scan::{
    cospectral_classes, cospectral_partition, count_graphs, dedupe_classes, enumerate_graphs, exact_partition,
    KNOWN_COUNTS,
};
use alphaspec_core::spectra::{charpoly_at, invariants_from_charpoly, regularity_from_spectrum, Mode};

#[test]
fn counts_match_published_values() {
    for n in 1..=9 {
        assert_eq!(count_graphs(n).unwrap(), KNOWN_COUNTS[n - 1], "n = {n}");
    }
}

#[test]
fn labelled_catalog_dedupes_to_classes() {
    let n = 5;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let all: Vec<Graph> = (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect();
    let classes = dedupe_classes(&all);
    let mut listed = enumerate_graphs(n).unwrap();
    listed.sort();
    assert_eq!(classes, listed);
}

fn modes() -> Vec<Mode> {
    vec![Mode::Fixed(rat(0, 1)), Mode::Fixed(rat(1, 2)), Mode::Fixed(rat(1, 1)), Mode::Symbolic]
}

#[test]
fn prepass_never_splits_or_merges_exact_classes() {
    for n in 1..=7 {
        let gs = enumerate_graphs(n).unwrap();
        for mode in modes() {
            assert_eq!(
                cospectral_partition(&gs, &mode).unwrap(),
                exact_partition(&gs, &mode).unwrap(),
                "n = {n}, {mode}"
            );
        }
    }
}

#[test]
fn symbolic_classes_refine_fixed_classes() {
    let gs = enumerate_graphs(7).unwrap();
    let symbolic = cospectral_partition(&gs, &Mode::Symbolic).unwrap();
    for a in [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)] {
        let fixed = cospectral_partition(&gs, &Mode::Fixed(a)).unwrap();
        let mut owner = vec![0; gs.len()];
        for (c, class) in fixed.iter().enumerate() {
            for &i in class {
                owner[i] = c;
            }
        }
        for class in &symbolic {
            let owners: BTreeSet<_> = class.iter().map(|&i| owner[i]).collect();
            assert_eq!(owners.len(), 1);
        }
    }
}

#[test]
fn class_members_share_invariants() {
    let gs = enumerate_graphs(7).unwrap();
    for a in [rat(1, 4), rat(1, 2)] {
        for class in
            cospectral_classes(&gs, &Mode::Fixed(a.clone())).unwrap().into_iter().filter(|c| c.members.len() > 1)
        {
            let reports: BTreeSet<String> = class
                .members
                .iter()
                .map(|g| {
                    let p = charpoly_at(g, &a).unwrap();
                    let inv = invariants_from_charpoly(&p, &a).unwrap();
                    let direct = (g.order(), g.edge_count(), g.degree_sequence().sum_of_squares());
                    assert_eq!((inv.n, inv.m, inv.sum_sq_degrees.unwrap() as usize), direct);
                    format!("{inv:?} {:?}", regularity_from_spectrum(&p, &a))
                })
                .collect();
            assert_eq!(reports.len(), 1, "{:?}", class.members);
        }
    }
}

#[test]
fn partition_is_independent_of_worker_count() {
    let gs = enumerate_graphs(7).unwrap();
    let mode = Mode::Fixed(rat(0, 1));
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let one = serial.install(|| cospectral_partition(&gs, &mode).unwrap());
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let four = many.install(|| cospectral_partition(&gs, &mode).unwrap());
    assert_eq!(one, four);
    let mut reversed: Vec<Graph> = gs.clone();
    reversed.reverse();
    let back = cospectral_partition(&reversed, &mode).unwrap();
    let mut mapped: Vec<Vec<usize>> = back
        .iter()
        .map(|c| {
            let mut v: Vec<usize> = c.iter().map(|&i| gs.len() - 1 - i).collect();
            v.sort();
            v
        })
        .collect();
    mapped.sort();
    assert_eq!(mapped, one);
}
