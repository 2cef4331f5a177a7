//! Enumeration counts and canonical forms.

use catale::locales::{find_homeomorphism, find_order_isomorphism};
use catale::smallgen::{
    dedup, enum_categories, enum_monoids, enum_msls, enum_topologies, fixtures, isomorphic, random_relabel, rng,
    Canonize,
};
use catale::fincat::FinCategory;
use proptest::prelude::*;
use std::sync::OnceLock;

fn category_corpus() -> &'static [FinCategory] {
    static CORPUS: OnceLock<Vec<FinCategory>> = OnceLock::new();
    CORPUS.get_or_init(|| enum_categories(3, 4).unwrap())
}

fn classes<S: Canonize>(items: impl IntoIterator<Item = S>) -> usize {
    dedup(items).count()
}

#[test]
fn topologies_up_to_homeomorphism() {
    // Known values of the count of finite topologies up to homeomorphism.
    let counts: Vec<usize> = (0..=4).map(|n| classes(enum_topologies(n).unwrap())).collect();
    assert_eq!(counts, [1, 1, 3, 9, 33]);
}

#[test]
fn monoids_up_to_isomorphism() {
    // Known values of the count of monoids of order n up to isomorphism.
    let counts: Vec<usize> = (1..=4).map(|n| classes(enum_monoids(n).unwrap())).collect();
    assert_eq!(counts, [1, 2, 7, 35]);
}

#[test]
fn lattices_up_to_isomorphism() {
    // A finite meet-semilattice with a top is a lattice.
    let counts: Vec<usize> = (1..=5).map(|n| classes(enum_msls(n).unwrap())).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5]);
}

#[test]
fn canonical_forms_agree_with_homeomorphism_search() {
    let spaces: Vec<_> = enum_topologies(3).unwrap().collect();
    for x in &spaces {
        for y in &spaces {
            assert_eq!(
                isomorphic(x, y),
                find_homeomorphism(x, y).unwrap().is_some(),
                "{x}\n{y}"
            );
        }
    }
}

#[test]
fn canonical_forms_agree_with_order_isomorphism_search() {
    let msls: Vec<_> = (4..=5).flat_map(|n| enum_msls(n).unwrap()).collect();
    for a in &msls {
        for b in &msls {
            assert_eq!(isomorphic(a, b), find_order_isomorphism(a, b).unwrap().is_some());
        }
    }
}

#[test]
fn enumerated_categories_are_valid_and_distinct_up_to_labels() {
    let cats = enum_categories(4, 4).unwrap();
    assert!(cats.iter().all(|c| c.is_valid()));
    assert!(cats.iter().all(|c| c.morphism_count() <= 4));
    let reps = classes(cats.iter().cloned());
    assert!(reps <= cats.len());
}

#[test]
fn canonical_form_of_kar_t3_is_stable() {
    let kar = catale::fincat::karoubi(&fixtures::transformation_monoid(3).unwrap()).category;
    let mut r = rng(1);
    let shuffled = random_relabel(&kar, &mut r);
    assert_eq!(kar.canonical_form(), shuffled.canonical_form());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_keeps_the_canonical_form(seed in any::<u64>(), index in 0usize..150) {
        let cats = category_corpus();
        let c = &cats[index % cats.len()];
        let d = random_relabel(c, &mut rng(seed));
        prop_assert!(d.is_valid());
        prop_assert_eq!(c.canonical_form(), d.canonical_form());
    }

    #[test]
    fn random_spaces_keep_their_canonical_form(seed in any::<u64>(), n in 1usize..7, gens in 0usize..5) {
        let mut r = rng(seed);
        let x = catale::smallgen::random_topology(n, gens, &mut r).unwrap();
        let y = random_relabel(&x, &mut r);
        prop_assert!(y.is_valid());
        prop_assert!(isomorphic(&x, &y));
    }
}
