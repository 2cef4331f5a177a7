//! Category constructions checked against direct computations on functions.

use catale::fincat::{
    enumerate_functors, iso_classes, karoubi, skeleton, taut_completion, CategoryBuilder, Mor,
};
use catale::smallgen::{enum_categories, fixtures, isomorphic};

const BOUND: u128 = 1_000_000;

/// All functions on `0..n`, as value tuples.
fn functions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..n).map(move |v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    out
}

fn after(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i]).collect()
}

#[test]
fn envelope_of_t2_counts_maps_between_idempotents() {
    let fs = functions(2);
    let idem: Vec<&Vec<usize>> = fs.iter().filter(|f| after(f, f) == **f).collect();
    let kar = karoubi(&fixtures::transformation_monoid(2).unwrap()).category;
    assert_eq!(kar.object_count(), idem.len());
    let expected: usize = idem
        .iter()
        .flat_map(|phi| idem.iter().map(move |psi| (phi, psi)))
        .map(|(phi, psi)| fs.iter().filter(|f| after(psi, &after(f, phi)) == **f).count())
        .sum();
    assert_eq!(kar.morphism_count(), expected);
    assert!(kar.is_valid());
    assert!(kar.is_absolutely_complete());
}

#[test]
fn taut_completion_of_t3_has_one_object_per_rank() {
    let taut = taut_completion(&fixtures::transformation_monoid(3).unwrap()).category;
    assert!(taut.is_taut());
    let mut sizes: Vec<usize> = taut
        .objects()
        .flat_map(|x| taut.objects().map(move |y| (x, y)))
        .map(|(x, y)| taut.hom(x, y).len())
        .collect();
    sizes.sort_unstable();
    // Maps from an r-set to an s-set, r, s ∈ {1, 2, 3}.
    let mut expected: Vec<usize> = (1..=3u32)
        .flat_map(|r| (1..=3usize).map(move |s| s.pow(r)))
        .collect();
    expected.sort_unstable();
    assert_eq!(sizes, expected);
}

#[test]
fn envelope_is_idempotent_up_to_equivalence() {
    for c in enum_categories(3, 3).unwrap() {
        let once = karoubi(&c).category;
        let twice = karoubi(&once).category;
        assert!(isomorphic(&skeleton(&once).category, &skeleton(&twice).category), "{c}");
    }
}

#[test]
fn embedding_into_the_envelope_is_full_and_faithful() {
    for c in enum_categories(3, 4).unwrap() {
        let kar = karoubi(&c);
        assert!(kar.embedding.is_valid());
        assert!(kar.embedding.is_full() && kar.embedding.is_faithful(), "{c}");
    }
}

#[test]
fn skeleton_is_skeletal_and_equivalent() {
    let mut corpus = enum_categories(3, 4).unwrap();
    corpus.push(fixtures::walking_iso());
    corpus.push(fixtures::indiscrete_category(3));
    for c in corpus {
        let q = skeleton(&c);
        assert!(q.category.is_valid());
        assert!(q.category.is_skeletal(), "{c}");
        assert!(q.functor.is_equivalence(), "{c}");
        assert!(q.choice.is_coherent(&c));
        let classes = iso_classes(&c);
        let reps = c.objects().filter(|&x| c.objects().all(|y| y.0 >= x.0 || !classes.same_class(x, y)));
        assert_eq!(q.category.object_count(), reps.count());
    }
}

#[test]
fn walking_iso_collapses_to_a_point() {
    let q = skeleton(&fixtures::walking_iso());
    assert_eq!(q.category.object_count(), 1);
    assert_eq!(q.category.morphism_count(), 1);
}

#[test]
fn functors_from_the_walking_idempotent_pick_idempotents() {
    let source = fixtures::walking_idempotent();
    for target in enum_categories(2, 4).unwrap() {
        let functors = enumerate_functors(&source, &target, BOUND).unwrap();
        let idempotents = target
            .morphisms()
            .filter(|&f| target.dom(f) == target.cod(f) && target.compose(f, f) == Some(f))
            .count();
        assert_eq!(functors.len(), idempotents, "{target}");
    }
}

#[test]
fn functors_from_a_discrete_category_pick_objects() {
    for target in enum_categories(3, 4).unwrap() {
        let functors = enumerate_functors(&fixtures::discrete_category(2), &target, BOUND).unwrap();
        assert_eq!(functors.len(), target.object_count().pow(2));
    }
}

#[test]
fn incomplete_builder_output_fails_validation() {
    let mut b = CategoryBuilder::new();
    let x = b.object("x");
    let y = b.object("y");
    let f = b.morphism("f", x, y);
    let g = b.morphism("g", y, x);
    b.compose(g, f, Mor(0));
    let report = b.build().unwrap().validate();
    assert!(!report.is_valid());
    assert!(!report.violations.is_empty());
}

#[test]
fn monoid_splitting_matches_rank() {
    let t3 = fixtures::transformation_monoid(3).unwrap();
    for phi in t3.idempotents() {
        let sp = t3.find_splitting(phi).unwrap();
        // In a one-object category only the identity splits.
        assert_eq!(sp.is_some(), t3.is_identity(phi), "{}", t3.morphism_name(phi));
    }
    let kar = karoubi(&t3);
    let image = |name: &str| {
        let mut v: Vec<char> = name.chars().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    for a in t3.idempotents() {
        for b in t3.idempotents() {
            let (x, y) = (kar.object_of(a).unwrap(), kar.object_of(b).unwrap());
            let same_rank = image(t3.morphism_name(a)) == image(t3.morphism_name(b));
            let classes = iso_classes(&kar.category);
            assert_eq!(classes.same_class(x, y), same_rank);
        }
    }
}
