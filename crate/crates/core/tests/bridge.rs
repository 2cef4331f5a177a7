//! The adjunction between categories and partial semigroups, and the
//! equivalence between taut categories and catales.

use catale::bridge::{
    cat_to_psg, catale_to_cat, counit_psg, psg_to_cat, transpose_left, transpose_right, unit_cat,
    verify_adjunction, verify_equivalence_of_catale, verify_equivalence_of_category,
};
use catale::fincat::{karoubi, taut_completion, FinCategory, Mor};
use catale::psemi::{is_catale, PartialSemigroup};
use catale::smallgen::{enum_categories, enum_psgs, fixtures, isomorphic};

const BOUND: u128 = 10_000_000;

/// Maps from morphisms to elements that carry each defined composite to the
/// corresponding product, counted by trying every map.
fn oracle_hom_count(c: &FinCategory, s: &PartialSemigroup) -> usize {
    let m = c.morphism_count();
    let n = s.len();
    let total = n.pow(m as u32);
    (0..total)
        .filter(|&code| {
            let h = |f: Mor| code / n.pow(f.0 as u32) % n;
            c.morphisms().all(|g| {
                c.morphisms()
                    .all(|f| c.compose(g, f).is_none_or(|gf| s.product(h(g), h(f)) == Some(h(gf))))
            })
        })
        .count()
}

#[test]
fn adjunction_hom_sets_match_brute_force() {
    let cats = enum_categories(2, 3).unwrap();
    let psgs: Vec<PartialSemigroup> = (1..=2).flat_map(|n| enum_psgs(n).unwrap()).collect();
    for c in &cats {
        for s in &psgs {
            let r = verify_adjunction(c, s, BOUND).unwrap();
            assert!(r.holds(), "{c}\n{s}\n{:?}", r.mismatches);
            assert_eq!(r.homs, oracle_hom_count(c, s), "{c}\n{s}");
        }
    }
}

#[test]
fn round_trip_through_semigroups_is_the_envelope() {
    let mut corpus = enum_categories(3, 4).unwrap();
    corpus.extend([
        fixtures::walking_iso(),
        fixtures::z2(),
        fixtures::transformation_monoid(2).unwrap(),
    ]);
    for c in corpus {
        let back = psg_to_cat(&cat_to_psg(&c)).category;
        assert!(isomorphic(&back, &karoubi(&c).category), "{c}");
    }
}

#[test]
fn counit_after_unit_is_the_identity() {
    for c in enum_categories(2, 4).unwrap() {
        let eta = unit_cat(&c);
        assert!(eta.is_valid());
        // ε_{⊗C} ∘ ⊗η_C is the identity on ⊗C.
        let eps = counit_psg(&cat_to_psg(&c));
        assert_eq!(eps.source, cat_to_psg(&eta.target));
        for f in c.morphisms() {
            assert_eq!(eps.apply(eta.mor(f).0), f.0, "{c}");
        }
    }
}

#[test]
fn transposes_invert_each_other_on_the_identity_hom() {
    for c in enum_categories(2, 4).unwrap() {
        let s = cat_to_psg(&c);
        let id = catale::psemi::PsgHom::identity(&s);
        let f = transpose_left(&c, &id).unwrap();
        assert!(f.is_valid());
        let g = transpose_right(&f, &s).unwrap();
        assert_eq!(g.map, id.map, "{c}");
    }
}

#[test]
fn taut_categories_and_catales_round_trip() {
    let mut corpus: Vec<FinCategory> = enum_categories(3, 4).unwrap().into_iter().filter(|c| c.is_taut()).collect();
    corpus.push(taut_completion(&fixtures::transformation_monoid(2).unwrap()).category);
    corpus.push(taut_completion(&fixtures::walking_idempotent()).category);
    for c in &corpus {
        assert!(verify_equivalence_of_category(c).unwrap().holds(), "{c}");
        let s = cat_to_psg(c);
        assert!(is_catale(&s).is_catale(), "{c}");
        assert!(verify_equivalence_of_catale(&s).unwrap().holds());
        assert!(isomorphic(&catale_to_cat(&s).unwrap(), c));
    }
}

#[test]
fn non_taut_inputs_are_refused() {
    assert!(verify_equivalence_of_category(&fixtures::walking_iso()).is_err());
    assert!(verify_equivalence_of_catale(&cat_to_psg(&fixtures::walking_idempotent())).is_err());
    assert!(catale_to_cat(&cat_to_psg(&fixtures::walking_iso())).is_err());
}
