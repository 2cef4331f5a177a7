//! Taut categories and catales determine each other: the category of
//! identities of `⊗C` is `C` again, and `⊗` of that category is `A` again.

use catale::bridge::{cat_to_psg, catale_to_cat, verify_equivalence_of_catale, verify_equivalence_of_category};
use catale::fincat::taut_completion;
use catale::smallgen::{fixtures, isomorphic};

fn main() {
    for (name, base) in [
        ("walking_idempotent", fixtures::walking_idempotent()),
        ("walking_iso", fixtures::walking_iso()),
        ("T(2)", fixtures::transformation_monoid(2).unwrap()),
        ("T(3)", fixtures::transformation_monoid(3).unwrap()),
    ] {
        let c = taut_completion(&base).category;
        let from_category = verify_equivalence_of_category(&c).unwrap();
        let a = cat_to_psg(&c);
        let from_catale = verify_equivalence_of_catale(&a).unwrap();
        let back = catale_to_cat(&a).unwrap();
        println!(
            "{name}: taut completion has {} objects, {} morphisms; round trips hold: {} / {}; recovered up to iso: {}",
            c.object_count(),
            c.morphism_count(),
            from_category.holds(),
            from_catale.holds(),
            isomorphic(&back, &c)
        );
    }
}
