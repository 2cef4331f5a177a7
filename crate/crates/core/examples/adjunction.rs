//! Functors `C → ⇑A` and partial-semigroup homs `⊗C → A` correspond one to
//! one through the two transposes.

use catale::bridge::{cat_to_psg, psg_to_cat, transpose_left, transpose_right, verify_adjunction, DEFAULT_SEARCH_BOUND};
use catale::psemi::PsgHom;
use catale::smallgen::fixtures;

fn main() {
    let c = fixtures::walking_idempotent();
    let a = cat_to_psg(&fixtures::transformation_monoid(2).unwrap());
    println!("C = walking idempotent, A = ⊗T(2) with {} elements", a.len());
    println!("⇑A has {} objects", psg_to_cat(&a).category.object_count());

    let report = verify_adjunction(&c, &a, DEFAULT_SEARCH_BOUND).unwrap();
    println!(
        "{} functors C → ⇑A, {} homs ⊗C → A, inverse bijections: {}",
        report.functors,
        report.homs,
        report.holds()
    );

    // The identity of ⊗C corresponds to the unit of the adjunction.
    let s = cat_to_psg(&c);
    let id = PsgHom::identity(&s);
    let eta = transpose_left(&c, &id).unwrap();
    println!("transpose of the identity on ⊗C:");
    for f in c.morphisms() {
        let g = eta.mor(f);
        println!("  {} ↦ {}", c.morphism_name(f), eta.target.morphism_name(g));
    }
    let back = transpose_right(&eta, &s).unwrap();
    assert_eq!(back.map, id.map);
}
