//! The taut completion of the monoid of all functions on a three-element
//! set: one object per rank, and as many morphisms between the rank-r and
//! rank-s objects as there are functions from an r-set to an s-set.

use catale::fincat::taut_completion;
use catale::smallgen::fixtures;

fn main() {
    let t3 = fixtures::transformation_monoid(3).unwrap();
    println!("T(3): {} functions, {} idempotents", t3.morphism_count(), t3.idempotents().len());

    let taut = taut_completion(&t3);
    let c = &taut.category;
    println!(
        "envelope: {} objects; taut completion: {} objects, {} morphisms",
        taut.karoubi.category.object_count(),
        c.object_count(),
        c.morphism_count()
    );
    let rank = |name: &str| {
        let mut v: Vec<char> = name.chars().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    for x in c.objects() {
        for y in c.objects() {
            let (r, s) = (rank(c.object_name(x)), rank(c.object_name(y)));
            println!("rank {r} -> rank {s}: {} morphisms (s^r = {})", c.hom(x, y).len(), s.pow(r as u32));
        }
    }
    assert!(c.is_taut());
}
