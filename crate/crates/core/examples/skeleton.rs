//! Skeleta: isomorphic objects are identified, and the quotient functor is
//! an equivalence.

use catale::fincat::{iso_classes, skeleton};
use catale::smallgen::fixtures;

fn main() {
    for (name, c) in [
        ("walking_iso", fixtures::walking_iso()),
        ("indiscrete(3)", fixtures::indiscrete_category(3)),
        ("discrete(2)", fixtures::discrete_category(2)),
    ] {
        let q = skeleton(&c);
        let classes = iso_classes(&c);
        let reps: Vec<&str> = c
            .objects()
            .filter(|&x| q.choice.representative(x) == x)
            .map(|x| c.object_name(x))
            .collect();
        println!(
            "{name}: {} objects -> {} ({}), equivalence: {}, coherent: {}",
            c.object_count(),
            q.category.object_count(),
            reps.join(", "),
            q.functor.is_equivalence(),
            q.choice.is_coherent(&c)
        );
        for x in c.objects() {
            for y in c.objects() {
                if x < y && classes.same_class(x, y) {
                    let w = classes.witness(&c, x, y).expect("same class");
                    println!(
                        "  {} ≅ {} via {} and {}",
                        c.object_name(x),
                        c.object_name(y),
                        c.morphism_name(w.u),
                        c.morphism_name(w.v)
                    );
                }
            }
        }
    }
}
