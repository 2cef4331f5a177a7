//! The catale axioms on the partial semigroups of a few categories.

use catale::bridge::cat_to_psg;
use catale::fincat::taut_completion;
use catale::psemi::{annotations, is_catale};
use catale::smallgen::fixtures;

fn main() {
    let cases = [
        ("walking_iso", fixtures::walking_iso()),
        ("walking_idempotent", fixtures::walking_idempotent()),
        ("taut completion of walking_idempotent", taut_completion(&fixtures::walking_idempotent()).category),
        ("taut completion of T(2)", taut_completion(&fixtures::transformation_monoid(2).unwrap()).category),
    ];
    for (name, c) in cases {
        let s = cat_to_psg(&c);
        let report = is_catale(&s);
        println!("{name}: {} elements, catale: {}", s.len(), report.is_catale());
        for f in &report.failures {
            println!("  {}", f.describe(&s));
        }
        if report.is_catale() {
            let ann = annotations(&s).unwrap();
            for f in s.elements() {
                println!(
                    "  {}: {} -> {}",
                    s.name(f),
                    s.name(ann.dom[f]),
                    s.name(ann.cod[f])
                );
            }
        }
    }
}
