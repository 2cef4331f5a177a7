//! Splits the idempotent of the walking idempotent by passing to its
//! Karoubi envelope.

use catale::fincat::karoubi;
use catale::smallgen::fixtures;

fn main() {
    let c = fixtures::walking_idempotent();
    println!("base category:\n{c}");
    match c.first_unsplit_idempotent() {
        Some(e) => println!("{} does not split", c.morphism_name(e)),
        None => println!("every idempotent splits"),
    }

    let kar = karoubi(&c);
    let k = &kar.category;
    println!("\nKaroubi envelope:\n{k}");
    for phi in k.idempotents() {
        let sp = k.find_splitting(phi).unwrap().expect("the envelope is absolutely complete");
        println!(
            "{} = {} ∘ {} through {}",
            k.morphism_name(phi),
            k.morphism_name(sp.section),
            k.morphism_name(sp.retraction),
            k.object_name(sp.through),
        );
    }
    assert!(k.is_absolutely_complete());
}
