//! Exhaustive enumeration of small structures, up to isomorphism.

use catale::smallgen::{dedup, enum_categories, enum_monoids, enum_msls, enum_topologies, random_topology, rng};

fn main() {
    for n in 0..=4 {
        let all: Vec<_> = enum_topologies(n).unwrap().collect();
        let classes = dedup(all.iter().cloned()).count();
        println!("topologies on {n} points: {} ({classes} up to homeomorphism)", all.len());
    }
    for n in 1..=4 {
        println!("monoids of order {n}: {} up to isomorphism", dedup(enum_monoids(n).unwrap()).count());
    }
    for n in 1..=5 {
        println!("lattices with {n} elements: {} up to isomorphism", dedup(enum_msls(n).unwrap()).count());
    }
    let cats = enum_categories(4, 4).unwrap();
    println!(
        "categories with at most 4 morphisms: {} labelled, {} up to isomorphism",
        cats.len(),
        dedup(cats.iter().cloned()).count()
    );

    let mut r = rng(2024);
    let x = random_topology(6, 3, &mut r).unwrap();
    println!("a seeded random topology on 6 points has {} opens", x.opens().len());
}
