//! Points of the opens of a finite space: sober spaces come back unchanged,
//! and other spaces are replaced by their Kolmogorov quotient.

use catale::locales::{is_sober, kolmogorov_quotient, opens, soberify, unit_space, PointVariant};
use catale::smallgen::fixtures;

fn main() {
    for name in ["sierpinski", "indiscrete2", "discrete3"] {
        let x = fixtures::space(name).unwrap();
        println!("{name}:\n{x}");
        println!("opens:\n{}", opens(&x).unwrap());
        for variant in [PointVariant::Strict, PointVariant::Literal] {
            let eta = unit_space(&x, variant).unwrap();
            println!(
                "{variant:?}: sober {}, unit {:?} into {} points",
                is_sober(&x, variant).unwrap(),
                eta.map,
                eta.target.len()
            );
        }
        let s = soberify(&x, PointVariant::Strict).unwrap();
        let (k, classes) = kolmogorov_quotient(&x);
        println!("soberification has {} points; Kolmogorov classes {:?} ({} points)\n", s.len(), classes, k.len());
    }
}
