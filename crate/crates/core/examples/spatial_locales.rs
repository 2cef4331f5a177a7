//! Opens of the points of a finite meet-semilattice: distributive lattices
//! come back unchanged, others collapse.

use catale::locales::{counit_msl, is_frame, is_spatial, points, spatialize, PointVariant};
use catale::smallgen::fixtures;

fn main() {
    for name in ["boolean_msl2", "chain_msl3", "m3", "n5"] {
        let a = fixtures::msl(name).unwrap();
        let ps = points(&a, PointVariant::Strict).unwrap();
        let eps = counit_msl(&a, PointVariant::Strict).unwrap();
        println!(
            "{name}: {} elements, frame {}, {} points, spatial {}",
            a.len(),
            is_frame(&a),
            ps.points.len(),
            is_spatial(&a, PointVariant::Strict).unwrap()
        );
        println!("  counit {:?}", eps.map);
        let s = spatialize(&a, PointVariant::Strict).unwrap();
        println!("  spatialization has {} elements", s.len());
    }

    let chain = fixtures::chain_msl(2).unwrap();
    for variant in [PointVariant::Literal, PointVariant::Strict] {
        let ps = points(&chain, variant).unwrap();
        println!("two-element chain, {variant:?} points: {:?}", ps.space.point_names());
    }
}
