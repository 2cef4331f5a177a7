//! Named small structures.
//!
//! Names are case-insensitive and a size may be written with or without
//! parentheses, so `T3`, `t(3)` and `T(3)` are the same fixture. Some names
//! denote both a category and a space (`discrete2`); the lookup functions
//! are split by kind so that callers choose the reading.

use crate::bridge::cat_to_psg;
use crate::fincat::{CategoryBuilder, FinCategory, Mor, Morphism, Ob};
use crate::locales::{full_mask, sierpinski, FinSpace, MeetSemilattice};
use crate::psemi::PartialSemigroup;
use crate::{Error, Result};

/// Largest `n` for which `T(n)` is built.
pub const MAX_TRANSFORMATION_DEGREE: usize = 4;

/// Any fixture, tagged by kind.
#[derive(Clone, Debug)]
pub enum Fixture {
    Category(FinCategory),
    Space(FinSpace),
    Msl(MeetSemilattice),
}

pub const CATEGORY_NAMES: &[&str] = &[
    "walking_idempotent",
    "walking_iso",
    "terminal",
    "z2",
    "discrete(n)",
    "indiscrete(n)",
    "T(n)",
];
pub const SPACE_NAMES: &[&str] = &["sierpinski", "one_point", "discrete(n)", "indiscrete(n)"];
pub const MSL_NAMES: &[&str] = &["chain_msl(n)", "boolean_msl(n)", "m3", "n5"];

fn parse(name: &str) -> (String, Option<usize>) {
    let flat: String = name
        .chars()
        .filter(|c| *c != '(' && *c != ')')
        .collect::<String>()
        .to_lowercase();
    let split = flat.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (base, digits) = flat.split_at(split);
    (base.to_string(), digits.parse().ok())
}

fn unknown(name: &str) -> Error {
    Error::UnknownFixture(name.to_string())
}

pub fn walking_idempotent() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let x = b.object("x");
    let e = b.morphism("e", x, x);
    b.compose(e, e, e);
    b.build().expect("fixed table")
}

pub fn walking_iso() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let a = b.object("a");
    let c = b.object("b");
    let u = b.morphism("u", a, c);
    let v = b.morphism("v", c, a);
    b.compose(v, u, Mor(0)).compose(u, v, Mor(1));
    b.build().expect("fixed table")
}

pub fn terminal() -> FinCategory {
    discrete_category(1)
}

/// Objects `0..n` and only identities.
pub fn discrete_category(n: usize) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for i in 0..n {
        b.object(&i.to_string());
    }
    b.build().expect("identities only")
}

/// Objects `0..n` with exactly one morphism `f_xy: x → y` for every pair.
pub fn indiscrete_category(n: usize) -> FinCategory {
    let objects = (0..n).map(|i| i.to_string()).collect();
    let morphisms = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            Morphism {
                name: if x == y { format!("id_{x}") } else { format!("f_{x}{y}") },
                dom: Ob(x),
                cod: Ob(y),
            }
        })
        .collect::<Vec<_>>();
    let identities = (0..n).map(|x| Mor(x * n + x)).collect();
    let m = n * n;
    let mut table = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            if morphisms[g].dom == morphisms[f].cod {
                table[g * m + f] = Some(Mor(morphisms[f].dom.0 * n + morphisms[g].cod.0));
            }
        }
    }
    FinCategory::from_parts(objects, morphisms, identities, table).expect("indices in range")
}

/// The cyclic group of order two as a one-object category.
pub fn z2() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let x = b.object_with_identity("*", "1");
    let g = b.morphism("g", x, x);
    b.compose(g, g, Mor(0));
    b.build().expect("fixed table")
}

/// All functions on `{0, …, n-1}` under composition, as a one-object
/// category. A function is named by its images, `"021"` sends 1 to 2, and
/// the functions are listed in lexicographic order of their names.
pub fn transformation_monoid(n: usize) -> Result<FinCategory> {
    if n > MAX_TRANSFORMATION_DEGREE {
        return Err(Error::BoundExceeded {
            what: "transformation monoid degree".into(),
            size: n as u128,
            bound: MAX_TRANSFORMATION_DEGREE as u128,
        });
    }
    let m = n.pow(n as u32);
    let image = |code: usize, i: usize| code / n.pow((n - 1 - i) as u32) % n;
    let encode = |f: &dyn Fn(usize) -> usize| (0..n).fold(0, |acc, i| acc * n + f(i));
    let morphisms = (0..m)
        .map(|code| Morphism {
            name: if n == 0 {
                "id".into()
            } else {
                (0..n).map(|i| char::from(b'0' + image(code, i) as u8)).collect()
            },
            dom: Ob(0),
            cod: Ob(0),
        })
        .collect();
    let mut table = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            table[g * m + f] = Some(Mor(encode(&|i| image(g, image(f, i)))));
        }
    }
    let id = encode(&|i| i);
    FinCategory::from_parts(vec!["*".into()], morphisms, vec![Mor(id)], table)
}

pub fn discrete_space(n: usize) -> Result<FinSpace> {
    if n > 16 {
        return Err(Error::Capacity(format!("discrete space on {n} points")));
    }
    FinSpace::new((0..n).map(|i| i.to_string()).collect(), (0..=full_mask(n)).collect())
}

pub fn indiscrete_space(n: usize) -> Result<FinSpace> {
    let opens = if n == 0 { vec![0] } else { vec![0, full_mask(n)] };
    FinSpace::new((0..n).map(|i| i.to_string()).collect(), opens)
}

/// `0 < 1 < … < n-1`.
pub fn chain_msl(n: usize) -> Result<MeetSemilattice> {
    if n == 0 {
        return Err(Error::Invalid("a meet-semilattice needs a top".into()));
    }
    MeetSemilattice::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b, n - 1)
}

/// Subsets of an `n`-set under inclusion, named like `{0,2}`.
pub fn boolean_msl(n: usize) -> Result<MeetSemilattice> {
    if n > 6 {
        return Err(Error::Capacity(format!("Boolean lattice on {n} atoms")));
    }
    let size = 1usize << n;
    let names = (0..size)
        .map(|s| {
            let inside: Vec<String> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| i.to_string()).collect();
            format!("{{{}}}", inside.join(","))
        })
        .collect();
    MeetSemilattice::from_fn(names, |a, b| a & !b == 0, size - 1)
}

/// The diamond: three atoms between a bottom and a top.
pub fn m3() -> MeetSemilattice {
    MeetSemilattice::from_pairs(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        "1",
    )
    .expect("fixed order")
}

/// The pentagon `0 < a < b < 1`, `0 < c < 1`.
pub fn n5() -> MeetSemilattice {
    MeetSemilattice::from_pairs(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        "1",
    )
    .expect("fixed order")
}

pub fn category(name: &str) -> Result<FinCategory> {
    let (base, n) = parse(name);
    match (base.as_str(), n) {
        ("walking_idempotent", None) => Ok(walking_idempotent()),
        ("walking_iso", None) => Ok(walking_iso()),
        ("terminal", None) => Ok(terminal()),
        ("z", Some(2)) => Ok(z2()),
        ("discrete", Some(n)) if n <= 64 => Ok(discrete_category(n)),
        ("indiscrete", Some(n)) if n <= 8 => Ok(indiscrete_category(n)),
        ("t", Some(n)) => transformation_monoid(n),
        _ => Err(unknown(name)),
    }
}

pub fn space(name: &str) -> Result<FinSpace> {
    let (base, n) = parse(name);
    match (base.as_str(), n) {
        ("sierpinski", None) => Ok(sierpinski()),
        ("one_point", None) => discrete_space(1),
        ("discrete", Some(n)) => discrete_space(n),
        ("indiscrete", Some(n)) => indiscrete_space(n),
        _ => Err(unknown(name)),
    }
}

pub fn msl(name: &str) -> Result<MeetSemilattice> {
    let (base, n) = parse(name);
    match (base.as_str(), n) {
        ("chain_msl", Some(n)) => chain_msl(n),
        ("boolean_msl", Some(n)) => boolean_msl(n),
        ("m", Some(3)) | ("diamond", None) => Ok(m3()),
        ("n", Some(5)) | ("pentagon", None) => Ok(n5()),
        _ => Err(unknown(name)),
    }
}

/// The morphisms of a category fixture.
pub fn psg(name: &str) -> Result<PartialSemigroup> {
    category(name).map(|c| cat_to_psg(&c))
}

/// Looks a name up as a category, then a space, then a meet-semilattice.
pub fn fixture(name: &str) -> Result<Fixture> {
    category(name)
        .map(Fixture::Category)
        .or_else(|_| space(name).map(Fixture::Space))
        .or_else(|_| msl(name).map(Fixture::Msl))
        .map_err(|e| match e {
            Error::UnknownFixture(_) => unknown(name),
            other => other,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transformation_monoids() {
        let t2 = transformation_monoid(2).unwrap();
        assert_eq!(t2.morphism_count(), 4);
        assert!(t2.is_valid());
        assert_eq!(t2.morphism_name(t2.identity(Ob(0))), "01");
        let t3 = category("T(3)").unwrap();
        assert_eq!(t3.morphism_count(), 27);
        assert!(t3.is_valid());
        assert_eq!(t3.morphism_name(t3.identity(Ob(0))), "012");
        let f = t3.morphism_by_name("001").unwrap();
        let g = t3.morphism_by_name("120").unwrap();
        assert_eq!(t3.morphism_name(t3.comp(g, f)), "112");
        assert!(matches!(transformation_monoid(5), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
        assert!(matches!(category("sierpinski"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn names_and_kinds() {
        assert!(matches!(fixture("discrete2"), Ok(Fixture::Category(_))));
        assert!(matches!(fixture("sierpinski"), Ok(Fixture::Space(_))));
        assert!(matches!(fixture("M3"), Ok(Fixture::Msl(_))));
        assert_eq!(space("discrete(2)").unwrap().opens().len(), 4);
        assert_eq!(space("indiscrete2").unwrap().opens().len(), 2);
    }

    #[test]
    fn every_fixture_is_valid() {
        for name in ["walking_idempotent", "walking_iso", "terminal", "z2", "discrete3", "indiscrete3", "T0", "T1", "T4"] {
            assert!(category(name).unwrap().is_valid(), "{name}");
        }
        for name in ["sierpinski", "one_point", "discrete3", "indiscrete3", "indiscrete0"] {
            assert!(space(name).unwrap().is_valid(), "{name}");
        }
        for name in ["chain_msl1", "chain_msl4", "boolean_msl3", "m3", "n5"] {
            assert!(msl(name).unwrap().is_valid(), "{name}");
        }
        assert!(psg("walking_iso").unwrap().is_valid());
    }
}
