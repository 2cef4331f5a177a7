//! Exhaustive and seeded random generators of small structures, canonical
//! forms, and named fixtures.
//!
//! Exhaustive generators are deterministic: each walks its candidate tables
//! in a fixed order and yields the valid ones. Pass the result through
//! [`dedup`] to keep one representative per isomorphism class.
//!
//! Exhaustive bounds are partial semigroups on at most 3 elements,
//! topologies on at most 4 points, meet-semilattices with at most 5
//! elements, monoids of order at most 4 and categories with at most 4
//! morphisms. Past those bounds the random generators take over; suites
//! draw [`RANDOM_SAMPLE_COUNT`] samples from each.

pub mod canon;
pub mod fixtures;
mod random;

pub use canon::{canonical_labeling, isomorphic, CanonicalForm, Canonize, Flat};
pub use random::{
    random_closure_msl, random_permutation, random_relabel, random_topology, random_transformation_monoid, rng,
    RANDOM_SAMPLE_COUNT,
};

use crate::fincat::{FinCategory, Mor, Morphism, Ob};
use crate::locales::{full_mask, FinSpace, MeetSemilattice};
use crate::psemi::{assoc_violations, PartialSemigroup};
use crate::{Error, Result};
use std::collections::HashSet;

pub const MAX_PSG_SIZE: usize = 3;
pub const MAX_TOPOLOGY_POINTS: usize = 4;
pub const MAX_MSL_SIZE: usize = 5;
pub const MAX_MONOID_ORDER: usize = 4;
pub const MAX_CATEGORY_MORPHISMS: usize = 4;

fn bound(what: &str, size: usize, max: usize) -> Result<()> {
    if size > max {
        return Err(Error::BoundExceeded {
            what: what.into(),
            size: size as u128,
            bound: max as u128,
        });
    }
    Ok(())
}

/// Element names `a`, `b`, `c`, …
pub fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i < 26 { char::from(b'a' + i as u8).to_string() } else { format!("x{i}") })
        .collect()
}

/// Keeps the first structure of each isomorphism class.
pub fn dedup<S: Canonize>(items: impl IntoIterator<Item = S>) -> impl Iterator<Item = S> {
    let mut seen = HashSet::new();
    items.into_iter().filter(move |s| seen.insert(s.canonical_form()))
}

/// Every partial table on `n` elements, valid or not, as `(n+1)^(n²)`
/// codes: digit `0` is undefined, digit `d` is element `d - 1`, and entry
/// `(0, 0)` is the most significant digit.
pub fn psg_tables(n: usize) -> Result<impl Iterator<Item = Vec<Option<usize>>>> {
    bound("partial semigroup size", n, MAX_PSG_SIZE)?;
    let cells = n * n;
    let total = (n as u64 + 1).pow(cells as u32);
    Ok((0..total).map(move |code| {
        let mut table = vec![None; cells];
        let mut rest = code;
        for slot in table.iter_mut().rev() {
            let d = (rest % (n as u64 + 1)) as usize;
            rest /= n as u64 + 1;
            *slot = d.checked_sub(1);
        }
        table
    }))
}

/// Valid partial semigroups on `n ≤ 3` elements named `a, b, c`.
pub fn enum_psgs(n: usize) -> Result<impl Iterator<Item = PartialSemigroup>> {
    let names = letters(n);
    Ok(psg_tables(n)?
        .filter(move |t| assoc_violations(n, t, true).is_empty())
        .map(move |t| PartialSemigroup::new(names.clone(), t).expect("in range")))
}

fn closed(family: &[u64]) -> bool {
    family
        .iter()
        .all(|&a| family.iter().all(|&b| family.contains(&(a | b)) && family.contains(&(a & b))))
}

/// Topologies on points `0..n`, `n ≤ 4`, opens listed by size then mask.
pub fn enum_topologies(n: usize) -> Result<impl Iterator<Item = FinSpace>> {
    bound("topology points", n, MAX_TOPOLOGY_POINTS)?;
    let subsets = 1u64 << n;
    let full = full_mask(n);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Ok((0..1u64 << subsets).filter_map(move |family| {
        if family & 1 == 0 || family >> full & 1 == 0 {
            return None;
        }
        let mut opens: Vec<u64> = (0..subsets).filter(|u| family >> u & 1 == 1).collect();
        if !closed(&opens) {
            return None;
        }
        opens.sort_by_key(|&u| (u.count_ones(), u));
        Some(FinSpace::new(names.clone(), opens).expect("few points"))
    }))
}

/// Partial orders on `0..n`, `1 ≤ n ≤ 5`, with a top and all binary meets.
/// Each unordered pair is below, above or incomparable, giving
/// `3^(n(n-1)/2)` candidates.
pub fn enum_msls(n: usize) -> Result<impl Iterator<Item = MeetSemilattice>> {
    bound("meet-semilattice size", n, MAX_MSL_SIZE)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Ok((0..if n == 0 { 0 } else { total }).filter_map(move |code| {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        let mut rest = code;
        for &(i, j) in &pairs {
            match rest % 3 {
                1 => leq[i * n + j] = true,
                2 => leq[j * n + i] = true,
                _ => {}
            }
            rest /= 3;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
        });
        if !transitive {
            return None;
        }
        let top = (0..n).find(|&t| (0..n).all(|a| leq[a * n + t]))?;
        let m = MeetSemilattice::new(names.clone(), leq, top).expect("sizes agree");
        m.is_valid().then_some(m)
    }))
}

/// Monoids of order `1 ≤ n ≤ 4` with the identity at position 0, named
/// `1, a, b, c`. Every monoid is isomorphic to one of these.
pub fn enum_monoids(n: usize) -> Result<impl Iterator<Item = PartialSemigroup>> {
    bound("monoid order", n, MAX_MONOID_ORDER)?;
    let free = (n.saturating_sub(1)).pow(2);
    let total = if n == 0 { 0 } else { (n as u64).pow(free as u32) };
    let mut names = vec!["1".to_string()];
    names.extend(letters(n.saturating_sub(1)));
    Ok((0..total).filter_map(move |code| {
        let mut table = vec![None; n * n];
        for a in 0..n {
            table[a] = Some(a);
            table[a * n] = Some(a);
        }
        let mut rest = code;
        for a in (1..n).rev() {
            for b in (1..n).rev() {
                table[a * n + b] = Some((rest % n as u64) as usize);
                rest /= n as u64;
            }
        }
        assoc_violations(n, &table, true)
            .is_empty()
            .then(|| PartialSemigroup::new(names.clone(), table).expect("in range"))
    }))
}

/// A monoid as a one-object category whose morphisms are its elements.
pub fn monoid_category(s: &PartialSemigroup) -> Result<FinCategory> {
    let ids = s.identities();
    let [id] = ids.as_slice() else {
        return Err(Error::Invalid("not a monoid".into()));
    };
    if s.table().iter().any(Option::is_none) {
        return Err(Error::Invalid("not a monoid".into()));
    }
    let morphisms = s
        .names()
        .iter()
        .map(|name| Morphism {
            name: name.clone(),
            dom: Ob(0),
            cod: Ob(0),
        })
        .collect();
    let table = s.table().iter().map(|c| c.map(Mor)).collect();
    FinCategory::from_parts(vec!["*".into()], morphisms, vec![Mor(*id)], table)
}

/// Shape of the non-identity morphisms: `counts[x * k + y]` arrows `x → y`.
fn hom_shapes(k: usize, extra: usize) -> Vec<Vec<usize>> {
    let cells = k * k;
    let mut out = Vec::new();
    let mut counts = vec![0usize; cells];
    loop {
        if counts.iter().sum::<usize>() <= extra {
            out.push(counts.clone());
        }
        let mut i = 0;
        loop {
            if i == cells {
                return out;
            }
            counts[i] += 1;
            if counts[i] <= extra {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

fn categories_of_shape(k: usize, counts: &[usize], out: &mut Vec<FinCategory>) {
    let objects: Vec<String> = (0..k).map(|i| ((b'A' + i as u8) as char).to_string()).collect();
    let mut morphisms: Vec<Morphism> = (0..k)
        .map(|x| Morphism {
            name: format!("id_{}", objects[x]),
            dom: Ob(x),
            cod: Ob(x),
        })
        .collect();
    for x in 0..k {
        for y in 0..k {
            for _ in 0..counts[x * k + y] {
                let name = format!("f{}", morphisms.len() - k);
                morphisms.push(Morphism { name, dom: Ob(x), cod: Ob(y) });
            }
        }
    }
    let m = morphisms.len();
    let mut hom: Vec<Vec<usize>> = vec![Vec::new(); k * k];
    for (i, f) in morphisms.iter().enumerate() {
        hom[f.dom.0 * k + f.cod.0].push(i);
    }
    let mut slots = Vec::new();
    for g in k..m {
        for f in k..m {
            if morphisms[g].dom == morphisms[f].cod {
                let choices = &hom[morphisms[f].dom.0 * k + morphisms[g].cod.0];
                if choices.is_empty() {
                    return;
                }
                slots.push((g, f, choices.clone()));
            }
        }
    }
    let mut base = vec![None; m * m];
    for (i, f) in morphisms.iter().enumerate() {
        base[f.cod.0 * m + i] = Some(Mor(i));
        base[i * m + f.dom.0] = Some(Mor(i));
    }
    let identities: Vec<Mor> = (0..k).map(Mor).collect();
    let mut digits = vec![0usize; slots.len()];
    loop {
        let mut table = base.clone();
        for (&(g, f, ref choices), &d) in slots.iter().zip(&digits) {
            table[g * m + f] = Some(Mor(choices[d]));
        }
        let c = FinCategory::from_parts(objects.clone(), morphisms.clone(), identities.clone(), table)
            .expect("indices in range");
        if c.is_valid() {
            out.push(c);
        }
        let mut i = 0;
        loop {
            if i == slots.len() {
                return;
            }
            digits[i] += 1;
            if digits[i] < slots[i].2.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Categories with at most `max_objects` objects and at most
/// `max_morphisms ≤ 4` morphisms, identities included. Objects are named
/// `A, B, …`, identities come first and the other morphisms `f0, f1, …`
/// follow grouped by domain and codomain.
pub fn enum_categories(max_objects: usize, max_morphisms: usize) -> Result<Vec<FinCategory>> {
    bound("category morphisms", max_morphisms, MAX_CATEGORY_MORPHISMS)?;
    let mut out = Vec::new();
    for k in 0..=max_objects.min(max_morphisms) {
        for counts in hom_shapes(k, max_morphisms - k) {
            categories_of_shape(k, &counts, &mut out);
        }
    }
    Ok(out)
}
