use super::canon::Canonize;
use crate::fincat::{FinCategory, Mor, Morphism, Ob};
use crate::locales::{full_mask, FinSpace, MeetSemilattice};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Samples drawn per generator when a suite goes past the exhaustive bounds.
pub const RANDOM_SAMPLE_COUNT: usize = 200;

/// The generator behind every seeded stream.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// The structure under a uniformly random relabeling of its flat carrier
/// that keeps each colour class in place.
pub fn random_relabel<S: Canonize>(s: &S, rng: &mut impl Rng) -> S {
    let flat = s.flatten();
    let mut perm: Vec<usize> = (0..flat.n).collect();
    let mut start = 0;
    while start < flat.n {
        let end = (start..flat.n).find(|&i| flat.colors[i] != flat.colors[start]).unwrap_or(flat.n);
        perm[start..end].shuffle(rng);
        start = end;
    }
    s.relabel_flat(&perm)
}

/// The topology generated by `generators` random subsets of `0..n`.
pub fn random_topology(n: usize, generators: usize, rng: &mut impl Rng) -> Result<FinSpace> {
    if n > 16 {
        return Err(Error::Capacity(format!("random topology on {n} points")));
    }
    let full = full_mask(n);
    let mut opens = vec![0, full];
    for _ in 0..generators {
        opens.push(rng.random::<u64>() & full);
    }
    loop {
        let mut grown = opens.clone();
        for &a in &opens {
            for &b in &opens {
                for c in [a | b, a & b] {
                    if !grown.contains(&c) {
                        grown.push(c);
                    }
                }
            }
        }
        if grown.len() == opens.len() {
            break;
        }
        opens = grown;
    }
    opens.sort_by_key(|&u| (u.count_ones(), u));
    opens.dedup();
    FinSpace::new((0..n).map(|i| i.to_string()).collect(), opens)
}

/// The subsets of `0..m` that are intersections of `generators` random
/// subsets, ordered by inclusion. Closure systems need not be distributive.
pub fn random_closure_msl(m: usize, generators: usize, rng: &mut impl Rng) -> Result<MeetSemilattice> {
    if m > 16 {
        return Err(Error::Capacity(format!("closure system on {m} points")));
    }
    let full = full_mask(m);
    let mut sets = vec![full];
    for _ in 0..generators {
        let g = rng.random::<u64>() & full;
        let new: Vec<u64> = sets.iter().map(|&s| s & g).chain([g]).collect();
        for s in new {
            if !sets.contains(&s) {
                sets.push(s);
            }
        }
    }
    if sets.len() > 64 {
        return Err(Error::Capacity(format!("closure system with {} sets", sets.len())));
    }
    sets.sort_by_key(|&u| (u.count_ones(), u));
    let names = sets
        .iter()
        .map(|&s| {
            let inside: Vec<String> = (0..m).filter(|i| s >> i & 1 == 1).map(|i| i.to_string()).collect();
            format!("{{{}}}", inside.join(","))
        })
        .collect();
    let top = sets.len() - 1;
    MeetSemilattice::from_fn(names, |a, b| sets[a] & !sets[b] == 0, top)
}

/// The monoid of functions on `0..m` generated by `generators` random
/// functions, as a one-object category. Elements are listed in the order a
/// breadth-first closure from the identity finds them.
pub fn random_transformation_monoid(m: usize, generators: usize, rng: &mut impl Rng) -> Result<FinCategory> {
    if m == 0 || m > 9 {
        return Err(Error::Invalid(format!("degree {m} is outside 1..=9")));
    }
    let gens: Vec<Vec<u8>> = (0..generators)
        .map(|_| (0..m).map(|_| rng.random_range(0..m as u8)).collect())
        .collect();
    let mut elems: Vec<Vec<u8>> = vec![(0..m as u8).collect()];
    let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut next = 0;
    while next < elems.len() {
        for g in &gens {
            let h: Vec<u8> = elems[next].iter().map(|&i| g[i as usize]).collect();
            if !index.contains_key(&h) {
                index.insert(h.clone(), elems.len());
                elems.push(h);
            }
        }
        next += 1;
    }
    let n = elems.len();
    let morphisms = elems
        .iter()
        .map(|f| Morphism {
            name: f.iter().map(|&i| char::from(b'0' + i)).collect(),
            dom: Ob(0),
            cod: Ob(0),
        })
        .collect();
    let mut table = vec![None; n * n];
    for g in 0..n {
        for f in 0..n {
            let gf: Vec<u8> = elems[f].iter().map(|&i| elems[g][i as usize]).collect();
            table[g * n + f] = Some(Mor(index[&gf]));
        }
    }
    FinCategory::from_parts(vec!["*".into()], morphisms, vec![Mor(0)], table)
}
