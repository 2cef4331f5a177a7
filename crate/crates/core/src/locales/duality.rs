use super::{full_mask, members, ContinuousMap, FinSpace, MeetSemilattice, MslHom};
use crate::{Error, Result};

/// Which subsets of a meet-semilattice count as points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PointVariant {
    /// `⊤ ∉ P`, `P` downward closed, and `a∧c ∈ P` forces `a ∈ P` or `c ∈ P`.
    Literal,
    /// A literal point that also holds the bottom element and is closed
    /// under binary joins, so a prime ideal.
    #[default]
    Strict,
}

impl std::str::FromStr for PointVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(PointVariant::Literal),
            "strict" => Ok(PointVariant::Strict),
            _ => Err(Error::Invalid(format!("unknown point variant `{s}`"))),
        }
    }
}

fn require_space(x: &FinSpace) -> Result<()> {
    match x.validate().first() {
        Some(v) => Err(Error::Invalid(v.describe(x))),
        None => Ok(()),
    }
}

fn require_msl(a: &MeetSemilattice) -> Result<()> {
    match a.validate().first() {
        Some(v) => Err(Error::Invalid(v.describe(a))),
        None => Ok(()),
    }
}

/// The opens of `x` ordered by inclusion, in the order `x` lists them.
pub fn opens(x: &FinSpace) -> Result<MeetSemilattice> {
    require_space(x)?;
    let us = x.opens();
    let names = us.iter().map(|&u| x.subset_name(u)).collect();
    let top = x.open_index(x.full()).expect("validated");
    MeetSemilattice::from_fn(names, |a, b| us[a] & !us[b] == 0, top)
}

/// The points of a meet-semilattice with the topology generated by the
/// basic opens `ǎ = {P | a ∉ P}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSpace {
    pub space: FinSpace,
    /// Each point as a bitmask over the elements.
    pub points: Vec<u64>,
    /// `ǎ` for each element, as a bitmask over the points.
    pub basic: Vec<u64>,
}

fn satisfies(a: &MeetSemilattice, p: u64, variant: PointVariant) -> bool {
    let n = a.len();
    let has = |x: usize| p >> x & 1 == 1;
    if has(a.top()) {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            if has(y) && a.leq(x, y) && !has(x) {
                return false;
            }
            let m = a.meet(x, y).expect("validated");
            if has(m) && !has(x) && !has(y) {
                return false;
            }
        }
    }
    if variant == PointVariant::Literal {
        return true;
    }
    if !a.bottom().is_some_and(has) {
        return false;
    }
    members(p).all(|x| members(p).all(|y| a.join(x, y).is_some_and(has)))
}

/// Every literal point is the complement of a principal filter, so the
/// candidates are `A ∖ ↑u`; each is then tested against the definition.
pub fn points(a: &MeetSemilattice, variant: PointVariant) -> Result<PointSpace> {
    require_msl(a)?;
    let full = full_mask(a.len());
    let pts: Vec<u64> = (0..a.len())
        .map(|u| full & !a.up(u))
        .filter(|&p| satisfies(a, p, variant))
        .collect();
    let basic: Vec<u64> = (0..a.len())
        .map(|x| {
            pts.iter()
                .enumerate()
                .filter(|&(_, &p)| p >> x & 1 == 0)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut opens = vec![0u64];
    for &b in &basic {
        let grown: Vec<u64> = opens.iter().map(|&u| u | b).collect();
        for u in grown {
            if !opens.contains(&u) {
                opens.push(u);
            }
        }
    }
    opens.sort_by_key(|&u| (u.count_ones(), u));
    let names = pts
        .iter()
        .map(|&p| {
            let inside: Vec<&str> = members(p).map(|x| a.name(x)).collect();
            format!("{{{}}}", inside.join(","))
        })
        .collect();
    Ok(PointSpace {
        space: FinSpace::new(names, opens)?,
        points: pts,
        basic,
    })
}

/// `x ↦ x̂ = {U | x ∉ U}` into the points of the opens of `x`.
pub fn unit_space(x: &FinSpace, variant: PointVariant) -> Result<ContinuousMap> {
    let a = opens(x)?;
    let ps = points(&a, variant)?;
    let map = (0..x.len())
        .map(|p| {
            let hat = x
                .opens()
                .iter()
                .enumerate()
                .filter(|&(_, &u)| u >> p & 1 == 0)
                .fold(0u64, |m, (i, _)| m | 1 << i);
            ps.points
                .iter()
                .position(|&q| q == hat)
                .ok_or_else(|| Error::Precondition(format!("the neighbourhood filter of {} is not a point", x.point_names()[p])))
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(x.clone(), ps.space, map)
}

/// `a ↦ ǎ` into the opens of the points of `a`.
pub fn counit_msl(a: &MeetSemilattice, variant: PointVariant) -> Result<MslHom> {
    let ps = points(a, variant)?;
    let target = opens(&ps.space)?;
    let map = ps
        .basic
        .iter()
        .map(|&b| ps.space.open_index(b).expect("basic opens are open"))
        .collect();
    MslHom::new(a.clone(), target, map)
}

/// The unit is a homeomorphism.
pub fn is_sober(x: &FinSpace, variant: PointVariant) -> Result<bool> {
    Ok(unit_space(x, variant)?.is_homeomorphism())
}

/// The counit is an order isomorphism.
pub fn is_spatial(a: &MeetSemilattice, variant: PointVariant) -> Result<bool> {
    let eps = counit_msl(a, variant)?;
    Ok(eps.is_valid() && eps.is_order_isomorphism())
}

/// The points of the opens of `x`.
pub fn soberify(x: &FinSpace, variant: PointVariant) -> Result<FinSpace> {
    Ok(points(&opens(x)?, variant)?.space)
}

/// The opens of the points of `a`.
pub fn spatialize(a: &MeetSemilattice, variant: PointVariant) -> Result<MeetSemilattice> {
    opens(&points(a, variant)?.space)
}

/// Three elements on which `∧` fails to distribute over `∨`, or on which a
/// join is missing.
pub fn distributivity_witness(a: &MeetSemilattice) -> Option<(usize, usize, usize)> {
    let n = a.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = a.join(y, z).and_then(|j| a.meet(x, j));
                let rhs = match (a.meet(x, y), a.meet(x, z)) {
                    (Some(p), Some(q)) => a.join(p, q),
                    _ => None,
                };
                if lhs.is_none() || lhs != rhs {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// A distributive lattice; for finite orders this is the same as a frame.
pub fn is_frame(a: &MeetSemilattice) -> bool {
    a.is_valid() && a.bottom().is_some() && distributivity_witness(a).is_none()
}

/// Identifies points lying in exactly the same opens. Returns the quotient
/// and the class of each point; classes are named after their least member.
pub fn kolmogorov_quotient(x: &FinSpace) -> (FinSpace, Vec<usize>) {
    let mut reps: Vec<usize> = Vec::new();
    let class: Vec<usize> = (0..x.len())
        .map(|p| {
            let nb = x.neighbourhood(p);
            reps.iter().position(|&r| x.neighbourhood(r) == nb).unwrap_or_else(|| {
                reps.push(p);
                reps.len() - 1
            })
        })
        .collect();
    let names = reps.iter().map(|&r| x.point_names()[r].clone()).collect();
    let opens = x
        .opens()
        .iter()
        .map(|&u| members(u).fold(0u64, |m, p| m | 1 << class[p]))
        .collect();
    (FinSpace::new(names, opens).expect("no more points than before"), class)
}

/// Continuous maps into Sierpiński space, with the open `u*{1}` each one
/// picks out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SierpinskiMaps {
    pub maps: Vec<Vec<usize>>,
    pub preimages: Vec<u64>,
    /// `u ↦ u*{1}` is a bijection onto the opens.
    pub bijective: bool,
}

/// The space `{0, 1}` whose opens are `∅`, `{1}` and `{0, 1}`.
pub fn sierpinski() -> FinSpace {
    FinSpace::new(vec!["0".into(), "1".into()], vec![0b00, 0b10, 0b11]).expect("two points")
}

const SIERPINSKI_POINT_BOUND: usize = 20;

/// Tries all `2ⁿ` maps from the points of `x` to Sierpiński space.
pub fn sierpinski_maps(x: &FinSpace) -> Result<SierpinskiMaps> {
    require_space(x)?;
    let n = x.len();
    if n > SIERPINSKI_POINT_BOUND {
        return Err(Error::BoundExceeded {
            what: "maps into Sierpiński space".into(),
            size: 1u128 << n.min(127),
            bound: 1u128 << SIERPINSKI_POINT_BOUND,
        });
    }
    let s = sierpinski();
    let mut maps = Vec::new();
    let mut preimages = Vec::new();
    for bits in 0..1u64 << n {
        let map: Vec<usize> = (0..n).map(|p| (bits >> p & 1) as usize).collect();
        let f = ContinuousMap::new(x.clone(), s.clone(), map)?;
        if f.is_continuous() {
            preimages.push(f.preimage(0b10));
            maps.push(f.map);
        }
    }
    let mut sorted = preimages.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = sorted.len() == preimages.len()
        && preimages.len() == x.opens().len()
        && preimages.iter().all(|&u| x.is_open(u));
    Ok(SierpinskiMaps {
        maps,
        preimages,
        bijective,
    })
}

const PERMUTATION_BOUND: usize = 8;

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn go(perm: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if perm.len() == used.len() {
            return visit(perm);
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                perm.push(k);
                if go(perm, used, visit) {
                    return true;
                }
                perm.pop();
                used[k] = false;
            }
        }
        false
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut visit)
}

fn permutation_bound(what: &str, n: usize) -> Result<()> {
    if n > PERMUTATION_BOUND {
        return Err(Error::BoundExceeded {
            what: what.into(),
            size: (1..=n as u128).product(),
            bound: (1..=PERMUTATION_BOUND as u128).product(),
        });
    }
    Ok(())
}

/// A homeomorphism `x → y` found by trying every bijection.
pub fn find_homeomorphism(x: &FinSpace, y: &FinSpace) -> Result<Option<Vec<usize>>> {
    if x.len() != y.len() || x.opens().len() != y.opens().len() {
        return Ok(None);
    }
    permutation_bound("point bijections", x.len())?;
    let mut found = None;
    for_each_permutation(x.len(), |perm| {
        let f = ContinuousMap::new(x.clone(), y.clone(), perm.to_vec()).expect("bijection");
        if f.is_homeomorphism() {
            found = Some(perm.to_vec());
        }
        found.is_some()
    });
    Ok(found)
}

/// An order isomorphism `a → b` found by trying every bijection.
pub fn find_order_isomorphism(a: &MeetSemilattice, b: &MeetSemilattice) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    permutation_bound("element bijections", a.len())?;
    let mut found = None;
    for_each_permutation(a.len(), |perm| {
        let n = a.len();
        if (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == b.leq(perm[x], perm[y]))) {
            found = Some(perm.to_vec());
        }
        found.is_some()
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> MeetSemilattice {
        MeetSemilattice::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b, n - 1).unwrap()
    }

    fn boolean2() -> MeetSemilattice {
        let names = ["0", "a", "b", "1"].map(String::from).to_vec();
        MeetSemilattice::from_fn(names, |x, y| x & !y == 0, 3).unwrap()
    }

    fn m3() -> MeetSemilattice {
        MeetSemilattice::from_pairs(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            "1",
        )
        .unwrap()
    }

    fn discrete(n: usize) -> FinSpace {
        FinSpace::new((0..n).map(|i| i.to_string()).collect(), (0..1u64 << n).collect()).unwrap()
    }

    fn indiscrete(n: usize) -> FinSpace {
        FinSpace::new((0..n).map(|i| i.to_string()).collect(), vec![0, full_mask(n)]).unwrap()
    }

    #[test]
    fn opens_of_discrete_two_is_boolean() {
        let a = opens(&discrete(2)).unwrap();
        assert_eq!(find_order_isomorphism(&a, &boolean2()).unwrap().map(|_| ()), Some(()));
    }

    #[test]
    fn literal_points_of_two_chain() {
        let ps = points(&chain(2), PointVariant::Literal).unwrap();
        assert_eq!(ps.points, vec![0b00, 0b01]);
        assert_eq!(ps.space.point_names(), ["{}", "{0}"]);
        assert!(find_homeomorphism(&ps.space, &sierpinski()).unwrap().is_some());
        assert_eq!(points(&chain(2), PointVariant::Strict).unwrap().points, vec![0b01]);
    }

    #[test]
    fn trivial_lattice_has_no_strict_points() {
        assert_eq!(points(&chain(1), PointVariant::Strict).unwrap().points.len(), 0);
        assert_eq!(points(&chain(1), PointVariant::Literal).unwrap().points, vec![0]);
    }

    #[test]
    fn sierpinski_unit() {
        let s = sierpinski();
        let eta = unit_space(&s, PointVariant::Strict).unwrap();
        assert!(eta.is_homeomorphism());
        let targets = &eta.target.point_names();
        assert_eq!(targets[eta.map[0]], "{{},{1}}");
        assert_eq!(targets[eta.map[1]], "{{}}");
        assert!(!is_sober(&s, PointVariant::Literal).unwrap());
    }

    #[test]
    fn sobriety_of_small_spaces() {
        assert!(is_sober(&discrete(2), PointVariant::Strict).unwrap());
        assert!(!is_sober(&indiscrete(2), PointVariant::Strict).unwrap());
        assert!(is_sober(&indiscrete(1), PointVariant::Strict).unwrap());
    }

    #[test]
    fn spatiality() {
        assert!(is_spatial(&boolean2(), PointVariant::Strict).unwrap());
        assert!(!is_spatial(&m3(), PointVariant::Strict).unwrap());
        assert!(is_spatial(&chain(3), PointVariant::Strict).unwrap());
        assert!(!is_spatial(&chain(3), PointVariant::Literal).unwrap());
    }

    #[test]
    fn frames() {
        assert!(!is_frame(&m3()));
        assert!(is_frame(&boolean2()));
        assert!(is_frame(&chain(4)));
    }

    #[test]
    fn kolmogorov_collapses_indiscrete() {
        let (q, class) = kolmogorov_quotient(&indiscrete(3));
        assert_eq!(q.len(), 1);
        assert_eq!(class, vec![0, 0, 0]);
        assert!(q.is_valid());
        let s = soberify(&indiscrete(3), PointVariant::Strict).unwrap();
        assert!(find_homeomorphism(&s, &q).unwrap().is_some());
    }

    #[test]
    fn sierpinski_classifies_opens() {
        for x in [sierpinski(), discrete(3), indiscrete(2)] {
            let r = sierpinski_maps(&x).unwrap();
            assert!(r.bijective);
            assert_eq!(r.maps.len(), x.opens().len());
        }
    }

    #[test]
    fn variant_parses() {
        assert_eq!("literal".parse::<PointVariant>().unwrap(), PointVariant::Literal);
        assert!("loose".parse::<PointVariant>().is_err());
    }
}
