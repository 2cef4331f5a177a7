//! Finite spaces and finite meet-semilattices.
//!
//! Subsets of a carrier are `u64` bitmasks, so carriers hold at most 64
//! members. A finite meet-semilattice with a top element is automatically a
//! complete lattice; joins are computed from the order when needed.

mod duality;

pub use duality::{
    counit_msl, find_homeomorphism, find_order_isomorphism, is_frame, is_sober, is_spatial, kolmogorov_quotient,
    opens, points, sierpinski, sierpinski_maps, soberify, spatialize, unit_space, distributivity_witness, PointSpace,
    PointVariant, SierpinskiMaps,
};

use crate::{Error, Result};
use std::fmt;

pub fn check_capacity(what: &str, n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::Capacity(format!("{what} of size {n}")));
    }
    Ok(())
}

/// The bitmask of the first `n` positions.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Positions set in a bitmask, in increasing order.
pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// A finite set of points with a family of open subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSpace {
    points: Vec<String>,
    opens: Vec<u64>,
}

/// A failed closure condition on a family of opens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceViolation {
    MissingEmpty,
    MissingFull,
    OutOfRange { open: u64 },
    Duplicate { open: u64 },
    MissingUnion { a: u64, b: u64 },
    MissingIntersection { a: u64, b: u64 },
}

impl SpaceViolation {
    pub fn describe(&self, x: &FinSpace) -> String {
        let s = |m: &u64| x.subset_name(*m);
        match self {
            Self::MissingEmpty => "the empty set is not open".into(),
            Self::MissingFull => "the whole space is not open".into(),
            Self::OutOfRange { open } => format!("open {open:#b} mentions points outside the space"),
            Self::Duplicate { open } => format!("open {} is listed twice", s(open)),
            Self::MissingUnion { a, b } => format!("union {} of {} and {} is not open", s(&(a | b)), s(a), s(b)),
            Self::MissingIntersection { a, b } => {
                format!("intersection {} of {} and {} is not open", s(&(a & b)), s(a), s(b))
            }
        }
    }
}

impl FinSpace {
    /// Range and capacity are checked; the closure conditions are left to
    /// [`FinSpace::validate`].
    pub fn new(points: Vec<String>, opens: Vec<u64>) -> Result<Self> {
        check_capacity("space", points.len())?;
        Ok(FinSpace { points, opens })
    }

    pub fn from_sets(points: &[&str], opens: &[&[&str]]) -> Result<Self> {
        let idx = |s: &str| {
            points
                .iter()
                .position(|p| *p == s)
                .ok_or_else(|| Error::Invalid(format!("unknown point `{s}`")))
        };
        let masks = opens
            .iter()
            .map(|u| u.iter().try_fold(0u64, |m, p| Ok::<_, Error>(m | 1 << idx(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points.iter().map(|p| p.to_string()).collect(), masks)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_names(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn full(&self) -> u64 {
        full_mask(self.len())
    }

    pub fn is_open(&self, u: u64) -> bool {
        self.opens.contains(&u)
    }

    pub fn open_index(&self, u: u64) -> Option<usize> {
        self.opens.iter().position(|&v| v == u)
    }

    /// `{a,b}` with point names.
    pub fn subset_name(&self, u: u64) -> String {
        let names: Vec<&str> = members(u)
            .filter(|&i| i < self.len())
            .map(|i| self.points[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn validate(&self) -> Vec<SpaceViolation> {
        let mut out = Vec::new();
        let full = self.full();
        if !self.is_open(0) {
            out.push(SpaceViolation::MissingEmpty);
        }
        if !self.is_open(full) {
            out.push(SpaceViolation::MissingFull);
        }
        for (i, &u) in self.opens.iter().enumerate() {
            if u & !full != 0 {
                out.push(SpaceViolation::OutOfRange { open: u });
            }
            if self.opens[..i].contains(&u) {
                out.push(SpaceViolation::Duplicate { open: u });
            }
        }
        for (i, &a) in self.opens.iter().enumerate() {
            for &b in &self.opens[i + 1..] {
                if !self.is_open(a | b) {
                    out.push(SpaceViolation::MissingUnion { a, b });
                }
                if !self.is_open(a & b) {
                    out.push(SpaceViolation::MissingIntersection { a, b });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The least open containing point `x`.
    pub fn neighbourhood(&self, x: usize) -> u64 {
        self.opens
            .iter()
            .filter(|&&u| u >> x & 1 == 1)
            .fold(self.full(), |acc, &u| acc & u)
    }

    /// Points that no open separates from each other are equal.
    pub fn is_t0(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.opens.iter().any(|&u| (u >> x & 1) != (u >> y & 1))))
    }

    /// Opens sorted by size, then by mask.
    pub fn sorted(&self) -> Self {
        let mut opens = self.opens.clone();
        opens.sort_by_key(|&u| (u.count_ones(), u));
        FinSpace {
            points: self.points.clone(),
            opens,
        }
    }

    /// Same space with points permuted: point `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut points = vec![String::new(); self.len()];
        for (x, &p) in perm.iter().enumerate() {
            points[p] = self.points[x].clone();
        }
        let opens = self.opens.iter().map(|&u| members(u).fold(0, |m, x| m | 1 << perm[x])).collect();
        FinSpace { points, opens }
    }
}

impl fmt::Display for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points: {}", self.points.join(" "))?;
        let opens: Vec<String> = self.opens.iter().map(|&u| self.subset_name(u)).collect();
        writeln!(f, "opens: {}", opens.join(" "))
    }
}

/// A finite partial order with all binary meets and a top element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSemilattice {
    elements: Vec<String>,
    leq: Vec<bool>,
    top: usize,
    meets: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MslViolation {
    Empty,
    NotReflexive { a: usize },
    NotAntisymmetric { a: usize, b: usize },
    NotTransitive { a: usize, b: usize, c: usize },
    NoMeet { a: usize, b: usize },
    TopNotMaximum { a: usize },
}

impl MslViolation {
    pub fn describe(&self, m: &MeetSemilattice) -> String {
        let n = |x: &usize| m.name(*x).to_string();
        match self {
            Self::Empty => "no elements".into(),
            Self::NotReflexive { a } => format!("{} ≰ {}", n(a), n(a)),
            Self::NotAntisymmetric { a, b } => format!("{} ≤ {} ≤ {} but they differ", n(a), n(b), n(a)),
            Self::NotTransitive { a, b, c } => format!("{} ≤ {} ≤ {} but {} ≰ {}", n(a), n(b), n(c), n(a), n(c)),
            Self::NoMeet { a, b } => format!("{} and {} have no meet", n(a), n(b)),
            Self::TopNotMaximum { a } => format!("{} is not below the top", n(a)),
        }
    }
}

fn glb(n: usize, leq: &[bool], a: usize, b: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..n).filter(|&c| leq[c * n + a] && leq[c * n + b]).collect();
    lower
        .iter()
        .copied()
        .find(|&c| lower.iter().all(|&d| leq[d * n + c]))
}

impl MeetSemilattice {
    /// `leq[a * n + b]` holds `a ≤ b`. Only sizes are checked here.
    pub fn new(elements: Vec<String>, leq: Vec<bool>, top: usize) -> Result<Self> {
        let n = elements.len();
        check_capacity("meet-semilattice", n)?;
        if leq.len() != n * n || (n > 0 && top >= n) {
            return Err(Error::Invalid("order relation or top out of range".into()));
        }
        let meets = (0..n * n).map(|k| glb(n, &leq, k / n, k % n)).collect();
        Ok(MeetSemilattice {
            elements,
            leq,
            top,
            meets,
        })
    }

    pub fn from_fn(elements: Vec<String>, leq: impl Fn(usize, usize) -> bool, top: usize) -> Result<Self> {
        let n = elements.len();
        let rel = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        Self::new(elements, rel, top)
    }

    /// From named covering or order pairs `(a, b)` meaning `a ≤ b`; the
    /// reflexive and transitive closure is taken.
    pub fn from_pairs(elements: &[&str], pairs: &[(&str, &str)], top: &str) -> Result<Self> {
        let n = elements.len();
        let idx = |s: &str| {
            elements
                .iter()
                .position(|e| *e == s)
                .ok_or_else(|| Error::Invalid(format!("unknown element `{s}`")))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[idx(a)? * n + idx(b)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + k] && leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        Self::new(elements.iter().map(|s| s.to_string()).collect(), leq, idx(top)?)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn names(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meets[a * self.len() + b]
    }

    /// Least element, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|a| self.leq(b, a)))
    }

    /// Least upper bound, if any.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let upper: Vec<usize> = (0..n).filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.leq(c, d)))
    }

    /// `↑a` as a bitmask.
    pub fn up(&self, a: usize) -> u64 {
        (0..self.len()).filter(|&b| self.leq(a, b)).fold(0, |m, b| m | 1 << b)
    }

    pub fn validate(&self) -> Vec<MslViolation> {
        let n = self.len();
        if n == 0 {
            return vec![MslViolation::Empty];
        }
        let mut out = Vec::new();
        for a in 0..n {
            if !self.leq(a, a) {
                out.push(MslViolation::NotReflexive { a });
            }
            if !self.leq(a, self.top) {
                out.push(MslViolation::TopNotMaximum { a });
            }
            for b in 0..n {
                if a < b && self.leq(a, b) && self.leq(b, a) {
                    out.push(MslViolation::NotAntisymmetric { a, b });
                }
                if a <= b && self.meet(a, b).is_none() {
                    out.push(MslViolation::NoMeet { a, b });
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        out.push(MslViolation::NotTransitive { a, b, c });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Same order with elements permuted: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let elements = (0..n).map(|p| self.elements[inv[p]].clone()).collect();
        Self::from_fn(elements, |x, y| self.leq(inv[x], inv[y]), perm[self.top]).expect("same size")
    }
}

impl fmt::Display for MeetSemilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements: {}  top: {}", self.elements.join(" "), self.name(self.top))?;
        let n = self.len();
        for a in 0..n {
            let above: Vec<&str> = (0..n)
                .filter(|&b| b != a && self.leq(a, b))
                .map(|b| self.name(b))
                .collect();
            if !above.is_empty() {
                writeln!(f, "  {} ≤ {}", self.name(a), above.join(" "))?;
            }
        }
        Ok(())
    }
}

/// A map of points meant to pull opens back to opens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    pub source: FinSpace,
    pub target: FinSpace,
    pub map: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(source: FinSpace, target: FinSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::CarrierMismatch("point map does not match the spaces".into()));
        }
        Ok(ContinuousMap { source, target, map })
    }

    /// `g*V = {x | g x ∈ V}`.
    pub fn preimage(&self, v: u64) -> u64 {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &y)| v >> y & 1 == 1)
            .fold(0, |m, (x, _)| m | 1 << x)
    }

    pub fn image(&self, u: u64) -> u64 {
        members(u).fold(0, |m, x| m | 1 << self.map[x])
    }

    /// Opens of the target whose preimage is not open.
    pub fn validate(&self) -> Vec<u64> {
        self.target
            .opens()
            .iter()
            .copied()
            .filter(|&v| !self.source.is_open(self.preimage(v)))
            .collect()
    }

    pub fn is_continuous(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        self.map.len() == self.target.len() && self.map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    /// Continuous, bijective, and sends opens to opens.
    pub fn is_homeomorphism(&self) -> bool {
        self.is_continuous()
            && self.is_bijective()
            && self.source.opens().iter().all(|&u| self.target.is_open(self.image(u)))
    }
}

/// A map of elements meant to preserve binary meets and the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MslHom {
    pub source: MeetSemilattice,
    pub target: MeetSemilattice,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MslHomViolation {
    Top,
    Meet { a: usize, b: usize },
}

impl MslHom {
    pub fn new(source: MeetSemilattice, target: MeetSemilattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::CarrierMismatch("element map does not match the semilattices".into()));
        }
        Ok(MslHom { source, target, map })
    }

    pub fn validate(&self) -> Vec<MslHomViolation> {
        let (s, t) = (&self.source, &self.target);
        let mut out = Vec::new();
        if self.map[s.top()] != t.top() {
            out.push(MslHomViolation::Top);
        }
        for a in 0..s.len() {
            for b in a..s.len() {
                let lhs = s.meet(a, b).map(|m| self.map[m]);
                if lhs != t.meet(self.map[a], self.map[b]) {
                    out.push(MslHomViolation::Meet { a, b });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Bijective and reflecting the order.
    pub fn is_order_isomorphism(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        let mut hit = vec![false; t.len()];
        let bijective = s.len() == t.len() && self.map.iter().all(|&y| !std::mem::replace(&mut hit[y], true));
        bijective && (0..s.len()).all(|a| (0..s.len()).all(|b| s.leq(a, b) == t.leq(self.map[a], self.map[b])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_is_valid() {
        let s = FinSpace::from_sets(&["0", "1"], &[&[], &["1"], &["0", "1"]]).unwrap();
        assert!(s.is_valid());
        assert!(s.is_t0());
        assert_eq!(s.neighbourhood(0), 0b11);
        assert_eq!(s.neighbourhood(1), 0b10);
    }

    #[test]
    fn missing_union_is_named() {
        let s = FinSpace::from_sets(&["0", "1", "2"], &[&[], &["0"], &["1"], &["0", "1", "2"]]).unwrap();
        let v = s.validate();
        assert!(v.contains(&SpaceViolation::MissingUnion { a: 0b001, b: 0b010 }));
        assert_eq!(v[0].describe(&s), "union {0,1} of {0} and {1} is not open");
    }

    #[test]
    fn two_chain() {
        let m = MeetSemilattice::from_pairs(&["0", "1"], &[("0", "1")], "1").unwrap();
        assert!(m.is_valid());
        assert_eq!(m.top(), 1);
        assert_eq!(m.meet(0, 1), Some(0));
        assert_eq!(m.join(0, 1), Some(1));
        assert_eq!(m.bottom(), Some(0));
    }

    #[test]
    fn two_incomparable_tops_fail() {
        let m = MeetSemilattice::from_pairs(&["a", "b"], &[], "a").unwrap();
        let v = m.validate();
        assert!(v.contains(&MslViolation::NoMeet { a: 0, b: 1 }));
        assert!(v.contains(&MslViolation::TopNotMaximum { a: 1 }));
    }

    #[test]
    fn too_many_points() {
        let names: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(matches!(FinSpace::new(names, vec![]), Err(Error::Capacity(_))));
    }
}
