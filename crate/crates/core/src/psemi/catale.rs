use super::PartialSemigroup;
use crate::{Error, Result};

/// A failed instance of one of the three identity uniqueness facts.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IdentityLemmaViolation {
    /// Distinct identities `a, b` with `a⊛b↓`.
    Composable { a: usize, b: usize },
    /// Distinct identities with `a⊛f↓` and `b⊛f↓`.
    SharedCodomain { a: usize, b: usize, f: usize },
    /// Distinct identities with `f⊛a↓` and `f⊛b↓`.
    SharedDomain { a: usize, b: usize, f: usize },
}

/// Checks that identities are unique where they compose.
///
/// The first condition holds in every partial semigroup. The other two hold
/// in catales and in the partial semigroups of categories, but not in every
/// table that passes [`PartialSemigroup::validate`]: with identities `b, c`
/// and `b⊛f = c⊛f = f`, the bracketing `b⊛(c⊛f)` is defined while `b⊛c` is
/// not, and the three-element biconditional does not rule that out.
pub fn check_identity_lemma(s: &PartialSemigroup) -> Vec<IdentityLemmaViolation> {
    let ids = s.identities();
    let mut out = Vec::new();
    for &a in &ids {
        for &b in &ids {
            if a == b {
                continue;
            }
            if s.defined(a, b) {
                out.push(IdentityLemmaViolation::Composable { a, b });
            }
            for f in s.elements() {
                if s.defined(a, f) && s.defined(b, f) {
                    out.push(IdentityLemmaViolation::SharedCodomain { a, b, f });
                }
                if s.defined(f, a) && s.defined(f, b) {
                    out.push(IdentityLemmaViolation::SharedDomain { a, b, f });
                }
            }
        }
    }
    out
}

/// The identity `a` with `f⊛a = f`.
pub fn dom_of(s: &PartialSemigroup, f: usize) -> Result<usize> {
    s.elements()
        .find(|&a| s.is_identity(a) && s.product(f, a) == Some(f))
        .ok_or_else(|| Error::NoIdentity(s.name(f).to_string()))
}

/// The identity `b` with `b⊛f = f`.
pub fn cod_of(s: &PartialSemigroup, f: usize) -> Result<usize> {
    s.elements()
        .find(|&b| s.is_identity(b) && s.product(b, f) == Some(f))
        .ok_or_else(|| Error::NoIdentity(s.name(f).to_string()))
}

/// `a ≼ b ⟺ a⊛b = a` on the idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentOrder {
    pub idempotents: Vec<usize>,
    leq: Vec<bool>,
    pub maximal: Vec<usize>,
}

impl IdempotentOrder {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let n = self.idempotents.len();
        match (
            self.idempotents.iter().position(|&x| x == a),
            self.idempotents.iter().position(|&x| x == b),
        ) {
            (Some(i), Some(j)) => self.leq[i * n + j],
            _ => false,
        }
    }
}

pub fn idempotent_order_psg(s: &PartialSemigroup) -> IdempotentOrder {
    let idempotents = s.idempotents();
    let n = idempotents.len();
    let mut leq = vec![false; n * n];
    for (i, &a) in idempotents.iter().enumerate() {
        for (j, &b) in idempotents.iter().enumerate() {
            leq[i * n + j] = s.product(a, b) == Some(a);
        }
    }
    // Maximal in the preorder: everything above is also below.
    let maximal = (0..n)
        .filter(|&i| (0..n).all(|j| !leq[i * n + j] || leq[j * n + i]))
        .map(|i| idempotents[i])
        .collect();
    IdempotentOrder {
        idempotents,
        leq,
        maximal,
    }
}

/// Why a partial semigroup fails to be a catale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CataleFailure {
    /// Axiom (a): no identities `a, b` with `b⊛f⊛a↓`.
    Unframed { f: usize },
    /// Axiom (b): the idempotent has no decomposition `i⊛q` with `q⊛i` an
    /// identity.
    Unsplit { phi: usize },
    /// Axiom (b): two decompositions of `phi` yield different identities.
    AmbiguousSplitting {
        phi: usize,
        i: usize,
        q: usize,
        j: usize,
        r: usize,
    },
}

impl CataleFailure {
    pub fn axiom(&self) -> char {
        match self {
            Self::Unframed { .. } => 'a',
            _ => 'b',
        }
    }

    pub fn describe(&self, s: &PartialSemigroup) -> String {
        let n = |x: &usize| s.name(*x).to_string();
        match self {
            Self::Unframed { f } => format!("axiom (a): no identities frame {}", n(f)),
            Self::Unsplit { phi } => {
                format!("axiom (b): idempotent {} has no splitting through an identity", n(phi))
            }
            Self::AmbiguousSplitting { phi, i, q, j, r } => format!(
                "axiom (b): {phi} = {i}⊛{q} = {j}⊛{r} but {q}⊛{i} = {qi} ≠ {rj} = {r}⊛{j}",
                phi = n(phi),
                i = n(i),
                q = n(q),
                j = n(j),
                r = n(r),
                qi = s.product(*q, *i).map_or("?".into(), |x| n(&x)),
                rj = s.product(*r, *j).map_or("?".into(), |x| n(&x)),
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CataleReport {
    pub failures: Vec<CataleFailure>,
}

impl CataleReport {
    pub fn is_catale(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first(&self) -> Option<&CataleFailure> {
        self.failures.first()
    }
}

/// Checks both catale axioms, listing every framing failure and, for each
/// idempotent, the first splitting failure.
pub fn is_catale(s: &PartialSemigroup) -> CataleReport {
    let ids = s.identities();
    let is_id = {
        let mut v = vec![false; s.len()];
        for &a in &ids {
            v[a] = true;
        }
        v
    };
    let mut failures = Vec::new();
    for f in s.elements() {
        let framed = ids
            .iter()
            .any(|&a| ids.iter().any(|&b| s.product3(b, f, a).is_some()));
        if !framed {
            failures.push(CataleFailure::Unframed { f });
        }
    }
    for phi in s.idempotents() {
        let mut first: Option<(usize, usize)> = None;
        let mut clash = None;
        'search: for i in s.elements() {
            for q in s.elements() {
                if s.product(i, q) != Some(phi) {
                    continue;
                }
                match s.product(q, i) {
                    Some(id) if is_id[id] => match first {
                        None => first = Some((i, q)),
                        Some((i0, q0)) => {
                            if s.product(q0, i0) != Some(id) {
                                clash = Some(CataleFailure::AmbiguousSplitting {
                                    phi,
                                    i: i0,
                                    q: q0,
                                    j: i,
                                    r: q,
                                });
                                break 'search;
                            }
                        }
                    },
                    _ => {}
                }
            }
        }
        match (first, clash) {
            (None, _) => failures.push(CataleFailure::Unsplit { phi }),
            (_, Some(c)) => failures.push(c),
            _ => {}
        }
    }
    CataleReport { failures }
}

/// Identities, idempotents and the domain and codomain of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CataleAnnotations {
    pub identities: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
}

/// Requires every element to have a domain and a codomain.
pub fn annotations(s: &PartialSemigroup) -> Result<CataleAnnotations> {
    let dom = s.elements().map(|f| dom_of(s, f)).collect::<Result<Vec<_>>>()?;
    let cod = s.elements().map(|f| cod_of(s, f)).collect::<Result<Vec<_>>>()?;
    Ok(CataleAnnotations {
        identities: s.identities(),
        idempotents: s.idempotents(),
        dom,
        cod,
    })
}

/// A map of carriers meant to preserve every defined product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsgHom {
    pub source: PartialSemigroup,
    pub target: PartialSemigroup,
    pub map: Vec<usize>,
}

impl PsgHom {
    pub fn new(source: PartialSemigroup, target: PartialSemigroup, map: Vec<usize>) -> Result<Self> {
        let h = PsgHom { source, target, map };
        h.check_carriers()?;
        Ok(h)
    }

    pub fn identity(s: &PartialSemigroup) -> Self {
        PsgHom {
            source: s.clone(),
            target: s.clone(),
            map: s.elements().collect(),
        }
    }

    fn check_carriers(&self) -> Result<()> {
        if self.map.len() != self.source.len() || self.map.iter().any(|&b| b >= self.target.len()) {
            return Err(Error::CarrierMismatch(format!(
                "map of length {} from {} elements into {}",
                self.map.len(),
                self.source.len(),
                self.target.len()
            )));
        }
        Ok(())
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_valid(&self) -> bool {
        validate_psg_hom(self).is_ok_and(|r| r.is_valid())
    }

    /// `self` after `first`.
    pub fn after(&self, first: &PsgHom) -> Result<PsgHom> {
        if first.target != self.source {
            return Err(Error::CarrierMismatch("homs do not compose".into()));
        }
        PsgHom::new(
            first.source.clone(),
            self.target.clone(),
            first.map.iter().map(|&a| self.map[a]).collect(),
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PsgHomReport {
    /// Pairs with `a⊛b↓` whose product is not preserved.
    pub violations: Vec<(usize, usize)>,
    /// Identities sent to elements that are not identities. Allowed.
    pub identity_notes: Vec<usize>,
}

impl PsgHomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_psg_hom(h: &PsgHom) -> Result<PsgHomReport> {
    h.check_carriers()?;
    let (s, t) = (&h.source, &h.target);
    let mut report = PsgHomReport::default();
    for a in s.elements() {
        for b in s.elements() {
            if let Some(ab) = s.product(a, b) {
                if t.product(h.map[a], h.map[b]) != Some(h.map[ab]) {
                    report.violations.push((a, b));
                }
            }
        }
    }
    report.identity_notes = s.identities().into_iter().filter(|&a| !t.is_identity(h.map[a])).collect();
    Ok(report)
}

/// Every hom `source → target`, as element maps in lexicographic order.
///
/// Fails when `|target|^|source|` exceeds `bound`.
pub fn enumerate_psg_homs(source: &PartialSemigroup, target: &PartialSemigroup, bound: u128) -> Result<Vec<Vec<usize>>> {
    let (n, m) = (source.len(), target.len());
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > bound {
        return Err(Error::BoundExceeded {
            what: "partial semigroup maps".into(),
            size,
            bound,
        });
    }
    // Constraints (a, b, a⊛b) grouped by the largest index they mention.
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if let Some(ab) = source.product(a, b) {
                checks[a.max(b).max(ab)].push((a, b, ab));
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut map = vec![0usize; n];
    let mut depth = 0usize;
    let mut next = vec![0usize; n];
    // Iterative backtracking: next[d] is the next candidate image for d.
    loop {
        if next[depth] == m {
            next[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        map[depth] = next[depth];
        next[depth] += 1;
        let ok = checks[depth]
            .iter()
            .all(|&(a, b, ab)| target.product(map[a], map[b]) == Some(map[ab]));
        if !ok {
            continue;
        }
        if depth + 1 == n {
            out.push(map.clone());
        } else {
            depth += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> PartialSemigroup {
        PartialSemigroup::from_triples(&["a"], &[("a", "a", "a")]).unwrap()
    }

    #[test]
    fn one_element_monoid() {
        let s = one();
        assert_eq!(s.identities(), vec![0]);
        assert!(check_identity_lemma(&s).is_empty());
        assert_eq!(idempotent_order_psg(&s).maximal, vec![0]);
        assert!(is_catale(&s).is_catale());
        assert_eq!((dom_of(&s, 0).unwrap(), cod_of(&s, 0).unwrap()), (0, 0));
    }

    #[test]
    fn undefined_square_has_no_identity() {
        let s = PartialSemigroup::from_triples(&["e"], &[]).unwrap();
        assert!(matches!(dom_of(&s, 0), Err(Error::NoIdentity(_))));
        let r = is_catale(&s);
        assert_eq!(r.failures, vec![CataleFailure::Unframed { f: 0 }]);
    }

    #[test]
    fn constant_map_to_a_non_idempotent() {
        // Z/2 as a total semigroup; sending everything to the generator
        // breaks 1⊛1 = 1.
        let z2 = PartialSemigroup::from_fn(vec!["1".into(), "s".into()], |a, b| Some(a ^ b));
        let h = PsgHom::new(z2.clone(), z2.clone(), vec![1, 1]).unwrap();
        assert!(!validate_psg_hom(&h).unwrap().is_valid());
        assert!(PsgHom::identity(&z2).is_valid());
        assert!(PsgHom::new(z2.clone(), z2.clone(), vec![0]).is_err());
        // Endomorphisms of Z/2: the identity and the constant at 1.
        assert_eq!(enumerate_psg_homs(&z2, &z2, 100).unwrap(), vec![vec![0, 0], vec![0, 1]]);
        assert!(enumerate_psg_homs(&z2, &z2, 3).is_err());
    }
}
