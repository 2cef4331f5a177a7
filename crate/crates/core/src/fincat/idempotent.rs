use super::{FinCategory, Functor, Mor, Morphism, Ob};
use crate::{Error, Result};

/// A factorization `φ = i∘q` with `q∘i = id_y`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub idempotent: Mor,
    pub through: Ob,
    /// `q: x → y`
    pub retraction: Mor,
    /// `i: y → x`
    pub section: Mor,
}

impl Splitting {
    pub fn holds_in(&self, c: &FinCategory) -> bool {
        let (q, i) = (self.retraction, self.section);
        let x = c.dom(self.idempotent);
        c.dom(q) == x
            && c.cod(q) == self.through
            && c.dom(i) == self.through
            && c.cod(i) == x
            && c.compose(i, q) == Some(self.idempotent)
            && c.compose(q, i) == Some(c.identity(self.through))
    }

    /// The trivial splitting of an identity through its own object.
    pub fn of_identity(c: &FinCategory, x: Ob) -> Self {
        let id = c.identity(x);
        Splitting {
            idempotent: id,
            through: x,
            retraction: id,
            section: id,
        }
    }
}

/// The relation `φ ≤ ψ ⟺ φ = φ∘ψ` on the idempotents of a category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentPreorder {
    pub idempotents: Vec<Mor>,
    leq: Vec<bool>,
}

impl IdempotentPreorder {
    fn position(&self, f: Mor) -> usize {
        self.idempotents
            .iter()
            .position(|&g| g == f)
            .unwrap_or_else(|| panic!("morphism {} is not an idempotent", f.0))
    }

    pub fn leq(&self, phi: Mor, psi: Mor) -> bool {
        let n = self.idempotents.len();
        self.leq[self.position(phi) * n + self.position(psi)]
    }

    pub fn is_reflexive(&self) -> bool {
        let n = self.idempotents.len();
        (0..n).all(|i| self.leq[i * n + i])
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.idempotents.len();
        (0..n).all(|i| {
            (0..n).all(|j| !self.leq[i * n + j] || (0..n).all(|k| !self.leq[j * n + k] || self.leq[i * n + k]))
        })
    }

    /// Pairs `φ ≤ ψ ≤ φ` on which `φ = ψ` and `φ∘ψ = ψ∘φ` disagree.
    /// Mutually below idempotents are equal exactly when they commute, so
    /// this is empty on every category.
    pub fn antisymmetry_mismatches(&self, c: &FinCategory) -> Vec<(Mor, Mor)> {
        let n = self.idempotents.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.leq[i * n + j] && self.leq[j * n + i] {
                    let (phi, psi) = (self.idempotents[i], self.idempotents[j]);
                    if (phi == psi) != (c.compose(phi, psi) == c.compose(psi, phi)) {
                        out.push((phi, psi));
                    }
                }
            }
        }
        out
    }

    pub fn pairs(&self) -> Vec<(Mor, Mor)> {
        let n = self.idempotents.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.leq[i * n + j] {
                    out.push((self.idempotents[i], self.idempotents[j]));
                }
            }
        }
        out
    }
}

pub fn idempotent_preorder(c: &FinCategory) -> IdempotentPreorder {
    let idempotents = c.idempotents();
    let n = idempotents.len();
    let mut leq = vec![false; n * n];
    for (i, &phi) in idempotents.iter().enumerate() {
        for (j, &psi) in idempotents.iter().enumerate() {
            leq[i * n + j] = c.dom(phi) == c.dom(psi) && c.compose(phi, psi) == Some(phi);
        }
    }
    let order = IdempotentPreorder { idempotents, leq };
    debug_assert!(order.is_reflexive() && order.is_transitive());
    order
}

/// The Karoubi envelope together with the bookkeeping that relates it to
/// the base category.
#[derive(Clone, Debug)]
pub struct Karoubi {
    pub category: FinCategory,
    /// `x ↦ id_x`, `f ↦ ⟨id_x, id_y, f⟩`.
    pub embedding: Functor,
    /// The idempotent of the base category behind each object.
    pub idempotents: Vec<Mor>,
    /// `(φ, ψ, f)` behind each morphism.
    pub frames: Vec<(Mor, Mor, Mor)>,
    object_of: Vec<Option<Ob>>,
}

impl Karoubi {
    /// The object standing for idempotent `phi` of the base category.
    pub fn object_of(&self, phi: Mor) -> Option<Ob> {
        self.object_of[phi.0]
    }

    /// The morphism `⟨φ, ψ, f⟩`, if `ψ∘f∘φ = f`.
    pub fn morphism_of(&self, phi: Mor, psi: Mor, f: Mor) -> Option<Mor> {
        let (a, b) = (self.object_of(phi)?, self.object_of(psi)?);
        let hom = self.category.hom(a, b);
        hom.binary_search_by_key(&f, |&h| self.frames[h.0].2).ok().map(|k| hom[k])
    }
}

/// Objects are the idempotents of `c`; `hom(φ, ψ) = {f | ψ∘f∘φ = f}`.
///
/// Morphisms are listed by domain, then codomain, then underlying morphism.
pub fn karoubi(c: &FinCategory) -> Karoubi {
    let idempotents = c.idempotents();
    let mut object_of = vec![None; c.morphism_count()];
    for (k, &phi) in idempotents.iter().enumerate() {
        object_of[phi.0] = Some(Ob(k));
    }
    let mut frames = Vec::new();
    let mut morphisms = Vec::new();
    for (a, &phi) in idempotents.iter().enumerate() {
        for (b, &psi) in idempotents.iter().enumerate() {
            for &f in c.hom(c.dom(phi), c.dom(psi)) {
                if c.compose3(psi, f, phi) == Some(f) {
                    frames.push((phi, psi, f));
                    morphisms.push(Morphism {
                        name: format!(
                            "<{},{},{}>",
                            c.morphism_name(phi),
                            c.morphism_name(psi),
                            c.morphism_name(f)
                        ),
                        dom: Ob(a),
                        cod: Ob(b),
                    });
                }
            }
        }
    }
    let objects = idempotents.iter().map(|&phi| c.morphism_name(phi).to_string()).collect();

    // Within a hom-set frames are sorted by the underlying morphism, which
    // makes lookups a binary search.
    let k = idempotents.len();
    let mut homs: Vec<Vec<Mor>> = vec![Vec::new(); k * k];
    for (h, m) in morphisms.iter().enumerate() {
        homs[m.dom.0 * k + m.cod.0].push(Mor(h));
    }
    let find = |a: Ob, b: Ob, f: Mor| -> Option<Mor> {
        let hom = &homs[a.0 * k + b.0];
        hom.binary_search_by_key(&f, |&h| frames[h.0].2).ok().map(|i| hom[i])
    };
    let identities: Vec<Mor> = idempotents
        .iter()
        .enumerate()
        .map(|(a, &phi)| find(Ob(a), Ob(a), phi).expect("φ∘φ∘φ = φ"))
        .collect();
    let category = FinCategory::from_fn(objects, morphisms, identities, |g, f| {
        let (_, _, gg) = frames[g.0];
        let (_, _, ff) = frames[f.0];
        let a = object_of[frames[f.0].0 .0]?;
        let b = object_of[frames[g.0].1 .0]?;
        find(a, b, c.compose(gg, ff)?)
    });

    let obj_map: Vec<Ob> = c
        .objects()
        .map(|x| object_of[c.identity(x).0].expect("identities are idempotent"))
        .collect();
    let mor_map: Vec<Mor> = c
        .morphisms()
        .map(|f| find(obj_map[c.dom(f).0], obj_map[c.cod(f).0], f).expect("id∘f∘id = f"))
        .collect();
    let embedding = Functor {
        source: c.clone(),
        target: category.clone(),
        obj_map,
        mor_map,
    };
    Karoubi {
        category,
        embedding,
        idempotents,
        frames,
        object_of,
    }
}

/// A witness `(u, v)` of `a ≈ b`: `a = u∘v`, `b = v∘u`, `u∘v∘u = u`,
/// `v∘u∘v = v`.
///
/// For `a: x → x` and `b: y → y` this searches `u ∈ hom(y, x)` and then
/// `v ∈ hom(x, y)`; when `a = b` the witness `(a, a)` is returned.
pub fn idempotents_isomorphic(c: &FinCategory, a: Mor, b: Mor) -> Result<Option<(Mor, Mor)>> {
    for phi in [a, b] {
        if !c.is_idempotent(phi) {
            return Err(Error::NotIdempotent(c.morphism_name(phi).to_string()));
        }
    }
    if a == b {
        return Ok(Some((a, a)));
    }
    let (x, y) = (c.dom(a), c.dom(b));
    for &u in c.hom(y, x) {
        for &v in c.hom(x, y) {
            if c.compose(u, v) == Some(a)
                && c.compose(v, u) == Some(b)
                && c.compose3(u, v, u) == Some(u)
                && c.compose3(v, u, v) == Some(v)
            {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Outcome of checking that a splitting is an equalizer and a coequalizer
/// of `(id_x, φ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniversalityReport {
    pub equalizer: bool,
    pub coequalizer: bool,
    /// Cones or cocones without exactly one mediating morphism.
    pub failures: Vec<String>,
}

impl UniversalityReport {
    pub fn holds(&self) -> bool {
        self.equalizer && self.coequalizer
    }
}

/// Checks the universal properties of `i` and `q` against every cone and
/// cocone of `(id_x, φ)` in `c`.
pub fn check_splitting_universal(c: &FinCategory, s: &Splitting) -> Result<UniversalityReport> {
    if !s.holds_in(c) {
        return Err(Error::Precondition(format!(
            "({}, {}) does not split {}",
            c.morphism_name(s.section),
            c.morphism_name(s.retraction),
            c.morphism_name(s.idempotent)
        )));
    }
    let (phi, q, i, y) = (s.idempotent, s.retraction, s.section, s.through);
    let x = c.dom(phi);
    let mut failures = Vec::new();

    let mut equalizer = c.compose(phi, i) == Some(i);
    for z in c.objects() {
        for &h in c.hom(z, x) {
            if c.compose(phi, h) != Some(h) {
                continue;
            }
            let n = c.hom(z, y).iter().filter(|&&k| c.compose(i, k) == Some(h)).count();
            if n != 1 {
                equalizer = false;
                failures.push(format!("cone {} factors {n} times through the section", c.morphism_name(h)));
            }
        }
    }

    let mut coequalizer = c.compose(q, phi) == Some(q);
    for z in c.objects() {
        for &h in c.hom(x, z) {
            if c.compose(h, phi) != Some(h) {
                continue;
            }
            let n = c.hom(y, z).iter().filter(|&&k| c.compose(k, q) == Some(h)).count();
            if n != 1 {
                coequalizer = false;
                failures.push(format!(
                    "cocone {} factors {n} times through the retraction",
                    c.morphism_name(h)
                ));
            }
        }
    }
    Ok(UniversalityReport {
        equalizer,
        coequalizer,
        failures,
    })
}

/// For `φ ≤ ψ`, the splitting object of `φ` is a retract of that of `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractReport {
    pub phi_splitting: Splitting,
    pub psi_splitting: Splitting,
    /// Least `s` (with its `t`) such that `t∘s` is the identity, if any.
    pub found: Option<(Mor, Mor)>,
    /// Whether `s = r∘i` and `t = q∘j` work, where `φ = i∘q` and `ψ = j∘r`.
    pub canonical_holds: bool,
}

impl RetractReport {
    pub fn holds(&self) -> bool {
        self.found.is_some() && self.canonical_holds
    }
}

pub fn check_retract_of_splitting(c: &FinCategory, phi: Mor, psi: Mor) -> Result<RetractReport> {
    for f in [phi, psi] {
        if !c.is_idempotent(f) {
            return Err(Error::NotIdempotent(c.morphism_name(f).to_string()));
        }
    }
    if c.dom(phi) != c.dom(psi) || c.compose(phi, psi) != Some(phi) {
        return Err(Error::Precondition(format!(
            "{} is not below {}",
            c.morphism_name(phi),
            c.morphism_name(psi)
        )));
    }
    let split = |f: Mor| {
        c.find_splitting(f)?
            .ok_or_else(|| Error::Precondition(format!("{} does not split", c.morphism_name(f))))
    };
    let (sp, ss) = (split(phi)?, split(psi)?);
    let (y, z) = (sp.through, ss.through);
    let id_y = c.identity(y);
    let mut found = None;
    'search: for &s in c.hom(y, z) {
        for &t in c.hom(z, y) {
            if c.compose(t, s) == Some(id_y) {
                found = Some((s, t));
                break 'search;
            }
        }
    }
    let s = c.compose(ss.retraction, sp.section);
    let t = c.compose(sp.retraction, ss.section);
    let canonical_holds = matches!((s, t), (Some(s), Some(t)) if c.compose(t, s) == Some(id_y));
    Ok(RetractReport {
        phi_splitting: sp,
        psi_splitting: ss,
        found,
        canonical_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::CategoryBuilder;

    fn walking_idempotent() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        b.build().unwrap()
    }

    #[test]
    fn karoubi_of_walking_idempotent() {
        let c = walking_idempotent();
        let k = karoubi(&c);
        let kc = &k.category;
        assert!(kc.is_valid());
        assert_eq!(kc.object_count(), 2);
        let sizes: Vec<usize> = kc
            .objects()
            .flat_map(|a| kc.objects().map(move |b| (a, b)))
            .map(|(a, b)| kc.hom(a, b).len())
            .collect();
        assert_eq!(sizes, vec![2, 1, 1, 1]);
        assert!(kc.is_absolutely_complete());
        assert!(k.embedding.is_valid());
        assert!(k.embedding.is_full() && k.embedding.is_faithful());
        assert!(!k.embedding.is_essentially_surjective());
    }

    #[test]
    fn walking_idempotent_does_not_split_but_its_copy_does() {
        let c = walking_idempotent();
        let e = Mor(1);
        assert_eq!(c.find_splitting(e).unwrap(), None);
        assert!(!c.is_absolutely_complete());
        let k = karoubi(&c);
        let copy = k.morphism_of(Mor(0), Mor(0), e).unwrap();
        let through_e = k
            .category
            .compose(k.morphism_of(e, Mor(0), e).unwrap(), k.morphism_of(Mor(0), e, e).unwrap());
        assert_eq!(through_e, Some(copy));
        let s = k.category.find_splitting(copy).unwrap().unwrap();
        assert_eq!(s.through, k.object_of(e).unwrap());
        let report = check_splitting_universal(&k.category, &s).unwrap();
        assert!(report.holds(), "{:?}", report.failures);
    }

    #[test]
    fn identity_splitting_is_universal() {
        let c = walking_idempotent();
        let s = c.find_splitting(Mor(0)).unwrap().unwrap();
        assert_eq!(s, Splitting::of_identity(&c, Ob(0)));
        assert!(check_splitting_universal(&c, &s).unwrap().holds());
    }

    #[test]
    fn fabricated_splitting_is_rejected() {
        let c = walking_idempotent();
        let fake = Splitting {
            idempotent: Mor(1),
            through: Ob(0),
            retraction: Mor(1),
            section: Mor(1),
        };
        assert!(matches!(check_splitting_universal(&c, &fake), Err(Error::Precondition(_))));
    }

    #[test]
    fn preorder_on_walking_idempotent() {
        let c = walking_idempotent();
        let p = idempotent_preorder(&c);
        let (id, e) = (Mor(0), Mor(1));
        assert!(p.leq(e, id));
        assert!(!p.leq(id, e));
        assert!(p.leq(e, e) && p.leq(id, id));
        assert!(p.antisymmetry_mismatches(&c).is_empty());
    }

    #[test]
    fn non_idempotents_are_rejected() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let s = b.morphism("s", x, x);
        b.compose(s, s, Mor(0));
        let c = b.build().unwrap();
        assert!(matches!(c.find_splitting(s), Err(Error::NotIdempotent(_))));
        assert!(idempotents_isomorphic(&c, s, Mor(0)).is_err());
    }

    #[test]
    fn retract_precondition() {
        let c = walking_idempotent();
        let k = karoubi(&c);
        let kc = &k.category;
        // Inside Kar: the copy of e on id_x is below the identity of id_x.
        let copy = k.morphism_of(Mor(0), Mor(0), Mor(1)).unwrap();
        let id = kc.identity(Ob(0));
        let r = check_retract_of_splitting(kc, copy, id).unwrap();
        assert!(r.holds());
        assert!(matches!(
            check_retract_of_splitting(kc, id, copy),
            Err(Error::Precondition(_))
        ));
        let same = check_retract_of_splitting(kc, id, id).unwrap();
        assert_eq!(same.found, Some((id, id)));
    }
}
