//! Finite categories as explicit composition tables.
//!
//! Objects and morphisms are identified by position ([`Ob`], [`Mor`]). The
//! composition table is stored for every ordered pair so that raw, possibly
//! ill-formed tables can be represented and reported on by
//! [`FinCategory::validate`]. All other operations assume a valid category.

mod functor;
mod idempotent;
mod skeleton;

pub use functor::{compose_functors, enumerate_functors, Functor, FunctorViolation};
pub use idempotent::{
    check_retract_of_splitting, check_splitting_universal, idempotent_preorder,
    idempotents_isomorphic, karoubi, IdempotentPreorder, Karoubi, RetractReport, Splitting,
    UniversalityReport,
};
pub use skeleton::{
    automorphism_groups, iso_classes, skeleton, taut_completion, AutomorphismGroup, IsoClasses,
    IsoWitness, KappaBijection, Quotient, SkeletonChoice, TautCompletion,
};

use std::fmt;

/// Object index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ob(pub usize);

/// Morphism index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub usize);

impl Ob {
    pub fn index(self) -> usize {
        self.0
    }
}

impl Mor {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: Ob,
    pub cod: Ob,
}

/// A finite category: objects, morphisms with domain and codomain, the
/// identity of each object and a composition table `(g, f) ↦ g∘f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    table: Vec<Option<Mor>>,
    homs: Vec<Vec<Mor>>,
    outs: Vec<Vec<Mor>>,
}

impl FinCategory {
    /// Builds a category from raw parts. The table is indexed `g * m + f`
    /// and holds `g∘f`. Only index ranges are checked here.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<Mor>,
        table: Vec<Option<Mor>>,
    ) -> crate::Result<Self> {
        let k = objects.len();
        let m = morphisms.len();
        if identities.len() != k {
            return Err(crate::Error::Invalid(format!(
                "{} identities for {} objects",
                identities.len(),
                k
            )));
        }
        if table.len() != m * m {
            return Err(crate::Error::Invalid(format!(
                "composition table has {} entries, expected {}",
                table.len(),
                m * m
            )));
        }
        if morphisms.iter().any(|f| f.dom.0 >= k || f.cod.0 >= k)
            || identities.iter().any(|i| i.0 >= m)
            || table.iter().flatten().any(|h| h.0 >= m)
        {
            return Err(crate::Error::Invalid("index out of range".into()));
        }
        let mut homs = vec![Vec::new(); k * k];
        let mut outs = vec![Vec::new(); k];
        for (i, f) in morphisms.iter().enumerate() {
            homs[f.dom.0 * k + f.cod.0].push(Mor(i));
            outs[f.dom.0].push(Mor(i));
        }
        Ok(FinCategory {
            objects,
            morphisms,
            identities,
            table,
            homs,
            outs,
        })
    }

    /// Builds a category whose composite of a composable pair is given by
    /// `compose`; pairs that are not composable are left undefined.
    pub(crate) fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Option<Mor>,
    ) -> Self {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[g].dom == morphisms[f].cod {
                    table[g * m + f] = compose(Mor(g), Mor(f));
                }
            }
        }
        Self::from_parts(objects, morphisms, identities, table)
            .expect("constructed category has consistent indices")
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new(), Vec::new(), Vec::new()).unwrap()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = Ob> + Clone {
        (0..self.objects.len()).map(Ob)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = Mor> + Clone {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn object_name(&self, x: Ob) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, f: Mor) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn dom(&self, f: Mor) -> Ob {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Ob {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, x: Ob) -> Mor {
        self.identities[x.0]
    }

    pub fn identities(&self) -> &[Mor] {
        &self.identities
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f).0] == f
    }

    /// The table entry for `g∘f`, defined or not.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.table[g.0 * self.morphisms.len() + f.0]
    }

    /// `g∘f` on a valid category where the pair is known to be composable.
    pub fn comp(&self, g: Mor, f: Mor) -> Mor {
        self.compose(g, f)
            .unwrap_or_else(|| panic!("{} ∘ {} is undefined", self.morphism_name(g), self.morphism_name(f)))
    }

    /// `h∘g∘f`, if every step is defined.
    pub fn compose3(&self, h: Mor, g: Mor, f: Mor) -> Option<Mor> {
        self.compose(g, f).and_then(|gf| self.compose(h, gf))
    }

    pub fn hom(&self, x: Ob, y: Ob) -> &[Mor] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    pub fn is_endo(&self, f: Mor) -> bool {
        self.dom(f) == self.cod(f)
    }

    pub fn is_idempotent(&self, f: Mor) -> bool {
        self.is_endo(f) && self.compose(f, f) == Some(f)
    }

    pub fn object_by_name(&self, name: &str) -> Option<Ob> {
        self.objects.iter().position(|o| o == name).map(Ob)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<Mor> {
        self.morphisms.iter().position(|f| f.name == name).map(Mor)
    }

    /// Inverse of `f`, if `f` is an isomorphism.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identity(x)) && self.compose(f, g) == Some(self.identity(y))
        })
    }

    pub fn is_isomorphism(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// Checks every axiom instance and lists the violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let m = self.morphism_count();
        for x in self.objects() {
            let i = self.identity(x);
            if self.dom(i) != x || self.cod(i) != x {
                violations.push(CategoryViolation::IdentityEndpoints { object: x });
            }
        }
        for g in self.morphisms() {
            for f in self.morphisms() {
                let composable = self.dom(g) == self.cod(f);
                match (composable, self.compose(g, f)) {
                    (true, None) => violations.push(CategoryViolation::MissingComposite { g, f }),
                    (false, Some(_)) => violations.push(CategoryViolation::ExtraComposite { g, f }),
                    (true, Some(gf)) => {
                        if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                            violations.push(CategoryViolation::CompositeEndpoints { g, f, gf });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in self.morphisms() {
            if self.compose(f, self.identity(self.dom(f))) != Some(f) {
                violations.push(CategoryViolation::RightIdentity { f });
            }
            if self.compose(self.identity(self.cod(f)), f) != Some(f) {
                violations.push(CategoryViolation::LeftIdentity { f });
            }
        }
        // Associativity over composable triples only; the pair checks above
        // already cover definedness.
        if m > 0 {
            for f in self.morphisms() {
                for &g in self.out_of(self.cod(f)) {
                    let Some(gf) = self.compose(g, f) else { continue };
                    for &h in self.out_of(self.cod(g)) {
                        let lhs = self.compose(h, gf);
                        let rhs = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                        if lhs != rhs {
                            violations.push(CategoryViolation::Associativity { h, g, f });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// All morphisms with domain `x`, in morphism order.
    pub fn out_of(&self, x: Ob) -> &[Mor] {
        &self.outs[x.0]
    }

    /// Every idempotent endomorphism, in morphism order.
    pub fn idempotents(&self) -> Vec<Mor> {
        self.morphisms().filter(|&f| self.is_idempotent(f)).collect()
    }

    /// A splitting of `phi`: the trivial one for identities, otherwise the
    /// least in enumeration order `(y, q, i)`.
    pub fn find_splitting(&self, phi: Mor) -> crate::Result<Option<Splitting>> {
        if !self.is_idempotent(phi) {
            return Err(crate::Error::NotIdempotent(self.morphism_name(phi).to_string()));
        }
        let x = self.dom(phi);
        if self.is_identity(phi) {
            return Ok(Some(Splitting::of_identity(self, x)));
        }
        for y in self.objects() {
            for &q in self.hom(x, y) {
                for &i in self.hom(y, x) {
                    if self.compose(i, q) == Some(phi) && self.compose(q, i) == Some(self.identity(y)) {
                        return Ok(Some(Splitting {
                            idempotent: phi,
                            through: y,
                            retraction: q,
                            section: i,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// The first idempotent without a splitting, if any.
    pub fn first_unsplit_idempotent(&self) -> Option<Mor> {
        self.idempotents()
            .into_iter()
            .find(|&phi| matches!(self.find_splitting(phi), Ok(None)))
    }

    pub fn is_absolutely_complete(&self) -> bool {
        self.first_unsplit_idempotent().is_none()
    }

    /// A pair of distinct isomorphic objects, if any.
    pub fn first_isomorphic_pair(&self) -> Option<(Ob, Ob)> {
        for x in self.objects() {
            for y in self.objects().skip(x.0 + 1) {
                if skeleton::find_iso(self, x, y).is_some() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_skeletal(&self) -> bool {
        self.first_isomorphic_pair().is_none()
    }

    /// Skeletal and absolutely complete.
    pub fn is_taut(&self) -> bool {
        self.is_skeletal() && self.is_absolutely_complete()
    }

    /// The full subcategory on the given objects, in the given order.
    pub fn full_subcategory(&self, keep: &[Ob]) -> FinCategory {
        let mut new_ob = vec![None; self.object_count()];
        for (i, &x) in keep.iter().enumerate() {
            new_ob[x.0] = Some(Ob(i));
        }
        let mut new_mor = vec![None; self.morphism_count()];
        let mut morphisms = Vec::new();
        for f in self.morphisms() {
            if let (Some(d), Some(c)) = (new_ob[self.dom(f).0], new_ob[self.cod(f).0]) {
                new_mor[f.0] = Some(Mor(morphisms.len()));
                morphisms.push(Morphism {
                    name: self.morphism_name(f).to_string(),
                    dom: d,
                    cod: c,
                });
            }
        }
        let old: Vec<Mor> = self.morphisms().filter(|f| new_mor[f.0].is_some()).collect();
        let objects = keep.iter().map(|&x| self.object_name(x).to_string()).collect();
        let identities = keep.iter().map(|&x| new_mor[self.identity(x).0].unwrap()).collect();
        FinCategory::from_fn(objects, morphisms, identities, |g, f| {
            self.compose(old[g.0], old[f.0]).and_then(|h| new_mor[h.0])
        })
    }

    /// Disjoint union; objects and morphisms of `other` follow those of `self`.
    pub fn coproduct(&self, other: &FinCategory) -> FinCategory {
        let (k, m) = (self.object_count(), self.morphism_count());
        let mut objects = self.objects.clone();
        objects.extend(other.objects.iter().cloned());
        let mut morphisms = self.morphisms.clone();
        morphisms.extend(other.morphisms.iter().map(|f| Morphism {
            name: f.name.clone(),
            dom: Ob(f.dom.0 + k),
            cod: Ob(f.cod.0 + k),
        }));
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|i| Mor(i.0 + m)));
        FinCategory::from_fn(objects, morphisms, identities, |g, f| match (g.0 < m, f.0 < m) {
            (true, true) => self.compose(g, f),
            (false, false) => other.compose(Mor(g.0 - m), Mor(f.0 - m)).map(|h| Mor(h.0 + m)),
            _ => None,
        })
    }

    /// Product category with componentwise composition; pairs are ordered
    /// with the component from `self` varying slowest.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (k2, m2) = (other.object_count(), other.morphism_count());
        let objects = self
            .objects()
            .flat_map(|x| other.objects().map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", self.object_name(x), other.object_name(y)))
            .collect();
        let morphisms = self
            .morphisms()
            .flat_map(|f| other.morphisms().map(move |g| (f, g)))
            .map(|(f, g)| Morphism {
                name: format!("({},{})", self.morphism_name(f), other.morphism_name(g)),
                dom: Ob(self.dom(f).0 * k2 + other.dom(g).0),
                cod: Ob(self.cod(f).0 * k2 + other.cod(g).0),
            })
            .collect();
        let identities = self
            .objects()
            .flat_map(|x| other.objects().map(move |y| (x, y)))
            .map(|(x, y)| Mor(self.identity(x).0 * m2 + other.identity(y).0))
            .collect();
        FinCategory::from_fn(objects, morphisms, identities, |g, f| {
            let (g1, g2) = (Mor(g.0 / m2), Mor(g.0 % m2));
            let (f1, f2) = (Mor(f.0 / m2), Mor(f.0 % m2));
            Some(Mor(self.compose(g1, f1)?.0 * m2 + other.compose(g2, f2)?.0))
        })
    }
}

/// One violated axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryViolation {
    IdentityEndpoints { object: Ob },
    MissingComposite { g: Mor, f: Mor },
    ExtraComposite { g: Mor, f: Mor },
    CompositeEndpoints { g: Mor, f: Mor, gf: Mor },
    LeftIdentity { f: Mor },
    RightIdentity { f: Mor },
    Associativity { h: Mor, g: Mor, f: Mor },
}

impl CategoryViolation {
    /// Human-readable form using the names of `c`.
    pub fn describe(&self, c: &FinCategory) -> String {
        let n = |f: &Mor| c.morphism_name(*f).to_string();
        match self {
            Self::IdentityEndpoints { object } => {
                format!("identity of {} is not an endomorphism of it", c.object_name(*object))
            }
            Self::MissingComposite { g, f } => format!("composable pair ({},{}) missing", n(g), n(f)),
            Self::ExtraComposite { g, f } => format!("non-composable pair ({},{}) has a composite", n(g), n(f)),
            Self::CompositeEndpoints { g, f, gf } => {
                format!("composite {} of ({},{}) has wrong domain or codomain", n(gf), n(g), n(f))
            }
            Self::LeftIdentity { f } => format!("identity law fails on the left of {}", n(f)),
            Self::RightIdentity { f } => format!("identity law fails on the right of {}", n(f)),
            Self::Associativity { h, g, f } => {
                format!("associativity fails on ({},{},{})", n(h), n(g), n(f))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<CategoryViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} objects, {} morphisms", self.object_count(), self.morphism_count())?;
        for x in self.objects() {
            for y in self.objects() {
                let hom = self.hom(x, y);
                if !hom.is_empty() {
                    let names: Vec<_> = hom.iter().map(|&h| self.morphism_name(h)).collect();
                    writeln!(f, "  {} -> {}: {}", self.object_name(x), self.object_name(y), names.join(" "))?;
                }
            }
        }
        Ok(())
    }
}

/// Incremental construction by name. Declaring an object also declares its
/// identity `id_<name>` together with the identity composites.
#[derive(Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<Mor>,
    composites: Vec<(Mor, Mor, Mor)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: &str) -> Ob {
        self.object_with_identity(name, &format!("id_{name}"))
    }

    pub fn object_with_identity(&mut self, name: &str, identity: &str) -> Ob {
        let x = Ob(self.objects.len());
        self.objects.push(name.to_string());
        let id = Mor(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: identity.to_string(),
            dom: x,
            cod: x,
        });
        self.identities.push(id);
        x
    }

    pub fn morphism(&mut self, name: &str, dom: Ob, cod: Ob) -> Mor {
        let f = Mor(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: name.to_string(),
            dom,
            cod,
        });
        f
    }

    /// Records `g∘f = gf`.
    pub fn compose(&mut self, g: Mor, f: Mor, gf: Mor) -> &mut Self {
        self.composites.push((g, f, gf));
        self
    }

    /// Raw table: identity composites are filled in, then the explicit
    /// entries are applied on top (so they may override them).
    pub fn build(&self) -> crate::Result<FinCategory> {
        let m = self.morphisms.len();
        let mut table = vec![None; m * m];
        for (fi, f) in self.morphisms.iter().enumerate() {
            let left = self.identities[f.cod.0];
            let right = self.identities[f.dom.0];
            table[left.0 * m + fi] = Some(Mor(fi));
            table[fi * m + right.0] = Some(Mor(fi));
        }
        for &(g, f, gf) in &self.composites {
            table[g.0 * m + f.0] = Some(gf);
        }
        FinCategory::from_parts(self.objects.clone(), self.morphisms.clone(), self.identities.clone(), table)
    }

    /// Removes an entry from the table, for building broken examples.
    pub fn build_without(&self, g: Mor, f: Mor) -> crate::Result<FinCategory> {
        let c = self.build()?;
        let m = c.morphism_count();
        let mut table = c.table.clone();
        table[g.0 * m + f.0] = None;
        FinCategory::from_parts(c.objects, c.morphisms, c.identities, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walking_idempotent() -> (FinCategory, CategoryBuilder, Mor) {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        (b.build().unwrap(), b, e)
    }

    #[test]
    fn walking_idempotent_is_valid() {
        let (c, _, _) = walking_idempotent();
        assert!(c.validate().is_valid());
    }

    #[test]
    fn missing_composite_is_reported() {
        let (_, b, e) = walking_idempotent();
        let broken = b.build_without(e, e).unwrap();
        let report = broken.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.describe(&broken) == "composable pair (e,e) missing"));
    }

    fn brute_force_associativity_failures(c: &FinCategory) -> Vec<(Mor, Mor, Mor)> {
        let mut out = Vec::new();
        for h in c.morphisms() {
            for g in c.morphisms() {
                for f in c.morphisms() {
                    if c.dom(h) != c.cod(g) || c.dom(g) != c.cod(f) {
                        continue;
                    }
                    if c.compose3(h, g, f) != c.compose(h, g).and_then(|hg| c.compose(hg, f)) {
                        out.push((h, g, f));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn squaring_to_identity_gives_the_cyclic_group() {
        // With e∘e = id the table is Z/2: every triple associates.
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, Mor(0));
        let c = b.build().unwrap();
        assert!(brute_force_associativity_failures(&c).is_empty());
        assert!(c.validate().is_valid());
        assert!(!c.is_idempotent(e));
    }

    #[test]
    fn associativity_failure_matches_brute_force() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let a = b.morphism("a", x, x);
        let bb = b.morphism("b", x, x);
        b.compose(a, a, bb).compose(bb, a, a).compose(a, bb, a).compose(bb, bb, a);
        let c = b.build().unwrap();
        let brute = brute_force_associativity_failures(&c);
        assert!(!brute.is_empty());
        let reported: Vec<_> = c
            .validate()
            .violations
            .into_iter()
            .filter_map(|v| match v {
                CategoryViolation::Associativity { h, g, f } => Some((h, g, f)),
                _ => None,
            })
            .collect();
        let mut sorted = reported.clone();
        sorted.sort();
        let mut expected = brute.clone();
        expected.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn extra_composite_is_reported() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let y = b.object("y");
        let _ = (x, y);
        let ix = Mor(0);
        let iy = Mor(1);
        b.compose(ix, iy, ix);
        let c = b.build().unwrap();
        assert!(c
            .validate()
            .violations
            .contains(&CategoryViolation::ExtraComposite { g: ix, f: iy }));
    }

    #[test]
    fn empty_category_is_valid_and_taut() {
        let c = FinCategory::empty();
        assert!(c.is_valid());
        assert!(c.is_taut());
        assert!(c.idempotents().is_empty());
    }

    #[test]
    fn product_and_coproduct_are_valid() {
        let (c, _, _) = walking_idempotent();
        let p = c.product(&c);
        assert!(p.is_valid());
        assert_eq!(p.morphism_count(), 4);
        let s = c.coproduct(&c);
        assert!(s.is_valid());
        assert_eq!(s.object_count(), 2);
    }
}
