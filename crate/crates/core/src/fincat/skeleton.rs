use super::functor::is_bijection;
use super::idempotent::{idempotents_isomorphic, karoubi, Karoubi};
use super::{compose_functors, FinCategory, Functor, Mor, Ob};
use crate::{Error, Result};

/// An isomorphism `u: from → to` with inverse `v`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub from: Ob,
    pub to: Ob,
    pub u: Mor,
    pub v: Mor,
}

impl IsoWitness {
    pub fn holds_in(&self, c: &FinCategory) -> bool {
        c.dom(self.u) == self.from
            && c.cod(self.u) == self.to
            && c.compose(self.v, self.u) == Some(c.identity(self.from))
            && c.compose(self.u, self.v) == Some(c.identity(self.to))
    }
}

/// The least isomorphism `x → y` together with its inverse.
pub(crate) fn find_iso(c: &FinCategory, x: Ob, y: Ob) -> Option<(Mor, Mor)> {
    if x == y {
        let id = c.identity(x);
        return Some((id, id));
    }
    c.hom(x, y).iter().find_map(|&u| c.inverse(u).map(|v| (u, v)))
}

/// Partition of the objects into isomorphism classes, each listed in
/// increasing order; classes are ordered by their least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClasses {
    pub classes: Vec<Vec<Ob>>,
    pub class_of: Vec<usize>,
}

impl IsoClasses {
    pub fn same_class(&self, x: Ob, y: Ob) -> bool {
        self.class_of[x.0] == self.class_of[y.0]
    }

    /// An isomorphism between two members of the same class.
    pub fn witness(&self, c: &FinCategory, x: Ob, y: Ob) -> Option<IsoWitness> {
        if !self.same_class(x, y) {
            return None;
        }
        find_iso(c, x, y).map(|(u, v)| IsoWitness { from: x, to: y, u, v })
    }
}

pub fn iso_classes(c: &FinCategory) -> IsoClasses {
    let choice = choose(c.object_count(), |rep, y| {
        find_iso(c, y, rep).map(|(u, v)| IsoWitness { from: y, to: rep, u, v })
    });
    classes_of(&choice)
}

fn classes_of(choice: &SkeletonChoice) -> IsoClasses {
    let mut classes = vec![Vec::new(); choice.representatives.len()];
    for (x, &k) in choice.class_of.iter().enumerate() {
        classes[k].push(Ob(x));
    }
    IsoClasses {
        classes,
        class_of: choice.class_of.clone(),
    }
}

/// Representatives of the isomorphism classes and a chosen isomorphism from
/// each object to its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonChoice {
    /// Least member of each class, in increasing order.
    pub representatives: Vec<Ob>,
    pub class_of: Vec<usize>,
    /// `to_rep[x]` goes from `x` to its representative; identity on
    /// representatives.
    pub to_rep: Vec<IsoWitness>,
}

impl SkeletonChoice {
    pub fn representative(&self, x: Ob) -> Ob {
        self.representatives[self.class_of[x.0]]
    }

    /// `ι_{xy} = to_rep(y)⁻¹ ∘ to_rep(x)` for `x` and `y` in one class.
    pub fn iota(&self, c: &FinCategory, x: Ob, y: Ob) -> Option<Mor> {
        if self.class_of[x.0] != self.class_of[y.0] {
            return None;
        }
        c.compose(self.to_rep[y.0].v, self.to_rep[x.0].u)
    }

    /// Checks the chosen isomorphisms and that the family `ι` is closed
    /// under composition with `ι_{xx}` the identity.
    pub fn is_coherent(&self, c: &FinCategory) -> bool {
        let n = self.class_of.len();
        let reps_ok = self
            .representatives
            .iter()
            .all(|&r| self.to_rep[r.0].u == c.identity(r) && self.to_rep[r.0].v == c.identity(r));
        let isos_ok = self.to_rep.iter().all(|w| w.holds_in(c));
        reps_ok
            && isos_ok
            && (0..n).all(|x| {
                let x = Ob(x);
                self.iota(c, x, x) == Some(c.identity(x))
                    && (0..n).all(|y| {
                        let y = Ob(y);
                        (0..n).all(|z| {
                            let z = Ob(z);
                            match (self.iota(c, x, y), self.iota(c, y, z)) {
                                (Some(a), Some(b)) => c.compose(b, a) == self.iota(c, x, z),
                                _ => true,
                            }
                        })
                    })
            })
    }
}

/// Greedy class assignment: the first unassigned object becomes a
/// representative and collects every later object that `link` connects to it.
fn choose(n: usize, mut link: impl FnMut(Ob, Ob) -> Option<IsoWitness>) -> SkeletonChoice {
    let mut class_of = vec![usize::MAX; n];
    let mut to_rep: Vec<Option<IsoWitness>> = vec![None; n];
    let mut representatives = Vec::new();
    for r in 0..n {
        if class_of[r] != usize::MAX {
            continue;
        }
        let k = representatives.len();
        representatives.push(Ob(r));
        class_of[r] = k;
        to_rep[r] = link(Ob(r), Ob(r));
        for y in r + 1..n {
            if class_of[y] == usize::MAX {
                if let Some(w) = link(Ob(r), Ob(y)) {
                    class_of[y] = k;
                    to_rep[y] = Some(w);
                }
            }
        }
    }
    SkeletonChoice {
        representatives,
        class_of,
        to_rep: to_rep.into_iter().map(|w| w.expect("every object is linked to itself")).collect(),
    }
}

/// The full subcategory on the representatives together with the functor
/// that transports each morphism to the representatives.
fn quotient_by(c: &FinCategory, choice: &SkeletonChoice) -> (FinCategory, Functor) {
    let q = c.full_subcategory(&choice.representatives);
    let is_rep: Vec<bool> = {
        let mut v = vec![false; c.object_count()];
        for r in &choice.representatives {
            v[r.0] = true;
        }
        v
    };
    let mut new_index = vec![usize::MAX; c.morphism_count()];
    let mut next = 0;
    for f in c.morphisms() {
        if is_rep[c.dom(f).0] && is_rep[c.cod(f).0] {
            new_index[f.0] = next;
            next += 1;
        }
    }
    let obj_map: Vec<Ob> = choice.class_of.iter().map(|&k| Ob(k)).collect();
    let mor_map: Vec<Mor> = c
        .morphisms()
        .map(|f| {
            let (x, y) = (c.dom(f), c.cod(f));
            let t = c
                .compose3(choice.to_rep[y.0].u, f, choice.to_rep[x.0].v)
                .expect("transport along isomorphisms is defined");
            Mor(new_index[t.0])
        })
        .collect();
    let functor = Functor {
        source: c.clone(),
        target: q.clone(),
        obj_map,
        mor_map,
    };
    (q, functor)
}

/// A quotient of a category by a choice of isomorphic representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub category: FinCategory,
    /// From the original category to the quotient.
    pub functor: Functor,
    pub choice: SkeletonChoice,
}

/// Identifies isomorphic objects. Representatives are least members of
/// their class, each object is sent to its representative by the first
/// isomorphism in enumeration order.
pub fn skeleton(c: &FinCategory) -> Quotient {
    let choice = choose(c.object_count(), |rep, y| {
        find_iso(c, y, rep).map(|(u, v)| IsoWitness { from: y, to: rep, u, v })
    });
    let (category, functor) = quotient_by(c, &choice);
    Quotient {
        category,
        functor,
        choice,
    }
}

/// The Karoubi envelope followed by the quotient that identifies idempotents
/// related by `≈`.
#[derive(Clone, Debug)]
pub struct TautCompletion {
    pub category: FinCategory,
    /// Embedding into the envelope followed by the quotient.
    pub functor: Functor,
    pub karoubi: Karoubi,
    /// The choice of representatives among the objects of the envelope.
    pub choice: SkeletonChoice,
    /// The quotient functor from the envelope.
    pub quotient: Functor,
}

pub fn taut_completion(c: &FinCategory) -> TautCompletion {
    let kar = karoubi(c);
    let choice = choose(kar.idempotents.len(), |rep, y| {
        let (a, b) = (kar.idempotents[rep.0], kar.idempotents[y.0]);
        let (u, v) = idempotents_isomorphic(c, a, b).expect("objects of the envelope are idempotents")?;
        // a = u∘v and b = v∘u, so ⟨b,a,u⟩ and ⟨a,b,v⟩ are mutually inverse.
        Some(IsoWitness {
            from: y,
            to: rep,
            u: kar.morphism_of(b, a, u)?,
            v: kar.morphism_of(a, b, v)?,
        })
    });
    let (category, quotient) = quotient_by(&kar.category, &choice);
    let functor = compose_functors(&kar.embedding, &quotient).expect("envelope embedding lands in its source");
    TautCompletion {
        category,
        functor,
        karoubi: kar,
        choice,
        quotient,
    }
}

/// The bijection `χ ↦ χ⁻¹∘κ` from the isomorphisms `x → x'` onto `Aut(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaBijection {
    pub x: Ob,
    pub x_prime: Ob,
    pub kappa: Mor,
    /// `(χ, χ⁻¹∘κ)` for each isomorphism `χ`.
    pub pairs: Vec<(Mor, Mor)>,
    pub bijective: bool,
}

/// The automorphism group of an isomorphism class, with its multiplication
/// table over the indices of `elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub class: Vec<Ob>,
    pub representative: Ob,
    pub elements: Vec<Mor>,
    /// `table[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub kappas: Vec<KappaBijection>,
    /// Every set of isomorphisms between members of the class has the size
    /// of the group.
    pub uniform: bool,
}

/// Automorphism groups per isomorphism class. With `groupoid_only`, fails if
/// a hom-set between members of one class contains a non-invertible
/// morphism.
pub fn automorphism_groups(c: &FinCategory, groupoid_only: bool) -> Result<Vec<AutomorphismGroup>> {
    let classes = iso_classes(c);
    let isos = |x: Ob, y: Ob| -> Vec<(Mor, Mor)> {
        c.hom(x, y).iter().filter_map(|&f| c.inverse(f).map(|g| (f, g))).collect()
    };
    let mut out = Vec::new();
    for class in &classes.classes {
        if groupoid_only {
            for &x in class {
                for &y in class {
                    if let Some(&f) = c.hom(x, y).iter().find(|&&f| !c.is_isomorphism(f)) {
                        return Err(Error::Precondition(format!(
                            "{} is not invertible",
                            c.morphism_name(f)
                        )));
                    }
                }
            }
        }
        let rep = class[0];
        let elements: Vec<Mor> = isos(rep, rep).into_iter().map(|(f, _)| f).collect();
        let index = |f: Mor| elements.iter().position(|&g| g == f).expect("automorphisms compose");
        let table = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| index(c.comp(a, b))).collect())
            .collect();
        let mut kappas = Vec::new();
        let mut uniform = true;
        for &x in class {
            let aut_x: Vec<Mor> = isos(x, x).into_iter().map(|(f, _)| f).collect();
            for &x_prime in class {
                let between = isos(x, x_prime);
                uniform &= between.len() == elements.len();
                let kappa = between[0].0;
                let pairs: Vec<(Mor, Mor)> =
                    between.iter().map(|&(chi, chi_inv)| (chi, c.comp(chi_inv, kappa))).collect();
                let positions: Vec<usize> = pairs
                    .iter()
                    .map(|&(_, a)| aut_x.iter().position(|&g| g == a).unwrap_or(usize::MAX))
                    .collect();
                let bijective = is_bijection(positions.into_iter(), aut_x.len());
                kappas.push(KappaBijection {
                    x,
                    x_prime,
                    kappa,
                    pairs,
                    bijective,
                });
            }
        }
        out.push(AutomorphismGroup {
            class: class.clone(),
            representative: rep,
            elements,
            table,
            kappas,
            uniform,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::CategoryBuilder;

    fn walking_iso() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let a = b.object("a");
        let bb = b.object("b");
        let u = b.morphism("u", a, bb);
        let v = b.morphism("v", bb, a);
        b.compose(v, u, Mor(0)).compose(u, v, Mor(1));
        b.build().unwrap()
    }

    fn cyclic2() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let x = b.object("*");
        let s = b.morphism("s", x, x);
        b.compose(s, s, Mor(0));
        b.build().unwrap()
    }

    #[test]
    fn walking_iso_collapses() {
        let c = walking_iso();
        assert_eq!(iso_classes(&c).classes, vec![vec![Ob(0), Ob(1)]]);
        let s = skeleton(&c);
        assert_eq!(s.category.object_count(), 1);
        assert_eq!(s.category.morphism_count(), 1);
        assert!(s.category.is_skeletal());
        assert!(s.functor.is_valid());
        assert!(s.functor.is_equivalence());
        assert!(!s.functor.is_isomorphism());
        assert!(s.choice.is_coherent(&c));
        let t = taut_completion(&c);
        assert_eq!(t.category.object_count(), 1);
        assert_eq!(t.category.morphism_count(), 1);
    }

    #[test]
    fn groups_of_walking_iso_and_cyclic_group() {
        let g = automorphism_groups(&walking_iso(), true).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].elements.len(), 1);
        assert!(g[0].uniform && g[0].kappas.iter().all(|k| k.bijective));
        let z2 = automorphism_groups(&cyclic2(), true).unwrap();
        assert_eq!(z2[0].table, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn two_objects_with_two_automorphisms() {
        let c = walking_iso().product(&cyclic2());
        let g = automorphism_groups(&c, true).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].elements.len(), 2);
        for x in c.objects() {
            for y in c.objects() {
                assert_eq!(c.hom(x, y).len(), 2);
            }
        }
        assert!(g[0].uniform);
        assert_eq!(g[0].kappas.len(), 4);
        assert!(g[0].kappas.iter().all(|k| k.bijective));
    }

    #[test]
    fn groupoid_restriction_rejects_non_invertibles() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        let c = b.build().unwrap();
        assert!(automorphism_groups(&c, true).is_err());
        assert_eq!(automorphism_groups(&c, false).unwrap()[0].elements, vec![Mor(0)]);
    }

    #[test]
    fn skeleton_of_a_disjoint_union_keeps_the_idempotent() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        let idem = b.build().unwrap();
        let c = walking_iso().coproduct(&idem);
        let s = skeleton(&c);
        assert_eq!(s.category.object_count(), 2);
        assert!(s.category.morphism_by_name("e").is_some());
        assert!(s.functor.is_equivalence());
    }
}
