//! Passing between categories and partial semigroups.
//!
//! A category yields the partial semigroup of its morphisms. A partial
//! semigroup yields the category of its idempotents, whose morphisms are the
//! framed triples `⟨a, b, f⟩` with `b⊛f⊛a = f`. On catales a smaller
//! construction, with the identities as objects, gives back a taut
//! category.

mod adjunction;
mod equivalence;

pub use adjunction::{verify_adjunction, AdjunctionReport, DEFAULT_SEARCH_BOUND};
pub use equivalence::{
    catale_inclusion, is_psg_isomorphism, taut_transpose, verify_equivalence_of_catale,
    verify_equivalence_of_category, EquivalenceReport, TautTranspose,
};

use crate::fincat::{FinCategory, Functor, Mor, Morphism, Ob};
use crate::psemi::{annotations, is_catale, PartialSemigroup, PsgHom};
use crate::{Error, Result};

/// The morphisms of `c` under composition, defined on composable pairs.
pub fn cat_to_psg(c: &FinCategory) -> PartialSemigroup {
    let names = c.morphisms().map(|f| c.morphism_name(f).to_string()).collect();
    PartialSemigroup::from_fn(names, |g, f| c.compose(Mor(g), Mor(f)).map(|h| h.0))
}

/// The morphism part of a functor, as a hom of partial semigroups.
pub fn cat_to_psg_hom(f: &Functor) -> PsgHom {
    PsgHom {
        source: cat_to_psg(&f.source),
        target: cat_to_psg(&f.target),
        map: f.mor_map.iter().map(|g| g.0).collect(),
    }
}

/// The category of idempotents of a partial semigroup, with the frame of
/// every morphism.
#[derive(Clone, Debug)]
pub struct Framed {
    pub category: FinCategory,
    /// The idempotent behind each object.
    pub idempotents: Vec<usize>,
    /// `(a, b, f)` behind each morphism.
    pub frames: Vec<(usize, usize, usize)>,
    object_of: Vec<Option<Ob>>,
}

impl Framed {
    pub fn object_of(&self, a: usize) -> Option<Ob> {
        self.object_of[a]
    }

    /// The morphism `⟨a, b, f⟩`, if it is framed.
    pub fn morphism_of(&self, a: usize, b: usize, f: usize) -> Option<Mor> {
        let hom = self.category.hom(self.object_of(a)?, self.object_of(b)?);
        hom.binary_search_by_key(&f, |&h| self.frames[h.0].2).ok().map(|k| hom[k])
    }

    /// `ε⟨a, b, f⟩ = f`.
    pub fn underlying(&self, h: Mor) -> usize {
        self.frames[h.0].2
    }
}

/// Objects are the idempotents; `hom(a, b)` holds `⟨a, b, f⟩` for each
/// `f` with `b⊛f⊛a = f`. Morphisms are listed by domain, codomain and
/// underlying element.
pub fn psg_to_cat(s: &PartialSemigroup) -> Framed {
    let idempotents = s.idempotents();
    let mut object_of = vec![None; s.len()];
    for (k, &a) in idempotents.iter().enumerate() {
        object_of[a] = Some(Ob(k));
    }
    let mut frames = Vec::new();
    let mut morphisms = Vec::new();
    for (i, &a) in idempotents.iter().enumerate() {
        for (j, &b) in idempotents.iter().enumerate() {
            for f in s.elements() {
                if s.product3(b, f, a) == Some(f) {
                    frames.push((a, b, f));
                    morphisms.push(Morphism {
                        name: format!("<{},{},{}>", s.name(a), s.name(b), s.name(f)),
                        dom: Ob(i),
                        cod: Ob(j),
                    });
                }
            }
        }
    }
    let k = idempotents.len();
    let mut homs: Vec<Vec<Mor>> = vec![Vec::new(); k * k];
    for (h, m) in morphisms.iter().enumerate() {
        homs[m.dom.0 * k + m.cod.0].push(Mor(h));
    }
    let find = |a: Ob, b: Ob, f: usize| -> Option<Mor> {
        let hom = &homs[a.0 * k + b.0];
        hom.binary_search_by_key(&f, |&h| frames[h.0].2).ok().map(|i| hom[i])
    };
    let identities = idempotents
        .iter()
        .enumerate()
        .map(|(i, &a)| find(Ob(i), Ob(i), a).expect("a⊛a⊛a = a"))
        .collect();
    let objects = idempotents.iter().map(|&a| s.name(a).to_string()).collect();
    let category = FinCategory::from_fn(objects, morphisms.clone(), identities, |g, f| {
        let gf = s.product(frames[g.0].2, frames[f.0].2)?;
        find(morphisms[f.0].dom, morphisms[g.0].cod, gf)
    });
    Framed {
        category,
        idempotents,
        frames,
        object_of,
    }
}

/// The category of a catale: identities as objects, every element a
/// morphism from its domain to its codomain, composition by `⊛`.
///
/// Morphism `k` of the result is element `k`, and object `k` is the `k`-th
/// identity in element order.
pub fn catale_to_cat(s: &PartialSemigroup) -> Result<FinCategory> {
    let report = is_catale(s);
    if let Some(failure) = report.first() {
        return Err(Error::NotCatale(failure.describe(s)));
    }
    let ann = annotations(s)?;
    let mut object_of = vec![usize::MAX; s.len()];
    for (k, &a) in ann.identities.iter().enumerate() {
        object_of[a] = k;
    }
    let objects = ann.identities.iter().map(|&a| s.name(a).to_string()).collect();
    let morphisms = s
        .elements()
        .map(|f| Morphism {
            name: s.name(f).to_string(),
            dom: Ob(object_of[ann.dom[f]]),
            cod: Ob(object_of[ann.cod[f]]),
        })
        .collect();
    let identities = ann.identities.iter().map(|&a| Mor(a)).collect();
    Ok(FinCategory::from_fn(objects, morphisms, identities, |g, f| {
        s.product(g.0, f.0).map(Mor)
    }))
}

/// `η: C → ⇑⊗C`, `x ↦ id_x`, `h ↦ ⟨id_{dom h}, id_{cod h}, h⟩`.
pub fn unit_cat(c: &FinCategory) -> Functor {
    let framed = psg_to_cat(&cat_to_psg(c));
    unit_into(c, &framed)
}

pub(crate) fn unit_into(c: &FinCategory, framed: &Framed) -> Functor {
    let obj_map = c
        .objects()
        .map(|x| framed.object_of(c.identity(x).0).expect("identities are idempotent"))
        .collect();
    let mor_map = c
        .morphisms()
        .map(|h| {
            framed
                .morphism_of(c.identity(c.dom(h)).0, c.identity(c.cod(h)).0, h.0)
                .expect("identities frame every morphism")
        })
        .collect();
    Functor {
        source: c.clone(),
        target: framed.category.clone(),
        obj_map,
        mor_map,
    }
}

/// `ε: ⊗⇑A → A`, `⟨a, b, f⟩ ↦ f`.
pub fn counit_psg(s: &PartialSemigroup) -> PsgHom {
    let framed = psg_to_cat(s);
    PsgHom {
        source: cat_to_psg(&framed.category),
        target: s.clone(),
        map: framed.frames.iter().map(|&(_, _, f)| f).collect(),
    }
}

/// `F′ = ε∘F₁` for a functor `F: C → ⇑A`.
pub fn transpose_right(f: &Functor, s: &PartialSemigroup) -> Result<PsgHom> {
    let framed = psg_to_cat(s);
    if f.target != framed.category {
        return Err(Error::CarrierMismatch("functor does not land in the category of idempotents".into()));
    }
    Ok(PsgHom {
        source: cat_to_psg(&f.source),
        target: s.clone(),
        map: transpose_right_map(&f.mor_map, &framed),
    })
}

pub(crate) fn transpose_right_map(mor_map: &[Mor], framed: &Framed) -> Vec<usize> {
    mor_map.iter().map(|&h| framed.underlying(h)).collect()
}

/// `F₀(x) = G(id_x)` and `F₁(h) = ⟨G(id_{dom h}), G(id_{cod h}), G(h)⟩`
/// for a hom `G: ⊗C → A`.
pub fn transpose_left(c: &FinCategory, g: &PsgHom) -> Result<Functor> {
    if g.source != cat_to_psg(c) {
        return Err(Error::CarrierMismatch("hom does not start at the morphisms of the category".into()));
    }
    let framed = psg_to_cat(&g.target);
    let (obj_map, mor_map) = transpose_left_maps(c, &g.map, &framed).ok_or_else(|| {
        Error::Precondition("the map does not preserve the products of identities".into())
    })?;
    Ok(Functor {
        source: c.clone(),
        target: framed.category,
        obj_map,
        mor_map,
    })
}

pub(crate) fn transpose_left_maps(c: &FinCategory, map: &[usize], framed: &Framed) -> Option<(Vec<Ob>, Vec<Mor>)> {
    let obj_map = c
        .objects()
        .map(|x| framed.object_of(map[c.identity(x).0]))
        .collect::<Option<Vec<_>>>()?;
    let mor_map = c
        .morphisms()
        .map(|h| {
            framed.morphism_of(
                map[c.identity(c.dom(h)).0],
                map[c.identity(c.cod(h)).0],
                map[h.0],
            )
        })
        .collect::<Option<Vec<_>>>()?;
    Some((obj_map, mor_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{karoubi, CategoryBuilder};

    fn walking_idempotent() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        b.build().unwrap()
    }

    fn walking_iso() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let a = b.object("a");
        let bb = b.object("b");
        let u = b.morphism("u", a, bb);
        let v = b.morphism("v", bb, a);
        b.compose(v, u, Mor(0)).compose(u, v, Mor(1));
        b.build().unwrap()
    }

    #[test]
    fn psg_of_walking_iso() {
        let s = cat_to_psg(&walking_iso());
        assert!(s.is_valid());
        let (u, v) = (s.index_of("u").unwrap(), s.index_of("v").unwrap());
        assert_eq!(s.product(u, v), s.index_of("id_b"));
        assert_eq!(s.product(v, u), s.index_of("id_a"));
        assert_eq!(s.product(u, u), None);
        assert_eq!(s.identities().len(), 2);
    }

    #[test]
    fn idempotent_category_is_the_envelope() {
        let c = walking_idempotent();
        let framed = psg_to_cat(&cat_to_psg(&c));
        assert!(framed.category.is_valid());
        assert_eq!(framed.category, karoubi(&c).category);
    }

    #[test]
    fn no_idempotents_means_empty() {
        let s = PartialSemigroup::from_triples(&["e"], &[]).unwrap();
        let framed = psg_to_cat(&s);
        assert_eq!(framed.category.object_count(), 0);
        let eps = counit_psg(&s);
        assert!(eps.source.is_empty() && eps.is_valid());
    }

    #[test]
    fn unit_of_walking_idempotent_misses_e() {
        let c = walking_idempotent();
        let eta = unit_cat(&c);
        assert!(eta.is_valid() && eta.is_full() && eta.is_faithful());
        assert!(!eta.is_essentially_surjective());
    }

    #[test]
    fn transposes_invert_each_other_on_the_unit() {
        let c = walking_idempotent();
        let s = cat_to_psg(&c);
        let eta = unit_cat(&c);
        let g = transpose_right(&eta, &s).unwrap();
        assert_eq!(g, PsgHom::identity(&s));
        assert_eq!(transpose_left(&c, &g).unwrap(), eta);
    }

    #[test]
    fn catale_to_cat_rejects_non_catales() {
        assert!(matches!(catale_to_cat(&cat_to_psg(&walking_iso())), Err(Error::NotCatale(_))));
        let one = PartialSemigroup::from_triples(&["a"], &[("a", "a", "a")]).unwrap();
        let t = catale_to_cat(&one).unwrap();
        assert_eq!((t.object_count(), t.morphism_count()), (1, 1));
    }
}
