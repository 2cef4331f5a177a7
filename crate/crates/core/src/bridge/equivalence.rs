use super::{cat_to_psg, catale_to_cat, psg_to_cat};
use crate::fincat::{FinCategory, Functor, Mor, Ob, Splitting};
use crate::psemi::{annotations, is_catale, validate_psg_hom, PartialSemigroup, PsgHom};
use crate::{Error, Result};

/// A bijection of carriers that preserves and reflects every product.
pub fn is_psg_isomorphism(s: &PartialSemigroup, t: &PartialSemigroup, map: &[usize]) -> bool {
    let n = s.len();
    if t.len() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &b in map {
        if b >= n || hit[b] {
            return false;
        }
        hit[b] = true;
    }
    s.elements().all(|a| {
        s.elements()
            .all(|b| s.product(a, b).map(|c| map[c]) == t.product(map[a], map[b]))
    })
}

/// The inclusion of the category of a catale into the category of all its
/// idempotents.
pub fn catale_inclusion(s: &PartialSemigroup) -> Result<Functor> {
    let d = catale_to_cat(s)?;
    let ann = annotations(s)?;
    let framed = psg_to_cat(s);
    let obj_map = ann
        .identities
        .iter()
        .map(|&a| framed.object_of(a).expect("identities are idempotent"))
        .collect();
    let mor_map = s
        .elements()
        .map(|f| framed.morphism_of(ann.dom[f], ann.cod[f], f).expect("domain and codomain frame f"))
        .collect();
    Ok(Functor {
        source: d,
        target: framed.category,
        obj_map,
        mor_map,
    })
}

/// The functor induced on the category of a catale by a hom into the
/// morphisms of a taut category.
#[derive(Clone, Debug)]
pub struct TautTranspose {
    /// `G′: Idds A → C`.
    pub functor: Functor,
    /// The splitting of `G(a)` used for each object `a`.
    pub splittings: Vec<Splitting>,
    pub functor_valid: bool,
    /// `G(f) = i_b ∘ G′(f) ∘ q_a` for every `f: a → b`.
    pub factorization_holds: bool,
    /// `G` sends identities to identities.
    pub preserves_identities: bool,
    /// `G′₁ = G` on elements, so that transposing back recovers `G`.
    pub transposes_back: bool,
}

/// `G′₀(a)` is the object through which `G(a)` splits and
/// `G′₁(f) = q_b ∘ G(f) ∘ i_a`.
pub fn taut_transpose(g: &PsgHom, c: &FinCategory) -> Result<TautTranspose> {
    if let Some((x, y)) = c.first_isomorphic_pair() {
        return Err(Error::NotTaut(format!(
            "{} and {} are isomorphic",
            c.object_name(x),
            c.object_name(y)
        )));
    }
    if let Some(phi) = c.first_unsplit_idempotent() {
        return Err(Error::NotTaut(format!("{} does not split", c.morphism_name(phi))));
    }
    if g.target != cat_to_psg(c) {
        return Err(Error::CarrierMismatch("hom does not land in the morphisms of the category".into()));
    }
    let s = &g.source;
    let d = catale_to_cat(s)?;
    if !validate_psg_hom(g)?.is_valid() {
        return Err(Error::Precondition("the map is not a hom".into()));
    }
    let splittings = d
        .objects()
        .map(|a| {
            let ga = Mor(g.map[d.identity(a).0]);
            c.find_splitting(ga)?
                .ok_or_else(|| Error::NotTaut(format!("{} does not split", c.morphism_name(ga))))
        })
        .collect::<Result<Vec<_>>>()?;
    let obj_map: Vec<Ob> = splittings.iter().map(|sp| sp.through).collect();
    let mut mor_map = Vec::with_capacity(s.len());
    let mut factorization_holds = true;
    for f in d.morphisms() {
        let (a, b) = (d.dom(f).0, d.cod(f).0);
        let gf = Mor(g.map[f.0]);
        let image = c
            .compose3(splittings[b].retraction, gf, splittings[a].section)
            .ok_or_else(|| Error::Precondition(format!("{} is not framed by the splittings", c.morphism_name(gf))))?;
        factorization_holds &=
            c.compose3(splittings[b].section, image, splittings[a].retraction) == Some(gf);
        mor_map.push(image);
    }
    let preserves_identities = d.objects().all(|a| c.is_identity(Mor(g.map[d.identity(a).0])));
    let transposes_back = mor_map.iter().zip(&g.map).all(|(m, &x)| m.0 == x);
    let functor = Functor {
        source: d,
        target: c.clone(),
        obj_map,
        mor_map,
    };
    Ok(TautTranspose {
        functor_valid: functor.is_valid(),
        functor,
        splittings,
        factorization_holds,
        preserves_identities,
        transposes_back,
    })
}

/// Outcome of the two round trips between taut categories and catales.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    /// `A → ⊗(Idds A)` is an isomorphism of partial semigroups.
    pub unit_iso: bool,
    /// `Idds(⊗C) → C` is an isomorphism of categories.
    pub counit_iso: bool,
    pub counit: Functor,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.unit_iso && self.counit_iso
    }
}

/// The counit `Idds(⊗C) → C`: identity on morphisms, and each identity
/// sent to its object.
fn counit_functor(c: &FinCategory) -> Result<Functor> {
    let d = catale_to_cat(&cat_to_psg(c))?;
    let obj_map = d.objects().map(|k| c.dom(Mor(d.identity(k).0))).collect();
    let mor_map = d.morphisms().collect();
    Ok(Functor {
        source: d,
        target: c.clone(),
        obj_map,
        mor_map,
    })
}

fn unit_is_iso(s: &PartialSemigroup) -> Result<bool> {
    let d = catale_to_cat(s)?;
    let round = cat_to_psg(&d);
    let map: Vec<usize> = s.elements().collect();
    Ok(is_psg_isomorphism(s, &round, &map))
}

/// Round trips starting from a taut category.
pub fn verify_equivalence_of_category(c: &FinCategory) -> Result<EquivalenceReport> {
    if !c.is_taut() {
        return Err(Error::NotTaut("the category is not skeletal and absolutely complete".into()));
    }
    let s = cat_to_psg(c);
    let counit = counit_functor(c)?;
    Ok(EquivalenceReport {
        unit_iso: unit_is_iso(&s)?,
        counit_iso: counit.is_isomorphism(),
        counit,
    })
}

/// Round trips starting from a catale.
pub fn verify_equivalence_of_catale(s: &PartialSemigroup) -> Result<EquivalenceReport> {
    if let Some(failure) = is_catale(s).first() {
        return Err(Error::NotCatale(failure.describe(s)));
    }
    let d = catale_to_cat(s)?;
    let counit = counit_functor(&d)?;
    Ok(EquivalenceReport {
        unit_iso: unit_is_iso(s)?,
        counit_iso: counit.is_isomorphism(),
        counit,
    })
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

    #[test]
    fn envelope_round_trips() {
        let k = karoubi(&walking_idempotent()).category;
        let r = verify_equivalence_of_category(&k).unwrap();
        assert!(r.holds());
        let r = verify_equivalence_of_catale(&cat_to_psg(&k)).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn identity_hom_transposes_to_the_counit() {
        let k = karoubi(&walking_idempotent()).category;
        let s = cat_to_psg(&k);
        let t = taut_transpose(&PsgHom::identity(&s), &k).unwrap();
        assert!(t.functor_valid && t.factorization_holds);
        assert!(t.preserves_identities && t.transposes_back);
        assert!(t.functor.is_isomorphism());
    }

    #[test]
    fn identity_sent_to_a_proper_idempotent() {
        // The one-element catale sent to the copy of e on id_x.
        let kar = karoubi(&walking_idempotent());
        let k = &kar.category;
        let copy = kar.morphism_of(Mor(0), Mor(0), Mor(1)).unwrap();
        let one = PartialSemigroup::from_triples(&["a"], &[("a", "a", "a")]).unwrap();
        let g = PsgHom::new(one, cat_to_psg(k), vec![copy.0]).unwrap();
        let t = taut_transpose(&g, k).unwrap();
        assert!(t.functor_valid && t.factorization_holds);
        assert!(!t.preserves_identities);
        assert!(!t.transposes_back);
    }

    #[test]
    fn non_taut_inputs_are_rejected() {
        let c = walking_idempotent();
        assert!(matches!(verify_equivalence_of_category(&c), Err(Error::NotTaut(_))));
        let s = cat_to_psg(&c);
        assert!(matches!(taut_transpose(&PsgHom::identity(&s), &c), Err(Error::NotTaut(_))));
    }

    #[test]
    fn inclusion_is_an_equivalence() {
        let k = karoubi(&walking_idempotent()).category;
        let inc = catale_inclusion(&cat_to_psg(&k)).unwrap();
        assert!(inc.is_equivalence());
    }
}
