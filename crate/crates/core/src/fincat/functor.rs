use super::{skeleton, FinCategory, Mor, Ob};
use crate::{Error, Result};

/// A functor between finite categories, given by its object and morphism
/// maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub source: FinCategory,
    pub target: FinCategory,
    pub obj_map: Vec<Ob>,
    pub mor_map: Vec<Mor>,
}

/// A failed preservation law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorViolation {
    Domain { f: Mor },
    Codomain { f: Mor },
    Identity { object: Ob },
    Composition { g: Mor, f: Mor },
}

impl Functor {
    pub fn new(source: FinCategory, target: FinCategory, obj_map: Vec<Ob>, mor_map: Vec<Mor>) -> Result<Self> {
        let f = Functor {
            source,
            target,
            obj_map,
            mor_map,
        };
        f.check_carriers()?;
        Ok(f)
    }

    pub fn identity(c: &FinCategory) -> Self {
        Functor {
            source: c.clone(),
            target: c.clone(),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    fn check_carriers(&self) -> Result<()> {
        if self.obj_map.len() != self.source.object_count() || self.mor_map.len() != self.source.morphism_count() {
            return Err(Error::CarrierMismatch(format!(
                "maps of length {}/{} for a source with {} objects and {} morphisms",
                self.obj_map.len(),
                self.mor_map.len(),
                self.source.object_count(),
                self.source.morphism_count()
            )));
        }
        if self.obj_map.iter().any(|y| y.0 >= self.target.object_count())
            || self.mor_map.iter().any(|g| g.0 >= self.target.morphism_count())
        {
            return Err(Error::CarrierMismatch("image outside the target".into()));
        }
        Ok(())
    }

    pub fn ob(&self, x: Ob) -> Ob {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }

    /// Lists every failed preservation law.
    pub fn validate(&self) -> Result<Vec<FunctorViolation>> {
        self.check_carriers()?;
        let (c, d) = (&self.source, &self.target);
        let mut out = Vec::new();
        for f in c.morphisms() {
            if d.dom(self.mor(f)) != self.ob(c.dom(f)) {
                out.push(FunctorViolation::Domain { f });
            }
            if d.cod(self.mor(f)) != self.ob(c.cod(f)) {
                out.push(FunctorViolation::Codomain { f });
            }
        }
        for x in c.objects() {
            if self.mor(c.identity(x)) != d.identity(self.ob(x)) {
                out.push(FunctorViolation::Identity { object: x });
            }
        }
        for g in c.morphisms() {
            for f in c.morphisms() {
                if let Some(gf) = c.compose(g, f) {
                    if d.compose(self.mor(g), self.mor(f)) != Some(self.mor(gf)) {
                        out.push(FunctorViolation::Composition { g, f });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.validate(), Ok(v) if v.is_empty())
    }

    /// Injective on every hom-set.
    pub fn is_faithful(&self) -> bool {
        self.hom_maps().all(|(src, tgt)| {
            let mut hit = vec![false; tgt.len()];
            src.iter().all(|&f| {
                let pos = tgt.iter().position(|&g| g == self.mor(f));
                match pos {
                    Some(p) if !hit[p] => {
                        hit[p] = true;
                        true
                    }
                    _ => false,
                }
            })
        })
    }

    /// Surjective on every hom-set.
    pub fn is_full(&self) -> bool {
        self.hom_maps()
            .all(|(src, tgt)| tgt.iter().all(|&g| src.iter().any(|&f| self.mor(f) == g)))
    }

    fn hom_maps(&self) -> impl Iterator<Item = (&[Mor], &[Mor])> + '_ {
        let c = &self.source;
        c.objects()
            .flat_map(move |x| c.objects().map(move |y| (x, y)))
            .map(move |(x, y)| (c.hom(x, y), self.target.hom(self.ob(x), self.ob(y))))
    }

    /// The first target object not isomorphic to any image object.
    pub fn first_missed_object(&self) -> Option<Ob> {
        let d = &self.target;
        d.objects().find(|&y| {
            !self
                .obj_map
                .iter()
                .any(|&fx| fx == y || skeleton::find_iso(d, fx, y).is_some())
        })
    }

    pub fn is_essentially_surjective(&self) -> bool {
        self.first_missed_object().is_none()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_valid() && self.is_faithful() && self.is_full() && self.is_essentially_surjective()
    }

    /// Bijective on objects and on morphisms.
    pub fn is_isomorphism(&self) -> bool {
        self.is_valid()
            && is_bijection(self.obj_map.iter().map(|x| x.0), self.target.object_count())
            && is_bijection(self.mor_map.iter().map(|f| f.0), self.target.morphism_count())
    }
}

pub(crate) fn is_bijection(map: impl ExactSizeIterator<Item = usize>, target_len: usize) -> bool {
    if map.len() != target_len {
        return false;
    }
    let mut hit = vec![false; target_len];
    for y in map {
        if y >= target_len || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    true
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose_functors(f: &Functor, g: &Functor) -> Result<Functor> {
    if f.target != g.source {
        return Err(Error::CarrierMismatch(
            "target of the first functor is not the source of the second".into(),
        ));
    }
    Functor::new(
        f.source.clone(),
        g.target.clone(),
        f.obj_map.iter().map(|&x| g.ob(x)).collect(),
        f.mor_map.iter().map(|&h| g.mor(h)).collect(),
    )
}

/// Every functor `source → target`, as `(object map, morphism map)` pairs
/// in lexicographic order of the object map, then of the morphism map.
///
/// Fails when the number of candidate assignments (object maps, then the
/// product of the hom-set sizes over non-identity morphisms) exceeds `bound`.
pub fn enumerate_functors(
    source: &FinCategory,
    target: &FinCategory,
    bound: u128,
) -> Result<Vec<(Vec<Ob>, Vec<Mor>)>> {
    let (k, kt) = (source.object_count(), target.object_count());
    let obj_maps = (kt as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if obj_maps > bound {
        return Err(Error::BoundExceeded {
            what: "object maps".into(),
            size: obj_maps,
            bound,
        });
    }
    if k > 0 && kt == 0 {
        return Ok(Vec::new());
    }
    let free: Vec<Mor> = source.morphisms().filter(|&f| !source.is_identity(f)).collect();
    // Position at which each morphism gets assigned; identities come first.
    let mut position = vec![0usize; source.morphism_count()];
    for (i, &f) in free.iter().enumerate() {
        position[f.0] = i + 1;
    }
    // Composition constraints, checked once their last member is assigned.
    let mut checks: Vec<Vec<(Mor, Mor, Mor)>> = vec![Vec::new(); free.len() + 1];
    for g in source.morphisms() {
        for f in source.morphisms() {
            if let Some(gf) = source.compose(g, f) {
                let last = position[g.0].max(position[f.0]).max(position[gf.0]);
                checks[last].push((g, f, gf));
            }
        }
    }

    let mut obj_map = vec![Ob(0); k];
    let mut total: u128 = 0;
    let mut maps = Vec::new();
    loop {
        let size = free.iter().fold(1u128, |acc, &f| {
            acc.saturating_mul(target.hom(obj_map[source.dom(f).0], obj_map[source.cod(f).0]).len() as u128)
        });
        total = total.saturating_add(size);
        maps.push(obj_map.clone());
        if !advance(&mut obj_map, kt) {
            break;
        }
    }
    if total > bound {
        return Err(Error::BoundExceeded {
            what: "functor candidates".into(),
            size: total,
            bound,
        });
    }

    let mut out = Vec::new();
    for obj_map in maps {
        let mut mor_map = vec![Mor(usize::MAX); source.morphism_count()];
        for x in source.objects() {
            mor_map[source.identity(x).0] = target.identity(obj_map[x.0]);
        }
        let ok = |mor_map: &[Mor], checks: &[(Mor, Mor, Mor)]| {
            checks
                .iter()
                .all(|&(g, f, gf)| target.compose(mor_map[g.0], mor_map[f.0]) == Some(mor_map[gf.0]))
        };
        if !ok(&mor_map, &checks[0]) {
            continue;
        }
        extend(source, target, &free, &checks, &obj_map, &mut mor_map, 0, &ok, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    source: &FinCategory,
    target: &FinCategory,
    free: &[Mor],
    checks: &[Vec<(Mor, Mor, Mor)>],
    obj_map: &[Ob],
    mor_map: &mut Vec<Mor>,
    depth: usize,
    ok: &impl Fn(&[Mor], &[(Mor, Mor, Mor)]) -> bool,
    out: &mut Vec<(Vec<Ob>, Vec<Mor>)>,
) {
    if depth == free.len() {
        out.push((obj_map.to_vec(), mor_map.clone()));
        return;
    }
    let f = free[depth];
    let candidates = target.hom(obj_map[source.dom(f).0], obj_map[source.cod(f).0]);
    for &g in candidates {
        mor_map[f.0] = g;
        if ok(mor_map, &checks[depth + 1]) {
            extend(source, target, free, checks, obj_map, mor_map, depth + 1, ok, out);
        }
    }
    mor_map[f.0] = Mor(usize::MAX);
}

/// Odometer step over `base`-ary digits; false once it wraps around.
pub(crate) fn advance<T: From<usize> + Into<usize> + Copy>(digits: &mut [T], base: usize) -> bool {
    for d in digits.iter_mut() {
        let v: usize = (*d).into() + 1;
        if v < base {
            *d = T::from(v);
            return true;
        }
        *d = T::from(0);
    }
    false
}

impl From<usize> for Ob {
    fn from(v: usize) -> Self {
        Ob(v)
    }
}

impl From<Ob> for usize {
    fn from(v: Ob) -> Self {
        v.0
    }
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

    #[test]
    fn identity_functor_is_an_isomorphism() {
        let c = walking_iso();
        let id = Functor::identity(&c);
        assert!(id.is_valid());
        assert!(id.is_equivalence());
        assert!(id.is_isomorphism());
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let c = walking_iso();
        assert!(matches!(
            Functor::new(c.clone(), c, vec![Ob(0)], vec![]),
            Err(Error::CarrierMismatch(_))
        ));
    }

    #[test]
    fn functors_from_terminal_pick_objects() {
        let mut b = CategoryBuilder::new();
        b.object("*");
        let one = b.build().unwrap();
        let c = walking_iso();
        let fs = enumerate_functors(&one, &c, 1000).unwrap();
        assert_eq!(fs.len(), 2);
        // Endofunctors of the walking iso: the two constants, the identity
        // and the swap.
        assert_eq!(enumerate_functors(&c, &c, 1000).unwrap().len(), 4);
    }

    #[test]
    fn bound_is_enforced() {
        let c = walking_iso();
        assert!(matches!(
            enumerate_functors(&c, &c, 2),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn composition_checks_carriers() {
        let c = walking_iso();
        let mut b = CategoryBuilder::new();
        b.object("*");
        let one = b.build().unwrap();
        let id_c = Functor::identity(&c);
        let id_one = Functor::identity(&one);
        assert!(compose_functors(&id_c, &id_one).is_err());
        let twice = compose_functors(&id_c, &id_c).unwrap();
        assert_eq!(twice, id_c);
    }
}
