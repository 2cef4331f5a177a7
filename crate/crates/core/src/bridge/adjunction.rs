use super::{cat_to_psg, psg_to_cat, transpose_left_maps, transpose_right_map};
use crate::fincat::{enumerate_functors, FinCategory};
use crate::psemi::{enumerate_psg_homs, PartialSemigroup};
use crate::Result;
use std::collections::HashSet;

/// Default cap on the number of candidate maps an exhaustive search visits.
pub const DEFAULT_SEARCH_BOUND: u128 = 10_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjunctionReport {
    /// Functors `C → ⇑A`.
    pub functors: usize,
    /// Homs `⊗C → A`.
    pub homs: usize,
    pub mismatches: Vec<String>,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.functors == self.homs && self.mismatches.is_empty()
    }
}

/// Enumerates both hom-sets and checks that the transposes are mutually
/// inverse bijections between them.
pub fn verify_adjunction(c: &FinCategory, s: &PartialSemigroup, bound: u128) -> Result<AdjunctionReport> {
    let framed = psg_to_cat(s);
    let cs = cat_to_psg(c);
    let functors = enumerate_functors(c, &framed.category, bound)?;
    let homs = enumerate_psg_homs(&cs, s, bound)?;
    let hom_set: HashSet<&Vec<usize>> = homs.iter().collect();
    let functor_set: HashSet<_> = functors.iter().collect();
    let mut mismatches = Vec::new();

    for (k, (om, mm)) in functors.iter().enumerate() {
        let g = transpose_right_map(mm, &framed);
        if !hom_set.contains(&g) {
            mismatches.push(format!("functor #{k} transposes to a non-hom {g:?}"));
            continue;
        }
        match transpose_left_maps(c, &g, &framed) {
            Some(back) if &back.0 == om && &back.1 == mm => {}
            _ => mismatches.push(format!("functor #{k} does not survive the round trip")),
        }
    }
    for g in &homs {
        match transpose_left_maps(c, g, &framed) {
            Some(f) => {
                if !functor_set.contains(&f) {
                    mismatches.push(format!("hom {g:?} transposes to a non-functor"));
                } else if &transpose_right_map(&f.1, &framed) != g {
                    mismatches.push(format!("hom {g:?} does not survive the round trip"));
                }
            }
            None => mismatches.push(format!("hom {g:?} has no transpose")),
        }
    }
    Ok(AdjunctionReport {
        functors: functors.len(),
        homs: homs.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::CategoryBuilder;

    #[test]
    fn terminal_against_one_element_monoid() {
        let mut b = CategoryBuilder::new();
        b.object("*");
        let one = b.build().unwrap();
        let m = PartialSemigroup::from_triples(&["a"], &[("a", "a", "a")]).unwrap();
        let r = verify_adjunction(&one, &m, DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!((r.functors, r.homs), (1, 1));
        assert!(r.holds());
    }

    #[test]
    fn walking_idempotent_against_itself() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        b.compose(e, e, e);
        let c = b.build().unwrap();
        let s = cat_to_psg(&c);
        let r = verify_adjunction(&c, &s, DEFAULT_SEARCH_BOUND).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
        assert!(r.functors > 0);
    }
}
