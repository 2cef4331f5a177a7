//! The acceptance criteria as library functions.
//!
//! Each criterion runs over exhaustively enumerated corpora and fixtures,
//! compares the library against an oracle computed a different way, and
//! reports a single pass/fail outcome with counts.

use crate::bridge::{
    cat_to_psg, psg_to_cat, verify_adjunction, verify_equivalence_of_catale, verify_equivalence_of_category,
    DEFAULT_SEARCH_BOUND,
};
use crate::fincat::{
    check_retract_of_splitting, check_splitting_universal, idempotent_preorder, karoubi, skeleton, taut_completion,
    FinCategory,
};
use crate::locales::{
    find_homeomorphism, is_sober, is_spatial, kolmogorov_quotient, opens, points, soberify, spatialize, unit_space,
    PointVariant,
};
use crate::psemi::{
    assoc_violations, check_identity_lemma, cod_of, dom_of, idempotent_order_psg, is_catale, spider_check_table,
    CataleFailure, PartialSemigroup,
};
use crate::smallgen::{self, dedup, fixtures, Canonize};
use crate::Result;
use std::fmt;
use std::time::{Duration, Instant};

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "associativity biconditional agrees with the spider check"),
    (2, "Karoubi envelope is valid, absolutely complete and matches the idempotent category"),
    (3, "taut completion of T(3) has one object per rank and s^r morphisms"),
    (4, "catale axioms discriminate"),
    (5, "taut categories and catales round-trip"),
    (6, "adjunction transposes are inverse bijections"),
    (7, "soberification and spatialization are fixed points"),
    (8, "literal and strict points diverge as documented"),
    (9, "lemma suites"),
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub search_bound: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            search_bound: DEFAULT_SEARCH_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({}; {:.2}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        if self.failures.len() < 5 {
            self.failures.push(what);
        } else if self.failures.len() == 5 {
            self.failures.push("…".into());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn summary(&self, extra: &str) -> String {
        let mut s = format!("{} checks, {} failures", self.checked, self.failures.iter().filter(|f| *f != "…").count());
        if !extra.is_empty() {
            s = format!("{s}; {extra}");
        }
        if !self.failures.is_empty() {
            s = format!("{s}; first: {}", self.failures.join(" | "));
        }
        s
    }
}

/// Category fixtures small enough for every suite.
pub fn category_fixtures() -> Vec<(String, FinCategory)> {
    ["walking_idempotent", "walking_iso", "terminal", "z2", "discrete2", "indiscrete2", "indiscrete3", "T1", "T2", "T3"]
        .iter()
        .map(|n| (n.to_string(), fixtures::category(n).expect("known fixture")))
        .collect()
}

/// Categories with at most `max` morphisms, one per isomorphism class.
pub fn category_corpus(max: usize) -> Result<Vec<FinCategory>> {
    Ok(dedup(smallgen::enum_categories(max, max)?).collect())
}

/// Valid partial semigroups on at most 3 elements, every labelling.
pub fn psg_corpus() -> Result<Vec<PartialSemigroup>> {
    let mut out = Vec::new();
    for n in 0..=smallgen::MAX_PSG_SIZE {
        out.extend(smallgen::enum_psgs(n)?);
    }
    Ok(out)
}

/// Taut categories with at most `max_morphisms` morphisms collected from
/// the enumerated corpus, the taut completions of its members and of the
/// category fixtures, one per isomorphism class.
pub fn taut_corpus(max_morphisms: usize) -> Result<Vec<FinCategory>> {
    let mut cands = Vec::new();
    for c in category_corpus(smallgen::MAX_CATEGORY_MORPHISMS)? {
        cands.push(taut_completion(&c).category);
        cands.push(c);
    }
    for (_, c) in category_fixtures() {
        if c.morphism_count() <= 16 {
            cands.push(taut_completion(&c).category);
        }
    }
    Ok(dedup(cands.into_iter().filter(|c| c.is_taut() && c.morphism_count() <= max_morphisms)).collect())
}

fn outcome(id: u8, start: Instant, tally: &Tally, extra: &str) -> CriterionOutcome {
    CriterionOutcome {
        id,
        title: CRITERIA[id as usize - 1].1,
        passed: tally.passed(),
        detail: tally.summary(extra),
        elapsed: start.elapsed(),
    }
}

pub fn criterion_1() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut valid = 0;
    for table in smallgen::psg_tables(3)? {
        let assoc = assoc_violations(3, &table, true).is_empty();
        let spider = spider_check_table(3, &table, 5, true)?.is_clean();
        valid += usize::from(assoc);
        t.check(assoc == spider, || format!("{table:?}: biconditional {assoc}, spider {spider}"));
    }
    Ok(outcome(1, start, &t, &format!("{valid} valid tables")))
}

pub fn criterion_2() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut cases: Vec<(String, FinCategory)> = category_corpus(smallgen::MAX_CATEGORY_MORPHISMS)?
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("enumerated #{i}"), c))
        .collect();
    cases.extend(category_fixtures());
    for (name, c) in &cases {
        let kar = karoubi(c).category;
        t.check(kar.is_valid(), || format!("{name}: envelope invalid"));
        t.check(kar.is_absolutely_complete(), || format!("{name}: envelope has an unsplit idempotent"));
        let framed = psg_to_cat(&cat_to_psg(c)).category;
        t.check(framed.canonical_form() == kar.canonical_form(), || {
            format!("{name}: idempotent category is not isomorphic to the envelope")
        });
    }
    Ok(outcome(2, start, &t, &format!("{} categories", cases.len())))
}

/// Image size of a function written as its images.
fn rank(name: &str) -> usize {
    let mut seen: Vec<char> = name.chars().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

pub fn criterion_3() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    // Oracle: functions on {0,1,2} as arrays, composed by hand.
    let funcs: Vec<[usize; 3]> = (0..27).map(|c| [c / 9, c / 3 % 3, c % 3]).collect();
    let comp = |g: &[usize; 3], f: &[usize; 3]| [g[f[0]], g[f[1]], g[f[2]]];
    let idem: Vec<[usize; 3]> = funcs.iter().copied().filter(|f| comp(f, f) == *f).collect();
    let image = |f: &[usize; 3]| {
        let mut v = f.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut ranks: Vec<usize> = idem.iter().map(image).collect();
    ranks.sort_unstable();
    ranks.dedup();
    let oracle_hom = |e: &[usize; 3], f: &[usize; 3]| funcs.iter().filter(|g| comp(f, &comp(g, e)) == **g).count();

    let t3 = fixtures::transformation_monoid(3)?;
    let taut = taut_completion(&t3);
    let c = &taut.category;
    t.check(c.object_count() == ranks.len() && ranks == vec![1, 2, 3], || {
        format!("{} objects, oracle ranks {ranks:?}", c.object_count())
    });
    let rep_names: Vec<String> = taut
        .choice
        .representatives
        .iter()
        .map(|&x| t3.morphism_name(taut.karoubi.idempotents[x.0]).to_string())
        .collect();
    let parse = |s: &str| -> [usize; 3] {
        let d: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
        [d[0], d[1], d[2]]
    };
    for x in c.objects() {
        for y in c.objects() {
            let (r, s) = (rank(&rep_names[x.0]), rank(&rep_names[y.0]));
            let got = c.hom(x, y).len();
            let oracle = oracle_hom(&parse(&rep_names[x.0]), &parse(&rep_names[y.0]));
            t.check(got == s.pow(r as u32) && got == oracle, || {
                format!("hom(rank {r}, rank {s}) has {got}, oracle {oracle}, expected {}", s.pow(r as u32))
            });
        }
    }
    Ok(outcome(3, start, &t, &format!("{} objects, {} morphisms", c.object_count(), c.morphism_count())))
}

pub fn criterion_4() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let iso = is_catale(&cat_to_psg(&fixtures::walking_iso()));
    t.check(
        matches!(iso.first(), Some(f @ CataleFailure::AmbiguousSplitting { .. }) if f.axiom() == 'b'),
        || format!("walking_iso: {:?}", iso.first()),
    );
    let idem = is_catale(&cat_to_psg(&fixtures::walking_idempotent()));
    t.check(matches!(idem.first(), Some(CataleFailure::Unsplit { .. })), || {
        format!("walking_idempotent: {:?}", idem.first())
    });
    let mut cases = category_corpus(smallgen::MAX_CATEGORY_MORPHISMS)?;
    cases.extend(taut_corpus(40)?);
    cases.extend(category_fixtures().into_iter().map(|(_, c)| c));
    let mut taut = 0;
    for c in &cases {
        let is_taut = c.is_taut();
        taut += usize::from(is_taut);
        let accepted = is_catale(&cat_to_psg(c)).is_catale();
        t.check(accepted == is_taut, || format!("taut {is_taut} but catale {accepted}:\n{c}"));
    }
    Ok(outcome(4, start, &t, &format!("{} categories, {taut} taut", cases.len())))
}

pub fn criterion_5() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let corpus = taut_corpus(12)?;
    for c in &corpus {
        let r = verify_equivalence_of_category(c)?;
        t.check(r.holds(), || format!("category round trip fails:\n{c}"));
        let r = verify_equivalence_of_catale(&cat_to_psg(c))?;
        t.check(r.holds(), || format!("catale round trip fails:\n{c}"));
    }
    Ok(outcome(5, start, &t, &format!("{} taut categories", corpus.len())))
}

pub fn criterion_6(config: &SuiteConfig) -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let cats = category_corpus(3)?;
    let psgs: Vec<PartialSemigroup> = dedup(psg_corpus()?).collect();
    let mut functors = 0;
    for c in &cats {
        for s in &psgs {
            let r = verify_adjunction(c, s, config.search_bound)?;
            functors += r.functors;
            t.check(r.holds(), || {
                format!("{} functors vs {} homs; {:?}\n{c}\n{s}", r.functors, r.homs, r.mismatches.first())
            });
        }
    }
    Ok(outcome(
        6,
        start,
        &t,
        &format!("{} categories × {} partial semigroups, {functors} functors", cats.len(), psgs.len()),
    ))
}

pub fn criterion_7() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let strict = PointVariant::Strict;
    let mut spaces = 0;
    for n in 0..=smallgen::MAX_TOPOLOGY_POINTS {
        for x in smallgen::enum_topologies(n)? {
            spaces += 1;
            let s = soberify(&x, strict)?;
            t.check(is_sober(&s, strict)?, || format!("soberification not sober:\n{x}"));
            let (kq, _) = kolmogorov_quotient(&x);
            t.check(find_homeomorphism(&s, &kq)?.is_some(), || format!("not the Kolmogorov quotient:\n{x}"));
            let ox = opens(&x)?;
            t.check(is_spatial(&ox, strict)?, || format!("opens not spatial:\n{x}"));
            t.check(ox.canonical_form() == opens(&s)?.canonical_form(), || {
                format!("opens differ after soberification:\n{x}")
            });
            t.check(is_sober(&x, strict)? == x.is_t0(), || format!("sober differs from T0:\n{x}"));
        }
    }
    let mut msls = 0;
    for n in 1..=smallgen::MAX_MSL_SIZE {
        for a in smallgen::enum_msls(n)? {
            msls += 1;
            let sp = spatialize(&a, strict)?;
            t.check(is_spatial(&sp, strict)?, || format!("spatialization not spatial:\n{a}"));
            let pa = points(&a, strict)?.space;
            let psp = points(&sp, strict)?.space;
            t.check(unit_space(&pa, strict)?.is_homeomorphism(), || format!("points not sober:\n{a}"));
            t.check(find_homeomorphism(&pa, &psp)?.is_some(), || format!("points change under spatialization:\n{a}"));
        }
    }
    Ok(outcome(7, start, &t, &format!("{spaces} topologies, {msls} meet-semilattices")))
}

pub fn criterion_8() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let (lit, strict) = (PointVariant::Literal, PointVariant::Strict);
    let c2 = fixtures::chain_msl(2)?;
    let lp = points(&c2, lit)?;
    t.check(lp.points.len() == 2 && lp.points.contains(&0), || format!("literal points {:?}", lp.points));
    let sp = points(&c2, strict)?;
    t.check(sp.points == vec![0b01], || format!("strict points {:?}", sp.points));
    let expect = [
        ("chain_msl1", 0),
        ("chain_msl3", 2),
        ("boolean_msl2", 2),
        ("boolean_msl3", 3),
        ("m3", 0),
        ("n5", 2),
    ];
    for (name, count) in expect {
        let got = points(&fixtures::msl(name)?, strict)?.points.len();
        t.check(got == count, || format!("{name}: {got} strict points, expected {count}"));
    }
    let sier = fixtures::space("sierpinski")?;
    t.check(is_sober(&sier, strict)? && !is_sober(&sier, lit)?, || "Sierpiński sobriety by variant".into());
    // The empty point is never the image of a concrete point.
    for n in 0..=3 {
        for x in smallgen::enum_topologies(n)? {
            let eta = unit_space(&x, lit)?;
            let ps = points(&opens(&x)?, lit)?;
            let empty = ps.points.iter().position(|&p| p == 0);
            t.check(empty.is_some() && eta.map.iter().all(|&q| Some(q) != empty), || {
                format!("literal unit hits the empty point:\n{x}")
            });
        }
    }
    Ok(outcome(8, start, &t, ""))
}

pub fn criterion_9() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut t = Tally::default();
    let psgs = psg_corpus()?;
    let cats = category_corpus(smallgen::MAX_CATEGORY_MORPHISMS)?;
    let taut = taut_corpus(40)?;
    let mut catales: Vec<PartialSemigroup> = psgs.iter().filter(|s| is_catale(s).is_catale()).cloned().collect();
    catales.extend(taut.iter().map(cat_to_psg));

    // Uniqueness of identities needs more than the three-element
    // biconditional: a table may define b⊛(c⊛f) while b⊛c is undefined. Such
    // tables are counted and reported, and the lemma is required wherever
    // every element has a domain and codomain.
    let shared_identities = psgs.iter().filter(|s| !check_identity_lemma(s).is_empty()).count();
    let from_categories: Vec<PartialSemigroup> = cats.iter().map(cat_to_psg).collect();
    for s in catales.iter().chain(from_categories.iter()) {
        let v = check_identity_lemma(s);
        t.check(v.is_empty(), || format!("identity uniqueness {:?} on\n{s}", v.first()));
    }
    for s in &catales {
        for f in s.elements() {
            let characterized = s.product(f, f) == Some(f) && dom_of(s, f)? == f && cod_of(s, f)? == f;
            t.check(s.is_identity(f) == characterized, || format!("identity characterization at {} in\n{s}", s.name(f)));
        }
        let order = idempotent_order_psg(s);
        for a in s.identities() {
            t.check(order.maximal.contains(&a), || format!("identity {} not maximal in\n{s}", s.name(a)));
        }
    }
    let mut with_env: Vec<FinCategory> = cats.clone();
    with_env.extend(cats.iter().map(|c| karoubi(c).category));
    with_env.extend(category_fixtures().into_iter().map(|(_, c)| c));
    for c in &with_env {
        if c.is_absolutely_complete() {
            t.check(skeleton(c).category.is_absolutely_complete(), || format!("skeleton loses splittings:\n{c}"));
        }
        for phi in c.idempotents() {
            if let Some(sp) = c.find_splitting(phi)? {
                let r = check_splitting_universal(c, &sp)?;
                t.check(r.holds(), || format!("splitting of {} not universal: {:?}", c.morphism_name(phi), r.failures));
            }
        }
        for (phi, psi) in idempotent_preorder(c).pairs() {
            if c.find_splitting(phi)?.is_some() && c.find_splitting(psi)?.is_some() {
                let r = check_retract_of_splitting(c, phi, psi)?;
                t.check(r.holds(), || {
                    format!("{} ≤ {} without a retract", c.morphism_name(phi), c.morphism_name(psi))
                });
            }
        }
    }
    Ok(outcome(
        9,
        start,
        &t,
        &format!(
            "{} partial semigroups ({} with identities sharing an end), {} catales, {} categories",
            psgs.len(),
            shared_identities,
            catales.len(),
            with_env.len()
        ),
    ))
}

pub fn run_criterion(id: u8, config: &SuiteConfig) -> Result<CriterionOutcome> {
    match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(config),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        _ => Err(crate::Error::Invalid(format!("no criterion {id}"))),
    }
}

/// Runs one criterion; an error inside it becomes its failure.
pub fn run_criterion_or_fail(id: u8, config: &SuiteConfig) -> CriterionOutcome {
    let start = Instant::now();
    run_criterion(id, config).unwrap_or_else(|e| CriterionOutcome {
        id,
        title: CRITERIA.get(id as usize - 1).map_or("unknown", |c| c.1),
        passed: false,
        detail: format!("error: {e}"),
        elapsed: start.elapsed(),
    })
}

/// Runs every criterion in order.
pub fn run_all(config: &SuiteConfig) -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|&(id, _)| run_criterion_or_fail(id, config)).collect()
}
