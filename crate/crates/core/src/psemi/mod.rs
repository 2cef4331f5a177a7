//! Partial semigroups as partial operation tables.
//!
//! Elements are indices `0..n`; the product `a ⊛ b` is stored at `a * n + b`.
//! A table is a partial semigroup when, for all `a, b, c`,
//! `a⊛b↓ ∧ b⊛c↓` holds exactly when both `(a⊛b)⊛c` and `a⊛(b⊛c)` are
//! defined, and then they agree.

mod catale;

pub use catale::{
    annotations, check_identity_lemma, cod_of, dom_of, enumerate_psg_homs, idempotent_order_psg, is_catale, validate_psg_hom,
    CataleAnnotations, CataleFailure, CataleReport, IdempotentOrder, IdentityLemmaViolation, PsgHom,
    PsgHomReport,
};

use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSemigroup {
    elements: Vec<String>,
    table: Vec<Option<usize>>,
}

/// A triple on which the associativity biconditional fails.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PsgViolation {
    /// Exactly one side of the definedness biconditional holds.
    Definedness { a: usize, b: usize, c: usize },
    /// Both bracketings are defined but differ.
    Mismatch { a: usize, b: usize, c: usize },
}

impl PsgViolation {
    pub fn describe(&self, s: &PartialSemigroup) -> String {
        let n = |x: &usize| s.name(*x).to_string();
        match self {
            Self::Definedness { a, b, c } => {
                let lhs = s.defined(*a, *b) && s.defined(*b, *c);
                if lhs {
                    format!(
                        "{0}⊛{1} and {1}⊛{2} are defined but ({0}⊛{1})⊛{2} or {0}⊛({1}⊛{2}) is not",
                        n(a),
                        n(b),
                        n(c)
                    )
                } else {
                    format!(
                        "({0}⊛{1})⊛{2} and {0}⊛({1}⊛{2}) are defined but {0}⊛{1} or {1}⊛{2} is not",
                        n(a),
                        n(b),
                        n(c)
                    )
                }
            }
            Self::Mismatch { a, b, c } => format!("({0}⊛{1})⊛{2} ≠ {0}⊛({1}⊛{2})", n(a), n(b), n(c)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PsgReport {
    pub violations: Vec<PsgViolation>,
}

impl PsgReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A word and an overlapping partition of it on which the spider form
/// fails: the composite of the whole word is defined iff every block is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderViolation {
    pub word: Vec<usize>,
    /// Cut points `0 < n₁ < … < n_m = len - 1`; block `k` spans
    /// `word[n_{k-1} ..= n_k]`.
    pub cuts: Vec<usize>,
    pub whole_defined: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpiderReport {
    pub words_checked: usize,
    pub violations: Vec<SpiderViolation>,
}

impl SpiderReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl PartialSemigroup {
    pub fn new(elements: Vec<String>, table: Vec<Option<usize>>) -> Result<Self> {
        let n = elements.len();
        if table.len() != n * n {
            return Err(Error::Invalid(format!("product table has {} entries, expected {}", table.len(), n * n)));
        }
        if table.iter().flatten().any(|&c| c >= n) {
            return Err(Error::Invalid("product outside the carrier".into()));
        }
        Ok(PartialSemigroup { elements, table })
    }

    pub fn from_fn(elements: Vec<String>, mut product: impl FnMut(usize, usize) -> Option<usize>) -> Self {
        let n = elements.len();
        let table = (0..n * n).map(|k| product(k / n, k % n)).collect();
        Self::new(elements, table).expect("constructed table is in range")
    }

    /// Builds a table from `(a, b, a⊛b)` name triples.
    pub fn from_triples(elements: &[&str], products: &[(&str, &str, &str)]) -> Result<Self> {
        let idx = |s: &str| {
            elements
                .iter()
                .position(|e| *e == s)
                .ok_or_else(|| Error::Invalid(format!("unknown element `{s}`")))
        };
        let n = elements.len();
        let mut table = vec![None; n * n];
        for &(a, b, c) in products {
            table[idx(a)? * n + idx(b)?] = Some(idx(c)?);
        }
        Self::new(elements.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.elements.len()
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

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.elements.len() + b]
    }

    pub fn defined(&self, a: usize, b: usize) -> bool {
        self.product(a, b).is_some()
    }

    /// `a⊛b⊛c`, defined when both bracketings are defined and agree.
    pub fn product3(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let left = self.product(self.product(a, b)?, c)?;
        let right = self.product(a, self.product(b, c)?)?;
        (left == right).then_some(left)
    }

    pub fn validate(&self) -> PsgReport {
        PsgReport {
            violations: assoc_violations(self.len(), &self.table, false),
        }
    }

    pub fn is_valid(&self) -> bool {
        assoc_violations(self.len(), &self.table, true).is_empty()
    }

    /// Checks the spider form on every word of length `3..=maxlen`.
    pub fn spider_check(&self, maxlen: usize) -> Result<SpiderReport> {
        spider_check_table(self.len(), &self.table, maxlen, false)
    }

    /// Elements with `a⊛a = a`.
    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.product(a, a) == Some(a)).collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.product(a, a) == Some(a)
    }

    /// Elements `a` with `a⊛a↓` that act as a two-sided unit wherever
    /// they compose.
    pub fn identities(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_identity(a)).collect()
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.defined(a, a)
            && self.elements().all(|f| {
                self.product(f, a).is_none_or(|fa| fa == f) && self.product(a, f).is_none_or(|af| af == f)
            })
    }

    /// Same table with elements permuted: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let elements = (0..n).map(|p| self.elements[inv[p]].clone()).collect();
        Self::from_fn(elements, |x, y| self.product(inv[x], inv[y]).map(|c| perm[c]))
    }
}

/// Violations of the associativity biconditional on a raw table.
pub fn assoc_violations(n: usize, table: &[Option<usize>], first_only: bool) -> Vec<PsgViolation> {
    let p = |a: usize, b: usize| table[a * n + b];
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = p(a, b);
            for c in 0..n {
                let bc = p(b, c);
                let lhs = ab.is_some() && bc.is_some();
                let left = ab.and_then(|ab| p(ab, c));
                let right = bc.and_then(|bc| p(a, bc));
                let violation = match (left, right) {
                    (Some(l), Some(r)) if l != r => Some(PsgViolation::Mismatch { a, b, c }),
                    (Some(_), Some(_)) if !lhs => Some(PsgViolation::Definedness { a, b, c }),
                    (Some(_), Some(_)) => None,
                    _ if lhs => Some(PsgViolation::Definedness { a, b, c }),
                    _ => None,
                };
                if let Some(v) = violation {
                    out.push(v);
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Largest number of words of maximal length the spider check will build.
pub const SPIDER_WORD_BOUND: u128 = 1 << 24;

/// The spider check on a raw table.
///
/// A word is taken to compose when every bracketing of every contiguous
/// sub-word is defined and the bracketings of each sub-word agree. On words
/// of length 3 this is exactly the right-hand side of the associativity
/// biconditional.
pub fn spider_check_table(n: usize, table: &[Option<usize>], maxlen: usize, first_only: bool) -> Result<SpiderReport> {
    if maxlen < 3 {
        return Err(Error::Precondition(format!("word length bound {maxlen} is below 3")));
    }
    let mut report = SpiderReport::default();
    if n == 0 {
        return Ok(report);
    }
    let words = (n as u128).checked_pow(maxlen as u32).unwrap_or(u128::MAX);
    if words > SPIDER_WORD_BOUND {
        return Err(Error::BoundExceeded {
            what: "spider words".into(),
            size: words,
            bound: SPIDER_WORD_BOUND,
        });
    }
    // values[l][code]: composite of the word of length l with base-n code.
    let mut values: Vec<Vec<Option<usize>>> = vec![Vec::new(); maxlen + 1];
    values[1] = (0..n).map(Some).collect();
    let mut pow = vec![1usize; maxlen + 1];
    for l in 1..=maxlen {
        pow[l] = pow[l - 1] * n;
    }
    // Letter i (0-based from the left) of a word of length l.
    let sub = |code: usize, l: usize, i: usize, j: usize| (code / pow[l - 1 - j]) % pow[j - i + 1];
    for l in 2..=maxlen {
        let mut cur = vec![None; pow[l]];
        for (code, slot) in cur.iter_mut().enumerate() {
            let mut value = None;
            let mut ok = true;
            for k in 1..l {
                let left = values[k][sub(code, l, 0, k - 1)];
                let right = values[l - k][sub(code, l, k, l - 1)];
                let v = match (left, right) {
                    (Some(x), Some(y)) => table[x * n + y],
                    _ => None,
                };
                match (v, value) {
                    (None, _) => ok = false,
                    (Some(v), None) => value = Some(v),
                    (Some(v), Some(w)) if v != w => ok = false,
                    _ => {}
                }
                if !ok {
                    break;
                }
            }
            *slot = if ok { value } else { None };
        }
        values[l] = cur;
        if l < 3 {
            continue;
        }
        // Overlapping partitions: choose the interior cut points among
        // positions 1..l-1; block endpoints are shared.
        for code in 0..pow[l] {
            report.words_checked += 1;
            let whole = values[l][code].is_some();
            for mask in 0u64..(1u64 << (l - 2)) {
                let mut cuts: Vec<usize> = (1..l - 1).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
                cuts.push(l - 1);
                let mut start = 0;
                let blocks = cuts.iter().all(|&end| {
                    let len = end - start + 1;
                    let d = values[len][sub(code, l, start, end)].is_some();
                    start = end;
                    d
                });
                if blocks != whole {
                    let word = (0..l).map(|i| sub(code, l, i, i)).collect();
                    report.violations.push(SpiderViolation {
                        word,
                        cuts,
                        whole_defined: whole,
                    });
                    if first_only {
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

impl fmt::Display for PartialSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let width = self.elements.iter().map(|e| e.chars().count()).max().unwrap_or(1).max(1);
        write!(f, "{:>width$} |", "⊛")?;
        for b in 0..n {
            write!(f, " {:>width$}", self.elements[b])?;
        }
        writeln!(f)?;
        for a in 0..n {
            write!(f, "{:>width$} |", self.elements[a])?;
            for b in 0..n {
                match self.product(a, b) {
                    Some(c) => write!(f, " {:>width$}", self.elements[c])?,
                    None => write!(f, " {:>width$}", "·")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
