//! Canonical labelings by colour refinement and individualization.
//!
//! A structure is flattened into a coloured carrier with binary relations and
//! partial binary operations. The search refines colours until stable,
//! individualizes each member of the first non-singleton cell in turn, and
//! keeps the least encoding over all leaves. Every step depends only on the
//! colours, so isomorphic inputs reach the same minimum.

use crate::fincat::{FinCategory, Mor, Morphism, Ob};
use crate::locales::{FinSpace, MeetSemilattice};
use crate::psemi::PartialSemigroup;

const ABSENT: u32 = u32::MAX;

/// A coloured carrier with binary relations and partial operations, each
/// stored as an `n × n` table.
#[derive(Clone, Debug)]
pub struct Flat {
    pub n: usize,
    pub colors: Vec<u32>,
    /// Nonzero entries mark related pairs; the value is part of the encoding.
    pub relations: Vec<Vec<u32>>,
    /// `ABSENT` or an element index.
    pub operations: Vec<Vec<u32>>,
}

/// An encoding that is equal for two structures exactly when they are
/// isomorphic, with the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub code: Vec<u32>,
}

/// Structures that can be flattened and relabeled.
pub trait Canonize: Sized {
    fn flatten(&self) -> Flat;

    /// `perm[i]` is the new position of carrier element `i` of the flat form.
    fn relabel_flat(&self, perm: &[usize]) -> Self;

    fn canonical_form(&self) -> CanonicalForm {
        canonical_labeling(&self.flatten()).0
    }

    /// The structure relabeled into canonical order.
    fn canonicalize(&self) -> Self {
        let (_, perm) = canonical_labeling(&self.flatten());
        self.relabel_flat(&perm)
    }
}

fn encode(flat: &Flat, perm: &[usize]) -> Vec<u32> {
    let n = flat.n;
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = Vec::with_capacity(1 + n + (flat.relations.len() + flat.operations.len()) * n * n);
    out.push(n as u32);
    out.extend(inv.iter().map(|&i| flat.colors[i]));
    for r in &flat.relations {
        for &i in &inv {
            out.extend(inv.iter().map(|&j| r[i * n + j]));
        }
    }
    for op in &flat.operations {
        for &i in &inv {
            out.extend(inv.iter().map(|&j| match op[i * n + j] {
                ABSENT => ABSENT,
                v => perm[v as usize] as u32,
            }));
        }
    }
    out
}

/// Replaces each colour by the rank of its key among all keys.
fn rerank<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let colors = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("present") as u32)
        .collect();
    (colors, sorted.len())
}

type Signature = (u32, Vec<(u32, u32, u32, u32)>);

fn refine(flat: &Flat, mut colors: Vec<u32>) -> Vec<u32> {
    let n = flat.n;
    let mut count = rerank(&colors).1;
    loop {
        let mut sig: Vec<Signature> = colors.iter().map(|&c| (c, Vec::new())).collect();
        for (k, r) in flat.relations.iter().enumerate() {
            let k = k as u32;
            for i in 0..n {
                for j in 0..n {
                    let v = r[i * n + j];
                    if v != 0 {
                        sig[i].1.push((k, 0, colors[j], v));
                        sig[j].1.push((k, 1, colors[i], v));
                    }
                }
            }
        }
        for (k, op) in flat.operations.iter().enumerate() {
            let k = 1000 + 3 * k as u32;
            for i in 0..n {
                for j in 0..n {
                    let v = op[i * n + j];
                    if v != ABSENT {
                        let v = v as usize;
                        sig[i].1.push((k, colors[j], colors[v], 0));
                        sig[j].1.push((k + 1, colors[i], colors[v], 0));
                        sig[v].1.push((k + 2, colors[i], colors[j], 0));
                    }
                }
            }
        }
        for s in &mut sig {
            s.1.sort_unstable();
        }
        let (next, next_count) = rerank(&sig);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

struct SearchState {
    first: Option<(Vec<u32>, Vec<usize>)>,
    best: Option<(Vec<u32>, Vec<usize>)>,
    /// Automorphisms found so far, as maps on the carrier.
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Orbits of the group generated by the known automorphisms that fix
/// every individualized element.
fn orbits(n: usize, autos: &[Vec<usize>], prefix: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for g in autos.iter().filter(|g| prefix.iter().all(|&p| g[p] == p)) {
        for (x, &y) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

fn search(flat: &Flat, colors: Vec<u32>, prefix: &mut Vec<usize>, state: &mut SearchState) {
    let colors = refine(flat, colors);
    let n = flat.n;
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
    let Some(cell) = target else {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let code = encode(flat, &perm);
        // Two leaves with the same encoding differ by an automorphism.
        for (c, p) in [&state.first, &state.best].into_iter().flatten() {
            if *c == code {
                let mut inv = vec![0; n];
                for (x, &q) in p.iter().enumerate() {
                    inv[q] = x;
                }
                let g: Vec<usize> = perm.iter().map(|&q| inv[q]).collect();
                if g.iter().enumerate().any(|(x, &y)| x != y) {
                    state.autos.push(g);
                }
                break;
            }
        }
        if state.first.is_none() {
            state.first = Some((code.clone(), perm.clone()));
        }
        if state.best.as_ref().is_none_or(|(b, _)| code < *b) {
            state.best = Some((code, perm));
        }
        return;
    };
    let mut explored: Vec<usize> = Vec::new();
    for x in (0..n).filter(|&x| colors[x] as usize == cell) {
        let orbit = orbits(n, &state.autos, prefix);
        if explored.iter().any(|&y| orbit[y] == orbit[x]) {
            continue;
        }
        explored.push(x);
        let keys: Vec<(u32, bool)> = colors.iter().enumerate().map(|(y, &c)| (c, y != x)).collect();
        prefix.push(x);
        search(flat, rerank(&keys).0, prefix, state);
        prefix.pop();
    }
}

/// The least encoding over the search tree and the permutation reaching it.
pub fn canonical_labeling(flat: &Flat) -> (CanonicalForm, Vec<usize>) {
    if flat.n == 0 {
        return (CanonicalForm { code: encode(flat, &[]) }, Vec::new());
    }
    let mut state = SearchState {
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search(flat, rerank(&flat.colors).0, &mut Vec::new(), &mut state);
    let (code, perm) = state.best.expect("at least one leaf");
    (CanonicalForm { code }, perm)
}

/// Whether two structures have the same canonical form.
pub fn isomorphic<S: Canonize>(a: &S, b: &S) -> bool {
    a.canonical_form() == b.canonical_form()
}

impl Canonize for PartialSemigroup {
    fn flatten(&self) -> Flat {
        Flat {
            n: self.len(),
            colors: vec![0; self.len()],
            relations: Vec::new(),
            operations: vec![self
                .table()
                .iter()
                .map(|c| c.map_or(ABSENT, |c| c as u32))
                .collect()],
        }
    }

    fn relabel_flat(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
    }
}

/// Carrier: objects, then morphisms.
impl Canonize for FinCategory {
    fn flatten(&self) -> Flat {
        let k = self.object_count();
        let n = k + self.morphism_count();
        let mut dom = vec![0; n * n];
        let mut cod = vec![0; n * n];
        let mut ident = vec![0; n * n];
        let mut op = vec![ABSENT; n * n];
        for f in self.morphisms() {
            dom[(k + f.0) * n + self.dom(f).0] = 1;
            cod[(k + f.0) * n + self.cod(f).0] = 1;
            for g in self.morphisms() {
                if let Some(h) = self.compose(g, f) {
                    op[(k + g.0) * n + k + f.0] = (k + h.0) as u32;
                }
            }
        }
        for x in self.objects() {
            ident[x.0 * n + k + self.identity(x).0] = 1;
        }
        Flat {
            n,
            colors: (0..n).map(|i| u32::from(i >= k)).collect(),
            relations: vec![dom, cod, ident],
            operations: vec![op],
        }
    }

    fn relabel_flat(&self, perm: &[usize]) -> Self {
        let k = self.object_count();
        let m = self.morphism_count();
        let ob = |x: Ob| Ob(perm[x.0]);
        let mo = |f: Mor| Mor(perm[k + f.0] - k);
        let mut objects = vec![String::new(); k];
        let mut identities = vec![Mor(0); k];
        for x in self.objects() {
            objects[ob(x).0] = self.object_name(x).to_string();
            identities[ob(x).0] = mo(self.identity(x));
        }
        let mut morphisms = vec![
            Morphism {
                name: String::new(),
                dom: Ob(0),
                cod: Ob(0)
            };
            m
        ];
        let mut table = vec![None; m * m];
        for f in self.morphisms() {
            morphisms[mo(f).0] = Morphism {
                name: self.morphism_name(f).to_string(),
                dom: ob(self.dom(f)),
                cod: ob(self.cod(f)),
            };
            for g in self.morphisms() {
                table[mo(g).0 * m + mo(f).0] = self.compose(g, f).map(mo);
            }
        }
        FinCategory::from_parts(objects, morphisms, identities, table).expect("permuted parts stay in range")
    }
}

/// A finite topology is fixed by the least open around each point.
impl Canonize for FinSpace {
    fn flatten(&self) -> Flat {
        let n = self.len();
        let mut near = vec![0; n * n];
        for x in 0..n {
            let nb = self.neighbourhood(x);
            for y in 0..n {
                near[x * n + y] = (nb >> y & 1) as u32;
            }
        }
        Flat {
            n,
            colors: vec![0; n],
            relations: vec![near],
            operations: Vec::new(),
        }
    }

    fn relabel_flat(&self, perm: &[usize]) -> Self {
        self.relabel(perm).sorted()
    }
}

impl Canonize for MeetSemilattice {
    fn flatten(&self) -> Flat {
        let n = self.len();
        Flat {
            n,
            colors: vec![0; n],
            relations: vec![(0..n * n).map(|k| u32::from(self.leq(k / n, k % n))).collect()],
            operations: Vec::new(),
        }
    }

    fn relabel_flat(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
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

    fn discrete2() -> FinCategory {
        let mut b = CategoryBuilder::new();
        b.object("a");
        b.object("b");
        b.build().unwrap()
    }

    #[test]
    fn iso_and_discrete_differ() {
        assert!(!isomorphic(&walking_iso(), &discrete2()));
    }

    #[test]
    fn relabeling_is_invisible() {
        let c = walking_iso();
        let swapped = c.relabel_flat(&[1, 0, 3, 2, 5, 4]);
        assert!(swapped.is_valid());
        assert_ne!(swapped, c);
        assert_eq!(swapped.canonical_form(), c.canonical_form());
        let canon = c.canonicalize();
        assert_eq!(canon.canonical_form(), c.canonical_form());
        assert_eq!(canon.canonicalize(), canon);
    }

    #[test]
    fn psg_forms() {
        let z2 = PartialSemigroup::from_triples(&["1", "g"], &[("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"), ("g", "g", "1")]).unwrap();
        let swapped = z2.relabel(&[1, 0]);
        assert_eq!(z2.canonical_form(), swapped.canonical_form());
        let idem = PartialSemigroup::from_triples(&["1", "e"], &[("1", "1", "1"), ("1", "e", "e"), ("e", "1", "e"), ("e", "e", "e")]).unwrap();
        assert_ne!(z2.canonical_form(), idem.canonical_form());
    }

    #[test]
    fn empty_structures() {
        assert_eq!(FinCategory::empty().canonical_form(), FinCategory::empty().canonical_form());
    }
}
