//! JSON documents and DOT export.
//!
//! Four document shapes are read and written:
//!
//! * category: `{"objects", "morphisms": [{"name","dom","cod"}], "identities": {object: morphism}, "compose": [[g, f, g∘f]]}`
//! * partial semigroup: `{"elements", "product": [[a, b, a⊛b]]}`, absent pairs undefined
//! * space: `{"points", "opens": [[point, …]]}`
//! * meet-semilattice: `{"elements", "leq": [[a, b]], "top"}`, order pairs closed reflexively and transitively
//!
//! Printed documents list every composite and product and every strict
//! order pair, so parsing a printed document gives back the same structure.
//! When parsing a category, missing composites with an identity are filled
//! in.

use crate::bridge::psg_to_cat;
use crate::fincat::{FinCategory, Mor, Morphism, Ob};
use crate::locales::{members, FinSpace, MeetSemilattice};
use crate::psemi::PartialSemigroup;
use crate::{Error, Result};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: IndexMap<String, String>,
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsgDoc {
    pub elements: Vec<String>,
    pub product: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MslDoc {
    pub elements: Vec<String>,
    pub leq: Vec<[String; 2]>,
    pub top: String,
}

/// A parsed document of any shape.
#[derive(Clone, Debug)]
pub enum Document {
    Category(FinCategory),
    Psg(PartialSemigroup),
    Space(FinSpace),
    Msl(MeetSemilattice),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::Psg(_) => "partial semigroup",
            Document::Space(_) => "space",
            Document::Msl(_) => "meet-semilattice",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Category(c) => category_to_json(c),
            Document::Psg(s) => psg_to_json(s),
            Document::Space(x) => space_to_json(x),
            Document::Msl(a) => msl_to_json(a),
        }
    }
}

fn index(names: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(Error::Document(format!("{what} `{n}` is declared twice")));
        }
    }
    Ok(map)
}

fn look(map: &HashMap<String, usize>, name: &str, what: &str) -> Result<usize> {
    map.get(name)
        .copied()
        .ok_or_else(|| Error::Document(format!("unknown {what} `{name}`")))
}

impl CategoryDoc {
    pub fn from_category(c: &FinCategory) -> Self {
        let objects = c.object_names().to_vec();
        let morphisms = c
            .morphisms()
            .map(|f| MorphismDoc {
                name: c.morphism_name(f).to_string(),
                dom: c.object_name(c.dom(f)).to_string(),
                cod: c.object_name(c.cod(f)).to_string(),
            })
            .collect();
        let identities = c
            .objects()
            .map(|x| (c.object_name(x).to_string(), c.morphism_name(c.identity(x)).to_string()))
            .collect();
        let mut compose = Vec::new();
        for g in c.morphisms() {
            for f in c.morphisms() {
                if let Some(h) = c.compose(g, f) {
                    compose.push([g, f, h].map(|m| c.morphism_name(m).to_string()));
                }
            }
        }
        CategoryDoc {
            objects,
            morphisms,
            identities,
            compose,
        }
    }

    /// Index ranges and names are checked; the category axioms are not.
    pub fn to_category(&self) -> Result<FinCategory> {
        let obs = index(&self.objects, "object")?;
        let names: Vec<String> = self.morphisms.iter().map(|m| m.name.clone()).collect();
        let mors = index(&names, "morphism")?;
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| {
                Ok(Morphism {
                    name: m.name.clone(),
                    dom: Ob(look(&obs, &m.dom, "object")?),
                    cod: Ob(look(&obs, &m.cod, "object")?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut identities = vec![None; self.objects.len()];
        for (x, i) in &self.identities {
            identities[look(&obs, x, "object")?] = Some(Mor(look(&mors, i, "morphism")?));
        }
        let identities = identities
            .into_iter()
            .enumerate()
            .map(|(x, i)| i.ok_or_else(|| Error::Document(format!("object `{}` has no identity", self.objects[x]))))
            .collect::<Result<Vec<_>>>()?;
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for (fi, f) in morphisms.iter().enumerate() {
            let (left, right) = (identities[f.cod.0], identities[f.dom.0]);
            if morphisms[left.0].dom == f.cod && morphisms[right.0].cod == f.dom {
                table[left.0 * m + fi] = Some(Mor(fi));
                table[fi * m + right.0] = Some(Mor(fi));
            }
        }
        for [g, f, h] in &self.compose {
            let (g, f, h) = (
                look(&mors, g, "morphism")?,
                look(&mors, f, "morphism")?,
                look(&mors, h, "morphism")?,
            );
            table[g * m + f] = Some(Mor(h));
        }
        FinCategory::from_parts(self.objects.clone(), morphisms, identities, table)
    }
}

impl PsgDoc {
    pub fn from_psg(s: &PartialSemigroup) -> Self {
        let mut product = Vec::new();
        for a in s.elements() {
            for b in s.elements() {
                if let Some(c) = s.product(a, b) {
                    product.push([a, b, c].map(|x| s.name(x).to_string()));
                }
            }
        }
        PsgDoc {
            elements: s.names().to_vec(),
            product,
        }
    }

    pub fn to_psg(&self) -> Result<PartialSemigroup> {
        let idx = index(&self.elements, "element")?;
        let n = self.elements.len();
        let mut table = vec![None; n * n];
        for [a, b, c] in &self.product {
            let slot = &mut table[look(&idx, a, "element")? * n + look(&idx, b, "element")?];
            if slot.is_some() {
                return Err(Error::Document(format!("product of `{a}` and `{b}` is given twice")));
            }
            *slot = Some(look(&idx, c, "element")?);
        }
        PartialSemigroup::new(self.elements.clone(), table)
    }
}

impl SpaceDoc {
    pub fn from_space(x: &FinSpace) -> Self {
        let opens = x
            .opens()
            .iter()
            .map(|&u| members(u).map(|p| x.point_names()[p].clone()).collect())
            .collect();
        SpaceDoc {
            points: x.point_names().to_vec(),
            opens,
        }
    }

    pub fn to_space(&self) -> Result<FinSpace> {
        let idx = index(&self.points, "point")?;
        crate::locales::check_capacity("space", self.points.len())?;
        let opens = self
            .opens
            .iter()
            .map(|u| u.iter().try_fold(0u64, |m, p| Ok::<_, Error>(m | 1 << look(&idx, p, "point")?)))
            .collect::<Result<Vec<_>>>()?;
        FinSpace::new(self.points.clone(), opens)
    }
}

impl MslDoc {
    pub fn from_msl(a: &MeetSemilattice) -> Self {
        let n = a.len();
        let leq = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && a.leq(x, y))
            .map(|(x, y)| [a.name(x).to_string(), a.name(y).to_string()])
            .collect();
        MslDoc {
            elements: a.names().to_vec(),
            leq,
            top: a.name(a.top()).to_string(),
        }
    }

    pub fn to_msl(&self) -> Result<MeetSemilattice> {
        index(&self.elements, "element")?;
        let elements: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> = self.leq.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        MeetSemilattice::from_pairs(&elements, &pairs, &self.top).map_err(|e| Error::Document(e.to_string()))
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn category_to_json(c: &FinCategory) -> String {
    pretty(&CategoryDoc::from_category(c))
}

pub fn psg_to_json(s: &PartialSemigroup) -> String {
    pretty(&PsgDoc::from_psg(s))
}

pub fn space_to_json(x: &FinSpace) -> String {
    pretty(&SpaceDoc::from_space(x))
}

pub fn msl_to_json(a: &MeetSemilattice) -> String {
    pretty(&MslDoc::from_msl(a))
}

/// Reads any of the four shapes, telling them apart by their keys.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Document("a document is a JSON object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    if has("objects") {
        let doc: CategoryDoc = serde_json::from_value(value)?;
        Ok(Document::Category(doc.to_category()?))
    } else if has("points") {
        let doc: SpaceDoc = serde_json::from_value(value)?;
        Ok(Document::Space(doc.to_space()?))
    } else if has("product") {
        let doc: PsgDoc = serde_json::from_value(value)?;
        Ok(Document::Psg(doc.to_psg()?))
    } else if has("leq") {
        let doc: MslDoc = serde_json::from_value(value)?;
        Ok(Document::Msl(doc.to_msl()?))
    } else {
        Err(Error::Document("unrecognised document shape".into()))
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Objects as nodes, non-identity morphisms as labelled edges.
pub fn category_to_dot(c: &FinCategory) -> String {
    let mut out = String::from("digraph category {\n");
    for x in c.objects() {
        let _ = writeln!(out, "  {};", quote(c.object_name(x)));
    }
    for f in c.morphisms().filter(|&f| !c.is_identity(f)) {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(c.object_name(c.dom(f))),
            quote(c.object_name(c.cod(f))),
            quote(c.morphism_name(f))
        );
    }
    out.push_str("}\n");
    out
}

/// The category of idempotents of the partial semigroup.
pub fn psg_to_dot(s: &PartialSemigroup) -> String {
    category_to_dot(&psg_to_cat(s).category)
}

fn hasse(names: &[String], leq: impl Fn(usize, usize) -> bool, graph: &str) -> String {
    let n = names.len();
    let mut out = format!("digraph {graph} {{\n  rankdir=BT;\n");
    for name in names {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for a in 0..n {
        for b in 0..n {
            let covers = a != b && leq(a, b) && !(0..n).any(|c| c != a && c != b && leq(a, c) && leq(c, b));
            if covers {
                let _ = writeln!(out, "  {} -> {};", quote(&names[a]), quote(&names[b]));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the specialization preorder: `x → y` when every open
/// holding `x` holds `y`.
pub fn space_to_dot(x: &FinSpace) -> String {
    hasse(x.point_names(), |a, b| x.neighbourhood(a) >> b & 1 == 1, "space")
}

pub fn msl_to_dot(a: &MeetSemilattice) -> String {
    hasse(a.names(), |x, y| a.leq(x, y), "semilattice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smallgen::fixtures;

    #[test]
    fn category_round_trip() {
        for c in [fixtures::walking_iso(), fixtures::walking_idempotent(), fixtures::transformation_monoid(2).unwrap()] {
            let text = category_to_json(&c);
            match parse_document(&text).unwrap() {
                Document::Category(d) => {
                    assert_eq!(d, c);
                    assert_eq!(category_to_json(&d), text);
                }
                other => panic!("parsed as {}", other.kind()),
            }
        }
    }

    #[test]
    fn identity_composites_may_be_omitted() {
        let text = r#"{"objects":["x"],"morphisms":[{"name":"id","dom":"x","cod":"x"},{"name":"e","dom":"x","cod":"x"}],
            "identities":{"x":"id"},"compose":[["e","e","e"]]}"#;
        let Document::Category(c) = parse_document(text).unwrap() else { panic!() };
        assert!(c.is_valid());
        assert_eq!(c.idempotents().len(), 2);
    }

    #[test]
    fn other_shapes_round_trip() {
        let s = crate::bridge::cat_to_psg(&fixtures::walking_iso());
        let Document::Psg(t) = parse_document(&psg_to_json(&s)).unwrap() else { panic!() };
        assert_eq!(t, s);
        let x = fixtures::space("sierpinski").unwrap();
        assert_eq!(space_to_json(&x), r#"{"points":["0","1"],"opens":[[],["1"],["0","1"]]}"#);
        let Document::Space(y) = parse_document(&space_to_json(&x)).unwrap() else { panic!() };
        assert_eq!(y, x);
        let a = fixtures::m3();
        let Document::Msl(b) = parse_document(&msl_to_json(&a)).unwrap() else { panic!() };
        assert_eq!(b, a);
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_document("[1]"), Err(Error::Document(_))));
        assert!(matches!(parse_document("{"), Err(Error::Json(_))));
        let dup = r#"{"elements":["a","a"],"product":[]}"#;
        assert!(matches!(parse_document(dup), Err(Error::Document(_))));
        let unknown = r#"{"points":["0"],"opens":[["1"]]}"#;
        assert!(matches!(parse_document(unknown), Err(Error::Document(_))));
    }

    #[test]
    fn dot_output() {
        let dot = category_to_dot(&fixtures::walking_iso());
        assert!(dot.contains("\"a\" -> \"b\" [label=\"u\"]"));
        assert!(!dot.contains("id_a"));
        let dot = msl_to_dot(&fixtures::chain_msl(3).unwrap());
        assert!(dot.contains("\"0\" -> \"1\"") && !dot.contains("\"0\" -> \"2\""));
    }
}
