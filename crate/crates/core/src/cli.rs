//! The batch command-line front end.
//!
//! Every subcommand reads JSON documents (or `fixture:NAME`) and writes a
//! JSON document, a plain-text report or a DOT graph. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or the property holds |
//! | 1 | the property fails |
//! | 2 | the input is malformed or violates its axioms |
//! | 3 | a search or capacity bound was exceeded |

use crate::bridge::{
    cat_to_psg, catale_to_cat, psg_to_cat, verify_adjunction, verify_equivalence_of_catale,
    verify_equivalence_of_category, DEFAULT_SEARCH_BOUND,
};
use crate::doc::{self, parse_document, Document};
use crate::fincat::{karoubi, skeleton, taut_completion, FinCategory};
use crate::locales::{self, FinSpace, MeetSemilattice, PointVariant};
use crate::psemi::{is_catale, PartialSemigroup};
use crate::smallgen::{self, fixtures, Canonize};
use crate::suite::{self, SuiteConfig, CRITERIA};
use crate::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::IndexedRandom;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "catale", version, about = "Finite categories, partial semigroups and finite locales")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for `--format dot`.
    #[arg(long, global = true)]
    dot: bool,
    /// Which subsets of a meet-semilattice count as points.
    #[arg(long, global = true, default_value = "strict")]
    point_variant: PointVariant,
    /// Largest candidate space an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BOUND)]
    max_search: u128,
    /// Seed for random generation.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Via {
    /// Read a category as its partial semigroup of morphisms.
    ToPsg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Psg,
    Topology,
    Msl,
    Monoid,
    Category,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of any document.
    Validate { input: String },
    /// List the idempotents (and, for partial semigroups, the identities).
    Idempotents {
        input: String,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// The Karoubi envelope of a category.
    Karoubi { input: String },
    /// A skeleton of a category.
    Skeleton { input: String },
    /// The taut completion of a category.
    Taut { input: String },
    /// Whether a category is skeletal and absolutely complete.
    IsTaut { input: String },
    /// The partial semigroup of morphisms of a category.
    ToPsg { input: String },
    /// The category of idempotents of a partial semigroup, or with
    /// `--catale` the category of identities of a catale.
    ToCat {
        input: String,
        #[arg(long)]
        catale: bool,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Check both catale axioms.
    IsCatale {
        input: String,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Round trip a taut category or a catale through the other side.
    Roundtrip {
        input: String,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Check that the transposes are inverse bijections between
    /// functors `C → ⇑A` and homs `⊗C → A`.
    AdjunctionVerify {
        category: String,
        semigroup: String,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// The meet-semilattice of opens of a space.
    Opens { input: String },
    /// The space of points of a meet-semilattice.
    Points { input: String },
    /// The space of points of the opens of a space.
    Soberify { input: String },
    /// The opens of the space of points of a meet-semilattice.
    Spatialize { input: String },
    /// Whether the unit of a space is a homeomorphism.
    IsSober { input: String },
    /// Whether the counit of a meet-semilattice is an order isomorphism.
    IsSpatial { input: String },
    /// Whether a meet-semilattice is a distributive lattice.
    IsFrame { input: String },
    /// Enumerate small structures, or sample them with `--seed`.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        /// Carrier size; for categories, the largest number of morphisms.
        size: usize,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Largest number of structures written.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Run acceptance criteria.
    Suite {
        /// Criteria to run; all when omitted.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

/// The outcome of a command before it is written out.
enum Output {
    Doc(Document),
    Docs(Vec<Document>),
    Report { holds: bool, lines: Vec<String>, json: Value },
}

/// Runs one command line and returns its exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_HOLDS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let format = if cli.global.dot { Format::Dot } else { cli.global.format };
    match execute(&cli.command, &cli.global) {
        Ok(output) => write_output(output, format, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::Capacity(_) => EXIT_BOUND,
        _ => EXIT_INVALID,
    }
}

fn write_output(output: Output, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match output {
        Output::Doc(d) => writeln!(out, "{}", render(&d, format)).map(|_| EXIT_HOLDS),
        Output::Docs(ds) => {
            let text = match format {
                Format::Json if ds.is_empty() => "[]".to_string(),
                Format::Json => {
                    let lines: Vec<String> = ds.iter().map(|d| format!("  {}", d.to_json())).collect();
                    format!("[\n{}\n]", lines.join(",\n"))
                }
                _ => ds.iter().map(|d| render(d, format)).collect::<Vec<_>>().join("\n"),
            };
            writeln!(out, "{text}").map(|_| EXIT_HOLDS)
        }
        Output::Report { holds, lines, json } => {
            let code = if holds { EXIT_HOLDS } else { EXIT_FAILS };
            match format {
                Format::Json => writeln!(out, "{json}"),
                _ => lines.iter().try_for_each(|l| writeln!(out, "{l}")),
            }
            .map(|_| code)
        }
    };
    match result {
        Ok(code) => code,
        // A closed pipe downstream is not a failure of the command.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_HOLDS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn render(d: &Document, format: Format) -> String {
    match (format, d) {
        (Format::Json, _) => d.to_json(),
        (Format::Text, Document::Category(c)) => c.to_string().trim_end().to_string(),
        (Format::Text, Document::Psg(s)) => s.to_string().trim_end().to_string(),
        (Format::Text, Document::Space(x)) => x.to_string().trim_end().to_string(),
        (Format::Text, Document::Msl(a)) => a.to_string().trim_end().to_string(),
        (Format::Dot, Document::Category(c)) => doc::category_to_dot(c),
        (Format::Dot, Document::Psg(s)) => doc::psg_to_dot(s),
        (Format::Dot, Document::Space(x)) => doc::space_to_dot(x),
        (Format::Dot, Document::Msl(a)) => doc::msl_to_dot(a),
    }
    .trim_end()
    .to_string()
}

/// What a command expects to read, used to resolve fixture names that
/// exist in more than one kind (`indiscrete3` is a category and a space).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Want {
    Any,
    Category,
    Space,
    Msl,
}

/// Reads `fixture:NAME`, `-` for standard input, or a file path.
pub fn load(input: &str) -> crate::Result<Document> {
    load_as(input, Want::Any)
}

fn load_as(input: &str, want: Want) -> crate::Result<Document> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return Ok(match want {
            Want::Category => Document::Category(fixtures::category(name)?),
            Want::Space => Document::Space(fixtures::space(name)?),
            Want::Msl => Document::Msl(fixtures::msl(name)?),
            Want::Any => match fixtures::fixture(name)? {
                fixtures::Fixture::Category(c) => Document::Category(c),
                fixtures::Fixture::Space(x) => Document::Space(x),
                fixtures::Fixture::Msl(a) => Document::Msl(a),
            },
        });
    }
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(input)?
    };
    parse_document(&text)
}

/// The axiom violations of a document, one line each.
pub fn violations(d: &Document) -> Vec<String> {
    match d {
        Document::Category(c) => c.validate().violations.iter().map(|v| v.describe(c)).collect(),
        Document::Psg(s) => s.validate().violations.iter().map(|v| v.describe(s)).collect(),
        Document::Space(x) => x.validate().iter().map(|v| v.describe(x)).collect(),
        Document::Msl(a) => a.validate().iter().map(|v| v.describe(a)).collect(),
    }
}

fn load_valid(input: &str, want: Want) -> crate::Result<Document> {
    let d = load_as(input, want)?;
    if let Some(first) = violations(&d).first() {
        return Err(Error::Invalid(format!("{input} is not a valid {}: {first}", d.kind())));
    }
    Ok(d)
}

fn wrong_kind(input: &str, d: &Document, wanted: &str) -> Error {
    Error::Invalid(format!("{input} is a {}, expected a {wanted}", d.kind()))
}

fn category(input: &str) -> crate::Result<FinCategory> {
    match load_valid(input, Want::Category)? {
        Document::Category(c) => Ok(c),
        d => Err(wrong_kind(input, &d, "category")),
    }
}

fn semigroup(input: &str, via: Option<Via>) -> crate::Result<PartialSemigroup> {
    match (load_valid(input, Want::Any)?, via) {
        (Document::Psg(s), _) => Ok(s),
        (Document::Category(c), Some(Via::ToPsg)) => Ok(cat_to_psg(&c)),
        (Document::Category(_), None) => Err(Error::Invalid(format!(
            "{input} is a category; pass `--via to-psg` to read it as a partial semigroup"
        ))),
        (d, _) => Err(wrong_kind(input, &d, "partial semigroup")),
    }
}

fn space(input: &str) -> crate::Result<FinSpace> {
    match load_valid(input, Want::Space)? {
        Document::Space(x) => Ok(x),
        d => Err(wrong_kind(input, &d, "space")),
    }
}

fn msl(input: &str) -> crate::Result<MeetSemilattice> {
    match load_valid(input, Want::Msl)? {
        Document::Msl(a) => Ok(a),
        d => Err(wrong_kind(input, &d, "meet-semilattice")),
    }
}

fn report(property: &str, holds: bool, witnesses: Vec<String>) -> Output {
    let mut lines = vec![format!("{property}: {}", if holds { "holds" } else { "fails" })];
    lines.extend(witnesses.iter().map(|w| format!("  {w}")));
    Output::Report {
        holds,
        json: json!({ "property": property, "holds": holds, "witnesses": witnesses }),
        lines,
    }
}

fn execute(command: &Command, g: &Global) -> crate::Result<Output> {
    let variant = g.point_variant;
    Ok(match command {
        Command::Validate { input } => {
            let d = load(input)?;
            let found = violations(&d);
            if !found.is_empty() {
                let detail = found.join("; ");
                return Err(Error::Invalid(format!("{input} is not a valid {}: {detail}", d.kind())));
            }
            report(&format!("valid {}", d.kind()), true, Vec::new())
        }
        Command::Idempotents { input, via } => match load_valid(input, Want::Any)? {
            Document::Category(c) if via.is_none() => {
                let names: Vec<&str> = c.idempotents().into_iter().map(|f| c.morphism_name(f)).collect();
                Output::Report {
                    holds: true,
                    lines: vec![format!("idempotents: {}", names.join(" "))],
                    json: json!({ "idempotents": names }),
                }
            }
            _ => {
                let s = semigroup(input, *via)?;
                let idem: Vec<&str> = s.idempotents().into_iter().map(|a| s.name(a)).collect();
                let ids: Vec<&str> = s.identities().into_iter().map(|a| s.name(a)).collect();
                Output::Report {
                    holds: true,
                    lines: vec![
                        format!("idempotents: {}", idem.join(" ")),
                        format!("identities: {}", ids.join(" ")),
                    ],
                    json: json!({ "idempotents": idem, "identities": ids }),
                }
            }
        },
        Command::Karoubi { input } => Output::Doc(Document::Category(karoubi(&category(input)?).category)),
        Command::Skeleton { input } => Output::Doc(Document::Category(skeleton(&category(input)?).category)),
        Command::Taut { input } => Output::Doc(Document::Category(taut_completion(&category(input)?).category)),
        Command::IsTaut { input } => {
            let c = category(input)?;
            let mut witnesses = Vec::new();
            if let Some(phi) = c.first_unsplit_idempotent() {
                witnesses.push(format!("idempotent {} does not split", c.morphism_name(phi)));
            }
            if let Some((x, y)) = c.first_isomorphic_pair() {
                witnesses.push(format!(
                    "objects {} and {} are isomorphic",
                    c.object_name(x),
                    c.object_name(y)
                ));
            }
            report("taut", witnesses.is_empty(), witnesses)
        }
        Command::ToPsg { input } => Output::Doc(Document::Psg(cat_to_psg(&category(input)?))),
        Command::ToCat { input, catale, via } => {
            let s = semigroup(input, *via)?;
            let c = if *catale { catale_to_cat(&s)? } else { psg_to_cat(&s).category };
            Output::Doc(Document::Category(c))
        }
        Command::IsCatale { input, via } => {
            let s = semigroup(input, *via)?;
            let r = is_catale(&s);
            report("catale", r.is_catale(), r.failures.iter().map(|f| f.describe(&s)).collect())
        }
        Command::Roundtrip { input, via } => {
            let r = match (load_valid(input, Want::Any)?, via) {
                (Document::Category(c), None) => verify_equivalence_of_category(&c)?,
                _ => verify_equivalence_of_catale(&semigroup(input, *via)?)?,
            };
            let mut witnesses = Vec::new();
            if !r.unit_iso {
                witnesses.push("the unit is not an isomorphism of partial semigroups".to_string());
            }
            if !r.counit_iso {
                witnesses.push("the counit is not an isomorphism of categories".to_string());
            }
            report("round trip", r.holds(), witnesses)
        }
        Command::AdjunctionVerify {
            category: c,
            semigroup: s,
            via,
        } => {
            let c = category(c)?;
            let s = semigroup(s, *via)?;
            let r = verify_adjunction(&c, &s, g.max_search)?;
            let mut witnesses = vec![format!("{} functors, {} homs", r.functors, r.homs)];
            witnesses.extend(r.mismatches.iter().cloned());
            let holds = r.holds();
            let mut out = report("adjunction", holds, witnesses);
            if let Output::Report { json, .. } = &mut out {
                json["functors"] = r.functors.into();
                json["homs"] = r.homs.into();
            }
            out
        }
        Command::Opens { input } => Output::Doc(Document::Msl(locales::opens(&space(input)?)?)),
        Command::Points { input } => Output::Doc(Document::Space(locales::points(&msl(input)?, variant)?.space)),
        Command::Soberify { input } => Output::Doc(Document::Space(locales::soberify(&space(input)?, variant)?)),
        Command::Spatialize { input } => {
            Output::Doc(Document::Msl(locales::spatialize(&msl(input)?, variant)?))
        }
        Command::IsSober { input } => {
            let x = space(input)?;
            let eta = locales::unit_space(&x, variant)?;
            let mut witnesses = Vec::new();
            if !eta.is_bijective() {
                witnesses.push(format!(
                    "the unit reaches {} of {} points",
                    {
                        let mut hit = eta.map.clone();
                        hit.sort_unstable();
                        hit.dedup();
                        hit.len()
                    },
                    eta.target.len()
                ));
            }
            report("sober", locales::is_sober(&x, variant)?, witnesses)
        }
        Command::IsSpatial { input } => {
            let a = msl(input)?;
            let holds = locales::is_spatial(&a, variant)?;
            let ps = locales::points(&a, variant)?;
            let witnesses = if holds {
                Vec::new()
            } else {
                vec![format!("{} points separate the {} elements", ps.points.len(), a.len())]
            };
            report("spatial", holds, witnesses)
        }
        Command::IsFrame { input } => {
            let a = msl(input)?;
            let witnesses = match locales::distributivity_witness(&a) {
                Some((x, y, z)) => vec![format!(
                    "{} ∧ ({} ∨ {}) differs from ({} ∧ {}) ∨ ({} ∧ {})",
                    a.name(x),
                    a.name(y),
                    a.name(z),
                    a.name(x),
                    a.name(y),
                    a.name(x),
                    a.name(z)
                )],
                None if !locales::is_frame(&a) => vec!["some pair of elements has no join".to_string()],
                None => Vec::new(),
            };
            report("frame", locales::is_frame(&a), witnesses)
        }
        Command::Enumerate {
            kind,
            size,
            dedup,
            count,
        } => Output::Docs(enumerate(*kind, *size, *dedup, *count, g.seed)?),
        Command::Suite { criteria } => {
            let config = SuiteConfig {
                search_bound: g.max_search,
            };
            let ids: Vec<u8> = if criteria.is_empty() {
                CRITERIA.iter().map(|&(id, _)| id).collect()
            } else {
                criteria.clone()
            };
            if let Some(bad) = ids.iter().find(|&&id| id == 0 || id as usize > CRITERIA.len()) {
                return Err(Error::Invalid(format!("no criterion {bad}")));
            }
            let outcomes: Vec<_> = ids.iter().map(|&id| suite::run_criterion_or_fail(id, &config)).collect();
            let holds = outcomes.iter().all(|o| o.passed);
            Output::Report {
                holds,
                lines: outcomes.iter().map(|o| o.to_string()).collect(),
                json: json!(outcomes
                    .iter()
                    .map(|o| json!({ "criterion": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }))
                    .collect::<Vec<_>>()),
            }
        }
    })
}

fn dedup_if<S: Canonize>(items: Vec<S>, dedup: bool) -> Vec<S> {
    if dedup {
        smallgen::dedup(items).collect()
    } else {
        items
    }
}

fn enumerate(kind: Kind, size: usize, dedup: bool, count: Option<usize>, seed: Option<u64>) -> crate::Result<Vec<Document>> {
    let mut docs: Vec<Document> = match (kind, seed) {
        (Kind::Topology, Some(seed)) => {
            let mut r = smallgen::rng(seed);
            let n = count.unwrap_or(smallgen::RANDOM_SAMPLE_COUNT);
            let xs = (0..n)
                .map(|_| smallgen::random_topology(size, size, &mut r))
                .collect::<crate::Result<Vec<_>>>()?;
            dedup_if(xs, dedup).into_iter().map(Document::Space).collect()
        }
        (Kind::Msl, Some(seed)) => {
            let mut r = smallgen::rng(seed);
            let n = count.unwrap_or(smallgen::RANDOM_SAMPLE_COUNT);
            let xs = (0..n)
                .map(|_| smallgen::random_closure_msl(size, size, &mut r))
                .collect::<crate::Result<Vec<_>>>()?;
            dedup_if(xs, dedup).into_iter().map(Document::Msl).collect()
        }
        (Kind::Monoid, Some(seed)) => {
            let mut r = smallgen::rng(seed);
            let n = count.unwrap_or(smallgen::RANDOM_SAMPLE_COUNT);
            let xs = (0..n)
                .map(|_| smallgen::random_transformation_monoid(size, 2, &mut r))
                .collect::<crate::Result<Vec<_>>>()?;
            dedup_if(xs, dedup).into_iter().map(Document::Category).collect()
        }
        (Kind::Psg | Kind::Category, Some(seed)) => {
            let all = enumerate(kind, size, dedup, None, None)?;
            let n = count.unwrap_or(smallgen::RANDOM_SAMPLE_COUNT).min(all.len());
            let mut r = smallgen::rng(seed);
            all.choose_multiple(&mut r, n).cloned().collect()
        }
        (Kind::Psg, None) => dedup_if(smallgen::enum_psgs(size)?.collect(), dedup)
            .into_iter()
            .map(Document::Psg)
            .collect(),
        (Kind::Topology, None) => dedup_if(smallgen::enum_topologies(size)?.collect(), dedup)
            .into_iter()
            .map(Document::Space)
            .collect(),
        (Kind::Msl, None) => dedup_if(smallgen::enum_msls(size)?.collect(), dedup)
            .into_iter()
            .map(Document::Msl)
            .collect(),
        (Kind::Monoid, None) => dedup_if(smallgen::enum_monoids(size)?.collect(), dedup)
            .into_iter()
            .map(Document::Psg)
            .collect(),
        (Kind::Category, None) => dedup_if(smallgen::enum_categories(size, size)?, dedup)
            .into_iter()
            .map(Document::Category)
            .collect(),
    };
    if let Some(n) = count {
        docs.truncate(n);
    }
    Ok(docs)
}

/// The partial semigroup a bridge command would read from `input`.
pub fn load_semigroup(input: &str, via_to_psg: bool) -> crate::Result<PartialSemigroup> {
    semigroup(input, via_to_psg.then_some(Via::ToPsg))
}
