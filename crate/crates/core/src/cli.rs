//! Command-line front end. Every subcommand reads at most one JSON document
//! (file path, inline JSON, or standard input) and writes one JSON document.
//!
//! Exit status: 0 computed, 1 predicate false, 2 input error, 3 cap exceeded.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::betti::{eagon_reiner_verify, has_linear_resolution, hochster_betti, reisner_obstruction};
use crate::chordality::{
    find_peo, is_chordal_search, is_generalized_chordal_search, is_triangulated_bruteforce, is_triangulated_star_bruteforce,
    random_generalized_chordal, replay_script, MoveMix, SearchOutcome,
};
use crate::complex::{alexander_dual, flag_complex_of, independence_complex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec};
use crate::hypergraph::{make_complete, make_complete_bipartite, make_complete_multipartite, make_dab_complete, Hypergraph};
use crate::io::{complex_to_value, hypergraph_to_value, parse_document, set_to_value, ComplexDoc, Document, HypergraphDoc};
use crate::vertex_set::VertexSet;
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hyperchordal", version, about = "Chordal hypergraphs, flag complexes, and Betti numbers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: gf2, gf<p> for a prime p, or q.
    #[arg(long, global = true, default_value = "gf2")]
    field: FieldSpec,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest vertex count accepted by exhaustive (2^n) operations.
    #[arg(long, global = true, default_value_t = 24)]
    cap: usize,

    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Node budget for construction searches.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// JSON file, inline JSON object, or `-` for standard input (the default).
    input: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Complete,
    Bipartite,
    Multipartite,
    Dab,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a complete, complete multipartite, or d(a,b)-complete hypergraph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Part sizes for the multipartite family, comma separated.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
    },
    /// Complementary hypergraph.
    Complement(Input),
    /// Induced hypergraph on a vertex subset (labels are kept).
    Induced {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
    },
    /// d-flag complex of a hypergraph.
    Flag(Input),
    /// Independence complex of a hypergraph.
    Indep(Input),
    /// Alexander dual of a complex.
    Dual(Input),
    /// Reduced homology of a complex.
    Homology(Input),
    /// Betti numbers of the Stanley-Reisner ring by Hochster's formula.
    Betti {
        #[command(flatten)]
        input: Input,
        /// Include every multigraded entry.
        #[arg(long)]
        multigraded: bool,
    },
    /// Does the Stanley-Reisner ring have a linear resolution?
    Linear(Input),
    /// Is the complex Cohen-Macaulay (Reisner's criterion)?
    Cm(Input),
    /// Compare Cohen-Macaulayness of a complex with linearity of its dual.
    EagonReiner(Input),
    /// Run the triangulated, triangulated*, elimination, and construction recognizers.
    Check(Input),
    /// Greedy perfect elimination order.
    Peo(Input),
    /// Replay a construction script, or search for one for a hypergraph.
    Script {
        #[command(flatten)]
        input: Input,
        /// Search with start and glue moves only.
        #[arg(long)]
        glue_only: bool,
    },
    /// Random generalized chordal hypergraph with its construction script.
    RandomGc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        glue_weight: u32,
        #[arg(long, default_value_t = 1)]
        edge_weight: u32,
    },
    /// Search random hypergraphs whose flag complex has a linear resolution
    /// but which have no generalized chordal construction within budget.
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Probability that a given d-subset is an edge.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

struct Output {
    value: Value,
    text: Option<String>,
    status: i32,
}

impl Output {
    fn json(value: Value) -> Self {
        Output { value, text: None, status: EXIT_OK }
    }

    fn predicate(value: Value, holds: bool, text: String) -> Self {
        Output { value, text: Some(text), status: if holds { EXIT_OK } else { EXIT_FALSE } }
    }
}

struct Context<'a> {
    limits: Limits,
    field: FieldSpec,
    seed: u64,
    budget: usize,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn load(&mut self, input: &Input) -> Result<Document> {
        let text = match input.input.as_deref() {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
                s
            }
            Some(inline) if inline.trim_start().starts_with('{') => inline.to_string(),
            Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {path}: {e}")))?,
        };
        parse_document(&text)
    }

    fn hypergraph(&mut self, input: &Input) -> Result<HypergraphDoc> {
        match self.load(input)? {
            Document::Hypergraph(doc) => Ok(doc),
            Document::Script(s) => Ok(HypergraphDoc { hypergraph: replay_script(&s)?, labels: None }),
            Document::Complex(_) => Err(Error::Input("expected a hypergraph, got a complex".into())),
        }
    }

    /// Hypergraph inputs stand for their d-flag complex.
    fn complex(&mut self, input: &Input) -> Result<ComplexDoc> {
        let doc = match self.load(input)? {
            Document::Complex(doc) => return Ok(doc),
            Document::Hypergraph(doc) => doc,
            Document::Script(s) => HypergraphDoc { hypergraph: replay_script(&s)?, labels: None },
        };
        Ok(ComplexDoc { complex: flag_complex_of(&doc.hypergraph, &self.limits)?, labels: doc.labels })
    }
}

fn need(value: Option<usize>, name: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Input(format!("--{name} is required for this family")))
}

fn gen(family: Family, n: Option<usize>, m: Option<usize>, d: Option<usize>, a: Option<usize>, b: Option<usize>, parts: &[usize]) -> Result<Hypergraph> {
    match family {
        Family::Complete => make_complete(need(n, "n")?, need(d, "d")?),
        Family::Bipartite => make_complete_bipartite(need(n, "n")?, need(m, "m")?, need(d, "d")?),
        Family::Multipartite => make_complete_multipartite(parts, need(d, "d")?),
        Family::Dab => make_dab_complete(need(n, "n")?, need(m, "m")?, need(a, "a")?, need(b, "b")?),
    }
}

fn with_labels(v: VertexSet, labels: Option<&[String]>) -> Option<Value> {
    labels.map(|l| json!(v.iter().map(|x| l.get(x).cloned().unwrap_or_default()).collect::<Vec<_>>()))
}

fn search_value(outcome: &SearchOutcome) -> Value {
    serde_json::to_value(outcome).expect("plain data serializes")
}

fn execute(cmd: Command, ctx: &mut Context) -> Result<Output> {
    let limits = ctx.limits;
    let field = ctx.field;
    match cmd {
        Command::Gen { family, n, m, d, a, b, parts } => Ok(Output::json(hypergraph_to_value(&gen(family, n, m, d, a, b, &parts)?, None))),
        Command::Complement(input) => {
            let doc = ctx.hypergraph(&input)?;
            Ok(Output::json(hypergraph_to_value(&doc.hypergraph.complement(), doc.labels.as_deref())))
        }
        Command::Induced { input, vertices } => {
            let doc = ctx.hypergraph(&input)?;
            let v = VertexSet::try_from_iter(vertices)?;
            Ok(Output::json(hypergraph_to_value(&doc.hypergraph.induced(v)?, doc.labels.as_deref())))
        }
        Command::Flag(input) => {
            let doc = ctx.hypergraph(&input)?;
            Ok(Output::json(complex_to_value(&flag_complex_of(&doc.hypergraph, &limits)?, doc.labels.as_deref())))
        }
        Command::Indep(input) => {
            let doc = ctx.hypergraph(&input)?;
            Ok(Output::json(complex_to_value(&independence_complex(&doc.hypergraph, &limits)?, doc.labels.as_deref())))
        }
        Command::Dual(input) => {
            let doc = ctx.complex(&input)?;
            Ok(Output::json(complex_to_value(&alexander_dual(&doc.complex, &limits)?, doc.labels.as_deref())))
        }
        Command::Homology(input) => {
            let doc = ctx.complex(&input)?;
            let h = reduced_homology(&doc.complex, field, &limits)?;
            let text = h.iter().map(|(i, dim)| format!("H~_{i} = {dim}\n")).collect();
            Ok(Output { value: serde_json::to_value(&h).expect("plain data serializes"), text: Some(text), status: EXIT_OK })
        }
        Command::Betti { input, multigraded } => {
            let doc = ctx.complex(&input)?;
            let table = hochster_betti(&doc.complex, field, &limits)?;
            Ok(Output { value: table.to_json(multigraded), text: Some(table.diagram()), status: EXIT_OK })
        }
        Command::Linear(input) => {
            let doc = ctx.complex(&input)?;
            let r = has_linear_resolution(&doc.complex, field, &limits)?;
            let text = format!("linear: {} (d = {})\n", r.linear, r.d.map_or("none".into(), |d| d.to_string()));
            Ok(Output::predicate(serde_json::to_value(&r).expect("plain data serializes"), r.linear, text))
        }
        Command::Cm(input) => {
            let doc = ctx.complex(&input)?;
            let ob = reisner_obstruction(&doc.complex, field, &limits)?;
            let value = json!({"cohen_macaulay": ob.is_none(), "obstruction": ob});
            Ok(Output::predicate(value, ob.is_none(), format!("cohen_macaulay: {}\n", ob.is_none())))
        }
        Command::EagonReiner(input) => {
            let doc = ctx.complex(&input)?;
            let r = eagon_reiner_verify(&doc.complex, field, &limits)?;
            let text = format!("cohen_macaulay: {}, dual linear: {}, agree: {}\n", r.cohen_macaulay, r.dual_linear, r.agree);
            Ok(Output::predicate(serde_json::to_value(&r).expect("plain data serializes"), r.agree, text))
        }
        Command::Check(input) => {
            let doc = ctx.hypergraph(&input)?;
            let h = &doc.hypergraph;
            let labels = doc.labels.as_deref();
            let tri = is_triangulated_bruteforce(h, &limits)?;
            let star = is_triangulated_star_bruteforce(h, &limits)?;
            let peo = find_peo(h);
            let construction = is_chordal_search(h, ctx.budget);
            let chordal = match &construction {
                SearchOutcome::Yes { .. } => Some(true),
                SearchOutcome::No { .. } => Some(false),
                SearchOutcome::Inconclusive { .. } => None,
            };
            let agree = tri == star && star == peo.is_ok() && chordal.is_none_or(|c| c == tri);
            let mut out = Map::new();
            out.insert("triangulated".into(), json!(tri));
            out.insert("triangulated_star".into(), json!(star));
            match &peo {
                Ok(o) => {
                    out.insert("peo".into(), json!(o.order));
                    out.insert("witness".into(), Value::Null);
                }
                Err(f) => {
                    out.insert("peo".into(), Value::Null);
                    out.insert("witness".into(), set_to_value(f.witness));
                    if let Some(l) = with_labels(f.witness, labels) {
                        out.insert("witness_labels".into(), l);
                    }
                }
            }
            out.insert("chordal".into(), json!(chordal));
            out.insert("construction".into(), search_value(&construction));
            out.insert("agree".into(), json!(agree));
            let text = format!("triangulated: {tri}\ntriangulated*: {star}\nperfect elimination order: {}\nchordal: {}\nagree: {agree}\n", peo.is_ok(), chordal.map_or("unknown".into(), |c| c.to_string()));
            Ok(Output::predicate(Value::Object(out), peo.is_ok() && agree, text))
        }
        Command::Peo(input) => {
            let doc = ctx.hypergraph(&input)?;
            match find_peo(&doc.hypergraph) {
                Ok(o) => Ok(Output::predicate(serde_json::to_value(&o).expect("plain data serializes"), true, format!("{:?}\n", o.order))),
                Err(f) => {
                    let value = json!({"peo": null, "witness": set_to_value(f.witness), "prefix": f.prefix});
                    Ok(Output::predicate(value, false, format!("no perfect elimination order; stuck on {}\n", f.witness)))
                }
            }
        }
        Command::Script { input, glue_only } => match ctx.load(&input)? {
            Document::Script(s) => Ok(Output::json(hypergraph_to_value(&replay_script(&s)?, None))),
            Document::Hypergraph(doc) => {
                let outcome = if glue_only { is_chordal_search(&doc.hypergraph, ctx.budget) } else { is_generalized_chordal_search(&doc.hypergraph, ctx.budget) };
                let value = search_value(&outcome);
                let text = format!("{}\n", value["result"].as_str().unwrap_or_default());
                Ok(Output::predicate(value, outcome.is_yes(), text))
            }
            Document::Complex(_) => Err(Error::Input("expected a script or a hypergraph, got a complex".into())),
        },
        Command::RandomGc { n, d, glue_weight, edge_weight } => {
            let (h, script) = random_generalized_chordal(n, d, ctx.seed, MoveMix { glue: glue_weight, add_edge: edge_weight })?;
            Ok(Output::json(json!({"hypergraph": hypergraph_to_value(&h, None), "script": script})))
        }
        Command::Hunt { n, d, samples, density } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::Input(format!("density {density} is not a probability")));
            }
            let ground = VertexSet::range(n)?;
            limits.check(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let (mut linear_count, mut candidates) = (0usize, Vec::new());
            for index in 0..samples {
                let edges: Vec<VertexSet> = ground.subsets_of_size(d).filter(|_| rng.gen_bool(density)).collect();
                let h = Hypergraph::new(ground, d, edges)?;
                if !has_linear_resolution(&flag_complex_of(&h, &limits)?, field, &limits)?.linear {
                    continue;
                }
                linear_count += 1;
                let outcome = is_generalized_chordal_search(&h, ctx.budget);
                if !outcome.is_yes() {
                    candidates.push(json!({"sample": index, "hypergraph": hypergraph_to_value(&h, None), "search": search_value(&outcome)}));
                }
            }
            let text = format!("{samples} sampled, {linear_count} linear, {} candidates\n", candidates.len());
            Ok(Output { value: json!({"examined": samples, "linear": linear_count, "candidates": candidates}), text: Some(text), status: EXIT_OK })
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Context {
        limits: Limits { cap: cli.cap, workers: cli.workers.max(1) },
        field: cli.field,
        seed: cli.seed,
        budget: cli.budget,
        stdin,
    };
    match execute(cli.command, &mut ctx) {
        Ok(out) => {
            let body = match (cli.format, out.text) {
                (Format::Text, Some(t)) => t,
                _ => format!("{}\n", serde_json::to_string(&out.value).expect("values serialize")),
            };
            let _ = stdout.write_all(body.as_bytes());
            out.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_INPUT,
            }
        }
    }
}
