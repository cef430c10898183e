//! `spl`: command-line front end for the symbolic-power toolkit.
//!
//! Exit codes: 0 success or property true, 1 property false (witness in the
//! report), 2 input error, 3 resource ceiling.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use spl_core::combinat::{greene_sequences_graph, is_greene_graph, is_perfect, Graph, Hypergraph};
use spl_core::groebner::{
    buchberger, delightful_check, minors_at_least, pfaffians_at_least, secant_via_join, symbolic_via_join,
    verify_product_groebner, FamilyKind, MatrixFamily, Polynomial, TermOrder,
};
use spl_core::io::{
    delightful_value, diff_perfect_value, greene_value, greene_verdict_value, ideal_value, parse_graph, parse_hypergraph,
    parse_ideal, parse_polys, parse_poset, polys_value, poset_greene_value, product_gb_value,
};
use spl_core::monomial::{diff_power_with, symbolic_power_radical};
use spl_core::poset::Poset;
use spl_core::symbolic::{
    antichain_product_ideal, clique_product_ideal, clique_secant_product_ideal, diff_perfect_check, edge_ideal,
    secant_edge_ideal, squares_diff_check, symbolic_power_edge,
};
use spl_core::{sweep, Error, VERSION};

#[derive(Parser)]
#[command(name = "spl", version, about = "Symbolic powers, secants and Gröbner degenerations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GraphInput {
    /// Graph JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Hypergraph JSON file.
    #[arg(long, conflicts_with = "graph")]
    hypergraph: Option<PathBuf>,
}

#[derive(Args)]
struct PolyInput {
    /// JSON array of polynomials.
    #[arg(long)]
    polys: Option<PathBuf>,
    /// Matrix family, e.g. `generic(3,3)`, `hankel(4,1)`, `segre111`.
    #[arg(long, conflicts_with = "polys")]
    family: Option<String>,
    /// Lex priority as a permutation of 1..n (default: the family order, or x1 ≻ … ≻ xn).
    #[arg(long)]
    order: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Independence and covering numbers; chromatic and clique numbers for graphs.
    Invariants(GraphInput),
    /// Perfection test, with an odd hole or antihole when imperfect.
    Perfect {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Greene sequences of a graph and the blowup test up to a budget.
    GreeneGraph {
        #[arg(long)]
        graph: PathBuf,
        /// Largest blowup total (default 2n).
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Greene–Kleitman sequences of a poset.
    GreenePoset {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Edge ideal of a graph or hypergraph.
    EdgeIdeal(GraphInput),
    /// Secant ideal of an edge ideal.
    Secant {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        r: u32,
    },
    /// Symbolic power of an edge ideal or a squarefree monomial ideal.
    Symbolic {
        #[command(flatten)]
        input: GraphInput,
        /// Monomial ideal JSON file.
        #[arg(long, conflicts_with_all = ["graph", "hypergraph"])]
        ideal: Option<PathBuf>,
        #[arg(short)]
        r: u32,
        /// Differential power of an ideal generated in degree ≤ 2.
        #[arg(long, requires = "ideal")]
        differential: bool,
        /// Degree ceiling for the differential power.
        #[arg(long)]
        ceiling: Option<u32>,
    },
    /// Differential-perfection check for s = 1..s_max.
    DiffPerfect {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short)]
        r: u32,
        /// Largest s (default n − α).
        #[arg(long)]
        s_max: Option<u32>,
    },
    /// Differential-perfection check for I(G) plus squares of the variables in sigma.
    SquaresCheck {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated 1-based vertices.
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long)]
        s_max: u32,
        /// Degree ceiling for the differential powers.
        #[arg(long)]
        ceiling: Option<u32>,
    },
    /// Ideal of clique products; with -s, products for the s-th symbolic power of the r-th secant.
    CliqueProducts {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        r: u32,
        #[arg(short)]
        s: Option<u32>,
    },
    /// Ideal of antichain products.
    AntichainProducts {
        #[arg(long)]
        poset: PathBuf,
        #[arg(short)]
        r: u32,
        #[arg(short)]
        s: u32,
    },
    /// Reduced Gröbner basis.
    Gb(PolyInput),
    /// Initial ideal.
    Initial(PolyInput),
    /// Minors (or Pfaffians) of a matrix family of size at least t.
    Minors {
        #[arg(long)]
        family: String,
        #[arg(short)]
        t: usize,
        /// Sub-Pfaffians of size at least t instead of minors.
        #[arg(long)]
        pfaffian: bool,
    },
    /// Symbolic power (or, with --secant, secant ideal) through joins.
    JoinSymbolic {
        #[command(flatten)]
        input: PolyInput,
        #[arg(short)]
        r: u32,
        #[arg(long)]
        secant: bool,
    },
    /// Compares the initial ideal of the secant with the secant of the initial ideal.
    Delightful {
        #[command(flatten)]
        input: PolyInput,
        #[arg(short)]
        r: u32,
    },
    /// Checks that products of minors form a Gröbner basis of the symbolic power.
    VerifyProductGb {
        #[arg(long)]
        family: String,
        /// Lex priority as a permutation of 1..n.
        #[arg(long)]
        order: Option<String>,
        #[arg(short)]
        r: u32,
        #[arg(short)]
        s: u32,
    },
    /// Exhaustive and randomized sweeps.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Random posets for the duality sweep.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 10)]
        random_n_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        budget: Option<u32>,
        #[arg(long, default_value_t = 2)]
        r_max: u32,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKind {
    PerfectVsDiffperfect,
    Duality,
    SymbolicSquare,
    GreeneCorpus,
    AntichainFormula,
}

/// A report and whether the checked property held.
struct Outcome {
    value: Value,
    holds: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, holds: true }
    }

    fn check(value: Value, holds: bool) -> Self {
        Outcome { value, holds }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_hypergraph(input: &GraphInput) -> Result<Hypergraph, Error> {
    match (&input.graph, &input.hypergraph) {
        (Some(p), _) => Ok(parse_graph(&read(p)?)?.to_hypergraph()),
        (None, Some(p)) => parse_hypergraph(&read(p)?),
        (None, None) => Err(Error::Input("one of --graph or --hypergraph is required".into())),
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    parse_graph(&read(path)?)
}

fn load_poset(path: &Path) -> Result<Poset, Error> {
    parse_poset(&read(path)?)
}

fn parse_order(text: &str) -> Result<TermOrder, Error> {
    let perm = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::Input(format!("bad term order {text:?}")))?;
    TermOrder::lex_from_permutation(&perm)
}

fn family(text: &str) -> Result<MatrixFamily, Error> {
    MatrixFamily::new(FamilyKind::parse(text)?)
}

/// Generators, variable names and term order of a polynomial input.
fn load_polys(input: &PolyInput) -> Result<(Vec<Polynomial>, Vec<String>, TermOrder), Error> {
    let (polys, names, default) = match (&input.polys, &input.family) {
        (Some(p), _) => {
            let ps = parse_polys(&read(p)?)?;
            let n = ps[0].n();
            (ps, spl_core::groebner::default_names(n), TermOrder::lex(n))
        }
        (None, Some(f)) => {
            let fam = family(f)?;
            (fam.ideal(), fam.names().to_vec(), fam.order())
        }
        (None, None) => return Err(Error::Input("one of --polys or --family is required".into())),
    };
    let order = match &input.order {
        Some(t) => parse_order(t)?,
        None => default,
    };
    if order.n() != names.len() {
        return Err(Error::Input(format!("term order on {} variables, ring has {}", order.n(), names.len())));
    }
    Ok((polys, names, order))
}

fn parse_sigma(text: &str, n: usize) -> Result<u64, Error> {
    let mut mask = 0u64;
    for t in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = t.parse().map_err(|_| Error::Input(format!("bad vertex {t:?} in sigma")))?;
        if v == 0 || v > n {
            return Err(Error::Input(format!("sigma vertex {v} outside 1..={n}")));
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

fn run(verb: &Verb) -> Result<Outcome, Error> {
    match verb {
        Verb::Invariants(input) => {
            let h = load_hypergraph(input)?;
            let inv = h.invariants();
            let mut v = json!({"n": h.n(), "alpha": inv.alpha, "tau": inv.tau});
            if let Some(g) = h.as_graph().ok().filter(|g| g.n() > 0) {
                let c = g.coloring()?;
                v["chi"] = json!(c.chi);
                v["omega"] = json!(c.omega);
            } else {
                v["chi"] = json!(h.chromatic_number()?);
            }
            Ok(Outcome::ok(v))
        }
        Verb::Perfect { graph } => {
            let g = load_graph(graph)?;
            let perfect = is_perfect(&g)?;
            let witness = spl_core::combinat::find_odd_hole(&g)
                .map(|s| ("odd_hole", s))
                .or_else(|| spl_core::combinat::find_odd_antihole(&g).map(|s| ("odd_antihole", s)));
            let w = witness.map(|(kind, s)| json!({"kind": kind, "vertices": vertices(s)}));
            Ok(Outcome::check(json!({"perfect": perfect, "witness": w}), perfect))
        }
        Verb::GreeneGraph { graph, budget } => {
            let g = load_graph(graph)?;
            let seq = greene_sequences_graph(&g)?;
            let verdict = is_greene_graph(&g, *budget)?;
            let passed = verdict.passed();
            Ok(Outcome::check(json!({"sequences": greene_value(&seq), "verdict": greene_verdict_value(&verdict)}), passed))
        }
        Verb::GreenePoset { poset } => {
            let p = load_poset(poset)?;
            let g = p.greene_sequences()?;
            Ok(Outcome::check(poset_greene_value(&g), g.conjugate))
        }
        Verb::EdgeIdeal(input) => Ok(Outcome::ok(ideal_value(&edge_ideal(&load_hypergraph(input)?)))),
        Verb::Secant { input, r } => {
            positive(*r, "r")?;
            Ok(Outcome::ok(ideal_value(&secant_edge_ideal(&load_hypergraph(input)?, *r)?)))
        }
        Verb::Symbolic { input, ideal, r, differential, ceiling } => {
            positive(*r, "r")?;
            let v = match ideal {
                Some(p) => {
                    let i = parse_ideal(&read(p)?)?;
                    if *differential {
                        let d = diff_power_with(&i, *r, ceiling.unwrap_or(2 * *r + 2))?;
                        let mut v = ideal_value(&d.ideal);
                        v["degree_bound"] = json!(d.degree_bound);
                        v["complete"] = json!(d.complete);
                        v
                    } else {
                        ideal_value(&symbolic_power_radical(&i, *r)?)
                    }
                }
                None => ideal_value(&symbolic_power_edge(&load_hypergraph(input)?, *r)?),
            };
            Ok(Outcome::ok(v))
        }
        Verb::DiffPerfect { input, r, s_max } => {
            positive(*r, "r")?;
            let h = load_hypergraph(input)?;
            let s_max = s_max.unwrap_or_else(|| (h.n() - h.alpha()).max(1) as u32);
            let rep = diff_perfect_check(&h, *r, s_max)?;
            Ok(Outcome::check(diff_perfect_value(&rep), rep.all_equal()))
        }
        Verb::SquaresCheck { graph, sigma, s_max, ceiling } => {
            let g = load_graph(graph)?;
            let mask = parse_sigma(sigma, g.n())?;
            let rep = squares_diff_check(&g, mask, *s_max, *ceiling)?;
            Ok(Outcome::check(diff_perfect_value(&rep), rep.all_equal()))
        }
        Verb::CliqueProducts { graph, r, s } => {
            positive(*r, "r")?;
            let g = load_graph(graph)?;
            let i = match s {
                Some(s) => {
                    positive(*s, "s")?;
                    clique_secant_product_ideal(&g, *r, *s)
                }
                None => clique_product_ideal(&g, *r),
            };
            Ok(Outcome::ok(ideal_value(&i)))
        }
        Verb::AntichainProducts { poset, r, s } => {
            positive(*r, "r")?;
            positive(*s, "s")?;
            Ok(Outcome::ok(ideal_value(&antichain_product_ideal(&load_poset(poset)?, *r, *s))))
        }
        Verb::Gb(input) => {
            let (ps, names, order) = load_polys(input)?;
            let gb = buchberger(&ps, &order)?;
            let mut v = polys_value(gb.polys(), &names);
            v["leading"] = json!(gb
                .polys()
                .iter()
                .map(|p| Polynomial::monomial(p.leading_monomial(&order).unwrap().clone(), num_one())
                    .display_with(&names, None)
                    .to_string())
                .collect::<Vec<_>>());
            Ok(Outcome::ok(v))
        }
        Verb::Initial(input) => {
            let (ps, _, order) = load_polys(input)?;
            Ok(Outcome::ok(ideal_value(&buchberger(&ps, &order)?.initial_ideal())))
        }
        Verb::Minors { family: f, t, pfaffian } => {
            let fam = family(f)?;
            let x = fam.default_matrix();
            let ps = if *pfaffian {
                if !fam.is_skew() {
                    return Err(Error::Input(format!("{f} is not skew-symmetric")));
                }
                pfaffians_at_least(&x, *t)?
            } else {
                minors_at_least(&x, *t)?
            };
            Ok(Outcome::ok(polys_value(&ps, fam.names())))
        }
        Verb::JoinSymbolic { input, r, secant } => {
            positive(*r, "r")?;
            let (ps, names, order) = load_polys(input)?;
            let gens = if *secant { secant_via_join(&ps, *r)? } else { symbolic_via_join(&ps, *r)? };
            let gb = buchberger(&gens, &order)?;
            let mut v = polys_value(gb.polys(), &names);
            v["initial"] = ideal_value(&gb.initial_ideal());
            Ok(Outcome::ok(v))
        }
        Verb::Delightful { input, r } => {
            positive(*r, "r")?;
            let (ps, _, order) = load_polys(input)?;
            let rep = delightful_check(&ps, *r, &order)?;
            Ok(Outcome::check(delightful_value(&rep), rep.equal))
        }
        Verb::VerifyProductGb { family: f, order, r, s } => {
            let fam = family(f)?;
            let order = match order {
                Some(t) => parse_order(t)?,
                None => fam.order(),
            };
            if order.n() != fam.n_vars() {
                return Err(Error::Input(format!("term order on {} variables, ring has {}", order.n(), fam.n_vars())));
            }
            let rep = verify_product_groebner(&fam.levels((*r + *s) as usize), *r, *s, &order)?;
            Ok(Outcome::check(product_gb_value(&rep, fam.names()), rep.passed()))
        }
        Verb::Sweep { kind, n_max, random, random_n_max, seed, budget, r_max, s_max } => {
            let rep = match kind {
                SweepKind::PerfectVsDiffperfect => sweep::perfect_vs_diffperfect(*n_max)?,
                SweepKind::Duality => sweep::duality(*n_max, *random, *random_n_max, *seed)?,
                SweepKind::SymbolicSquare => sweep::symbolic_square(*n_max)?,
                SweepKind::GreeneCorpus => sweep::greene_corpus(*n_max, *budget)?,
                SweepKind::AntichainFormula => sweep::antichain_formula(*n_max, *r_max, *s_max)?,
            };
            let passed = rep.passed();
            let v = serde_json::to_value(&rep).map_err(|e| Error::Internal(e.to_string()))?;
            Ok(Outcome::check(v, passed))
        }
    }
}

fn num_one() -> spl_core::groebner::Coeff {
    spl_core::groebner::int(1)
}

fn positive(v: u32, name: &str) -> Result<(), Error> {
    if v == 0 {
        return Err(Error::Input(format!("{name} must be positive")));
    }
    Ok(())
}

fn vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn with_version(v: Value) -> Value {
    let mut out = Map::new();
    out.insert("version".into(), json!(VERSION));
    match v {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("result".into(), other);
        }
    }
    Value::Object(out)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Aligned `key  value` lines; nested objects are flattened with dotted keys.
fn render_text(v: &Value) -> String {
    fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    flatten(&key, x, out);
                }
            }
            Value::Array(xs) if xs.iter().all(|x| x.is_string()) && !xs.is_empty() => {
                for (i, x) in xs.iter().enumerate() {
                    out.push((format!("{prefix}[{}]", i + 1), scalar_text(x)));
                }
            }
            other => out.push((prefix.to_string(), scalar_text(other))),
        }
    }
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, x) in rows {
        s.push_str(&format!("{k:<width$}  {x}\n"));
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.verb) {
        Ok(out) => {
            let v = with_version(out.value);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialize")),
                Format::Text => print!("{}", render_text(&v)),
            }
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("spl: {e}");
            ExitCode::from(match e {
                Error::Input(_) | Error::Unsupported(_) => 2,
                Error::Resource(_) => 3,
                Error::Internal(_) => 1,
            })
        }
    }
}
