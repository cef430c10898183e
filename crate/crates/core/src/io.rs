//! JSON forms of ideals, graphs, hypergraphs, posets, polynomials and
//! reports. Vertices and variables are 1-based.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinat::{Graph, GreeneSequences, GreeneVerdict, Hypergraph};
use crate::error::{Error, Result};
use crate::groebner::{DelightfulReport, Polynomial, PolynomialJson, ProductGbReport};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::{Poset, PosetGreene};
use crate::symbolic::{DiffPerfectReport, Side};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed {what} JSON: {e}")))
}

pub fn ideal_to_json(i: &MonomialIdeal) -> IdealJson {
    IdealJson {
        n: i.n(),
        generators: i.generators().iter().map(|g| g.exps().iter().map(|&e| e as u32).collect()).collect(),
    }
}

pub fn ideal_from_json(j: &IdealJson) -> Result<MonomialIdeal> {
    let gens = j.generators.iter().map(|g| Monomial::new(g.iter().copied()));
    MonomialIdeal::minimalize(gens, j.n)
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    ideal_from_json(&parse(text, "ideal")?)
}

pub fn hypergraph_to_json(h: &Hypergraph) -> HypergraphJson {
    HypergraphJson { n: h.n(), edges: h.edge_lists() }
}

pub fn graph_to_json(g: &Graph) -> HypergraphJson {
    hypergraph_to_json(&g.to_hypergraph())
}

pub fn hypergraph_from_json(j: &HypergraphJson) -> Result<Hypergraph> {
    Hypergraph::from_lists(j.n, &j.edges)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    hypergraph_from_json(&parse(text, "hypergraph")?)
}

/// Parses a graph; every edge must have exactly two vertices.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let j: HypergraphJson = parse(text, "graph")?;
    if let Some(e) = j.edges.iter().find(|e| e.len() != 2) {
        return Err(Error::Input(format!("graph edge {e:?} does not have two vertices")));
    }
    hypergraph_from_json(&j)?.as_graph()
}

/// Serializes the transitively closed relation.
pub fn poset_to_json(p: &Poset) -> PosetJson {
    PosetJson { n: p.n(), relations: p.relations().into_iter().map(|(i, j)| [i + 1, j + 1]).collect() }
}

pub fn poset_from_json(j: &PosetJson) -> Result<Poset> {
    let pairs: Vec<(usize, usize)> = j.relations.iter().map(|r| (r[0], r[1])).collect();
    Poset::from_pairs(j.n, &pairs)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    poset_from_json(&parse(text, "poset")?)
}

/// Monomials are reported in their text form, `"x1^2*x3"`.
pub fn monomial_text(m: &Monomial) -> Value {
    Value::String(m.to_string())
}

fn side_text(side: Option<Side>) -> Value {
    match side {
        Some(Side::Left) => json!("left"),
        Some(Side::Right) => json!("right"),
        None => Value::Null,
    }
}

pub fn ideal_value(i: &MonomialIdeal) -> Value {
    json!({
        "ideal": ideal_to_json(i),
        "text": i.to_string(),
        "count": i.len(),
    })
}

pub fn diff_perfect_value(rep: &DiffPerfectReport) -> Value {
    let levels: Vec<Value> = rep
        .levels
        .iter()
        .map(|l| {
            json!({
                "s": l.s,
                "equal": l.equal,
                "side": side_text(l.side),
                "witness": l.witness.as_ref().map(monomial_text),
                "lhs_generators": l.lhs_generators,
            })
        })
        .collect();
    let first = rep.first_failure();
    json!({
        "r": rep.r,
        "s_max": rep.s_max,
        "sigma": rep.sigma.as_ref().map(|s| s.iter().map(|v| v + 1).collect::<Vec<_>>()),
        "all_equal": rep.all_equal(),
        "first_failure": first.map(|l| l.s),
        "witness": first.and_then(|l| l.witness.as_ref()).map(monomial_text),
        "levels": levels,
    })
}

pub fn greene_value(g: &GreeneSequences) -> Value {
    json!({
        "a_seq": g.a_seq,
        "c_seq": g.c_seq,
        "lambda": g.lambda,
        "lambdabar": g.lambdabar,
        "conjugate": g.is_conjugate(),
    })
}

pub fn greene_verdict_value(v: &GreeneVerdict) -> Value {
    match v {
        GreeneVerdict::UpToBudget { budget, checked } => {
            json!({"greene": true, "budget": budget, "checked": checked, "witness": Value::Null})
        }
        GreeneVerdict::Fails { witness, sequences } => {
            json!({"greene": false, "witness": witness, "sequences": greene_value(sequences)})
        }
    }
}

pub fn poset_greene_value(g: &PosetGreene) -> Value {
    json!({
        "a_seq": g.a_seq,
        "c_seq": g.c_seq,
        "lambda": g.lambda,
        "lambdabar": g.lambdabar,
        "conjugate": g.conjugate,
    })
}

pub fn polys_value(ps: &[Polynomial], names: &[String]) -> Value {
    json!({
        "polynomials": ps.iter().map(Polynomial::to_json).collect::<Vec<_>>(),
        "text": ps.iter().map(|p| p.display_with(names, None).to_string()).collect::<Vec<_>>(),
        "count": ps.len(),
    })
}

/// Parses a JSON array of polynomials `{"n", "terms"}` sharing one ambient.
pub fn parse_polys(text: &str) -> Result<Vec<Polynomial>> {
    let js: Vec<PolynomialJson> = parse(text, "polynomial list")?;
    let ps = js.iter().map(Polynomial::from_json).collect::<Result<Vec<_>>>()?;
    if let Some(p) = ps.iter().find(|p| p.n() != ps[0].n()) {
        return Err(Error::Input(format!("polynomials in {} and {} variables mixed", ps[0].n(), p.n())));
    }
    if ps.is_empty() {
        return Err(Error::Input("empty polynomial list".into()));
    }
    Ok(ps)
}

pub fn delightful_value(rep: &DelightfulReport) -> Value {
    json!({
        "r": rep.r,
        "delightful": rep.equal,
        "initial_of_secant": ideal_value(&rep.initial_of_secant),
        "secant_of_initial": ideal_value(&rep.secant_of_initial),
        "side": side_text(rep.side),
        "witness": rep.witness.as_ref().map(monomial_text),
    })
}

pub fn product_gb_value(rep: &ProductGbReport, names: &[String]) -> Value {
    json!({
        "r": rep.r,
        "s": rep.s,
        "passed": rep.passed(),
        "candidates": rep.candidates,
        "derivatives_checked": rep.derivatives_checked,
        "membership": rep.membership,
        "membership_witness": rep.membership_witness.as_ref().map(|(c, d)| json!({
            "candidate": c.display_with(names, None).to_string(),
            "derivative": d.display_with(names, None).to_string(),
        })),
        "leading_terms": rep.leading_terms,
        "side": side_text(rep.side),
        "lead_witness": rep.lead_witness.as_ref().map(monomial_text),
        "predicted": ideal_value(&rep.predicted),
    })
}
