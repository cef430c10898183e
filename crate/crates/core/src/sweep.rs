//! Exhaustive and randomized sweeps over labeled graphs and posets.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{is_greene_graph, is_perfect, Graph};
use crate::error::{resource, Result};
use crate::io::{graph_to_json, ideal_to_json, poset_to_json};
use crate::monomial::symbolic_power_radical;
use crate::poset::{for_each_labeled_poset, random_poset, Poset};
use crate::symbolic::{antichain_product_ideal, diff_perfect_check, secant_edge_ideal, symbolic_square_witness};

/// Counterexamples kept in a report.
const MAX_COUNTEREXAMPLES: usize = 20;

/// Largest graph order for exhaustive graph sweeps.
pub const GRAPH_SWEEP_LIMIT: usize = 7;
/// Largest poset size for exhaustive poset sweeps.
pub const POSET_SWEEP_LIMIT: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub kind: String,
    pub version: String,
    pub bounds: Value,
    pub checked: u64,
    pub failures: u64,
    pub counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Value>,
}

impl SweepReport {
    fn new(kind: &str, bounds: Value) -> Self {
        SweepReport {
            kind: kind.into(),
            version: crate::VERSION.into(),
            bounds,
            checked: 0,
            failures: 0,
            counts: BTreeMap::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn bump(&mut self, key: impl Into<String>, by: u64) {
        *self.counts.entry(key.into()).or_default() += by;
    }

    fn record(&mut self, outcome: Outcome) {
        self.checked += 1;
        for k in outcome.tags {
            self.bump(k, 1);
        }
        if let Some(c) = outcome.counterexample {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
    }
}

struct Outcome {
    tags: Vec<String>,
    counterexample: Option<Value>,
}

fn check_graph_bound(n_max: usize) -> Result<()> {
    if n_max > GRAPH_SWEEP_LIMIT {
        return resource(format!("graph sweeps are limited to {GRAPH_SWEEP_LIMIT} vertices"));
    }
    Ok(())
}

fn check_poset_bound(n_max: usize) -> Result<()> {
    if n_max > POSET_SWEEP_LIMIT {
        return resource(format!("poset sweeps are limited to {POSET_SWEEP_LIMIT} elements"));
    }
    Ok(())
}

/// Runs `f` on every labeled graph with `1..=n_max` vertices, in parallel,
/// and folds the outcomes in (n, edge code) order.
fn graph_sweep(
    report: &mut SweepReport,
    n_max: usize,
    f: impl Fn(&Graph) -> Result<Outcome> + Sync,
) -> Result<()> {
    for n in 1..=n_max {
        let pairs = n * (n - 1) / 2;
        let outcomes: Vec<Outcome> =
            (0..1u64 << pairs).into_par_iter().map(|code| f(&Graph::from_edge_code(n, code))).collect::<Result<_>>()?;
        report.bump(format!("graphs_n{n}"), outcomes.len() as u64);
        for o in outcomes {
            report.record(o);
        }
    }
    Ok(())
}

fn labeled_posets(n_max: usize) -> Vec<Poset> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        for_each_labeled_poset(n, &mut |p| all.push(p.clone()));
    }
    all
}

fn poset_sweep(report: &mut SweepReport, posets: &[Poset], f: impl Fn(&Poset) -> Result<Outcome> + Sync) -> Result<()> {
    let outcomes: Vec<Outcome> = posets.par_iter().map(&f).collect::<Result<_>>()?;
    for (p, o) in posets.iter().zip(outcomes) {
        report.bump(format!("posets_n{}", p.n()), 1);
        report.record(o);
    }
    Ok(())
}

/// Perfection against 1-differential perfection up to `s = n − α(G)`.
pub fn perfect_vs_diffperfect(n_max: usize) -> Result<SweepReport> {
    check_graph_bound(n_max)?;
    let mut report = SweepReport::new("perfect-vs-diffperfect", json!({ "n_max": n_max, "r": 1 }));
    graph_sweep(&mut report, n_max, |g| {
        let perfect = is_perfect(g)?;
        let s_max = (g.n() - g.alpha()).max(1) as u32;
        let rep = diff_perfect_check(&g.to_hypergraph(), 1, s_max)?;
        let pass = rep.all_equal();
        let mut tags = vec![if perfect { "perfect" } else { "imperfect" }.to_string()];
        if let Some(l) = rep.first_failure() {
            tags.push(format!("first_failure_s{}", l.s));
        }
        let counterexample = (perfect != pass).then(|| {
            json!({
                "graph": graph_to_json(g),
                "perfect": perfect,
                "diff_perfect_up_to": s_max,
                "first_failure": rep.first_failure().map(|l| json!({"s": l.s, "witness": l.witness.as_ref().map(|w| w.to_string())})),
            })
        });
        Ok(Outcome { tags, counterexample })
    })?;
    Ok(report)
}

/// `I(G)^(2) = I(G)^{2} + I(G)^2` on every labeled graph.
pub fn symbolic_square(n_max: usize) -> Result<SweepReport> {
    check_graph_bound(n_max)?;
    let mut report = SweepReport::new("symbolic-square", json!({ "n_max": n_max }));
    graph_sweep(&mut report, n_max, |g| {
        let w = symbolic_square_witness(g)?;
        Ok(Outcome {
            tags: vec![],
            counterexample: w.map(|m| json!({ "graph": graph_to_json(g), "witness": m.to_string() })),
        })
    })?;
    Ok(report)
}

fn greene_outcome(p: &Poset) -> Result<Outcome> {
    let g = p.greene_sequences()?;
    Ok(Outcome {
        tags: vec![],
        counterexample: (!g.conjugate).then(|| {
            json!({ "poset": poset_to_json(p), "lambda": g.lambda, "lambdabar": g.lambdabar })
        }),
    })
}

/// Greene–Kleitman duality on all labeled posets with at most `n_max`
/// elements and on `random` random posets with at most `random_n_max`.
pub fn duality(n_max: usize, random: usize, random_n_max: usize, seed: u64) -> Result<SweepReport> {
    check_poset_bound(n_max)?;
    if random_n_max > crate::poset::GREENE_LIMIT {
        return resource(format!("random posets are limited to {} elements", crate::poset::GREENE_LIMIT));
    }
    let mut report = SweepReport::new(
        "duality",
        json!({ "n_max": n_max, "random": random, "random_n_max": random_n_max, "seed": seed }),
    );
    for n in 1..=n_max {
        let mut outcomes = Vec::new();
        let mut err = None;
        for_each_labeled_poset(n, &mut |p| match greene_outcome(p) {
            Ok(o) => outcomes.push(o),
            Err(e) => err = Some(e),
        });
        if let Some(e) = err {
            return Err(e);
        }
        report.bump(format!("posets_n{n}"), outcomes.len() as u64);
        for o in outcomes {
            report.record(o);
        }
    }
    if random > 0 && random_n_max > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..random {
            let n = rng.gen_range(1..=random_n_max);
            let density = rng.gen_range(0.05..0.7);
            let p = random_poset(n, density, &mut rng);
            report.bump("random", 1);
            report.record(greene_outcome(&p)?);
        }
    }
    Ok(report)
}

/// Antichain product ideals against symbolic powers of antichain ideals.
pub fn antichain_formula(n_max: usize, r_max: u32, s_max: u32) -> Result<SweepReport> {
    check_poset_bound(n_max)?;
    let mut report =
        SweepReport::new("antichain-formula", json!({ "n_max": n_max, "r_max": r_max, "s_max": s_max }));
    let posets = labeled_posets(n_max);
    poset_sweep(&mut report, &posets, |p| {
        let inc = p.incomparability_graph().to_hypergraph();
        for r in 1..=r_max {
            let secant = secant_edge_ideal(&inc, r)?;
            for s in 1..=s_max {
                let expected = symbolic_power_radical(&secant, s)?;
                let got = antichain_product_ideal(p, r, s);
                if got != expected {
                    return Ok(Outcome {
                        tags: vec![],
                        counterexample: Some(json!({
                            "poset": poset_to_json(p), "r": r, "s": s,
                            "products": ideal_to_json(&got), "symbolic": ideal_to_json(&expected),
                        })),
                    });
                }
            }
        }
        Ok(Outcome { tags: vec![], counterexample: None })
    })?;
    Ok(report)
}

/// Comparability and incomparability graphs of all labeled posets with at
/// most `n_max` elements against the Greene-graph test.
pub fn greene_corpus(n_max: usize, budget: Option<u32>) -> Result<SweepReport> {
    check_poset_bound(n_max)?;
    let mut report = SweepReport::new("greene-corpus", json!({ "n_max": n_max, "budget": budget }));
    let posets = labeled_posets(n_max);
    poset_sweep(&mut report, &posets, |p| {
        let d = p.derived_graphs();
        for (name, g) in [("comparability", &d.comparability), ("incomparability", &d.incomparability)] {
            let v = is_greene_graph(g, budget)?;
            if let crate::combinat::GreeneVerdict::Fails { witness, sequences } = v {
                return Ok(Outcome {
                    tags: vec![],
                    counterexample: Some(json!({
                        "poset": poset_to_json(p), "graph": name, "witness": witness,
                        "lambda": sequences.lambda, "lambdabar": sequences.lambdabar,
                    })),
                });
            }
        }
        Ok(Outcome { tags: vec![], counterexample: None })
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let r = perfect_vs_diffperfect(5).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(r.counts["graphs_n5"], 1024);
        // the 12 labeled five-cycles are the only imperfect graphs on 5 vertices
        assert_eq!(r.counts["imperfect"], 12);
        assert!(symbolic_square(4).unwrap().passed());
        let d = duality(4, 30, 8, 1).unwrap();
        assert!(d.passed());
        assert_eq!(d.counts["posets_n4"], 219);
        assert!(antichain_formula(4, 2, 2).unwrap().passed());
        assert!(greene_corpus(3, None).unwrap().passed());
    }
}
