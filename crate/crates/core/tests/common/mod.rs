//! Brute-force reference implementations shared by the integration tests.
//! Everything here works straight from the definitions over all subsets.

#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spl_core::combinat::{Graph, Hypergraph};
use spl_core::monomial::{Monomial, MonomialIdeal};
use spl_core::poset::{random_poset, Poset};

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..=full(n)
}

fn sub(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Minimal vertex covers of a hypergraph.
pub fn min_covers(n: usize, edges: &[u64]) -> Vec<u64> {
    let covers: Vec<u64> = subsets(n).filter(|&c| edges.iter().all(|&e| e & c != 0)).collect();
    covers.iter().copied().filter(|&c| !covers.iter().any(|&d| d != c && sub(d, c))).collect()
}

/// `x^a` lies in the `r`-th symbolic power iff every minimal cover carries weight ≥ r.
pub fn symbolic_member(n: usize, edges: &[u64], a: &[u32], r: u32) -> bool {
    min_covers(n, edges).iter().all(|&c| (0..n).filter(|&i| c >> i & 1 == 1).map(|i| a[i]).sum::<u32>() >= r)
}

/// Every monomial with all exponents at most `e`.
pub fn boxes(n: usize, e: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=e).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    out
}

/// Symbolic power assembled from the box `[0, r]^n`; enough for squarefree ideals.
pub fn symbolic_power_brute(n: usize, edges: &[u64], r: u32) -> MonomialIdeal {
    let gens = boxes(n, r).into_iter().filter(|a| symbolic_member(n, edges, a, r)).map(Monomial::new);
    MonomialIdeal::minimalize(gens, n).unwrap()
}

pub fn independent(edges: &[u64], s: u64) -> bool {
    edges.iter().all(|&e| !sub(e, s))
}

pub fn alpha(n: usize, edges: &[u64]) -> u32 {
    subsets(n).filter(|&s| independent(edges, s)).map(u64::count_ones).max().unwrap_or(0)
}

pub fn graph_edges(g: &Graph) -> Vec<u64> {
    g.edges().iter().map(|&(i, j)| 1 << i | 1 << j).collect()
}

pub fn is_clique(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|i| s >> i & 1 == 0 || (0..g.n()).all(|j| i == j || s >> j & 1 == 0 || g.has_edge(i, j)))
}

pub fn omega(g: &Graph) -> u32 {
    subsets(g.n()).filter(|&s| is_clique(g, s)).map(u64::count_ones).max().unwrap_or(0)
}

/// Fewest members of a down-closed family needed to cover each subset.
pub fn cover_numbers(n: usize, member: impl Fn(u64) -> bool) -> Vec<u32> {
    let fam: Vec<u64> = subsets(n).filter(|&s| s != 0 && member(s)).collect();
    let mut best = vec![u32::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full(n) {
        let low = s & s.wrapping_neg();
        for &f in &fam {
            if f & low != 0 && sub(f, s) {
                let rest = best[(s & !f) as usize];
                if rest != u32::MAX {
                    best[s as usize] = best[s as usize].min(rest + 1);
                }
            }
        }
    }
    best
}

/// Chromatic number of a hypergraph: fewest independent sets covering `V`.
pub fn chi(n: usize, edges: &[u64]) -> u32 {
    if n == 0 {
        return 0;
    }
    cover_numbers(n, |s| independent(edges, s))[full(n) as usize]
}

pub fn chi_of(n: usize, edges: &[u64], set: u64) -> u32 {
    cover_numbers(n, |s| independent(edges, s))[set as usize]
}

/// Every induced subgraph has `χ = ω`.
pub fn perfect(g: &Graph) -> bool {
    let n = g.n();
    let colors = cover_numbers(n, |s| g.is_independent(s));
    subsets(n).all(|s| {
        let w = subsets(n).filter(|&t| sub(t, s) && is_clique(g, t)).map(u64::count_ones).max().unwrap();
        colors[s as usize] == w
    })
}

/// Minimal vertex sets whose induced subhypergraph needs more than `r` colors.
pub fn secant_sets(n: usize, edges: &[u64], r: u32) -> Vec<u64> {
    let c = cover_numbers(n, |s| independent(edges, s));
    let big: Vec<u64> = subsets(n).filter(|&s| c[s as usize] > r).collect();
    big.iter().copied().filter(|&s| !big.iter().any(|&t| t != s && sub(t, s))).collect()
}

pub fn ideal_of_sets(n: usize, sets: &[u64]) -> MonomialIdeal {
    MonomialIdeal::minimalize(sets.iter().map(|&s| Monomial::from_mask(n, s)), n).unwrap()
}

/// Largest union of `k` members of a family, for `k = 1, 2, ...` until everything is covered.
pub fn union_sequence(n: usize, member: impl Fn(u64) -> bool) -> Vec<u64> {
    let c = cover_numbers(n, member);
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let best = subsets(n).filter(|&s| c[s as usize] <= k).map(u64::count_ones).max().unwrap() as u64;
        out.push(best);
        if best == n as u64 {
            return out;
        }
        k += 1;
    }
}

pub fn is_chain(p: &Poset, s: u64) -> bool {
    let v: Vec<usize> = (0..p.n()).filter(|&i| s >> i & 1 == 1).collect();
    v.iter().all(|&i| v.iter().all(|&j| i == j || p.lt(i, j) || p.lt(j, i)))
}

pub fn is_antichain(p: &Poset, s: u64) -> bool {
    let v: Vec<usize> = (0..p.n()).filter(|&i| s >> i & 1 == 1).collect();
    v.iter().all(|&i| v.iter().all(|&j| !p.lt(i, j)))
}

pub fn differences(seq: &[u64]) -> Vec<u64> {
    let mut prev = 0;
    seq.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

pub fn conjugate(p: &[u64]) -> Vec<u64> {
    let m = p.iter().copied().max().unwrap_or(0);
    (1..=m).map(|j| p.iter().filter(|&&x| x >= j).count() as u64).collect()
}

pub fn graph(n_max: usize) -> impl Strategy<Value = Graph> {
    (1..=n_max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0..=full(pairs)).prop_map(|(n, code)| Graph::from_edge_code(n, code))
    })
}

pub fn hypergraph(n_max: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=n_max).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(0..=full(n), 0..6)).prop_map(|(n, sets)| {
            let sets: Vec<u64> = sets.into_iter().filter(|s| s.count_ones() >= 2).collect();
            Hypergraph::from_sets_minimal(n, sets).unwrap()
        })
    })
}

pub fn poset(n_max: usize) -> impl Strategy<Value = Poset> {
    (1..=n_max, 0.0..1.0f64, any::<u64>())
        .prop_map(|(n, d, seed)| random_poset(n, d, &mut ChaCha8Rng::seed_from_u64(seed)))
}

pub fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

pub fn monomial(a: &[u32]) -> Monomial {
    Monomial::new(a.iter().copied())
}
