use super::Graph;
use crate::bits::bits;
use crate::error::{input, resource, Result};

/// Largest DP state space allowed for one layer of the Greene recursion.
const STATE_LIMIT: u64 = 1 << 24;

/// Clique-union and independent-union sequences of a graph (or blowup).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreeneSequences {
    pub a_seq: Vec<u64>,
    pub c_seq: Vec<u64>,
    pub lambda: Vec<u64>,
    pub lambdabar: Vec<u64>,
}

impl GreeneSequences {
    fn from_sequences(a_seq: Vec<u64>, c_seq: Vec<u64>) -> Self {
        let lambda = differences(&a_seq);
        let lambdabar = differences(&c_seq);
        GreeneSequences { a_seq, c_seq, lambda, lambdabar }
    }

    /// Both difference sequences are partitions and conjugate to each other.
    pub fn is_conjugate(&self) -> bool {
        is_partition(&self.lambda) && is_partition(&self.lambdabar) && conjugate_partition(&self.lambda) == self.lambdabar
    }
}

fn differences(seq: &[u64]) -> Vec<u64> {
    let mut prev = 0;
    seq.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

/// Nonincreasing with positive parts.
pub fn is_partition(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1]) && seq.iter().all(|&x| x > 0)
}

pub fn conjugate_partition(p: &[u64]) -> Vec<u64> {
    let max = p.iter().copied().max().unwrap_or(0);
    (1..=max).map(|j| p.iter().filter(|&&x| x >= j).count() as u64).collect()
}

pub fn greene_sequences_graph(g: &Graph) -> Result<GreeneSequences> {
    greene_sequences_blowup(g, &vec![1; g.n()])
}

/// Greene sequences of the blowup `G_a`, computed on `G` with weights.
///
/// A union of `k` cliques of `G_a` covers `min(a_i, #cliques through i)`
/// copies of `i`; a union of independent sets of `G_a` may take every copy
/// of each vertex it touches.
pub fn greene_sequences_blowup(g: &Graph, a: &[u32]) -> Result<GreeneSequences> {
    if a.len() != g.n() {
        return input(format!("blowup vector has length {}, expected {}", a.len(), g.n()));
    }
    let total: u64 = a.iter().map(|&x| x as u64).sum();
    if total == 0 {
        return Ok(GreeneSequences::from_sequences(vec![], vec![]));
    }
    let a_seq = clique_unions(g, a, total)?;
    let c_seq = independent_unions(g, a, total)?;
    Ok(GreeneSequences::from_sequences(a_seq, c_seq))
}

fn clique_unions(g: &Graph, a: &[u32], total: u64) -> Result<Vec<u64>> {
    let support: Vec<usize> = (0..g.n()).filter(|&i| a[i] > 0).collect();
    let states: u64 = support.iter().try_fold(1u64, |acc, &i| acc.checked_mul(a[i] as u64 + 1)).unwrap_or(u64::MAX);
    if states > STATE_LIMIT {
        return resource(format!("Greene clique recursion needs {states} states (limit {STATE_LIMIT})"));
    }
    let supp_mask = support.iter().fold(0u64, |m, &i| m | 1 << i);
    let (sub, map) = g.induced(supp_mask);
    let caps: Vec<u64> = map.iter().map(|&i| a[i] as u64).collect();
    let mut radix = vec![1u64; caps.len()];
    for i in 1..caps.len() {
        radix[i] = radix[i - 1] * (caps[i - 1] + 1);
    }
    let cliques = sub.maximal_cliques();
    let mut seen = vec![false; states as usize];
    let mut frontier = vec![0u64];
    seen[0] = true;
    let mut seq = Vec::new();
    let weight = |state: u64| -> u64 {
        (0..caps.len()).map(|i| state / radix[i] % (caps[i] + 1)).sum()
    };
    loop {
        let mut next = Vec::new();
        let mut best = 0;
        for &s in &frontier {
            for &c in &cliques {
                let mut t = s;
                for i in bits(c) {
                    if s / radix[i] % (caps[i] + 1) < caps[i] {
                        t += radix[i];
                    }
                }
                best = best.max(weight(t));
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    next.push(t);
                }
            }
        }
        let prev_best = seq.last().copied().unwrap_or(0);
        let best = best.max(prev_best);
        seq.push(best);
        if best == total {
            return Ok(seq);
        }
        frontier = next;
    }
}

fn independent_unions(g: &Graph, a: &[u32], total: u64) -> Result<Vec<u64>> {
    if g.n() > 24 {
        return resource(format!("Greene independent-set recursion on {} vertices (limit 24)", g.n()));
    }
    let weight = |m: u64| -> u64 { bits(m).map(|i| a[i] as u64).sum() };
    let sets = g.complement().maximal_cliques();
    let mut seen = vec![false; 1usize << g.n()];
    seen[0] = true;
    let mut frontier = vec![0u64];
    let mut seq = Vec::new();
    loop {
        let mut best = seq.last().copied().unwrap_or(0);
        let mut next = Vec::new();
        for &s in &frontier {
            for &u in &sets {
                let t = s | u;
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    best = best.max(weight(t));
                    next.push(t);
                }
            }
        }
        seq.push(best);
        if best == total {
            return Ok(seq);
        }
        frontier = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreeneVerdict {
    /// Every blowup vector with total at most `budget` passed; not a proof.
    UpToBudget { budget: u32, checked: u64 },
    Fails { witness: Vec<u32>, sequences: GreeneSequences },
}

impl GreeneVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, GreeneVerdict::UpToBudget { .. })
    }
}

/// Checks the Greene condition on every blowup `G_a` with `Σ a_i ≤ budget`.
/// The graph itself is checked first, then vectors by total and lexicographically.
pub fn is_greene_graph(g: &Graph, budget: Option<u32>) -> Result<GreeneVerdict> {
    let n = g.n();
    let budget = budget.unwrap_or(2 * n as u32);
    if (budget as usize) < n {
        return input(format!("budget {budget} is below the vertex count {n}"));
    }
    let ones = vec![1u32; n];
    let mut checked = 0u64;
    let mut check = |a: &[u32]| -> Result<Option<GreeneVerdict>> {
        checked += 1;
        let seq = greene_sequences_blowup(g, a)?;
        if seq.is_conjugate() {
            Ok(None)
        } else {
            Ok(Some(GreeneVerdict::Fails { witness: a.to_vec(), sequences: seq }))
        }
    };
    if let Some(v) = check(&ones)? {
        return Ok(v);
    }
    for total in 1..=budget {
        let mut failure = None;
        compositions(n, total, &mut vec![0; n], 0, &mut |a| {
            if failure.is_some() || a == ones.as_slice() {
                return Ok(());
            }
            failure = check(a)?;
            Ok(())
        })?;
        if let Some(v) = failure {
            return Ok(v);
        }
    }
    Ok(GreeneVerdict::UpToBudget { budget, checked })
}

/// Visits every vector of length `n` with entries summing to `total`, in
/// decreasing lexicographic order.
fn compositions(
    n: usize,
    total: u32,
    cur: &mut Vec<u32>,
    pos: usize,
    f: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    if pos == n - 1 {
        cur[pos] = total;
        return f(cur);
    }
    for x in (0..=total).rev() {
        cur[pos] = x;
        compositions(n, total - x, cur, pos + 1, f)?;
    }
    Ok(())
}
