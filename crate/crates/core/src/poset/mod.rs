//! Finite posets on at most 64 elements.

mod enumerate;

pub use enumerate::{for_each_labeled_poset, random_poset};

use crate::bits::{self, bits};
use crate::combinat::{conjugate_partition, is_partition, Blowup, Graph, MAX_VERTICES};
use crate::error::{input, resource, Result};

/// Largest ground set for the exhaustive Greene computation.
pub const GREENE_LIMIT: usize = 22;

/// A strict partial order, stored transitively closed: `up[i]` is the set of
/// elements strictly above `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraphs {
    pub incomparability: Graph,
    pub comparability: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetGreene {
    pub a_seq: Vec<u64>,
    pub c_seq: Vec<u64>,
    pub lambda: Vec<u64>,
    pub lambdabar: Vec<u64>,
    pub conjugate: bool,
}

/// Transitive closure of `relations` (0-based, first < second).
pub fn build_poset(n: usize, relations: &[(usize, usize)]) -> Result<Poset> {
    if n > MAX_VERTICES {
        return input(format!("{n} elements (at most {MAX_VERTICES} supported)"));
    }
    let mut succ = vec![0u64; n];
    for &(i, j) in relations {
        if i >= n || j >= n {
            return input(format!("relation ({}, {}) has an element outside 1..={n}", i + 1, j + 1));
        }
        succ[i] |= 1 << j;
    }
    if let Some(cycle) = find_cycle(&succ) {
        let text: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
        return input(format!("relations contain the cycle {}", text.join(" < ")));
    }
    Ok(Poset::from_succ(succ))
}

fn find_cycle(succ: &[u64]) -> Option<Vec<usize>> {
    let n = succ.len();
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn visit(v: usize, succ: &[u64], state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for w in bits(succ[v]) {
            if state[w] == 1 {
                let start = stack.iter().position(|&x| x == w).unwrap();
                let mut cycle = stack[start..].to_vec();
                cycle.push(w);
                return Some(cycle);
            }
            if state[w] == 0 {
                if let Some(c) = visit(w, succ, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    for v in 0..n {
        if state[v] == 0 {
            if let Some(c) = visit(v, succ, &mut state, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

impl Poset {
    /// Closes an acyclic successor relation.
    fn from_succ(mut up: Vec<u64>) -> Poset {
        let n = up.len();
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        let mut down = vec![0u64; n];
        for i in 0..n {
            for j in bits(up[i]) {
                down[j] |= 1 << i;
            }
        }
        Poset { n, up, down }
    }

    /// Builds from 1-based pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut rel = Vec::with_capacity(pairs.len());
        for &(i, j) in pairs {
            if i == 0 || j == 0 || i > n || j > n {
                return input(format!("relation ({i}, {j}) has an element outside 1..={n}"));
            }
            rel.push((i - 1, j - 1));
        }
        build_poset(n, &rel)
    }

    pub fn chain(n: usize) -> Poset {
        build_poset(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        build_poset(n, &[]).unwrap()
    }

    /// The zigzag on `0..=d`, where each odd element lies below its even
    /// neighbours. Element `i` is stored at index `i` (serialized as `i+1`).
    pub fn zigzag(d: usize) -> Poset {
        let mut rel = Vec::new();
        for j in (1..=d).step_by(2) {
            rel.push((j, j - 1));
            if j < d {
                rel.push((j, j + 1));
            }
        }
        build_poset(d + 1, &rel).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    #[inline]
    pub fn above(&self, i: usize) -> u64 {
        self.up[i]
    }

    #[inline]
    pub fn below(&self, i: usize) -> u64 {
        self.down[i]
    }

    #[inline]
    pub fn comparable_to(&self, i: usize) -> u64 {
        self.up[i] | self.down[i]
    }

    pub fn all(&self) -> u64 {
        bits::full(self.n)
    }

    /// All pairs `(i, j)` with `i < j` in the order, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| bits(self.up[i]).map(move |j| (i, j))).collect()
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|u| u.count_ones() as usize).sum()
    }

    /// Covering pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| self.up[i] & self.down[j] == 0)
            .collect()
    }

    pub fn is_chain(&self, set: u64) -> bool {
        bits(set).all(|v| bits::is_subset(set & !(1 << v), self.comparable_to(v)))
    }

    pub fn is_antichain(&self, set: u64) -> bool {
        bits(set).all(|v| self.comparable_to(v) & set == 0)
    }

    pub fn is_down_set(&self, set: u64) -> bool {
        bits(set).all(|v| bits::is_subset(self.down[v], set))
    }

    pub fn is_up_set(&self, set: u64) -> bool {
        bits(set).all(|v| bits::is_subset(self.up[v], set))
    }

    pub fn derived_graphs(&self) -> DerivedGraphs {
        let mut comparability = Graph::empty(self.n);
        for (i, j) in self.relations() {
            comparability.add_edge(i, j);
        }
        DerivedGraphs { incomparability: comparability.complement(), comparability }
    }

    pub fn incomparability_graph(&self) -> Graph {
        self.derived_graphs().incomparability
    }

    pub fn comparability_graph(&self) -> Graph {
        self.derived_graphs().comparability
    }

    /// Replaces element `i` with a chain of `a_i` elements; labels are
    /// `(i, j)` with both components 0-based.
    pub fn blowup(&self, a: &[u32]) -> Result<Blowup<Poset>> {
        if a.len() != self.n {
            return input(format!("blowup vector has length {}, expected {}", a.len(), self.n));
        }
        let total: u64 = a.iter().map(|&x| x as u64).sum();
        if total > MAX_VERTICES as u64 {
            return input(format!("blowup has {total} elements (at most {MAX_VERTICES})"));
        }
        let labels: Vec<(usize, usize)> =
            a.iter().enumerate().flat_map(|(i, &k)| (0..k as usize).map(move |j| (i, j))).collect();
        let m = labels.len();
        let mut up = vec![0u64; m];
        for (x, &(i, j)) in labels.iter().enumerate() {
            for (y, &(k, l)) in labels.iter().enumerate() {
                if self.lt(i, k) || (i == k && j < l) {
                    up[x] |= 1 << y;
                }
            }
        }
        Ok(Blowup { graph: Poset::from_succ(up), labels })
    }

    /// All antichains with at least `k` elements, ordered by size and then
    /// by sorted element lists.
    pub fn antichains_at_least(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        self.extend_antichains(0, self.all(), k.max(1), &mut out);
        out.sort_by_key(|&s| (s.count_ones(), bits::to_indices(s)));
        out
    }

    fn extend_antichains(&self, current: u64, cand: u64, k: usize, out: &mut Vec<u64>) {
        if current.count_ones() as usize >= k {
            out.push(current);
        }
        if ((current | cand).count_ones() as usize) < k {
            return;
        }
        for v in bits(cand) {
            let later = cand & !bits::full(v + 1) & !self.comparable_to(v);
            self.extend_antichains(current | 1 << v, later, k, out);
        }
    }

    /// Height (longest chain) and width (largest antichain) of every subset.
    fn height_width_tables(&self) -> Result<(Vec<u8>, Vec<u8>)> {
        if self.n > GREENE_LIMIT {
            return resource(format!("subset tables on {} elements exceed ceiling {GREENE_LIMIT}", self.n));
        }
        let size = 1usize << self.n;
        let mut chain = vec![true; size];
        let mut anti = vec![true; size];
        let mut height = vec![0u8; size];
        let mut width = vec![0u8; size];
        for s in 1..size {
            let top = 63 - (s as u64).leading_zeros() as usize;
            let rest = s & !(1 << top);
            let comp = self.comparable_to(top);
            chain[s] = chain[rest] && bits::is_subset(rest as u64, comp);
            anti[s] = anti[rest] && (rest as u64) & comp == 0;
            let card = s.count_ones() as u8;
            let drop_max = |t: &[u8]| bits(s as u64).map(|v| t[s & !(1 << v)]).max().unwrap();
            height[s] = if chain[s] { card } else { drop_max(&height) };
            width[s] = if anti[s] { card } else { drop_max(&width) };
        }
        Ok((height, width))
    }

    pub fn height(&self) -> usize {
        let mut best = 0;
        let mut memo = vec![0usize; self.n];
        // elements sorted so that everything below comes first
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.down[i].count_ones());
        for &i in &order {
            memo[i] = 1 + bits(self.down[i]).map(|j| memo[j]).max().unwrap_or(0);
            best = best.max(memo[i]);
        }
        best
    }

    pub fn width(&self) -> usize {
        self.incomparability_graph().omega()
    }

    /// Greene–Kleitman sequences: `a_k` is the largest union of `k`
    /// antichains, `c_k` the largest union of `k` chains.
    pub fn greene_sequences(&self) -> Result<PosetGreene> {
        let (height, width) = self.height_width_tables()?;
        let n = self.n;
        let mut by_height = vec![0u64; n + 1];
        let mut by_width = vec![0u64; n + 1];
        for s in 0..height.len() {
            let c = s.count_ones() as u64;
            let h = height[s] as usize;
            let w = width[s] as usize;
            by_height[h] = by_height[h].max(c);
            by_width[w] = by_width[w].max(c);
        }
        let prefix = |v: &[u64]| -> Vec<u64> {
            let mut out = Vec::new();
            let mut best = 0;
            for &x in &v[1..] {
                if best == n as u64 {
                    break;
                }
                best = best.max(x);
                out.push(best);
            }
            out
        };
        let a_seq = prefix(&by_height);
        let c_seq = prefix(&by_width);
        let diff = |s: &[u64]| -> Vec<u64> { s.iter().scan(0, |p, &x| Some(x - std::mem::replace(p, x))).collect() };
        let lambda = diff(&a_seq);
        let lambdabar = diff(&c_seq);
        let conjugate =
            is_partition(&lambda) && is_partition(&lambdabar) && conjugate_partition(&lambda) == lambdabar;
        Ok(PosetGreene { a_seq, c_seq, lambda, lambdabar, conjugate })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(p.relation_count(), 3);
        let e = Poset::from_pairs(2, &[(1, 2), (2, 1)]).unwrap_err();
        assert!(e.to_string().contains("1 < 2 < 1"), "{e}");
        assert!(Poset::from_pairs(2, &[(1, 1)]).is_err());
        assert!(Poset::from_pairs(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn zigzag_four() {
        let z = Poset::zigzag(4);
        assert_eq!(z, build_poset(5, &[(1, 0), (1, 2), (3, 2), (3, 4)]).unwrap());
        assert_eq!(z.height(), 2);
        let inc = z.incomparability_graph();
        assert_eq!(inc.edges(), vec![(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(z.antichains_at_least(3), vec![0b10101]);
    }

    #[test]
    fn derived_graphs_of_extremes() {
        let c = Poset::chain(4).derived_graphs();
        assert_eq!(c.incomparability, Graph::empty(4));
        assert_eq!(c.comparability, Graph::complete(4));
        assert_eq!(Poset::antichain(4).incomparability_graph(), Graph::complete(4));
    }

    #[test]
    fn blowups() {
        assert_eq!(Poset::chain(2).blowup(&[2, 2]).unwrap().graph, Poset::chain(4));
        let b = Poset::antichain(2).blowup(&[2, 1]).unwrap().graph;
        assert_eq!(b, build_poset(3, &[(0, 1)]).unwrap());
        assert_eq!(Poset::zigzag(4).blowup(&[1; 5]).unwrap().graph, Poset::zigzag(4));
        let z = Poset::zigzag(4);
        let a = [2, 1, 3, 0, 1];
        assert_eq!(
            z.blowup(&a).unwrap().graph.incomparability_graph(),
            z.incomparability_graph().blowup(&a).unwrap().graph
        );
    }

    #[test]
    fn greene_examples() {
        let g = Poset::chain(3).greene_sequences().unwrap();
        assert_eq!((g.lambda.clone(), g.lambdabar.clone(), g.conjugate), (vec![1, 1, 1], vec![3], true));
        let g = Poset::antichain(3).greene_sequences().unwrap();
        assert_eq!((g.lambda.clone(), g.lambdabar.clone(), g.conjugate), (vec![3], vec![1, 1, 1], true));
        let g = Poset::zigzag(4).greene_sequences().unwrap();
        assert_eq!((g.lambda, g.lambdabar, g.conjugate), (vec![3, 2], vec![2, 2, 1], true));
    }

    #[test]
    fn antichain_listing() {
        assert!(Poset::chain(4).antichains_at_least(2).is_empty());
        assert_eq!(Poset::antichain(3).antichains_at_least(2), vec![0b011, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn width_and_covers() {
        let z = Poset::zigzag(4);
        assert_eq!(z.width(), 3);
        assert_eq!(z.covers().len(), 4);
        assert_eq!(Poset::chain(4).covers(), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
