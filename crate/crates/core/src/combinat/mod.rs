//! Graphs and hypergraphs on at most 64 vertices, with vertex sets stored as
//! bitmasks.

mod greene;
mod invariants;
mod perfect;

pub use greene::{
    conjugate_partition, greene_sequences_blowup, greene_sequences_graph, is_greene_graph,
    is_partition, GreeneSequences, GreeneVerdict,
};
pub use invariants::{chromatic_table, Coloring, Invariants};
pub use perfect::{find_odd_antihole, find_odd_hole, is_perfect, is_perfect_by_holes, is_perfect_by_subsets};

use crate::bits::{self, bits};
use crate::error::{input, Result};

pub(crate) const MAX_VERTICES: usize = 64;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return input(format!("{n} vertices (at most {MAX_VERTICES} supported)"));
    }
    Ok(())
}

fn edge_text(e: u64) -> String {
    let v: Vec<String> = bits(e).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn sort_edges(edges: &mut [u64]) {
    edges.sort_by_key(|&e| (e.count_ones(), bits::to_indices(e)));
}

/// A simple loopless hypergraph: every edge has at least two vertices and no
/// edge contains another.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    /// Validates and canonically orders the edges (0-based vertex masks).
    pub fn new(n: usize, edges: Vec<u64>) -> Result<Self> {
        check_order(n)?;
        let all = bits::full(n);
        for &e in &edges {
            if e & !all != 0 {
                return input(format!("edge {} has a vertex outside 1..={n}", edge_text(e)));
            }
            if e.count_ones() < 2 {
                return input(format!("edge {} has fewer than two vertices", edge_text(e)));
            }
        }
        for (i, &e) in edges.iter().enumerate() {
            for (j, &f) in edges.iter().enumerate() {
                if i != j && bits::is_subset(e, f) {
                    return input(format!("edge {} is contained in edge {}", edge_text(e), edge_text(f)));
                }
            }
        }
        let mut edges = edges;
        sort_edges(&mut edges);
        Ok(Hypergraph { n, edges })
    }

    /// Builds from arbitrary vertex sets of size at least two, discarding
    /// any set that contains another.
    pub fn from_sets_minimal(n: usize, sets: Vec<u64>) -> Result<Self> {
        Self::new(n, bits::minimal_sets(sets))
    }

    /// Builds from 1-based vertex lists.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for l in lists {
            let mut mask = 0u64;
            for &v in l {
                if v == 0 || v > n {
                    return input(format!("edge {l:?} has vertex {v} outside 1..={n}"));
                }
                if mask >> (v - 1) & 1 == 1 {
                    return input(format!("edge {l:?} repeats vertex {v}"));
                }
                mask |= 1 << (v - 1);
            }
            edges.push(mask);
        }
        Self::new(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    /// Edges as sorted 1-based vertex lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| bits(e).map(|i| i + 1).collect()).collect()
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() == 2)
    }

    pub fn as_graph(&self) -> Result<Graph> {
        if !self.is_graph() {
            return input("hypergraph has an edge that is not a pair");
        }
        let mut g = Graph::empty(self.n);
        for &e in &self.edges {
            let mut it = bits(e);
            let (i, j) = (it.next().unwrap(), it.next().unwrap());
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// True iff no edge lies inside `set`.
    #[inline]
    pub fn is_independent(&self, set: u64) -> bool {
        self.edges.iter().all(|&e| !bits::is_subset(e, set))
    }

    /// Induced subhypergraph on `vertices`, relabeled in increasing order.
    /// Returns the map from new to old (0-based) vertices.
    pub fn induced(&self, vertices: u64) -> (Hypergraph, Vec<usize>) {
        let map = bits::to_indices(vertices & bits::full(self.n));
        let edges = self
            .edges
            .iter()
            .filter(|&&e| bits::is_subset(e, vertices))
            .map(|&e| relabel(e, &map))
            .collect();
        let mut edges: Vec<u64> = edges;
        sort_edges(&mut edges);
        (Hypergraph { n: map.len(), edges }, map)
    }

    /// Blowup `H_a`: vertex `i` becomes `a_i` copies, and every choice of one
    /// copy per vertex of an edge is an edge.
    pub fn blowup(&self, a: &[u32]) -> Result<Blowup<Hypergraph>> {
        let labels = blowup_labels(self.n, a)?;
        let first = first_copy(a);
        let mut edges = Vec::new();
        for &e in &self.edges {
            let verts = bits::to_indices(e);
            if verts.iter().any(|&v| a[v] == 0) {
                continue;
            }
            let mut acc = vec![0u64];
            for &v in &verts {
                let mut next = Vec::with_capacity(acc.len() * a[v] as usize);
                for &m in &acc {
                    for k in 0..a[v] as usize {
                        next.push(m | 1 << (first[v] + k));
                    }
                }
                acc = next;
            }
            edges.extend(acc);
        }
        sort_edges(&mut edges);
        Ok(Blowup { graph: Hypergraph { n: labels.len(), edges }, labels })
    }

    pub fn complement(&self) -> Result<Graph> {
        Ok(self.as_graph()?.complement())
    }
}

fn relabel(mask: u64, map: &[usize]) -> u64 {
    map.iter().enumerate().filter(|(_, &old)| mask >> old & 1 == 1).fold(0, |m, (new, _)| m | 1 << new)
}

fn first_copy(a: &[u32]) -> Vec<usize> {
    let mut acc = 0;
    a.iter()
        .map(|&x| {
            let f = acc;
            acc += x as usize;
            f
        })
        .collect()
}

fn blowup_labels(n: usize, a: &[u32]) -> Result<Vec<(usize, usize)>> {
    if a.len() != n {
        return input(format!("blowup vector has length {}, expected {n}", a.len()));
    }
    let total: u64 = a.iter().map(|&x| x as u64).sum();
    if total > MAX_VERTICES as u64 {
        return input(format!("blowup has {total} vertices (at most {MAX_VERTICES})"));
    }
    Ok(a.iter().enumerate().flat_map(|(i, &k)| (0..k as usize).map(move |c| (i, c))).collect())
}

/// A blown-up structure together with the label `(i, k)` (both 0-based) of
/// each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup<T> {
    pub graph: T,
    pub labels: Vec<(usize, usize)>,
}

/// A simple undirected graph stored as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.adj[i] = bits::full(n) & !(1 << i);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut g = Graph::empty(p + q);
        for i in 0..p {
            for j in 0..q {
                g.add_edge(i, p + j);
            }
        }
        g
    }

    /// Builds from 0-based pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return input(format!("edge {{{},{}}} has a vertex outside 1..={n}", i + 1, j + 1));
            }
            if i == j {
                return input(format!("edge {{{},{}}} is a loop", i + 1, j + 1));
            }
            if g.has_edge(i, j) {
                return input(format!("edge {{{},{}}} is repeated", i + 1, j + 1));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Builds from 1-based pairs such as `[(1, 2), (2, 3)]`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let lists: Vec<Vec<usize>> = pairs.iter().map(|&(i, j)| vec![i, j]).collect();
        Hypergraph::from_lists(n, &lists)?.as_graph()
    }

    /// Builds from compact pair codes such as `[12, 13, 23]` (vertices 1..9).
    pub fn from_codes(n: usize, codes: &[usize]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = codes.iter().map(|c| (c / 10, c % 10)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// Graph whose edge set is given by a bitmask over the pairs
    /// `(0,1), (0,2), .., (0,n-1), (1,2), ..` in that order.
    pub fn from_edge_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// 0-based edges `(i, j)` with `i < j`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in bits(self.adj[i] >> (i + 1)) {
                out.push((i, i + 1 + j));
            }
        }
        out
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut edges: Vec<u64> = self.edges().into_iter().map(|(i, j)| 1 << i | 1 << j).collect();
        sort_edges(&mut edges);
        Hypergraph { n: self.n, edges }
    }

    pub fn all(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        Graph { n: self.n, adj: (0..self.n).map(|i| all & !self.adj[i] & !(1 << i)).collect() }
    }

    #[inline]
    pub fn is_clique(&self, set: u64) -> bool {
        bits(set).all(|v| bits::is_subset(set & !(1 << v), self.adj[v]))
    }

    #[inline]
    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn induced(&self, vertices: u64) -> (Graph, Vec<usize>) {
        let map = bits::to_indices(vertices & self.all());
        let adj = map.iter().map(|&old| relabel(self.adj[old], &map)).collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Blowup `G_a`: vertex `i` becomes an independent set of `a_i` copies.
    pub fn blowup(&self, a: &[u32]) -> Result<Blowup<Graph>> {
        self.blowup_with_squares(0, a)
    }

    /// Blowup in which the copies of every vertex of `sigma` additionally
    /// form a clique.
    pub fn blowup_with_squares(&self, sigma: u64, a: &[u32]) -> Result<Blowup<Graph>> {
        let labels = blowup_labels(self.n, a)?;
        let first = first_copy(a);
        let copies = |i: usize| bits::full(a[i] as usize) << first[i];
        let mut g = Graph::empty(labels.len());
        for (v, &(i, _)) in labels.iter().enumerate() {
            let mut nb = 0u64;
            for j in bits(self.adj[i]) {
                nb |= copies(j);
            }
            if sigma >> i & 1 == 1 {
                nb |= copies(i) & !(1 << v);
            }
            g.adj[v] = nb;
        }
        Ok(Blowup { graph: g, labels })
    }

    /// Copy of `self` with vertex `v` replaced by a clique of `k` vertices.
    pub fn replicate(&self, v: usize, k: u32) -> Graph {
        let mut a = vec![1u32; self.n];
        a[v] = k;
        self.blowup_with_squares(1 << v, &a).expect("replication stays within 64 vertices").graph
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
