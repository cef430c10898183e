use super::{sort_edges, Graph, Hypergraph};
use crate::bits::{self, bits};
use crate::error::{input, resource, Result};

/// Largest vertex count for which chromatic numbers of all subsets are
/// tabulated.
pub const CHROMATIC_TABLE_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub alpha: usize,
    pub tau: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub chi: usize,
    pub omega: usize,
}

impl Hypergraph {
    pub fn invariants(&self) -> Invariants {
        let alpha = self.alpha();
        Invariants { alpha, tau: self.n - alpha }
    }

    pub fn alpha(&self) -> usize {
        self.max_independent_weighted(&vec![1; self.n]).0 as usize
    }

    /// Maximum of `Σ_{i∈U} w_i` over independent sets `U`, with a maximizer.
    pub fn max_independent_weighted(&self, w: &[u32]) -> (u64, u64) {
        assert_eq!(w.len(), self.n);
        let cand = (0..self.n).filter(|&i| w[i] > 0).fold(0u64, |m, i| m | 1 << i);
        let mut best = (0u64, 0u64);
        // Vertices in no edge are always free.
        let covered = self.edges.iter().fold(0, |m, &e| m | e);
        let free = cand & !covered;
        let base: u64 = bits(free).map(|i| w[i] as u64).sum();
        indep_search(self, w, cand & !free, free, base, &mut best);
        best
    }

    pub fn tau(&self) -> usize {
        self.n - self.alpha()
    }

    /// Chromatic number: fewest independent classes covering all vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        if let Ok(g) = self.as_graph() {
            return Ok(g.chromatic_number());
        }
        let table = chromatic_table(self)?;
        Ok(table[table.len() - 1] as usize)
    }
}

fn weight_of(set: u64, w: &[u32]) -> u64 {
    bits(set).map(|i| w[i] as u64).sum()
}

fn indep_search(h: &Hypergraph, w: &[u32], cand: u64, chosen: u64, value: u64, best: &mut (u64, u64)) {
    if value > best.0 {
        *best = (value, chosen);
    }
    if cand == 0 || value + weight_of(cand, w) <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = chosen | 1 << v;
    let mut forbidden = 0u64;
    for &e in &h.edges {
        let open = e & !with;
        if open.count_ones() == 1 && e >> v & 1 == 1 {
            forbidden |= open;
        }
    }
    indep_search(h, w, rest & !forbidden, with, value + w[v] as u64, best);
    indep_search(h, w, rest, chosen, value, best);
}

/// `χ(H_S)` for every vertex subset `S`, indexed by bitmask.
pub fn chromatic_table(h: &Hypergraph) -> Result<Vec<u8>> {
    let n = h.n;
    if n > CHROMATIC_TABLE_LIMIT {
        return resource(format!("chromatic table on {n} vertices exceeds ceiling {CHROMATIC_TABLE_LIMIT}"));
    }
    let size = 1usize << n;
    let mut indep = vec![false; size];
    indep[0] = true;
    // S is independent iff S minus its top vertex is, and no edge through
    // the top vertex lies inside S.
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &e in &h.edges {
        by_top[63 - e.leading_zeros() as usize].push(e);
    }
    for s in 1..size {
        let top = 63 - (s as u64).leading_zeros() as usize;
        let rest = s & !(1 << top);
        indep[s] = indep[rest] && by_top[top].iter().all(|&e| !bits::is_subset(e, s as u64));
    }
    let mut chi = vec![0u8; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut best = u8::MAX;
        // Iterate independent classes containing the lowest vertex.
        let mut sub = rest;
        loop {
            let class = sub | low;
            if indep[class] {
                let c = chi[s & !class];
                if c + 1 < best {
                    best = c + 1;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        chi[s] = best;
    }
    Ok(chi)
}

impl Graph {
    pub fn alpha(&self) -> usize {
        self.complement().omega()
    }

    pub fn omega(&self) -> usize {
        self.max_clique().count_ones() as usize
    }

    /// A maximum clique, lowest-index first among ties found.
    pub fn max_clique(&self) -> u64 {
        let mut best = 0u64;
        clique_search(self, 0, self.all(), &mut best);
        best
    }

    pub fn invariants(&self) -> Invariants {
        let alpha = self.alpha();
        Invariants { alpha, tau: self.n - alpha }
    }

    pub fn coloring(&self) -> Result<Coloring> {
        if self.n == 0 {
            return input("coloring needs at least one vertex");
        }
        Ok(Coloring { chi: self.chromatic_number(), omega: self.omega() })
    }

    /// Exact chromatic number by DSATUR branch and bound, seeded with the
    /// clique lower bound and a greedy upper bound.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let lower = self.omega();
        let mut colors = vec![usize::MAX; self.n];
        let greedy = self.greedy_colors();
        let mut best = greedy;
        if best > lower {
            dsatur(self, &mut colors, 0, 0, lower, &mut best);
        }
        best
    }

    fn greedy_colors(&self) -> usize {
        let mut colors = vec![usize::MAX; self.n];
        let mut used = 0;
        for v in 0..self.n {
            let taken = bits(self.adj[v]).filter(|&u| colors[u] != usize::MAX).fold(0u64, |m, u| m | 1 << colors[u]);
            let c = (!taken).trailing_zeros() as usize;
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// All cliques with at least `k` vertices, ordered by size and then by
    /// their sorted vertex lists.
    pub fn cliques_at_least(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        extend_cliques(self, 0, self.all(), k, &mut out);
        sort_edges(&mut out);
        out
    }

    /// Inclusion-maximal cliques, sorted.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        bron_kerbosch(self, 0, self.all(), 0, &mut out);
        out.sort_unstable();
        out
    }
}

fn clique_search(g: &Graph, current: u64, cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + color_bound(g, cand) <= best.count_ones() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    clique_search(g, current | 1 << v, cand & g.adj[v], best);
    clique_search(g, current, cand & !(1 << v), best);
}

/// Greedy coloring size of `set`, an upper bound on its clique number.
fn color_bound(g: &Graph, set: u64) -> u32 {
    let mut left = set;
    let mut classes = 0;
    while left != 0 {
        classes += 1;
        let mut avail = left;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            left &= !(1 << v);
            avail &= !(1 << v) & !g.adj[v];
        }
    }
    classes
}

fn dsatur(g: &Graph, colors: &mut [usize], colored: usize, used: usize, lower: usize, best: &mut usize) {
    if colored == g.n {
        *best = used;
        return;
    }
    let mut pick = usize::MAX;
    let mut key = (0u32, 0u32);
    for v in 0..g.n {
        if colors[v] != usize::MAX {
            continue;
        }
        let sat = saturation(g, colors, v);
        let deg = bits(g.adj[v]).filter(|&u| colors[u] == usize::MAX).count() as u32;
        let k = (sat.count_ones(), deg);
        if pick == usize::MAX || k > key {
            pick = v;
            key = k;
        }
    }
    let sat = saturation(g, colors, pick);
    for c in 0..=used {
        if c + 1 >= *best || *best == lower {
            break;
        }
        if sat >> c & 1 == 1 {
            continue;
        }
        colors[pick] = c;
        dsatur(g, colors, colored + 1, used.max(c + 1), lower, best);
        colors[pick] = usize::MAX;
    }
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> u64 {
    bits(g.adj[v]).filter(|&u| colors[u] != usize::MAX).fold(0u64, |m, u| m | 1 << colors[u])
}

fn extend_cliques(g: &Graph, current: u64, cand: u64, k: usize, out: &mut Vec<u64>) {
    if current != 0 && current.count_ones() as usize >= k {
        out.push(current);
    }
    if (current.count_ones() + cand.count_ones()) < k as u32 {
        return;
    }
    for v in bits(cand) {
        let later = cand & !bits::full(v + 1);
        extend_cliques(g, current | 1 << v, later & g.adj[v], k, out);
    }
}

fn bron_kerbosch(g: &Graph, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x).max_by_key(|&u| (p & g.adj[u]).count_ones()).unwrap();
    let mut p = p;
    let mut x = x;
    for v in bits(p & !g.adj[pivot]) {
        bron_kerbosch(g, r | 1 << v, p & g.adj[v], x & g.adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
