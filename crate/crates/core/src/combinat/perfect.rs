use super::{chromatic_table, Graph};
use crate::bits::{self, bits};
use crate::error::{Error, Result};

/// Checks `ω(G_V) = χ(G_V)` on every induced subgraph and returns the first
/// vertex set (by bitmask) where it fails.
pub fn imperfect_subset(g: &Graph) -> Result<Option<u64>> {
    let chi = chromatic_table(&g.to_hypergraph())?;
    let size = 1usize << g.n();
    let mut clique = vec![true; size];
    let mut omega = vec![0u8; size];
    for s in 1..size {
        let top = 63 - (s as u64).leading_zeros() as usize;
        let rest = s & !(1 << top);
        clique[s] = clique[rest] && bits::is_subset(rest as u64, g.adj(top));
        omega[s] = if clique[s] {
            s.count_ones() as u8
        } else {
            bits(s as u64).map(|v| omega[s & !(1 << v)]).max().unwrap()
        };
        if omega[s] != chi[s] {
            return Ok(Some(s as u64));
        }
    }
    Ok(None)
}

pub fn is_perfect_by_subsets(g: &Graph) -> Result<bool> {
    Ok(imperfect_subset(g)?.is_none())
}

/// An induced odd cycle of length at least five, as a vertex set.
pub fn find_odd_hole(g: &Graph) -> Option<u64> {
    for s in 0..g.n() {
        let later = g.all() & !bits::full(s + 1);
        for v1 in bits(g.adj(s) & later) {
            if let Some(h) = grow_path(g, s, v1, 1 << s | 1 << v1, 2, later) {
                return Some(h);
            }
        }
    }
    None
}

/// Extends the induced path `s .. last` (of `len` vertices, all other than
/// `s` from `allowed`) looking for an odd induced closing cycle.
fn grow_path(g: &Graph, s: usize, last: usize, path: u64, len: usize, allowed: u64) -> Option<u64> {
    let interior = path & !(1 << s) & !(1 << last);
    for w in bits(g.adj(last) & allowed & !path) {
        if g.adj(w) & interior != 0 {
            continue;
        }
        if g.has_edge(w, s) {
            if len + 1 >= 5 && (len + 1) % 2 == 1 && len >= 3 {
                return Some(path | 1 << w);
            }
            continue;
        }
        if let Some(h) = grow_path(g, s, w, path | 1 << w, len + 1, allowed) {
            return Some(h);
        }
    }
    None
}

pub fn find_odd_antihole(g: &Graph) -> Option<u64> {
    find_odd_hole(&g.complement())
}

pub fn is_perfect_by_holes(g: &Graph) -> bool {
    find_odd_hole(g).is_none() && find_odd_antihole(g).is_none()
}

/// Runs both recognizers; disagreement is an internal fault.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    let a = is_perfect_by_subsets(g)?;
    let b = is_perfect_by_holes(g);
    if a != b {
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
        return Err(Error::Internal(format!(
            "perfection recognizers disagree (subsets: {a}, holes: {b}) on n={} edges {edges:?}",
            g.n()
        )));
    }
    Ok(a)
}
