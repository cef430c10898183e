use std::cmp::Ordering;

use crate::error::{input, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A term order made of blocks; monomials are compared block by block, each
/// block by lex or graded reverse lex on its variables listed from largest
/// to smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    n: usize,
    blocks: Vec<(OrderKind, Vec<usize>)>,
}

impl TermOrder {
    fn build(n: usize, blocks: Vec<(OrderKind, Vec<usize>)>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (_, vars) in &blocks {
            for &v in vars {
                if v >= n || seen[v] {
                    return input(format!("term order priority is not a permutation of 1..={n}"));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return input(format!("term order priority is not a permutation of 1..={n}"));
        }
        Ok(TermOrder { n, blocks })
    }

    /// Lex with `x1 ≻ x2 ≻ … ≻ xn`.
    pub fn lex(n: usize) -> Self {
        TermOrder { n, blocks: vec![(OrderKind::Lex, (0..n).collect())] }
    }

    /// Lex with `priority[0] ≻ priority[1] ≻ …` (0-based variables).
    pub fn lex_with(priority: Vec<usize>) -> Result<Self> {
        Self::build(priority.len(), vec![(OrderKind::Lex, priority)])
    }

    /// Lex from a 1-based permutation.
    pub fn lex_from_permutation(perm: &[usize]) -> Result<Self> {
        if perm.contains(&0) {
            return input("term order priority is 1-based");
        }
        Self::lex_with(perm.iter().map(|&v| v - 1).collect())
    }

    pub fn grevlex(n: usize) -> Self {
        TermOrder { n, blocks: vec![(OrderKind::GrevLex, (0..n).collect())] }
    }

    /// Elimination order: `first` block (grevlex) dominates `rest` (grevlex).
    pub fn elimination(first: Vec<usize>, rest: Vec<usize>) -> Result<Self> {
        let n = first.len() + rest.len();
        Self::build(n, vec![(OrderKind::GrevLex, first), (OrderKind::GrevLex, rest)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(OrderKind, Vec<usize>)] {
        &self.blocks
    }

    /// Pure lex priority, if this is a single lex block.
    pub fn lex_priority(&self) -> Option<&[usize]> {
        match self.blocks.as_slice() {
            [(OrderKind::Lex, p)] => Some(p),
            _ => None,
        }
    }

    /// Compares exponent vectors.
    pub fn cmp<E: Copy + Into<u32>>(&self, a: &[E], b: &[E]) -> Ordering {
        for (kind, vars) in &self.blocks {
            let o = match kind {
                OrderKind::Lex => vars.iter().map(|&v| a[v].into().cmp(&b[v].into())).find(|o| o.is_ne()),
                OrderKind::GrevLex => {
                    let da: u32 = vars.iter().map(|&v| a[v].into()).sum();
                    let db: u32 = vars.iter().map(|&v| b[v].into()).sum();
                    if da != db {
                        Some(da.cmp(&db))
                    } else {
                        vars.iter().rev().map(|&v| b[v].into().cmp(&a[v].into())).find(|o| o.is_ne())
                    }
                }
            };
            if let Some(o) = o {
                return o;
            }
        }
        Ordering::Equal
    }
}
