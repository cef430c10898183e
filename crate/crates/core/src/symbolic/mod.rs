//! Edge ideals of hypergraphs, their secants and symbolic powers, product
//! formulas and the differential-perfection checks.

mod perfection;
mod products;

pub use perfection::{diff_perfect_check, squares_diff_check, squares_secant_ideal, DiffPerfectReport, LevelVerdict, Side};
pub use products::{antichain_product_ideal, clique_product_ideal, clique_secant_product_ideal, set_product_ideal};

use crate::bits;
use crate::combinat::{chromatic_table, Graph, Hypergraph};
use crate::error::{Error, Result};
use crate::monomial::{symbolic_power_radical, Monomial, MonomialIdeal};

/// A hypergraph together with its edge ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdealContext {
    pub hypergraph: Hypergraph,
    pub ideal: MonomialIdeal,
}

impl EdgeIdealContext {
    pub fn new(h: Hypergraph) -> Self {
        let ideal = edge_ideal(&h);
        EdgeIdealContext { hypergraph: h, ideal }
    }
}

/// One squarefree generator `m_V` per edge `V`.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    let gens = h.edges().iter().map(|&e| Monomial::from_mask(h.n(), e)).collect();
    MonomialIdeal::minimalize_unchecked(gens, h.n())
}

/// The hypergraph of vertex sets `V` minimal with `χ(H_V) > r`; its edge
/// ideal is the `r`-th secant of `I(H)`.
pub fn secant_hypergraph(h: &Hypergraph, r: u32) -> Result<Hypergraph> {
    if r <= 1 {
        return Ok(h.clone());
    }
    let chi = chromatic_table(h)?;
    let r = r as u8;
    let mut edges = Vec::new();
    for s in 1..chi.len() {
        if chi[s] > r && bits::bits(s as u64).all(|v| chi[s & !(1 << v)] <= r) {
            edges.push(s as u64);
        }
    }
    Hypergraph::new(h.n(), edges)
}

pub fn secant_edge_ideal(h: &Hypergraph, r: u32) -> Result<MonomialIdeal> {
    Ok(edge_ideal(&secant_hypergraph(h, r)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub minimal_generator: bool,
}

/// `α(H_a)`: an independent set of the blowup projects to an independent
/// set of `H`, so it is the largest `a`-weight of an independent set.
pub fn blowup_alpha(h: &Hypergraph, a: &[u32]) -> u64 {
    h.max_independent_weighted(a).0
}

/// `x^a ∈ I(H)^(r)` iff `deg(x^a) ≥ r + α(H_a)`; it is a minimal generator
/// iff equality holds and lowering any positive entry keeps `α`.
pub fn membership_blowup(h: &Hypergraph, r: u32, a: &[u32]) -> Result<Membership> {
    if a.len() != h.n() {
        return Err(Error::Input(format!("exponent vector has length {}, expected {}", a.len(), h.n())));
    }
    let deg: u64 = a.iter().map(|&x| x as u64).sum();
    let alpha = blowup_alpha(h, a);
    let member = deg >= r as u64 + alpha;
    let minimal_generator = member
        && deg == r as u64 + alpha
        && (0..a.len()).filter(|&i| a[i] > 0).all(|i| {
            let mut b = a.to_vec();
            b[i] -= 1;
            blowup_alpha(h, &b) == alpha
        });
    Ok(Membership { member, minimal_generator })
}

/// `I(H)^(r)` via minimal primes, with every generator re-verified by the
/// blowup criterion.
pub fn symbolic_power_edge(h: &Hypergraph, r: u32) -> Result<MonomialIdeal> {
    let out = symbolic_power_radical(&edge_ideal(h), r)?;
    for g in out.generators() {
        let a: Vec<u32> = g.exps().iter().map(|&e| e as u32).collect();
        let m = membership_blowup(h, r, &a)?;
        if !m.member || !m.minimal_generator {
            return Err(Error::Internal(format!(
                "generator {g} of the symbolic power fails the blowup criterion ({m:?})"
            )));
        }
    }
    Ok(out)
}

/// `I(G)^(2) = I(G)^{2} + I(G)^2`: returns a monomial in the symmetric
/// difference, if any.
pub fn symbolic_square_witness(g: &Graph) -> Result<Option<Monomial>> {
    let h = g.to_hypergraph();
    let lhs = symbolic_power_edge(&h, 2)?;
    let rhs = secant_edge_ideal(&h, 2)?.sum(&edge_ideal(&h).power(2))?;
    Ok(lhs.witness_outside(&rhs).or_else(|| rhs.witness_outside(&lhs)).cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::parse(g, n).unwrap()), n).unwrap()
    }

    fn triangulation() -> Graph {
        Graph::from_codes(6, &[12, 13, 23, 24, 25, 35, 36, 45, 56]).unwrap()
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(edge_ideal(&Graph::cycle(5).to_hypergraph()).len(), 5);
        let t = Hypergraph::from_lists(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(edge_ideal(&t), ideal(&["x1*x2*x3"], 3));
    }

    #[test]
    fn secants() {
        let s = secant_edge_ideal(&triangulation().to_hypergraph(), 2).unwrap();
        assert_eq!(s, ideal(&["x1*x2*x3", "x2*x3*x5", "x2*x4*x5", "x3*x5*x6"], 6));
        assert!(secant_edge_ideal(&Graph::cycle(6).to_hypergraph(), 2).unwrap().is_zero());
        let c5 = secant_edge_ideal(&Graph::cycle(5).to_hypergraph(), 2).unwrap();
        assert_eq!(c5, ideal(&["x1*x2*x3*x4*x5"], 5));
        let h = triangulation().to_hypergraph();
        assert_eq!(secant_edge_ideal(&h, 1).unwrap(), edge_ideal(&h));
    }

    #[test]
    fn membership_examples() {
        let c5 = Graph::cycle(5).to_hypergraph();
        assert_eq!(membership_blowup(&c5, 3, &[1; 5]).unwrap(), Membership { member: true, minimal_generator: true });
        let e = Graph::path(2).to_hypergraph();
        assert!(!membership_blowup(&e, 2, &[1, 1]).unwrap().member);
        let k3 = Graph::complete(3).to_hypergraph();
        assert_eq!(membership_blowup(&k3, 2, &[2, 2, 0]).unwrap(), Membership { member: true, minimal_generator: true });
    }

    #[test]
    fn blowup_alpha_matches_materialized() {
        let h = Hypergraph::from_lists(5, &[vec![1, 2, 3], vec![3, 4], vec![4, 5], vec![1, 5]]).unwrap();
        for a in [[1, 2, 0, 3, 1], [2, 2, 2, 1, 1], [0, 1, 4, 0, 2]] {
            let b = h.blowup(&a).unwrap().graph;
            assert_eq!(blowup_alpha(&h, &a), b.alpha() as u64);
        }
    }

    #[test]
    fn symbolic_power_examples() {
        let p3 = Graph::path(3).to_hypergraph();
        assert_eq!(symbolic_power_edge(&p3, 2).unwrap(), ideal(&["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"], 3));
        let k3 = Graph::complete(3).to_hypergraph();
        assert_eq!(
            symbolic_power_edge(&k3, 2).unwrap(),
            ideal(&["x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"], 3)
        );
        let c5 = Graph::cycle(5).to_hypergraph();
        let s = symbolic_power_edge(&c5, 3).unwrap();
        let xc = Monomial::from_mask(5, 0b11111);
        assert!(s.generators().contains(&xc));
        assert!(!edge_ideal(&c5).power(3).contains(&xc).unwrap());
    }

    #[test]
    fn symbolic_square_law_small() {
        assert_eq!(symbolic_square_witness(&Graph::cycle(5)).unwrap(), None);
        assert_eq!(symbolic_square_witness(&triangulation()).unwrap(), None);
    }
}
