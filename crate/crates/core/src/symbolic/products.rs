use crate::combinat::Graph;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::Poset;

/// Ideal generated by the products `Π m_{V_i}` over multisets of `sets`
/// with every `|V_i| ≥ r+1` and `Σ (|V_i| − r) = s`.
///
/// Assembled by weight: `K_s = Σ_w G_w · K_{s−w}` where `G_w` holds the sets
/// of weight `w`, minimalizing after every step.
pub fn set_product_ideal(n: usize, sets: &[u64], r: u32, s: u32) -> MonomialIdeal {
    let s = s as usize;
    let mut by_weight: Vec<Vec<Monomial>> = vec![Vec::new(); s + 1];
    for &v in sets {
        let size = v.count_ones();
        if size > r {
            let w = (size - r) as usize;
            if w <= s {
                by_weight[w].push(Monomial::from_mask(n, v));
            }
        }
    }
    let mut layers: Vec<MonomialIdeal> = vec![MonomialIdeal::unit(n)];
    for t in 1..=s {
        let mut gens = Vec::new();
        for w in 1..=t {
            for g in &by_weight[w] {
                for h in layers[t - w].generators() {
                    gens.push(g.mul(h));
                }
            }
        }
        layers.push(MonomialIdeal::minimalize_unchecked(gens, n));
    }
    layers.swap_remove(s)
}

/// `J_r(G)`: products of cliques of size at least two with `Σ(|V_i|−1) = r`.
pub fn clique_product_ideal(g: &Graph, r: u32) -> MonomialIdeal {
    set_product_ideal(g.n(), &g.cliques_at_least(2), 1, r)
}

/// Products of cliques of size at least `r+1` with `Σ(|V_i| − r) = s`.
pub fn clique_secant_product_ideal(g: &Graph, r: u32, s: u32) -> MonomialIdeal {
    set_product_ideal(g.n(), &g.cliques_at_least(r as usize + 1), r, s)
}

/// `K_{r,s}(P)`: products of antichains of size at least `r+1` with
/// `Σ(|A_i| − r) = s`.
pub fn antichain_product_ideal(p: &Poset, r: u32, s: u32) -> MonomialIdeal {
    set_product_ideal(p.n(), &p.antichains_at_least(r as usize + 1), r, s)
}
