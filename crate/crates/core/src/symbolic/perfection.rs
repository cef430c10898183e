use super::{edge_ideal, secant_hypergraph};
use crate::bits;
use crate::combinat::{Graph, Hypergraph};
use crate::error::{input, resource, Result};
use crate::monomial::{diff_power_with, symbolic_power_radical, Monomial, MonomialIdeal, SymbolicOracle};
use crate::monomial::powers::diff_member_unchecked;

/// Which side of the recursion a witness lies on exclusively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// In the symbolic (or differential) power but not in the right side.
    Left,
    /// In the right side but not in the symbolic power.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelVerdict {
    pub s: u32,
    pub equal: bool,
    pub side: Option<Side>,
    pub witness: Option<Monomial>,
    pub lhs_generators: usize,
}

/// Per-`s` comparison of `(I^{r})^(s)` with
/// `I^{r+s−1} + Σ_i (I^{r})^(i) (I^{r})^(s−i)` for `s ≤ s_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffPerfectReport {
    pub r: u32,
    pub s_max: u32,
    /// Vertices carrying a square generator, for the squares variant.
    pub sigma: Option<Vec<usize>>,
    pub levels: Vec<LevelVerdict>,
}

impl DiffPerfectReport {
    pub fn all_equal(&self) -> bool {
        self.levels.iter().all(|l| l.equal)
    }

    pub fn first_failure(&self) -> Option<&LevelVerdict> {
        self.levels.iter().find(|l| !l.equal)
    }
}

/// Compares one level given the left side, the secant on the right and a
/// membership test for `(I^{r})^(k)`.
fn compare_level(
    s: u32,
    lhs: &MonomialIdeal,
    lower: &[MonomialIdeal],
    secant: &MonomialIdeal,
    member: &dyn Fn(&[u16], u32) -> bool,
) -> LevelVerdict {
    let in_rhs = |a: &Monomial| -> bool {
        if secant.contains_unchecked(a) {
            return true;
        }
        (1..=s / 2).any(|i| {
            lower[i as usize]
                .generators()
                .iter()
                .any(|g| a.div(g).is_some_and(|q| member(q.exps(), s - i)))
        })
    };
    let mut verdict = LevelVerdict { s, equal: true, side: None, witness: None, lhs_generators: lhs.len() };
    if let Some(w) = lhs.generators().iter().find(|a| !in_rhs(a)) {
        verdict.equal = false;
        verdict.side = Some(Side::Left);
        verdict.witness = Some(w.clone());
    } else if let Some(w) = secant.generators().iter().find(|e| !member(e.exps(), s)) {
        // Products lie in the left side by additivity of the order function;
        // only the secant needs checking.
        verdict.equal = false;
        verdict.side = Some(Side::Right);
        verdict.witness = Some(w.clone());
    }
    verdict
}

pub fn diff_perfect_check(h: &Hypergraph, r: u32, s_max: u32) -> Result<DiffPerfectReport> {
    if r == 0 || s_max == 0 {
        return input("r and s_max must be positive");
    }
    let base = edge_ideal(&secant_hypergraph(h, r)?);
    let oracle = SymbolicOracle::new(&base)?;
    let member = |e: &[u16], k: u32| oracle.contains(e, k);
    let mut powers = vec![MonomialIdeal::unit(h.n())];
    let mut levels = Vec::new();
    for s in 1..=s_max {
        let lhs = symbolic_power_radical(&base, s)?;
        let secant = edge_ideal(&secant_hypergraph(h, r + s - 1)?);
        levels.push(compare_level(s, &lhs, &powers, &secant, &member));
        powers.push(lhs);
    }
    Ok(DiffPerfectReport { r, s_max, sigma: None, levels })
}

/// `I(G) + ⟨x_i^2 : i ∈ σ⟩`.
pub fn squares_ideal(g: &Graph, sigma: u64) -> MonomialIdeal {
    let n = g.n();
    let mut gens: Vec<Monomial> = edge_ideal(&g.to_hypergraph()).generators().to_vec();
    gens.extend(bits::bits(sigma & g.all()).map(|i| Monomial::var(n, i).pow(2)));
    MonomialIdeal::minimalize_unchecked(gens, n)
}

/// Largest number of blowup vectors examined by [`squares_secant_ideal`].
const SQUARES_BOX_LIMIT: u64 = 2_000_000;

/// Secant `I^{k}` of `I = I(G) + ⟨x_i^2 : i ∈ σ⟩`: `x^a` lies in it iff the
/// squared blowup `G^σ_a` has chromatic number above `k`.
pub fn squares_secant_ideal(g: &Graph, sigma: u64, k: u32) -> Result<MonomialIdeal> {
    let n = g.n();
    let sigma = sigma & g.all();
    if k <= 1 {
        return Ok(squares_ideal(g, sigma));
    }
    let caps: Vec<u32> = (0..n).map(|i| if sigma >> i & 1 == 1 { k + 1 } else { 1 }).collect();
    let size: u64 = caps.iter().map(|&c| c as u64 + 1).product();
    if size > SQUARES_BOX_LIMIT {
        return resource(format!("squares secant needs {size} blowup vectors (limit {SQUARES_BOX_LIMIT})"));
    }
    let mut found = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let total: u32 = a.iter().sum();
        if total > k {
            let b = g.blowup_with_squares(sigma, &a)?.graph;
            if b.chromatic_number() > k as usize {
                found.push(Monomial::new(a.iter().copied()));
            }
        }
        // next vector in the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(MonomialIdeal::minimalize_unchecked(found, n));
            }
            if a[i] < caps[i] {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// The 1-differential perfection check for `I(G) + ⟨x_i^2 : i ∈ σ⟩`, with
/// differential powers on the left.
pub fn squares_diff_check(g: &Graph, sigma: u64, s_max: u32, ceiling: Option<u32>) -> Result<DiffPerfectReport> {
    if s_max == 0 {
        return input("s_max must be positive");
    }
    let sigma = sigma & g.all();
    let ideal = squares_ideal(g, sigma);
    let member = |e: &[u16], k: u32| diff_member_unchecked(&ideal, e, k);
    let mut powers = vec![MonomialIdeal::unit(g.n())];
    let mut levels = Vec::new();
    for s in 1..=s_max {
        let dp = diff_power_with(&ideal, s, ceiling.unwrap_or(4 * s))?;
        if !dp.complete {
            return resource(format!(
                "differential power {s} not closed at degree {} ({} generators so far)",
                dp.degree_bound,
                dp.ideal.len()
            ));
        }
        let secant = squares_secant_ideal(g, sigma, s)?;
        levels.push(compare_level(s, &dp.ideal, &powers, &secant, &member));
        powers.push(dp.ideal);
    }
    Ok(DiffPerfectReport { r: 1, s_max, sigma: Some(bits::to_indices(sigma)), levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::is_perfect;

    fn failing_level(rep: &DiffPerfectReport) -> Option<(u32, String)> {
        rep.first_failure().map(|l| (l.s, l.witness.as_ref().unwrap().to_string()))
    }

    #[test]
    fn c5_fails_at_three() {
        let rep = diff_perfect_check(&Graph::cycle(5).to_hypergraph(), 1, 3).unwrap();
        assert_eq!(failing_level(&rep), Some((3, "x1*x2*x3*x4*x5".into())));
        assert_eq!(rep.first_failure().unwrap().side, Some(Side::Left));
    }

    #[test]
    fn triangulation_fails_at_two_for_secant_two() {
        let g = Graph::from_codes(6, &[12, 13, 23, 24, 25, 35, 36, 45, 56]).unwrap();
        let rep = diff_perfect_check(&g.to_hypergraph(), 2, 2).unwrap();
        assert_eq!(failing_level(&rep), Some((2, "x1*x2*x3*x4*x5*x6".into())));
        let rep = diff_perfect_check(&g.to_hypergraph(), 1, 3).unwrap();
        assert!(rep.all_equal());
    }

    #[test]
    fn perfect_graphs_pass() {
        for g in [Graph::complete(4), Graph::cycle(6), Graph::path(5), Graph::cycle(4).complement()] {
            assert!(diff_perfect_check(&g.to_hypergraph(), 1, 3).unwrap().all_equal());
        }
    }

    #[test]
    fn squares_examples() {
        let e = Graph::path(2);
        assert!(squares_diff_check(&e, 0b11, 2, None).unwrap().all_equal());
        let p3 = Graph::path(3);
        assert!(squares_diff_check(&p3, 0b010, 3, None).unwrap().all_equal());
        let c5 = Graph::cycle(5);
        let rep = squares_diff_check(&c5, 0, 3, None).unwrap();
        let plain = diff_perfect_check(&c5.to_hypergraph(), 1, 3).unwrap();
        assert_eq!(rep.levels, plain.levels);
        assert_eq!(rep.sigma, Some(vec![]));
    }

    #[test]
    fn squares_secant_uses_cliques_for_perfect_graphs() {
        for code in [0b1011u64, 0b111111, 0b110101] {
            let g = Graph::from_edge_code(4, code);
            assert!(is_perfect(&g).unwrap());
            for sigma in [0u64, 0b0001, 0b0110, 0b1111] {
                for k in 2..=3u32 {
                    let b = g.blowup_with_squares(sigma, &[k + 1; 4]).unwrap();
                    let gens = b
                        .graph
                        .cliques_at_least(k as usize + 1)
                        .into_iter()
                        .filter(|c| c.count_ones() == k + 1)
                        .map(|c| {
                            let mut e = vec![0u32; 4];
                            for v in bits::bits(c) {
                                e[b.labels[v].0] += 1;
                            }
                            Monomial::new(e)
                        });
                    let by_cliques = MonomialIdeal::minimalize(gens, 4).unwrap();
                    assert_eq!(squares_secant_ideal(&g, sigma, k).unwrap(), by_cliques, "code {code:b} sigma {sigma:b} k {k}");
                }
            }
        }
    }
}
