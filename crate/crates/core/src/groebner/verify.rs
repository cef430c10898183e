use std::collections::HashSet;


use super::engine::{buchberger, GroebnerBasis};
use super::join::secant_via_join;
use super::matrix::MatrixFamily;
use super::poly::Polynomial;
use super::TermOrder;
use crate::combinat::Hypergraph;
use crate::error::{resource, Error, Result};
use crate::monomial::{symbolic_power_radical, Monomial, MonomialIdeal};
use crate::symbolic::{secant_edge_ideal, Side};

/// Cap on the number of product candidates in one verification.
pub const CANDIDATE_LIMIT: usize = 200_000;

/// The hypergraph of a squarefree monomial ideal generated in degree ≥ 2.
pub fn squarefree_hypergraph(ideal: &MonomialIdeal) -> Result<Hypergraph> {
    if !ideal.is_squarefree() {
        return Err(Error::Unsupported(format!("initial ideal {ideal} is not squarefree")));
    }
    if ideal.min_degree().is_some_and(|d| d < 2) {
        return Err(Error::Unsupported(format!("initial ideal {ideal} has generators of degree < 2")));
    }
    Hypergraph::new(ideal.n(), ideal.generators().iter().map(Monomial::support).collect())
}

fn initial_of(gens: &[Polynomial], n: usize, order: &TermOrder) -> Result<(GroebnerBasis, MonomialIdeal)> {
    if gens.is_empty() {
        let gb = buchberger(&[], order)?;
        return Ok((gb, MonomialIdeal::zero(n)));
    }
    let gb = buchberger(gens, order)?;
    let init = gb.initial_ideal();
    Ok((gb, init))
}

fn first_difference(a: &MonomialIdeal, b: &MonomialIdeal) -> Option<(Side, Monomial)> {
    if let Some(m) = a.witness_outside(b) {
        return Some((Side::Left, m.clone()));
    }
    b.witness_outside(a).map(|m| (Side::Right, m.clone()))
}

#[derive(Clone, Debug)]
pub struct DelightfulReport {
    pub r: u32,
    /// `in(I^{{r}})` computed through joins.
    pub initial_of_secant: MonomialIdeal,
    /// `in(I)^{{r}}` computed combinatorially.
    pub secant_of_initial: MonomialIdeal,
    pub equal: bool,
    pub side: Option<Side>,
    pub witness: Option<Monomial>,
}

/// Compares `in(I^{{r}})` with `in(I)^{{r}}`.
pub fn delightful_check(f: &[Polynomial], r: u32, order: &TermOrder) -> Result<DelightfulReport> {
    let n = order.n();
    let (_, init) = initial_of(f, n, order)?;
    let h = squarefree_hypergraph(&init)?;
    let rhs = secant_edge_ideal(&h, r)?;
    let lhs = if r == 1 {
        init
    } else {
        let sec = secant_via_join(f, r)?;
        initial_of(&sec, n, order)?.1
    };
    let diff = first_difference(&lhs, &rhs);
    Ok(DelightfulReport {
        r,
        equal: diff.is_none(),
        side: diff.as_ref().map(|d| d.0),
        witness: diff.map(|d| d.1),
        initial_of_secant: lhs,
        secant_of_initial: rhs,
    })
}

#[derive(Clone, Debug)]
pub struct ProductGbReport {
    pub r: u32,
    pub s: u32,
    pub candidates: usize,
    pub derivatives_checked: usize,
    /// Every candidate has all derivatives of order < s in `I^{{r}}`.
    pub membership: bool,
    /// A candidate and one of its derivatives outside `I^{{r}}`.
    pub membership_witness: Option<(Polynomial, Polynomial)>,
    /// The leading terms generate the predicted monomial ideal.
    pub leading_terms: bool,
    pub side: Option<Side>,
    pub lead_witness: Option<Monomial>,
    pub predicted: MonomialIdeal,
}

impl ProductGbReport {
    pub fn passed(&self) -> bool {
        self.membership && self.leading_terms
    }
}

/// All products `f_1 ⋯ f_l` of generators drawn from `levels[k-1]`,
/// `k ≥ r`, with `Σ (deg f_i − r) = s`.
pub fn product_candidates(levels: &[Vec<Polynomial>], r: u32, s: u32) -> Result<Vec<Polynomial>> {
    let mut pool: Vec<(&Polynomial, u32)> = Vec::new();
    for (k, gens) in levels.iter().enumerate() {
        if (k as u32) + 1 < r {
            continue;
        }
        for g in gens {
            let d = g.degree().unwrap_or(0);
            if d > r && d - r <= s {
                pool.push((g, d - r));
            }
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        pool: &[(&Polynomial, u32)],
        start: usize,
        left: u32,
        stack: &mut Vec<usize>,
        out: &mut Vec<Polynomial>,
    ) -> Result<()> {
        if left == 0 {
            if out.len() >= CANDIDATE_LIMIT {
                return resource(format!("more than {CANDIDATE_LIMIT} product candidates"));
            }
            let mut p = pool[stack[0]].0.clone();
            for &i in &stack[1..] {
                p = p.mul(pool[i].0)?;
            }
            out.push(p);
            return Ok(());
        }
        for i in start..pool.len() {
            if pool[i].1 <= left {
                stack.push(i);
                rec(pool, i, left - pool[i].1, stack, out)?;
                stack.pop();
            }
        }
        Ok(())
    }
    if s > 0 {
        rec(&pool, 0, s, &mut stack, &mut out)?;
    }
    Ok(out)
}

/// Checks that the products of level generators form a Gröbner basis of
/// `(I^{{r}})^{(s)}`, where `levels[k-1]` generates `I^{{k}}`.
pub fn verify_product_groebner(levels: &[Vec<Polynomial>], r: u32, s: u32, order: &TermOrder) -> Result<ProductGbReport> {
    let n = order.n();
    if r == 0 || s == 0 {
        return Err(Error::Input("r and s must be positive".into()));
    }
    if levels.is_empty() {
        return Err(Error::Input("no generators for the base ideal".into()));
    }
    let (_, init) = initial_of(&levels[0], n, order)?;
    let h = squarefree_hypergraph(&init)?;
    let predicted = symbolic_power_radical(&secant_edge_ideal(&h, r)?, s)?;
    let level_r = levels.get(r as usize - 1).cloned().unwrap_or_default();
    let (gb_r, _) = initial_of(&level_r, n, order)?;
    let candidates = product_candidates(levels, r, s)?;

    let mut membership_witness = None;
    let mut derivatives_checked = 0;
    'outer: for c in &candidates {
        let mut layer: Vec<Polynomial> = vec![c.clone()];
        let mut seen: HashSet<Polynomial> = HashSet::new();
        for order_k in 0..s {
            for p in &layer {
                derivatives_checked += 1;
                if !gb_r.contains(p)? {
                    membership_witness = Some((c.clone(), p.clone()));
                    break 'outer;
                }
            }
            if order_k + 1 == s {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                for i in 0..n {
                    let d = p.partial_derivative(i);
                    if !d.is_zero() && seen.insert(d.monic(order)) {
                        next.push(d);
                    }
                }
            }
            layer = next;
        }
    }

    let leads = MonomialIdeal::minimalize(candidates.iter().filter_map(|c| c.leading_monomial(order).cloned()), n)?;
    let diff = first_difference(&leads, &predicted);
    Ok(ProductGbReport {
        r,
        s,
        candidates: candidates.len(),
        derivatives_checked,
        membership: membership_witness.is_none(),
        membership_witness,
        leading_terms: diff.is_none(),
        side: diff.as_ref().map(|d| d.0),
        lead_witness: diff.map(|d| d.1),
        predicted,
    })
}

/// Ideal equality through mutual normal forms.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let ga = buchberger(a, order)?;
    let gb = buchberger(b, order)?;
    for p in b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    for p in a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl MatrixFamily {
    /// Generators of `I^{{1}}, …, I^{{max}}`.
    pub fn levels(&self, max: usize) -> Vec<Vec<Polynomial>> {
        (1..=max).map(|k| self.level_generators(k)).collect()
    }

    pub fn delightful_check(&self, r: u32) -> Result<DelightfulReport> {
        delightful_check(&self.ideal(), r, &self.order())
    }

    pub fn verify_product_groebner(&self, r: u32, s: u32) -> Result<ProductGbReport> {
        verify_product_groebner(&self.levels((r + s) as usize), r, s, &self.order())
    }
}
