use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_traits::{One, Zero};

use super::poly::{Coeff, Polynomial};
use super::TermOrder;
use crate::error::{resource, Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub const MAX_VARS: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Mono {
    e: [u16; MAX_VARS],
    deg: u32,
    mask: u64,
}

impl Mono {
    fn from_exps(exps: &[u16]) -> Mono {
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Self::finish(e)
    }

    fn finish(e: [u16; MAX_VARS]) -> Mono {
        let mut deg = 0;
        let mut mask = 0;
        for (i, &x) in e.iter().enumerate() {
            deg += x as u32;
            if x > 0 {
                mask |= 1 << i;
            }
        }
        Mono { e, deg, mask }
    }

    #[inline]
    fn divides(&self, other: &Mono) -> bool {
        self.mask & !other.mask == 0 && self.deg <= other.deg && self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.e;
        for i in 0..MAX_VARS {
            e[i] += other.e[i];
        }
        Mono { e, deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    fn div(&self, other: &Mono) -> Mono {
        let mut e = self.e;
        for i in 0..MAX_VARS {
            e[i] -= other.e[i];
        }
        Self::finish(e)
    }

    fn lcm(&self, other: &Mono) -> Mono {
        let mut e = self.e;
        for i in 0..MAX_VARS {
            e[i] = e[i].max(other.e[i]);
        }
        Self::finish(e)
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.mask & other.mask == 0
    }

    fn to_monomial(self, n: usize) -> Monomial {
        Monomial::new(self.e[..n].iter().map(|&x| x as u32))
    }
}

/// Terms sorted decreasingly in the engine's order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<(Mono, Coeff)>,
    sugar: u32,
}

impl GPoly {
    fn lead(&self) -> &Mono {
        &self.terms[0].0
    }
}

struct Ctx<'a> {
    n: usize,
    order: &'a TermOrder,
}

impl Ctx<'_> {
    #[inline]
    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp(&a.e[..self.n], &b.e[..self.n])
    }

    fn convert(&self, p: &Polynomial) -> GPoly {
        let mut terms: Vec<(Mono, Coeff)> = p.terms().iter().map(|(m, c)| (Mono::from_exps(m.exps()), c.clone())).collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let sugar = terms.iter().map(|t| t.0.deg).max().unwrap_or(0);
        GPoly { terms, sugar }
    }

    fn back(&self, p: &GPoly) -> Polynomial {
        Polynomial::from_terms(self.n, p.terms.iter().map(|(m, c)| (m.to_monomial(self.n), c.clone())))
    }

    fn make_monic(&self, p: &mut GPoly) {
        if let Some((_, c)) = p.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for t in p.terms.iter_mut() {
                    t.1 *= &inv;
                }
            }
        }
    }

    /// `a − c·q·b` where the leading terms cancel; both sorted.
    fn sub_mul(&self, a: &[(Mono, Coeff)], c: &Coeff, q: &Mono, b: &[(Mono, Coeff)]) -> Vec<(Mono, Coeff)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(q);
            if i == a.len() {
                out.push((bm, -(c * &b[j].1)));
                j += 1;
                continue;
            }
            match self.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, -(c * &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 - c * &b[j].1;
                    if !v.is_zero() {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Full reduction of `p` by the monic `basis` entries selected by `use_it`.
    fn reduce(&self, p: GPoly, basis: &[GPoly], use_it: &dyn Fn(usize) -> bool) -> GPoly {
        let mut sugar = p.sugar;
        let mut rest = p.terms;
        let mut done: Vec<(Mono, Coeff)> = Vec::new();
        while !rest.is_empty() {
            let lead = rest[0].0;
            let found = (0..basis.len()).find(|&k| use_it(k) && basis[k].lead().divides(&lead));
            match found {
                Some(k) => {
                    let g = &basis[k];
                    let q = lead.div(g.lead());
                    sugar = sugar.max(g.sugar + q.deg);
                    let c = rest[0].1.clone();
                    rest = self.sub_mul(&rest[1..], &c, &q, &g.terms[1..]);
                }
                None => {
                    // move the irreducible leading term out
                    let mut it = rest.into_iter();
                    done.push(it.next().unwrap());
                    rest = it.collect();
                }
            }
        }
        GPoly { terms: done, sugar }
    }

    fn spoly(&self, f: &GPoly, g: &GPoly) -> GPoly {
        let l = f.lead().lcm(g.lead());
        let qf = l.div(f.lead());
        let qg = l.div(g.lead());
        let mut a: Vec<(Mono, Coeff)> = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        // f, g monic: S = qf*f − qg*g
        a = self.sub_mul(&a, &Coeff::one(), &qg, &g.terms[1..]);
        let sugar = (f.sugar + qf.deg).max(g.sugar + qg.deg);
        GPoly { terms: a, sugar }
    }
}

/// Safety limits for one Buchberger run.
#[derive(Clone, Copy, Debug)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: 2_000_000, max_basis: 50_000, max_degree: 64 }
    }
}

/// A reduced Gröbner basis: monic, self-reduced, sorted by decreasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    polys: Vec<Polynomial>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    alive: bool,
}

fn check_ambient(f: &[Polynomial], order: &TermOrder) -> Result<usize> {
    let n = order.n();
    if n > MAX_VARS {
        return Err(Error::Unsupported(format!("{n} variables (the engine handles at most {MAX_VARS})")));
    }
    if let Some(p) = f.iter().find(|p| p.n() != n) {
        return Err(Error::Input(format!("polynomial in {} variables, term order on {n}", p.n())));
    }
    Ok(n)
}

pub fn buchberger(f: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(f, order, GbLimits::default())
}

pub fn buchberger_with(f: &[Polynomial], order: &TermOrder, limits: GbLimits) -> Result<GroebnerBasis> {
    let n = check_ambient(f, order)?;
    let ctx = Ctx { n, order };
    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(u32, u32, usize)>> = BinaryHeap::new();
    let mut sugars: Vec<u32> = Vec::new();

    let mut inputs: Vec<GPoly> = f.iter().filter(|p| !p.is_zero()).map(|p| ctx.convert(p)).collect();
    inputs.sort_by(|a, b| a.sugar.cmp(&b.sugar).then_with(|| ctx.cmp(a.lead(), b.lead())));

    let add = |h: GPoly,
                   polys: &mut Vec<GPoly>,
                   active: &mut Vec<bool>,
                   pairs: &mut Vec<Pair>,
                   heap: &mut BinaryHeap<Reverse<(u32, u32, usize)>>,
                   sugars: &mut Vec<u32>|
     -> Result<()> {
        if polys.len() >= limits.max_basis {
            return resource(format!("Gröbner basis exceeded {} elements", limits.max_basis));
        }
        let t = polys.len();
        let hl = *h.lead();
        // candidate pairs with the active elements
        let mut cand: Vec<(usize, Mono, bool)> = (0..t)
            .filter(|&k| active[k])
            .map(|k| (k, polys[k].lead().lcm(&hl), polys[k].lead().coprime(&hl)))
            .collect();
        // old pairs made redundant by h
        for p in pairs.iter_mut().filter(|p| p.alive) {
            if hl.divides(&p.lcm) {
                let li = polys[p.i].lead().lcm(&hl);
                let lj = polys[p.j].lead().lcm(&hl);
                if li != p.lcm && lj != p.lcm {
                    p.alive = false;
                }
            }
        }
        // criterion M: drop pairs whose lcm is properly divisible by another
        let lcms: Vec<Mono> = cand.iter().map(|c| c.1).collect();
        cand.retain(|(_, l, _)| !lcms.iter().any(|m| m != l && m.divides(l)));
        // criterion F: one pair per lcm, none if any of them is coprime
        let mut keep: Vec<(usize, Mono, bool)> = Vec::new();
        let mut dropped: Vec<Mono> = Vec::new();
        for c in cand {
            if dropped.contains(&c.1) {
                continue;
            }
            if let Some(pos) = keep.iter().position(|k| k.1 == c.1) {
                if c.2 || keep[pos].2 {
                    dropped.push(c.1);
                    keep.remove(pos);
                }
                continue;
            }
            keep.push(c);
        }
        for (k, l, coprime) in keep {
            if coprime {
                continue;
            }
            let gk = &polys[k];
            let sugar = (gk.sugar + l.deg - gk.lead().deg).max(h.sugar + l.deg - hl.deg);
            let id = pairs.len();
            pairs.push(Pair { i: k, j: t, lcm: l, alive: true });
            heap.push(Reverse((sugar, l.deg, id)));
        }
        for k in 0..t {
            if active[k] && hl.divides(polys[k].lead()) {
                active[k] = false;
            }
        }
        sugars.push(h.sugar);
        polys.push(h);
        active.push(true);
        Ok(())
    };

    for p in inputs {
        let act = active.clone();
        let mut h = ctx.reduce(p, &polys, &|k| act[k]);
        if h.terms.is_empty() {
            continue;
        }
        ctx.make_monic(&mut h);
        add(h, &mut polys, &mut active, &mut pairs, &mut heap, &mut sugars)?;
    }

    let mut processed = 0usize;
    while let Some(Reverse((sugar, _, id))) = heap.pop() {
        if !pairs[id].alive {
            continue;
        }
        pairs[id].alive = false;
        processed += 1;
        if processed > limits.max_pairs {
            return resource(format!("Buchberger exceeded {} S-pair reductions", limits.max_pairs));
        }
        if sugar > limits.max_degree {
            return resource(format!("S-pair degree {sugar} exceeds the cap {}", limits.max_degree));
        }
        let (i, j) = (pairs[id].i, pairs[id].j);
        let s = ctx.spoly(&polys[i], &polys[j]);
        let act = active.clone();
        let mut h = ctx.reduce(s, &polys, &|k| act[k]);
        if h.terms.is_empty() {
            continue;
        }
        ctx.make_monic(&mut h);
        add(h, &mut polys, &mut active, &mut pairs, &mut heap, &mut sugars)?;
    }

    // reduced basis
    let basis: Vec<GPoly> = (0..polys.len()).filter(|&k| active[k]).map(|k| polys[k].clone()).collect();
    let mut reduced = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let tail = GPoly { terms: g.terms[1..].to_vec(), sugar: g.sugar };
        let r = ctx.reduce(tail, &basis, &|m| m != k);
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(r.terms);
        reduced.push(GPoly { terms, sugar: g.sugar });
    }
    reduced.sort_by(|a, b| ctx.cmp(b.lead(), a.lead()));
    Ok(GroebnerBasis { order: order.clone(), polys: reduced.iter().map(|g| ctx.back(g)).collect() })
}

/// Remainder of `f` under full division by `g` (in the given order).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    let n = check_ambient(g, order)?;
    if f.n() != n {
        return Err(Error::Input(format!("polynomial in {} variables, term order on {n}", f.n())));
    }
    let ctx = Ctx { n, order };
    let basis: Vec<GPoly> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut q = ctx.convert(p);
            ctx.make_monic(&mut q);
            q
        })
        .collect();
    Ok(ctx.back(&ctx.reduce(ctx.convert(f), &basis, &|_| true)))
}

/// True iff every S-polynomial of `f` reduces to zero modulo `f`; pairs
/// with coprime leading monomials are skipped.
pub fn is_groebner(f: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let n = check_ambient(f, order)?;
    let ctx = Ctx { n, order };
    let basis: Vec<GPoly> = f
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut q = ctx.convert(p);
            ctx.make_monic(&mut q);
            q
        })
        .collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lead().coprime(basis[j].lead()) {
                continue;
            }
            let s = ctx.spoly(&basis[i], &basis[j]);
            if !ctx.reduce(s, &basis, &|_| true).terms.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].degree() == Some(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial(&self.order).unwrap().clone()).collect()
    }

    /// The ideal of leading monomials.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.leading_monomials(), self.order.n()).expect("matching ambient")
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.polys, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n, None).unwrap()
    }

    #[test]
    fn linear_example() {
        let gb = buchberger(&[p("x1 - x2", 3), p("x2 - x3", 3)], &TermOrder::lex(3)).unwrap();
        assert_eq!(gb.polys(), &[p("x1 - x3", 3), p("x2 - x3", 3)]);
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x1,x2,x3],[x2,x3,x4]]
        let f = [p("x1*x3 - x2^2", 4), p("x1*x4 - x2*x3", 4), p("x2*x4 - x3^2", 4)];
        assert!(is_groebner(&f, &TermOrder::lex(4)).unwrap());
        let gb = buchberger(&f, &TermOrder::grevlex(4)).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&p("x1*x3^2 - x2^2*x3", 4)).unwrap());
        assert!(!gb.contains(&p("x1*x2", 4)).unwrap());
    }

    #[test]
    fn not_a_basis() {
        let f = [p("x1^2 - x2", 2), p("x1*x2 - 1", 2)];
        assert!(!is_groebner(&f, &TermOrder::lex(2)).unwrap());
        let gb = buchberger(&f, &TermOrder::lex(2)).unwrap();
        assert!(is_groebner(gb.polys(), &TermOrder::lex(2)).unwrap());
        // x1 = x2^2 and x2^3 = 1
        assert_eq!(gb.polys(), &[p("x1 - x2^2", 2), p("x2^3 - 1", 2)]);
    }

    #[test]
    fn permutation_invariance() {
        let f = vec![p("x1*x2 - x3^2", 3), p("x2^2 - x1*x3", 3), p("x1^2 - x2*x3 + x3", 3)];
        let o = TermOrder::grevlex(3);
        let a = buchberger(&f, &o).unwrap();
        let mut g = f.clone();
        g.reverse();
        assert_eq!(a, buchberger(&g, &o).unwrap());
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[p("x1", 1), p("x1 + 1", 1)], &TermOrder::lex(1)).unwrap();
        assert!(gb.is_unit());
    }
}
