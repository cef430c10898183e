use std::fmt;

use super::Monomial;
use crate::error::{input, Result};

/// A monomial ideal stored by its minimal generators in canonical
/// (ascending lexicographic) order.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Divisibility-minimal elements of `gens`, canonically ordered.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            g.check_len(n)?;
        }
        Ok(Self::minimalize_unchecked(gens, n))
    }

    pub(crate) fn minimalize_unchecked(mut gens: Vec<Monomial>, n: usize) -> Self {
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len().min(1024));
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable();
        MonomialIdeal { n, gens: kept }
    }

    /// Wraps generators that are already minimal and canonically sorted.
    pub(crate) fn from_minimal(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// `m^r`, the `r`-th power of the homogeneous maximal ideal.
    pub fn maximal_power(n: usize, r: u32) -> Self {
        Self::prime_power(n, crate::bits::full(n), r)
    }

    /// `P^r` for the monomial prime generated by the variables in `vars`.
    pub fn prime_power(n: usize, vars: u64, r: u32) -> Self {
        let idx = crate::bits::to_indices(vars);
        let mut gens = Vec::new();
        for sub in super::monomials_of_degree(idx.len(), r) {
            let mut m = Monomial::one(n);
            for (k, &i) in idx.iter().enumerate() {
                m.exps_mut()[i] = sub.exps()[k];
            }
            gens.push(m);
        }
        if idx.is_empty() && r > 0 {
            return Self::zero(n);
        }
        gens.sort_unstable();
        MonomialIdeal { n, gens }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |m, g| m | g.support())
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return input(format!("ambient mismatch: {} vs {} variables", self.n, other.n));
        }
        Ok(())
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        m.check_len(self.n)?;
        Ok(self.contains_unchecked(m))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Containment of ideals: every generator of `self` lies in `other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// First generator of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &MonomialIdeal) -> Option<&Monomial> {
        self.gens.iter().find(|g| !other.contains_unchecked(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::minimalize_unchecked(gens, self.n))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::minimalize_unchecked(gens, self.n))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::minimalize_unchecked(gens, self.n))
    }

    /// Equality of canonical generator sets.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.gens == other.gens)
    }

    /// Ordinary power; `r = 0` gives the unit ideal.
    pub fn power(&self, r: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..r {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }
}

/// Binary lattice operations selectable at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    Sum,
    Product,
    Intersection,
}

impl MonomialIdeal {
    pub fn lattice(&self, op: LatticeOp, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        match op {
            LatticeOp::Sum => self.sum(other),
            LatticeOp::Product => self.product(other),
            LatticeOp::Intersection => self.intersection(other),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            f.write_str("0")?;
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| m(g, n)), n).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&["x1*x2", "x1^2*x2"], 2), ideal(&["x1*x2"], 2));
        assert!(MonomialIdeal::minimalize(vec![], 3).unwrap().is_zero());
        let i = ideal(&["x1", "x2", "x1*x2"], 2);
        assert_eq!(i.to_string(), "<x2, x1>");
        assert_eq!(i.len(), 2);
    }

    #[test]
    fn minimalize_rejects_length_mismatch() {
        let err = MonomialIdeal::minimalize(vec![Monomial::new([1, 0])], 3);
        assert!(err.is_err());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(&["x1*x2"], 2);
        assert!(i.contains(&m("x1^2*x2", 2)).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&m("x1", 3)).unwrap());
        let p = ideal(&["x1*x2", "x2*x3"], 3);
        assert!(!p.contains(&m("x1*x3", 3)).unwrap());
        assert!(p.contains(&Monomial::new([1])).is_err());
    }

    #[test]
    fn lattice_examples() {
        let a = ideal(&["x1"], 2);
        let b = ideal(&["x2"], 2);
        assert_eq!(a.intersection(&b).unwrap(), ideal(&["x1*x2"], 2));
        assert_eq!(a.sum(&MonomialIdeal::zero(2)).unwrap(), a);
        assert_eq!(a.product(&b).unwrap(), ideal(&["x1*x2"], 2));
        assert!(a.sum(&MonomialIdeal::zero(3)).is_err());
        assert_eq!(a.lattice(LatticeOp::Sum, &b).unwrap(), ideal(&["x1", "x2"], 2));
    }

    #[test]
    fn prime_power_intersection() {
        // <x2>^2 ∩ <x1,x3>^2, expanded by hand:
        // {x2^2} × {x1^2, x1x3, x3^2} under lcm, nothing to discard.
        let p = MonomialIdeal::prime_power(3, 0b010, 2);
        let q = MonomialIdeal::prime_power(3, 0b101, 2);
        let expected = ideal(&["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"], 3);
        assert_eq!(p.intersection(&q).unwrap(), expected);
    }

    #[test]
    fn powers() {
        assert_eq!(ideal(&["x1*x2"], 2).power(3), ideal(&["x1^3*x2^3"], 2));
        assert!(MonomialIdeal::zero(2).power(4).is_zero());
        assert!(ideal(&["x1"], 2).power(0).is_unit());
        let k3 = ideal(&["x1*x2", "x1*x3", "x2*x3"], 3);
        let expected = ideal(
            &["x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2", "x1^2*x2*x3", "x1*x2^2*x3", "x1*x2*x3^2"],
            3,
        );
        assert_eq!(k3.power(2), expected);
        assert_eq!(k3.power(1), k3);
    }

    #[test]
    fn maximal_power_count() {
        assert_eq!(MonomialIdeal::maximal_power(3, 2).len(), 6);
        assert!(MonomialIdeal::maximal_power(3, 0).is_unit());
    }
}
