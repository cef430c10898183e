//! Symbolic powers of squarefree monomial ideals and differential powers of
//! arbitrary monomial ideals.

use smallvec::SmallVec;

use super::{Exponents, Monomial, MonomialIdeal};
use crate::bits;
use crate::error::{input, resource, Error, Result};

/// A monomial prime ideal, given by the variables that generate it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeSupport {
    pub vars: u64,
}

impl PrimeSupport {
    /// 1-based variable indices.
    pub fn indices(&self) -> Vec<usize> {
        bits::bits(self.vars).map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.vars.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vars == 0
    }
}

fn squarefree_supports(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if ideal.n() > 64 {
        return Err(Error::Unsupported(format!("{} variables (at most 64)", ideal.n())));
    }
    if !ideal.is_squarefree() {
        return input(format!("{ideal} is not squarefree"));
    }
    Ok(ideal.generators().iter().map(Monomial::support).collect())
}

/// Minimal transversals of a family of sets (Berge's incremental
/// algorithm), sorted by size and then by index list.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut covers: Vec<u64> = vec![0];
    for &e in edges {
        let mut next = Vec::with_capacity(covers.len() * 2);
        for &c in &covers {
            if c & e != 0 {
                next.push(c);
            } else {
                next.extend(bits::bits(e).map(|v| c | (1u64 << v)));
            }
        }
        covers = bits::minimal_sets(next);
    }
    covers.sort_by_key(|&c| (c.count_ones(), bits::to_indices(c)));
    covers
}

/// Minimal primes of a proper squarefree monomial ideal, i.e. the minimal
/// vertex covers of its support hypergraph.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    if ideal.is_unit() {
        return input("the unit ideal has no minimal primes");
    }
    let edges = squarefree_supports(ideal)?;
    if edges.is_empty() {
        return Ok(Vec::new());
    }
    Ok(minimal_transversals(&edges).into_iter().map(|vars| PrimeSupport { vars }).collect())
}

/// Membership in every symbolic power of a fixed squarefree ideal.
///
/// `x^a` lies in `I^(r)` iff every minimal prime `P` has `sum_{i in P} a_i >= r`.
#[derive(Clone, Debug)]
pub struct SymbolicOracle {
    n: usize,
    covers: Vec<u64>,
    zero: bool,
}

impl SymbolicOracle {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Ok(SymbolicOracle { n: ideal.n(), covers: Vec::new(), zero: false });
        }
        let covers = minimal_primes(ideal)?.into_iter().map(|p| p.vars).collect();
        Ok(SymbolicOracle { n: ideal.n(), covers, zero: ideal.is_zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[u64] {
        &self.covers
    }

    /// Minimum over the minimal primes of the exponent mass on the prime.
    /// `None` for the zero ideal, `u32::MAX` for the unit ideal.
    pub fn order(&self, exps: &[u16]) -> Option<u32> {
        if self.zero {
            return None;
        }
        Some(
            self.covers
                .iter()
                .map(|&c| bits::bits(c).map(|i| exps[i] as u32).sum())
                .min()
                .unwrap_or(u32::MAX),
        )
    }

    #[inline]
    pub fn contains(&self, exps: &[u16], r: u32) -> bool {
        if r == 0 {
            return true;
        }
        if self.zero {
            return false;
        }
        self.covers.iter().all(|&c| bits::bits(c).map(|i| exps[i] as u32).sum::<u32>() >= r)
    }
}

/// Largest number of candidate exponent vectors the box enumeration of
/// [`symbolic_power_radical`] will visit before switching to iterated
/// intersections.
const BOX_LIMIT: u64 = 20_000_000;

/// Minimal generators of `I^(r) = ∩ P^r` over the minimal primes `P` of a
/// squarefree ideal `I`.
pub fn symbolic_power_radical(ideal: &MonomialIdeal, r: u32) -> Result<MonomialIdeal> {
    let n = ideal.n();
    if ideal.is_unit() || r == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(n));
    }
    let covers: Vec<u64> = minimal_primes(ideal)?.into_iter().map(|p| p.vars).collect();
    if r == 1 {
        return Ok(ideal.clone());
    }
    let support = ideal.support();
    let k = support.count_ones();
    let box_size = (r as u64 + 1).checked_pow(k).unwrap_or(u64::MAX);
    if box_size <= BOX_LIMIT {
        Ok(symbolic_by_box(n, support, &covers, r))
    } else {
        symbolic_by_intersection(n, &covers, r)
    }
}

/// Enumerates exponent vectors in `[0, r]^support`: minimal generators of
/// `I^(r)` never carry an exponent above `r`.  A member `a` is minimal iff
/// every `i` in its support lies on some prime whose mass is exactly `r`.
fn symbolic_by_box(n: usize, support: u64, covers: &[u64], r: u32) -> MonomialIdeal {
    let vars = bits::to_indices(support);
    // covers containing each variable, and how many variables of each cover
    // are still unassigned after position `p`
    let on: Vec<Vec<usize>> = vars
        .iter()
        .map(|&v| (0..covers.len()).filter(|&c| covers[c] >> v & 1 == 1).collect())
        .collect();
    let mut remaining_after: Vec<Vec<u32>> = vec![vec![0; covers.len()]; vars.len() + 1];
    for p in (0..vars.len()).rev() {
        let mut row = remaining_after[p + 1].clone();
        for &c in &on[p] {
            row[c] += 1;
        }
        remaining_after[p] = row;
    }

    struct Walk<'a> {
        vars: &'a [usize],
        on: &'a [Vec<usize>],
        remaining_after: &'a [Vec<u32>],
        covers: &'a [u64],
        r: u32,
        sums: Vec<u32>,
        exps: Exponents,
        out: Vec<Monomial>,
    }

    impl Walk<'_> {
        fn go(&mut self, p: usize) {
            if p == self.vars.len() {
                if self.sums.iter().any(|&s| s < self.r) {
                    return;
                }
                let minimal = self.vars.iter().all(|&v| {
                    self.exps[v] == 0
                        || self
                            .covers
                            .iter()
                            .zip(&self.sums)
                            .any(|(&c, &s)| c >> v & 1 == 1 && s == self.r)
                });
                if minimal {
                    self.out.push(Monomial::from_exps(self.exps.clone()));
                }
                return;
            }
            let v = self.vars[p];
            for e in 0..=self.r {
                // every cover must still be able to reach mass r
                let feasible = self
                    .sums
                    .iter()
                    .zip(&self.remaining_after[p + 1])
                    .enumerate()
                    .all(|(c, (&s, &rem))| {
                        let here = if self.on[p].contains(&c) { e } else { 0 };
                        s + here + rem * self.r >= self.r
                    });
                if !feasible {
                    continue;
                }
                self.exps[v] = e as u16;
                for &c in &self.on[p] {
                    self.sums[c] += e;
                }
                self.go(p + 1);
                for &c in &self.on[p] {
                    self.sums[c] -= e;
                }
            }
            self.exps[v] = 0;
        }
    }

    let mut walk = Walk {
        vars: &vars,
        on: &on,
        remaining_after: &remaining_after,
        covers,
        r,
        sums: vec![0; covers.len()],
        exps: SmallVec::from_elem(0, n),
        out: Vec::new(),
    };
    walk.go(0);
    let mut out = walk.out;
    out.sort_unstable();
    MonomialIdeal::from_minimal(n, out)
}

fn symbolic_by_intersection(n: usize, covers: &[u64], r: u32) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for &c in covers {
        acc = acc.intersection(&MonomialIdeal::prime_power(n, c, r))?;
        if acc.len() > 5_000_000 {
            return resource("symbolic power has more than 5,000,000 generators");
        }
    }
    Ok(acc)
}

/// Characteristic-zero differential membership: `x^a ∈ I^<r>` iff
/// `x^(a-b) ∈ I` for every `b <= a` with `|b| <= r-1`.
pub fn diff_membership(ideal: &MonomialIdeal, m: &Monomial, r: u32) -> Result<bool> {
    m.check_len(ideal.n())?;
    Ok(diff_member_unchecked(ideal, m.exps(), r))
}

pub(crate) fn diff_member_unchecked(ideal: &MonomialIdeal, a: &[u16], r: u32) -> bool {
    if r == 0 {
        return true;
    }
    // search for some c <= a with |c| >= |a| - (r-1) that is outside I
    let total: u32 = a.iter().map(|&e| e as u32).sum();
    let need = total.saturating_sub(r - 1);
    let mut c: Exponents = SmallVec::from_slice(a);
    !exists_standard_above(ideal, a, &mut c, 0, total, need)
}

/// Is there `c <= a` agreeing with `c` on positions `< i`, with `|c| >= need`
/// and `x^c ∉ I`?  `deg` is the degree of the current `c`, which still
/// equals `a` on positions `>= i`.
fn exists_standard_above(
    ideal: &MonomialIdeal,
    a: &[u16],
    c: &mut Exponents,
    i: usize,
    deg: u32,
    need: u32,
) -> bool {
    if deg < need {
        return false;
    }
    if i == a.len() {
        return !ideal.generators().iter().any(|g| g.exps().iter().zip(c.iter()).all(|(x, y)| x <= y));
    }
    // lowering c only removes membership: if the full c is already outside
    // I there is nothing more to search
    let full_outside = !ideal.generators().iter().any(|g| g.exps().iter().zip(c.iter()).all(|(x, y)| x <= y));
    if full_outside {
        return true;
    }
    let orig = c[i];
    let mut found = false;
    for e in (0..=orig).rev() {
        c[i] = e;
        let d = deg - (orig - e) as u32;
        if d < need {
            break;
        }
        if exists_standard_above(ideal, a, c, i + 1, d, need) {
            found = true;
            break;
        }
    }
    c[i] = orig;
    found
}

/// Result of [`diff_power_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffPower {
    pub ideal: MonomialIdeal,
    /// Largest degree enumerated exhaustively.
    pub degree_bound: u32,
    /// False when the closure check still found new generators at the ceiling.
    pub complete: bool,
}

/// Minimal generators of `I^<r>` for an ideal generated in degree at most 2,
/// with the default degree ceiling `4r`.
pub fn diff_power(ideal: &MonomialIdeal, r: u32) -> Result<MonomialIdeal> {
    let out = diff_power_with(ideal, r, 4 * r.max(1))?;
    if !out.complete {
        return resource(format!(
            "differential power not closed at degree ceiling {} ({} generators found so far)",
            out.degree_bound,
            out.ideal.len()
        ));
    }
    Ok(out.ideal)
}

/// Enumerates monomials of degree `<= D` starting from `D = min(2r, ceiling)`, filters by
/// [`diff_membership`] and raises `D` until the two degrees above it add no
/// monomial outside the ideal found so far, or `D` reaches `ceiling`.
pub fn diff_power_with(ideal: &MonomialIdeal, r: u32, ceiling: u32) -> Result<DiffPower> {
    let n = ideal.n();
    if ideal.max_degree() > 2 {
        return input(format!("{ideal} has a generator of degree above 2"));
    }
    if r == 0 || ideal.is_unit() {
        return Ok(DiffPower { ideal: MonomialIdeal::unit(n), degree_bound: 0, complete: true });
    }
    if ideal.is_zero() {
        return Ok(DiffPower { ideal: MonomialIdeal::zero(n), degree_bound: 0, complete: true });
    }
    let vars = bits::to_indices(ideal.support());
    let lift = |sub: &Monomial| {
        let mut m = Monomial::one(n);
        for (k, &i) in vars.iter().enumerate() {
            m.exps_mut()[i] = sub.exps()[k];
        }
        m
    };
    let members_of_degree = |d: u32| -> Vec<Monomial> {
        super::monomials_of_degree(vars.len(), d)
            .iter()
            .map(lift)
            .filter(|m| diff_member_unchecked(ideal, m.exps(), r))
            .collect()
    };

    let mut bound = (2 * r).min(ceiling);
    let mut found: Vec<Monomial> = (0..=bound).flat_map(members_of_degree).collect();
    loop {
        let current = MonomialIdeal::minimalize_unchecked(found.clone(), n);
        let mut escaped = Vec::new();
        for d in bound + 1..=bound + 2 {
            escaped.extend(members_of_degree(d).into_iter().filter(|m| !current.contains_unchecked(m)));
        }
        if escaped.is_empty() {
            return Ok(DiffPower { ideal: current, degree_bound: bound, complete: true });
        }
        if bound >= ceiling {
            return Ok(DiffPower { ideal: current, degree_bound: bound, complete: false });
        }
        bound += 1;
        found = current.generators().to_vec();
        found.extend(members_of_degree(bound));
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

    fn k3() -> MonomialIdeal {
        ideal(&["x1*x2", "x1*x3", "x2*x3"], 3)
    }

    fn c5() -> MonomialIdeal {
        ideal(&["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"], 5)
    }

    fn primes(i: &MonomialIdeal) -> Vec<Vec<usize>> {
        minimal_primes(i).unwrap().iter().map(PrimeSupport::indices).collect()
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(primes(&ideal(&["x1*x2", "x2*x3"], 3)), vec![vec![2], vec![1, 3]]);
        assert_eq!(primes(&ideal(&["x1*x2"], 2)), vec![vec![1], vec![2]]);
        assert_eq!(primes(&k3()), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(minimal_primes(&ideal(&["x1^2"], 1)).is_err());
        assert!(minimal_primes(&MonomialIdeal::unit(2)).is_err());
    }

    /// Oracle: intersect the prime powers with pairwise lcms.
    fn by_lcm(i: &MonomialIdeal, r: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(i.n());
        for p in minimal_primes(i).unwrap() {
            acc = acc.intersection(&MonomialIdeal::prime_power(i.n(), p.vars, r)).unwrap();
        }
        acc
    }

    #[test]
    fn symbolic_examples() {
        let expected = ideal(&["x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"], 3);
        assert_eq!(symbolic_power_radical(&k3(), 2).unwrap(), expected);
        assert_eq!(by_lcm(&k3(), 2), expected);
        assert_eq!(symbolic_power_radical(&ideal(&["x1*x2"], 2), 3).unwrap(), ideal(&["x1^3*x2^3"], 2));
        let c5_3 = symbolic_power_radical(&c5(), 3).unwrap();
        assert!(c5_3.contains(&m("x1*x2*x3*x4*x5", 5)).unwrap());
        assert_eq!(symbolic_power_radical(&c5(), 1).unwrap(), c5());
    }

    #[test]
    fn symbolic_degenerate() {
        assert!(symbolic_power_radical(&MonomialIdeal::zero(3), 2).unwrap().is_zero());
        assert!(symbolic_power_radical(&MonomialIdeal::unit(3), 2).unwrap().is_unit());
    }

    #[test]
    fn box_and_intersection_routes_agree() {
        for r in 1..=4 {
            let covers: Vec<u64> = minimal_primes(&c5()).unwrap().iter().map(|p| p.vars).collect();
            assert_eq!(
                symbolic_by_box(5, 0b11111, &covers, r),
                symbolic_by_intersection(5, &covers, r).unwrap()
            );
        }
    }

    #[test]
    fn oracle_matches_generators() {
        let o = SymbolicOracle::new(&c5()).unwrap();
        assert!(o.contains(m("x1*x2*x3*x4*x5", 5).exps(), 3));
        assert!(!o.contains(m("x1*x2*x3*x4", 5).exps(), 3));
        assert_eq!(o.order(m("x1*x2", 5).exps()), Some(1));
    }

    #[test]
    fn diff_membership_examples() {
        let sq = ideal(&["x1^2"], 1);
        assert!(diff_membership(&sq, &m("x1^3", 1), 2).unwrap());
        assert!(!diff_membership(&sq, &m("x1^2", 1), 2).unwrap());
        assert!(diff_membership(&c5(), &m("x1*x2*x3*x4*x5", 5), 3).unwrap());
        assert!(!diff_membership(&c5(), &m("x1*x2*x3*x4*x5", 5), 4).unwrap());
    }

    #[test]
    fn diff_power_examples() {
        assert_eq!(diff_power(&ideal(&["x1*x2"], 2), 2).unwrap(), ideal(&["x1^2*x2^2"], 2));
        assert_eq!(diff_power(&ideal(&["x1^2"], 1), 2).unwrap(), ideal(&["x1^3"], 1));
        assert_eq!(diff_power(&k3(), 2).unwrap(), symbolic_power_radical(&k3(), 2).unwrap());
        assert!(diff_power(&ideal(&["x1^3"], 1), 2).is_err());
    }

    #[test]
    fn diff_power_ceiling_flags_partial() {
        // x^2 with r = 5 needs x^6; a ceiling below that stays incomplete
        let out = diff_power_with(&ideal(&["x1^2"], 1), 5, 4).unwrap();
        assert!(!out.complete);
        let out = diff_power_with(&ideal(&["x1^2"], 1), 5, 20).unwrap();
        assert!(out.complete);
        assert_eq!(out.ideal, ideal(&["x1^6"], 1));
    }
}
