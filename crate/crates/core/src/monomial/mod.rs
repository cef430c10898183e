//! Monomials and monomial ideals.

mod ideal;
pub(crate) mod powers;

pub use ideal::MonomialIdeal;
pub use powers::{
    diff_membership, diff_power, diff_power_with, minimal_primes, symbolic_power_radical,
    DiffPower, PrimeSupport, SymbolicOracle,
};

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{input, Error, Result};

pub type Exponents = SmallVec<[u16; 16]>;

/// An exponent vector over `n` variables.
///
/// The derived ordering is lexicographic on the exponent sequence, which is
/// the canonical generator order of [`MonomialIdeal`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps
                .into_iter()
                .map(|e| u16::try_from(e).expect("exponent exceeds u16"))
                .collect(),
        }
    }

    pub fn from_exps(exps: Exponents) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1`.
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n) }
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// Squarefree monomial on the variables of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut m = Self::one(n);
        for i in crate::bits::bits(mask) {
            m.exps[i] = 1;
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support as a bitmask; only meaningful for `n <= 64`.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u64 << i))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e * k as u16).collect() }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Exponents {
        &mut self.exps
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return input(format!(
                "monomial {} has {} exponents, expected {}",
                self,
                self.n(),
                n
            ));
        }
        Ok(())
    }

    /// Parses the text form (`x1^2*x3`, or `1`) over `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let mut m = Monomial::one(n);
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => {
                    let p: u16 = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Input(format!("bad exponent in {factor:?}")))?;
                    (v.trim(), p)
                }
                None => (factor, 1),
            };
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Input(format!("bad variable {var:?}")))?;
            if idx == 0 || idx > n {
                return input(format!("variable {var} out of range 1..={n}"));
            }
            m.exps[idx - 1] += pow;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses with the ambient size set to the largest variable index seen.
    fn from_str(s: &str) -> Result<Monomial> {
        let n = s
            .split('*')
            .filter_map(|f| f.trim().split('^').next()?.strip_prefix('x')?.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Monomial::parse(s, n)
    }
}

/// All exponent vectors of total degree exactly `d` over `n` variables, in
/// lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = SmallVec::from_elem(0, n);
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = Monomial::parse("x1^2*x3", 4).unwrap();
        assert_eq!(m.exps(), &[2, 0, 1, 0]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::parse("1", 3).unwrap(), Monomial::one(3));
        assert_eq!("x2*x5".parse::<Monomial>().unwrap().n(), 5);
    }

    #[test]
    fn rejects_bad_text() {
        assert!(Monomial::parse("x0", 3).is_err());
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x1^a", 3).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::new([2, 1, 0]);
        let b = Monomial::new([1, 0, 3]);
        assert_eq!(a.lcm(&b), Monomial::new([2, 1, 3]));
        assert_eq!(a.gcd(&b), Monomial::new([1, 0, 0]));
        assert_eq!(a.mul(&b).degree(), 7);
        assert!(!a.divides(&b));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert!(Monomial::new([1, 0, 0]).coprime(&Monomial::new([0, 2, 1])));
        assert!(!a.is_squarefree());
        assert_eq!(Monomial::new([1, 0, 1]).support(), 0b101);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![Monomial::new([4])]);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::one(4)]);
    }
}
