use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::TermOrder;
use crate::error::{input, Error, Result};
use crate::monomial::Monomial;

pub type Coeff = BigRational;

pub fn int(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

/// A polynomial with exact rational coefficients. Terms are kept with
/// nonzero coefficients, sorted by decreasing exponent vector (lex with
/// `x1 ≻ x2 ≻ …`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    n: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Coeff) -> Self {
        Self::from_terms(n, [(Monomial::one(n), c)])
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i), Coeff::one())
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let n = m.n();
        Self::from_terms(n, [(m, c)])
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.n(), n);
            *map.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { n, terms }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0.exps(), b.0.exps())).map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return input(format!("ambient mismatch: {} vs {} variables", self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Self::from_terms(self.n, self.terms.iter().chain(other.terms.iter()).cloned()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &Coeff) -> Polynomial {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.len() * other.len());
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.push((a.mul(b), c * d));
            }
        }
        Ok(Self::from_terms(self.n, out))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::constant(self.n, Coeff::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// `∂/∂x_i` (0-based `i`).
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let e = m.exp(i);
            let mut d = m.clone();
            d.exps_mut()[i] -= 1;
            (d, c * int(e as i64))
        });
        Self::from_terms(self.n, terms)
    }

    /// Replaces variable `i` by `images[i]`, a polynomial in `target` variables.
    pub fn substitute(&self, images: &[Polynomial], target: usize) -> Result<Polynomial> {
        if images.len() != self.n || images.iter().any(|p| p.n != target) {
            return input("substitution images do not match the ambient rings");
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Self::constant(target, Coeff::one()), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for i in 0..self.n {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e])?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Embeds into `target ≥ n` variables, sending `x_i` to `x_{i+offset}`.
    pub fn embed(&self, target: usize, offset: usize) -> Polynomial {
        assert!(offset + self.n <= target);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; target];
            for i in 0..self.n {
                e[i + offset] = m.exp(i);
            }
            (Monomial::new(e), c.clone())
        });
        Self::from_terms(target, terms)
    }

    /// Restricts to variables `offset..offset+target`; fails if another
    /// variable occurs.
    pub fn restrict(&self, target: usize, offset: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if (0..self.n).any(|i| (i < offset || i >= offset + target) && m.exp(i) > 0) {
                return None;
            }
            terms.push((Monomial::new((0..target).map(|i| m.exp(i + offset))), c.clone()));
        }
        Some(Self::from_terms(target, terms))
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String], order: Option<&'a TermOrder>) -> impl fmt::Display + 'a {
        DisplayPoly { p: self, names, order }
    }

    /// Parses `"x1*x2 - 2*x3^2 + 1/3"` with variables `x1..xn` or custom names.
    pub fn parse(text: &str, n: usize, names: Option<&[String]>) -> Result<Polynomial> {
        let default: Vec<String>;
        let names = match names {
            Some(nm) => nm,
            None => {
                default = default_names(n);
                &default
            }
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return input("empty polynomial");
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return input(format!("malformed polynomial {text:?}"));
            }
            let mut coeff = Coeff::one();
            let mut exps = vec![0u32; n];
            for factor in term.split('*') {
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Input(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                if let Some(i) = names.iter().position(|nm| nm == base) {
                    exps[i] += e;
                } else {
                    let c: Coeff = base.parse().map_err(|_| Error::Input(format!("unknown factor {base:?}")))?;
                    coeff *= num_traits::pow(c, e as usize);
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((Monomial::new(exps), coeff));
        }
        Ok(Self::from_terms(n, terms))
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

struct DisplayPoly<'a> {
    p: &'a Polynomial,
    names: &'a [String],
    order: Option<&'a TermOrder>,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<&(Monomial, Coeff)> = self.p.terms.iter().collect();
        if let Some(o) = self.order {
            terms.sort_by(|a, b| o.cmp(b.0.exps(), a.0.exps()));
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = (0..m.n())
                .filter(|&i| m.exp(i) > 0)
                .map(|i| if m.exp(i) == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], m.exp(i)) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.n);
        let shown = self.display_with(&names, None).to_string();
        f.write_str(&shown)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { coeff: c.to_string(), exp: m.exps().iter().map(|&e| e as u32).collect() })
                .collect(),
        }
    }

    pub fn from_json(j: &PolynomialJson) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exp.len() != j.n {
                return input(format!("term exponent has length {}, expected {}", t.exp.len(), j.n));
            }
            let c: Coeff = t.coeff.parse().map_err(|_| Error::Input(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((Monomial::new(t.exp.iter().copied()), c));
        }
        Ok(Self::from_terms(j.n, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n, None).unwrap()
    }

    #[test]
    fn arithmetic() {
        let d = p("x1^3", 1).partial_derivative(0);
        assert_eq!(d, p("3*x1^2", 1));
        let prod = p("x1 - x2", 2).mul(&p("x1 + x2", 2)).unwrap();
        assert_eq!(prod, p("x1^2 - x2^2", 2));
        let minor = p("x1*x4 - x2*x3", 4);
        assert_eq!(minor.partial_derivative(0), p("x4", 4));
        assert!(p("x1 - x1", 1).is_zero());
    }

    #[test]
    fn display_and_parse() {
        let f = p("-1/2*x1^2*x3 + 3 - x2", 3);
        assert_eq!(f.to_string(), "-1/2*x1^2*x3 - x2 + 3");
        assert_eq!(p(&f.to_string(), 3), f);
        assert!(Polynomial::parse("x1 + y", 1, None).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = p("2/3*x1*x2 - x2^2", 2);
        let j = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(j, r#"{"n":2,"terms":[{"coeff":"2/3","exp":[1,1]},{"coeff":"-1","exp":[0,2]}]}"#);
        let back: PolynomialJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Polynomial::from_json(&back).unwrap(), f);
    }

    #[test]
    fn substitution() {
        // x1*x2 with x1 -> y1 + y2, x2 -> y1 - y2
        let f = p("x1*x2", 2);
        let imgs = [p("x1 + x2", 2), p("x1 - x2", 2)];
        assert_eq!(f.substitute(&imgs, 2).unwrap(), p("x1^2 - x2^2", 2));
        assert_eq!(p("x1*x2", 2).embed(4, 2), p("x3*x4", 4));
        assert_eq!(p("x3*x4", 4).restrict(2, 2).unwrap(), p("x1*x2", 2));
        assert!(p("x1*x4", 4).restrict(2, 2).is_none());
    }

    #[test]
    fn leading_terms() {
        let f = p("x1*x3 + x2^2", 3);
        assert_eq!(f.leading_monomial(&TermOrder::lex(3)).unwrap().to_string(), "x1*x3");
        assert_eq!(f.leading_monomial(&TermOrder::grevlex(3)).unwrap().to_string(), "x2^2");
    }
}
