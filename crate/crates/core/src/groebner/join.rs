use super::engine::{buchberger_with, GbLimits};
use super::poly::Polynomial;
use super::TermOrder;
use crate::error::{input, Result};
use crate::monomial::MonomialIdeal;

fn ambient(i: &[Polynomial], j: &[Polynomial]) -> Result<usize> {
    let n = i.first().or(j.first()).map(Polynomial::n);
    let Some(n) = n else {
        return input("join needs at least one generator to fix the ambient ring");
    };
    if i.iter().chain(j).any(|p| p.n() != n) {
        return input("join inputs live in different rings");
    }
    Ok(n)
}

/// Generators of `I ∗ J`, computed as `(I(y) + J(x − y)) ∩ K[x]` under an
/// elimination order on `y, x`. The result is a reduced Gröbner basis for
/// grevlex in `x`.
pub fn join_ideal(i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>> {
    join_ideal_with(i, j, GbLimits::default())
}

pub fn join_ideal_with(i: &[Polynomial], j: &[Polynomial], limits: GbLimits) -> Result<Vec<Polynomial>> {
    let n = ambient(i, j)?;
    let big = 2 * n;
    let images: Vec<Polynomial> =
        (0..n).map(|k| Polynomial::var(big, n + k).sub(&Polynomial::var(big, k)).expect("same ambient")).collect();
    let mut gens: Vec<Polynomial> = i.iter().map(|p| p.embed(big, 0)).collect();
    for p in j {
        gens.push(p.substitute(&images, big)?);
    }
    let order = TermOrder::elimination((0..n).collect(), (n..big).collect())?;
    let gb = buchberger_with(&gens, &order, limits)?;
    Ok(gb.polys().iter().filter_map(|p| p.restrict(n, n)).collect())
}

/// `I^{(r)}` as the join `I ∗ m^r`.
pub fn symbolic_via_join(i: &[Polynomial], r: u32) -> Result<Vec<Polynomial>> {
    let n = ambient(i, &[])?;
    let m: Vec<Polynomial> = MonomialIdeal::maximal_power(n, r)
        .generators()
        .iter()
        .map(|g| Polynomial::monomial(g.clone(), num_traits::One::one()))
        .collect();
    join_ideal(i, &m)
}

/// `I^{{r}} = I ∗ ⋯ ∗ I`, folded left to right.
pub fn secant_via_join(i: &[Polynomial], r: u32) -> Result<Vec<Polynomial>> {
    if r == 0 {
        return input("secant order must be positive");
    }
    let n = ambient(i, &[])?;
    let mut acc: Vec<Polynomial> = i.to_vec();
    for _ in 1..r {
        if acc.is_empty() {
            break;
        }
        acc = join_ideal(&acc, i)?;
    }
    if r == 1 {
        acc = super::buchberger(&acc, &TermOrder::grevlex(n))?.polys().to_vec();
    }
    Ok(acc)
}
