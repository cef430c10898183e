use super::Poset;
use crate::bits::{self, bits};
use rand::seq::SliceRandom;
use rand::Rng;

/// Calls `f` on every labeled poset on `n` elements.
///
/// Element `m` is added to a poset on `0..m` by choosing its down-set `D`
/// and up-set `U`: a down-closed and an up-closed set, disjoint, with every
/// element of `D` already below every element of `U`.
pub fn for_each_labeled_poset(n: usize, f: &mut dyn FnMut(&Poset)) {
    assert!(n <= 8, "labeled poset enumeration is limited to 8 elements");
    extend(&Poset::antichain(0), n, f);
}

fn extend(p: &Poset, n: usize, f: &mut dyn FnMut(&Poset)) {
    let m = p.n();
    if m == n {
        f(p);
        return;
    }
    let all = bits::full(m);
    let downs: Vec<u64> = (0..=all).filter(|&s| p.is_down_set(s)).collect();
    let ups: Vec<u64> = (0..=all).filter(|&s| p.is_up_set(s)).collect();
    for &d in &downs {
        // elements above every member of d
        let above_all = bits(d).fold(all, |acc, v| acc & p.above(v));
        for &u in &ups {
            if u & d != 0 || !bits::is_subset(u, above_all) {
                continue;
            }
            let mut up: Vec<u64> = p.up.clone();
            for v in bits(d) {
                up[v] |= 1 << m;
            }
            up.push(u);
            let mut down: Vec<u64> = p.down.clone();
            for v in bits(u) {
                down[v] |= 1 << m;
            }
            down.push(d);
            extend(&Poset { n: m + 1, up, down }, n, f);
        }
    }
}

/// A random poset: a random DAG along a random labeling, closed
/// transitively. `density` is the edge probability.
pub fn random_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut succ = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                succ[perm[i]] |= 1 << perm[j];
            }
        }
    }
    Poset::from_succ(succ)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_match_known_sequence() {
        let expected = [1u64, 1, 3, 19, 219, 4231];
        for (n, &count) in expected.iter().enumerate() {
            let mut c = 0u64;
            for_each_labeled_poset(n, &mut |p| {
                debug_assert_eq!(*p, Poset::from_succ(p.up.clone()));
                c += 1;
            });
            assert_eq!(c, count, "n={n}");
        }
    }

    #[test]
    fn random_posets_are_closed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_poset(8, 0.3, &mut rng);
            assert_eq!(p, Poset::from_succ(p.up.clone()));
        }
    }
}
