//! Vertex sets as `u64` bitmasks.

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |m, i| m | (1u64 << i))
}

pub fn to_indices(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// All submasks of `mask`, including `0` and `mask` itself, in decreasing
/// numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

/// Keeps only the inclusion-minimal masks, sorted ascending.
pub fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| is_subset(k, s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_bits() {
        assert_eq!(to_indices(0b1011), vec![0, 1, 3]);
        assert_eq!(bits(0).count(), 0);
    }

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1101).count(), 8);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn minimal_family() {
        assert_eq!(minimal_sets(vec![0b11, 0b1, 0b110, 0b100, 0b1]), vec![0b1, 0b100]);
    }
}
