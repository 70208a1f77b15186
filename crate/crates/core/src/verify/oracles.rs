//! Brute-force oracles that share no code with the pattern machinery.

use std::collections::BTreeSet;

use crate::weights::SlWeight;

/// Cells `(row, col)` of a Young diagram.
fn cells(rows: &[u64]) -> BTreeSet<(usize, u64)> {
    rows.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect()
}

/// Classical Pieri rule read as a horizontal strip: `1` when for some `c`
/// the diagram of `(η*₁ + c, ..., η*_{m-1} + c, c)` is the diagram of
/// `(λ, 0)` plus `r` boxes, no two in the same column.
pub fn lr_strip_oracle(lambda: &SlWeight, r: u64, eta: &SlWeight) -> u8 {
    let m = lambda.rank();
    let mut inner: Vec<u64> = lambda.entries().to_vec();
    inner.push(0);
    let small = cells(&inner);
    let eta_star = eta.dual();
    let target = inner.iter().sum::<u64>() + r;
    for c in 0..=target {
        let mut outer: Vec<u64> = eta_star.entries().iter().map(|&e| e + c).collect();
        outer.push(c);
        if outer.iter().sum::<u64>() != target {
            continue;
        }
        let big = cells(&outer);
        if !small.is_subset(&big) {
            continue;
        }
        let strip: Vec<u64> = big.difference(&small).map(|&(_, col)| col).collect();
        let columns: BTreeSet<u64> = strip.iter().copied().collect();
        if columns.len() == strip.len() {
            debug_assert_eq!(outer.len(), m);
            return 1;
        }
    }
    0
}

/// Three-point `sl₂` fusion at level `k`.
fn fusion(a: u64, b: u64, c: u64, k: u64) -> u64 {
    let ok = (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b && a + b + c <= 2 * k;
    u64::from(ok)
}

/// `sl₂` conformal block dimension for legs `weights` (in caterpillar order)
/// at level `k`, composed from three-point fusion numbers.
pub fn sl2_fusion_oracle(weights: &[u64], k: u64) -> u64 {
    let n = weights.len();
    if n < 3 {
        let mut padded = weights.to_vec();
        padded.resize(3, 0);
        return sl2_fusion_oracle(&padded, k);
    }
    if n == 3 {
        return fusion(weights[0], weights[1], weights[2], k);
    }
    // counts[j]: ways to reach internal label j.
    let mut counts: Vec<u64> = (0..=k).map(|j| fusion(weights[0], weights[1], j, k)).collect();
    for &w in &weights[2..n - 2] {
        counts = (0..=k).map(|j2| (0..=k).map(|j| counts[j as usize] * fusion(j, w, j2, k)).sum()).collect();
    }
    (0..=k).map(|j| counts[j as usize] * fusion(j, weights[n - 2], weights[n - 1], k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(m: usize, e: &[u64]) -> SlWeight {
        SlWeight::new(m, e.to_vec()).unwrap()
    }

    #[test]
    fn strip_examples() {
        assert_eq!(lr_strip_oracle(&sl(3, &[1, 0]), 1, &sl(3, &[2, 2])), 1);
        assert_eq!(lr_strip_oracle(&sl(3, &[1, 0]), 2, &sl(3, &[1, 0])), 0);
        for l in [sl(3, &[2, 1]), sl(4, &[3, 1, 1]), sl(3, &[0, 0])] {
            assert_eq!(lr_strip_oracle(&l, 0, &l.dual()), 1);
            for e in [sl(l.rank(), &vec![1; l.rank() - 1]), SlWeight::zero(l.rank())] {
                if e != l.dual() {
                    assert_eq!(lr_strip_oracle(&l, 0, &e), 0);
                }
            }
        }
    }

    #[test]
    fn fusion_examples() {
        assert_eq!(sl2_fusion_oracle(&[1, 1, 1, 1], 1), 1);
        assert_eq!(sl2_fusion_oracle(&[1, 1, 1, 1], 2), 2);
        assert_eq!(sl2_fusion_oracle(&[1, 1, 1, 1], 5), 2);
        assert_eq!(sl2_fusion_oracle(&[1, 1, 1, 0], 3), 0);
        assert_eq!(sl2_fusion_oracle(&[2, 1, 1], 1), 0);
        assert_eq!(sl2_fusion_oracle(&[2, 1, 1], 2), 1);
    }
}
