//! Input families shared by the benchmarks.

use kpieri_core::weights::all_sl_weights;
use kpieri_core::SlWeight;

/// Chain shapes `(m, a, b)` used across the benchmarks.
pub const SHAPES: [(usize, usize, usize); 4] = [(2, 3, 3), (3, 2, 2), (3, 3, 3), (4, 3, 2)];

/// Legs `(r, s)` of increasing size for the dimension counts.
pub fn leg_family() -> Vec<(usize, Vec<u64>, Vec<u64>)> {
    vec![
        (3, vec![1, 1], vec![1, 1]),
        (3, vec![2, 2, 1], vec![1, 2, 2]),
        (3, vec![3, 3, 3, 3], vec![3, 3, 3]),
        (4, vec![2, 2, 2, 2], vec![2, 2, 2, 2]),
    ]
}

/// All `SL_m` weights with entries at most `bound`.
pub fn weight_grid(m: usize, bound: u64) -> Vec<SlWeight> {
    all_sl_weights(m, bound)
}
