//! Shared inputs for the criterion benchmarks.

use checkers_core::GameSpec;

/// Square games `(k, k)` for each `k` in `sizes`.
pub fn square_games(sizes: &[usize]) -> Vec<GameSpec> {
    sizes
        .iter()
        .map(|&k| GameSpec::new(k, k).expect("sizes are positive"))
        .collect()
}

/// Games with a single white checker, where the solution count grows fastest.
pub fn single_white_games(blacks: &[usize]) -> Vec<GameSpec> {
    blacks
        .iter()
        .map(|&n| GameSpec::new(n, 1).expect("sizes are positive"))
        .collect()
}

/// `count` step indices spread evenly over `1..=len`, both ends included.
pub fn spread_indices(len: u64, count: u64) -> Vec<u64> {
    if count < 2 {
        return vec![1];
    }
    (0..count)
        .map(|k| 1 + k * (len - 1) / (count - 1))
        .collect()
}
