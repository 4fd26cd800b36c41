//! Shared setup for the criterion benchmarks.

use gyw::CartanData;

/// Ranks exercised by the benchmark suite.
pub fn ranks() -> Vec<CartanData> {
    (1..=3).map(|n| CartanData::new(n).unwrap()).collect()
}
