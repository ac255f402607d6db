//! Benchmark-only crate; see `benches/solve.rs`.
//!
//! Shared helpers for the benches live here so the bench file stays small.

use elastic_mds::{builtin_dataset, DissimilarityData, Level, SolveOptions};

/// The (data, options) cells timed by the benches: both datasets at both
/// levels, in the default 2 dimensions.
pub fn cells() -> Vec<(String, DissimilarityData, SolveOptions)> {
    let mut out = Vec::new();
    for name in ["ekman", "morse"] {
        let data = builtin_dataset(name).expect("builtin dataset");
        for level in [Level::Ratio, Level::Ordinal] {
            let opts = SolveOptions {
                level,
                ..Default::default()
            };
            out.push((format!("{name}/{level}"), data.clone(), opts));
        }
    }
    out
}
