//! Lower-triangle pair indexing.
//!
//! Every length-m vector in this crate (dissimilarities, weights, distances)
//! uses one canonical pair order: column-major over the strict lower
//! triangle, i.e. (2,1), (3,1), ..., (n,1), (3,2), (4,2), ... in 1-based
//! terms. Helpers here are 0-based; only error messages and serialized
//! output use 1-based indices.

/// Number of unordered pairs, m = n(n-1)/2.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Iterator over (i, j) with i > j in canonical order.
pub fn pair_indices(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n.saturating_sub(1)).flat_map(move |j| (j + 1..n).map(move |i| (i, j)))
}

/// The (i, j) pair at position k of the canonical order.
pub fn pair_at(n: usize, k: usize) -> (usize, usize) {
    debug_assert!(k < pair_count(n));
    let mut start = 0;
    for j in 0..n - 1 {
        let len = n - 1 - j;
        if k < start + len {
            return (j + 1 + (k - start), j);
        }
        start += len;
    }
    unreachable!("pair index out of range")
}
