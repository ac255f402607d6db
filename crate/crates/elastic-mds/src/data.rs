//! Observed dissimilarities with weights and the rank order used by
//! ordinal fitting.

use crate::error::{MdsError, Result};
use crate::pairs::{pair_at, pair_count};

/// A validated set of pairwise dissimilarities.
///
/// Holds the lower-triangle vector of m = n(n-1)/2 dissimilarities in
/// canonical pair order, per-pair weights (all ones by default), and a
/// stable permutation sorting the dissimilarities ascending. Construction
/// rejects zero or negative dissimilarities outright: the elastic loss
/// divides by the squared dissimilarity of each pair.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityData {
    n: usize,
    delta: Vec<f64>,
    weights: Vec<f64>,
    order: Vec<usize>,
}

impl DissimilarityData {
    /// Build from dissimilarities with unit weights.
    pub fn new(n: usize, delta: Vec<f64>) -> Result<Self> {
        let m = delta.len();
        Self::with_weights(n, delta, vec![1.0; m])
    }

    /// Build from dissimilarities and explicit weights.
    pub fn with_weights(n: usize, delta: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if n < 3 {
            return Err(MdsError::TooFewPoints(n));
        }
        let m = pair_count(n);
        if delta.len() != m {
            return Err(MdsError::LengthMismatch {
                n,
                expected: m,
                actual: delta.len(),
            });
        }
        if weights.len() != m {
            return Err(MdsError::LengthMismatch {
                n,
                expected: m,
                actual: weights.len(),
            });
        }
        for (k, &d) in delta.iter().enumerate() {
            let (i, j) = pair_at(n, k);
            if d == 0.0 {
                return Err(MdsError::ZeroDissimilarity { i: i + 1, j: j + 1 });
            }
            if !d.is_finite() || d < 0.0 {
                return Err(MdsError::InvalidDissimilarity {
                    i: i + 1,
                    j: j + 1,
                    value: d,
                });
            }
        }
        for (k, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                let (i, j) = pair_at(n, k);
                return Err(MdsError::InvalidWeight {
                    i: i + 1,
                    j: j + 1,
                    value: w,
                });
            }
        }
        if weights.iter().all(|&w| w == 0.0) {
            return Err(MdsError::AllWeightsZero);
        }
        let mut order: Vec<usize> = (0..m).collect();
        // stable: tied dissimilarities stay grouped in pair-index order
        order.sort_by(|&a, &b| delta[a].partial_cmp(&delta[b]).unwrap());
        Ok(Self {
            n,
            delta,
            weights,
            order,
        })
    }

    /// Same weights and point count, different dissimilarity values.
    pub fn with_delta(&self, delta: Vec<f64>) -> Result<Self> {
        Self::with_weights(self.n, delta, self.weights.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of pairs, m = n(n-1)/2.
    pub fn m(&self) -> usize {
        self.delta.len()
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Permutation of 0..m sorting `delta` ascending, ties grouped stably.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn sum_weights(&self) -> f64 {
        self.weights.iter().sum()
    }
}
