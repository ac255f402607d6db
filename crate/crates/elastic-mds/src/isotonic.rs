//! Weighted monotone regression and the fitted-dissimilarity update.
//!
//! Minimizing the elastic loss over monotone dissimilarities at fixed X is
//! exact in the reciprocal space gamma = -1/delta: with targets
//! c = -1/d(X) and weights w d^2(X) the loss equals
//! sum of w d^2 (gamma - c)^2 term by term, so one weighted isotonic
//! regression followed by delta_hat = -1/gamma_hat solves the subproblem.
//! Ties in the observed dissimilarities are handled by the primary
//! approach: pairs with equal delta may receive different fitted values,
//! realized by sorting each tie block by ascending target before the
//! regression (which makes the within-block ordering cost-free).

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};

/// Relative floor applied to distances before forming reciprocal targets.
const DISTANCE_FLOOR: f64 = 1e-10;

/// Weighted pool-adjacent-violators.
///
/// Returns the non-decreasing vector minimizing the weighted sum of squared
/// deviations from `targets`. Single pass with a block stack, linear time;
/// pooled blocks carry the weighted mean of their targets.
pub fn weighted_pava(targets: &[f64], weights: &[f64]) -> Result<Vec<f64>> {
    if targets.len() != weights.len() {
        return Err(MdsError::InvalidOptions(format!(
            "targets ({}) and weights ({}) differ in length",
            targets.len(),
            weights.len()
        )));
    }
    if weights.iter().all(|&w| w == 0.0) {
        return Err(MdsError::AllWeightsZero);
    }

    let m = targets.len();
    let mut value = Vec::with_capacity(m);
    let mut weight = Vec::with_capacity(m);
    let mut count: Vec<usize> = Vec::with_capacity(m);
    for k in 0..m {
        value.push(targets[k]);
        weight.push(weights[k]);
        count.push(1);
        while value.len() > 1 && value[value.len() - 2] > value[value.len() - 1] {
            let (v2, w2, c2) = (value.pop().unwrap(), weight.pop().unwrap(), count.pop().unwrap());
            let last = value.len() - 1;
            let wt = weight[last] + w2;
            // a block of all-zero weight pools to the plain mean
            value[last] = if wt > 0.0 {
                (value[last] * weight[last] + v2 * w2) / wt
            } else {
                0.5 * (value[last] + v2)
            };
            weight[last] = wt;
            count[last] += c2;
        }
    }

    let mut out = Vec::with_capacity(m);
    for (v, c) in value.iter().zip(&count) {
        out.extend(std::iter::repeat_n(*v, *c));
    }
    Ok(out)
}

/// The monotone regression instance for one fitted-dissimilarity update:
/// reciprocal targets, their weights, the evaluation order, and the tie
/// blocks of the observed dissimilarities.
#[derive(Debug, Clone)]
pub struct IsotonicProblem {
    /// c_k = -1/d_k in pair-index order.
    pub targets: Vec<f64>,
    /// w_k d_k^2 in pair-index order.
    pub weights: Vec<f64>,
    /// Sorting permutation: ascending observed delta, ties broken by
    /// ascending target.
    pub order: Vec<usize>,
    /// Half-open ranges of `order` positions with equal observed delta.
    pub tie_blocks: Vec<(usize, usize)>,
}

impl IsotonicProblem {
    pub(crate) fn from_distances(data: &DissimilarityData, dist: &[f64]) -> Result<Self> {
        let max_d = dist.iter().cloned().fold(0.0f64, f64::max);
        if max_d == 0.0 {
            return Err(MdsError::DegenerateConfiguration);
        }
        let floor = DISTANCE_FLOOR * max_d;
        let mut targets = Vec::with_capacity(dist.len());
        let mut weights = Vec::with_capacity(dist.len());
        for (k, &d) in dist.iter().enumerate() {
            let d = d.max(floor);
            targets.push(-1.0 / d);
            weights.push(data.weights()[k] * d * d);
        }

        // tie blocks of the observed delta along the data's stable order
        let mut order = data.order().to_vec();
        let mut tie_blocks = Vec::new();
        let delta = data.delta();
        let mut start = 0;
        while start < order.len() {
            let mut end = start + 1;
            while end < order.len() && delta[order[end]] == delta[order[start]] {
                end += 1;
            }
            if end - start > 1 {
                order[start..end].sort_by(|&a, &b| targets[a].total_cmp(&targets[b]));
            }
            tie_blocks.push((start, end));
            start = end;
        }
        Ok(Self {
            targets,
            weights,
            order,
            tie_blocks,
        })
    }

    /// Run the regression; returns gamma_hat in pair-index order.
    pub fn solve(&self) -> Result<Vec<f64>> {
        let permuted_t: Vec<f64> = self.order.iter().map(|&k| self.targets[k]).collect();
        let permuted_w: Vec<f64> = self.order.iter().map(|&k| self.weights[k]).collect();
        let fitted = weighted_pava(&permuted_t, &permuted_w)?;
        let mut gamma = vec![0.0; fitted.len()];
        for (pos, &k) in self.order.iter().enumerate() {
            gamma[k] = fitted[pos];
        }
        Ok(gamma)
    }
}

/// Optimal monotone fitted dissimilarities for a fixed configuration.
///
/// Distances are clamped below at 1e-10 times the largest distance before
/// the reciprocal transform, so coincident points stay finite.
pub fn update_delta(data: &DissimilarityData, config: &Configuration) -> Result<Vec<f64>> {
    if data.n() != config.n() {
        return Err(MdsError::PointCountMismatch {
            data_n: data.n(),
            config_n: config.n(),
        });
    }
    update_delta_from_distances(data, &config.pair_distances())
}

pub(crate) fn update_delta_from_distances(
    data: &DissimilarityData,
    dist: &[f64],
) -> Result<Vec<f64>> {
    let problem = IsotonicProblem::from_distances(data, dist)?;
    let gamma = problem.solve()?;
    // targets are strictly negative and pooling stays within their hull,
    // so every gamma is negative and the back-transform is positive
    Ok(gamma.iter().map(|&g| -1.0 / g).collect())
}
