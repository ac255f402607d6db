//! Closed-form stress evaluations.
//!
//! The elastic loss divides each squared residual by the squared
//! dissimilarity of its pair, so a residual on a large dissimilarity is
//! forgiven more than the same residual on a small one. Two algebraically
//! identical routes are kept side by side ([`elastic_stress`] sums
//! w (delta - d)^2 / delta^2, [`ratio_form_stress`] sums w (1 - d/delta)^2)
//! so each can check the other. [`log_stress`] and [`kruskal_stress`] are
//! diagnostics, not optimization targets.

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::pairs::pair_at;

fn check_shapes(data: &DissimilarityData, config: &Configuration) -> Result<()> {
    if data.n() != config.n() {
        return Err(MdsError::PointCountMismatch {
            data_n: data.n(),
            config_n: config.n(),
        });
    }
    Ok(())
}

pub(crate) fn elastic_from_distances(delta: &[f64], weights: &[f64], dist: &[f64]) -> f64 {
    let mut s = 0.0;
    for ((&delta, &w), &d) in delta.iter().zip(weights).zip(dist) {
        let r = delta - d;
        s += w * r * r / (delta * delta);
    }
    s
}

/// Elastic stress: sum of w (delta - d)^2 / delta^2 over all pairs.
///
/// Zero exactly when every positively weighted pair has d = delta; at the
/// all-coincident configuration it equals the sum of the weights.
pub fn elastic_stress(data: &DissimilarityData, config: &Configuration) -> Result<f64> {
    check_shapes(data, config)?;
    let dist = config.pair_distances();
    Ok(elastic_from_distances(data.delta(), data.weights(), &dist))
}

/// The same loss written as squared deviations of the ratios d/delta from
/// one: sum of w (1 - d/delta)^2.
pub fn ratio_form_stress(data: &DissimilarityData, config: &Configuration) -> Result<f64> {
    check_shapes(data, config)?;
    let dist = config.pair_distances();
    let mut s = 0.0;
    for ((&delta, &w), &d) in data.delta().iter().zip(data.weights()).zip(&dist) {
        let r = 1.0 - d / delta;
        s += w * r * r;
    }
    Ok(s)
}

/// Logarithmic stress: sum of w (log delta - log d)^2.
///
/// Requires strictly positive distances; a zero distance is reported with
/// its pair, distinct from the zero-dissimilarity ingestion error.
pub fn log_stress(data: &DissimilarityData, config: &Configuration) -> Result<f64> {
    check_shapes(data, config)?;
    let dist = config.pair_distances();
    let mut s = 0.0;
    for (k, &d) in dist.iter().enumerate() {
        if d == 0.0 {
            let (i, j) = pair_at(data.n(), k);
            return Err(MdsError::ZeroDistance { i: i + 1, j: j + 1 });
        }
        let r = data.delta()[k].ln() - d.ln();
        s += data.weights()[k] * r * r;
    }
    Ok(s)
}

/// Kruskal-normalized stress: sum of w (delta - d)^2 over sum of w delta^2.
///
/// Diagnostic only; equals 1 at the all-coincident configuration.
pub fn kruskal_stress(data: &DissimilarityData, config: &Configuration) -> Result<f64> {
    check_shapes(data, config)?;
    let dist = config.pair_distances();
    let mut num = 0.0;
    let mut den = 0.0;
    for ((&delta, &w), &d) in data.delta().iter().zip(data.weights()).zip(&dist) {
        let r = delta - d;
        num += w * r * r;
        den += w * delta * delta;
    }
    if den == 0.0 {
        return Err(MdsError::ZeroNorm);
    }
    Ok(num / den)
}

/// All four stress values at one (data, configuration) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressReport {
    pub elastic: f64,
    pub ratio_form: f64,
    pub log_stress: f64,
    pub kruskal_normalized: f64,
}

impl StressReport {
    pub fn evaluate(data: &DissimilarityData, config: &Configuration) -> Result<Self> {
        Ok(Self {
            elastic: elastic_stress(data, config)?,
            ratio_form: ratio_form_stress(data, config)?,
            log_stress: log_stress(data, config)?,
            kruskal_normalized: kruskal_stress(data, config)?,
        })
    }
}
