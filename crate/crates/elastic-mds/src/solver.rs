//! The outer alternating loop.
//!
//! Ratio mode holds the dissimilarities fixed and iterates majorization
//! updates only. Ordinal mode alternates one majorization update with one
//! monotone-regression update of the fitted dissimilarities; its first
//! majorization step runs against the observed dissimilarities, which is
//! also what the scaled Torgerson start is defined against. Stress is
//! recorded once per full iteration and iteration stops when the absolute
//! change in stress drops below `eps` or `max_iter` is reached.

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::init::initial_configuration;
use crate::isotonic::update_delta_from_distances;
use crate::majorize::{build_workspace, guttman_update};
use crate::stress::{elastic_from_distances, StressReport};

/// Measurement level of the fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Metric: dissimilarities are fixed numbers, only X is optimized.
    Ratio,
    /// Non-metric: fitted dissimilarities are optimized too, constrained to
    /// be monotone with the observed order.
    Ordinal,
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Level::Ratio => write!(f, "ratio"),
            Level::Ordinal => write!(f, "ordinal"),
        }
    }
}

/// Solve parameters.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub level: Level,
    pub dims: usize,
    pub max_iter: usize,
    /// Stress-change tolerance, absolute by default.
    pub eps: f64,
    /// Compare relative instead of absolute stress change.
    pub relative_eps: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            level: Level::Ordinal,
            dims: 2,
            max_iter: 1000,
            eps: 1e-6,
            relative_eps: false,
        }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        if self.dims == 0 {
            return Err(MdsError::ZeroDimension);
        }
        if self.max_iter < 1 {
            return Err(MdsError::InvalidOptions("max_iter must be at least 1".into()));
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return Err(MdsError::InvalidOptions("eps must be positive".into()));
        }
        Ok(())
    }
}

/// A finished solve.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub config: Configuration,
    /// Fitted dissimilarities; equals the observed ones in ratio mode.
    pub delta_hat: Vec<f64>,
    /// Elastic stress at the start and after every full iteration.
    pub stress_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub report: StressReport,
}

impl SolveResult {
    pub fn final_stress(&self) -> f64 {
        *self.stress_trace.last().unwrap()
    }
}

/// Minimize elastic stress from the scaled Torgerson start.
pub fn solve(data: &DissimilarityData, opts: &SolveOptions) -> Result<SolveResult> {
    opts.validate()?;
    let ordinal = opts.level == Level::Ordinal;

    let init = initial_configuration(data, opts.dims)?;
    let mut config = init.config;
    let mut delta_hat = data.delta().to_vec();
    let mut workspace = build_workspace(data, &delta_hat)?;

    let mut dist = config.pair_distances();
    let mut stress_old = elastic_from_distances(&delta_hat, data.weights(), &dist);
    if !stress_old.is_finite() {
        return Err(MdsError::NonFiniteStress {
            iteration: 0,
            stress: stress_old,
        });
    }
    let mut trace = vec![stress_old];
    let mut iterations = 1;
    let converged;

    loop {
        // the fitted dissimilarities moved last iteration, so the
        // effective weights and their factorization are stale
        if ordinal && iterations > 1 {
            workspace = build_workspace(data, &delta_hat)?;
        }
        config = guttman_update(&workspace, data, &delta_hat, &config)?;
        dist = config.pair_distances();
        if ordinal {
            delta_hat = update_delta_from_distances(data, &dist)?;
        }
        let stress_new = elastic_from_distances(&delta_hat, data.weights(), &dist);
        if !stress_new.is_finite() {
            return Err(MdsError::NonFiniteStress {
                iteration: iterations,
                stress: stress_new,
            });
        }
        trace.push(stress_new);
        let change = if opts.relative_eps {
            (stress_old - stress_new).abs() / stress_old.abs().max(f64::MIN_POSITIVE)
        } else {
            (stress_old - stress_new).abs()
        };
        if iterations == opts.max_iter || change < opts.eps {
            converged = change < opts.eps;
            break;
        }
        iterations += 1;
        stress_old = stress_new;
    }

    let fitted = data.with_delta(delta_hat.clone())?;
    let report = StressReport::evaluate(&fitted, &config)?;
    Ok(SolveResult {
        config,
        delta_hat,
        stress_trace: trace,
        iterations,
        converged,
        report,
    })
}

/// All four stress diagnostics at the solution; ordinal solutions are
/// evaluated at their fitted dissimilarities.
pub fn stress_report(data: &DissimilarityData, result: &SolveResult) -> Result<StressReport> {
    let fitted = data.with_delta(result.delta_hat.clone())?;
    StressReport::evaluate(&fitted, &result.config)
}
