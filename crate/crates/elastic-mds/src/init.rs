//! Starting configurations: classical (Torgerson) scaling followed by the
//! closed-form rescaling that is optimal for the elastic loss.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::pairs::pair_indices;

/// A Torgerson start together with the scale factor applied to it.
#[derive(Debug, Clone)]
pub struct ScaledInit {
    pub config: Configuration,
    pub lambda: f64,
}

/// Classical metric scaling.
///
/// Double-centers the squared dissimilarity matrix, takes the p largest
/// eigenpairs, and scales eigenvectors by the square roots of their
/// eigenvalues (negative eigenvalues clamp to zero, so non-Euclidean data
/// still yields a usable start). The sign of each column is fixed so that
/// its largest-magnitude entry is positive, which makes the output
/// deterministic across runs.
pub fn torgerson(data: &DissimilarityData, p: usize) -> Result<Configuration> {
    let n = data.n();
    if p == 0 {
        return Err(MdsError::ZeroDimension);
    }
    if p > n - 1 {
        return Err(MdsError::DimensionTooLarge { p, max: n - 1 });
    }

    // squared dissimilarities as a full symmetric matrix, zero diagonal
    let mut sq = DMatrix::<f64>::zeros(n, n);
    for (k, (i, j)) in pair_indices(n).enumerate() {
        let d2 = data.delta()[k] * data.delta()[k];
        sq[(i, j)] = d2;
        sq[(j, i)] = d2;
    }

    // B = -1/2 J sq J via row/column/grand means
    let nf = n as f64;
    let row_means: Vec<f64> = (0..n).map(|i| sq.row(i).sum() / nf).collect();
    let grand = row_means.iter().sum::<f64>() / nf;
    let mut b = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = -0.5 * (sq[(i, j)] - row_means[i] - row_means[j] + grand);
        }
    }

    let eig = SymmetricEigen::new(b);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &c| eig.eigenvalues[c].partial_cmp(&eig.eigenvalues[a]).unwrap());

    let mut coords = DMatrix::<f64>::zeros(n, p);
    for (c, &e) in idx.iter().take(p).enumerate() {
        let scale = eig.eigenvalues[e].max(0.0).sqrt();
        let col = eig.eigenvectors.column(e);
        // sign convention: largest-magnitude entry positive
        let mut arg = 0;
        for i in 1..n {
            if col[i].abs() > col[arg].abs() {
                arg = i;
            }
        }
        let sign = if col[arg] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            coords[(i, c)] = sign * scale * col[i];
        }
    }

    let mut config = Configuration::new(coords)?;
    config.center();
    Ok(config)
}

/// The scale factor minimizing elastic stress over uniform rescalings of a
/// configuration: lambda = sum(w d / delta) / sum(w d^2 / delta^2).
pub fn optimal_lambda(data: &DissimilarityData, config: &Configuration) -> Result<f64> {
    if data.n() != config.n() {
        return Err(MdsError::PointCountMismatch {
            data_n: data.n(),
            config_n: config.n(),
        });
    }
    let dist = config.pair_distances();
    let mut num = 0.0;
    let mut den = 0.0;
    for ((&delta, &w), &d) in data.delta().iter().zip(data.weights()).zip(&dist) {
        num += w / delta * d;
        den += w / (delta * delta) * d * d;
    }
    if den == 0.0 {
        return Err(MdsError::DegenerateConfiguration);
    }
    Ok(num / den)
}

/// Torgerson start rescaled by the optimal lambda.
pub fn initial_configuration(data: &DissimilarityData, p: usize) -> Result<ScaledInit> {
    let config = torgerson(data, p)?;
    let lambda = optimal_lambda(data, &config)?;
    Ok(ScaledInit {
        config: config.scaled(lambda),
        lambda,
    })
}
