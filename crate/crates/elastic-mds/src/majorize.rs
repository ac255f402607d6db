//! One Guttman majorization step for the elastic loss at fixed fitted
//! dissimilarities.
//!
//! Rewriting the elastic loss as sum of (w/delta_hat^2)(delta_hat - d)^2
//! turns it into an ordinary weighted stress with effective weights
//! u = w/delta_hat^2, so the standard majorization update applies: the
//! quadratic touching the loss at X has minimizer V^+ B(X) X. The
//! pseudoinverse is never formed; with the centering constraint folded in,
//! (V + (1/n) 1 1^T) Y = B(X) X is solved by Cholesky and Y re-centered.
//! In ordinal mode delta_hat changes every iteration, so the factorization
//! is rebuilt per iteration there and reused across all iterations in
//! ratio mode.

use nalgebra::{Cholesky, DMatrix, Dyn};

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::pairs::{pair_at, pair_indices};

/// Effective weights, their Laplacian, and the factorization used to apply
/// its pseudoinverse.
pub struct MajorizationWorkspace {
    n: usize,
    u: Vec<f64>,
    v: DMatrix<f64>,
    chol: Cholesky<f64, Dyn>,
}

impl MajorizationWorkspace {
    /// Effective weights u_k = w_k / delta_hat_k^2.
    pub fn effective_weights(&self) -> &[f64] {
        &self.u
    }

    /// The weighted Laplacian V (zero row sums, PSD).
    pub fn laplacian(&self) -> &DMatrix<f64> {
        &self.v
    }
}

fn check_delta_hat(data: &DissimilarityData, delta_hat: &[f64]) -> Result<()> {
    if delta_hat.len() != data.m() {
        return Err(MdsError::LengthMismatch {
            n: data.n(),
            expected: data.m(),
            actual: delta_hat.len(),
        });
    }
    for (k, &d) in delta_hat.iter().enumerate() {
        if d == 0.0 {
            let (i, j) = pair_at(data.n(), k);
            return Err(MdsError::ZeroDissimilarity { i: i + 1, j: j + 1 });
        }
        if !d.is_finite() || d < 0.0 {
            let (i, j) = pair_at(data.n(), k);
            return Err(MdsError::InvalidDissimilarity {
                i: i + 1,
                j: j + 1,
                value: d,
            });
        }
    }
    Ok(())
}

/// Assemble the effective weights and factorize the shifted Laplacian.
pub fn build_workspace(
    data: &DissimilarityData,
    delta_hat: &[f64],
) -> Result<MajorizationWorkspace> {
    check_delta_hat(data, delta_hat)?;
    let n = data.n();
    let u: Vec<f64> = data
        .weights()
        .iter()
        .zip(delta_hat)
        .map(|(&w, &d)| w / (d * d))
        .collect();
    let mut v = DMatrix::<f64>::zeros(n, n);
    for (k, (i, j)) in pair_indices(n).enumerate() {
        v[(i, j)] -= u[k];
        v[(j, i)] -= u[k];
        v[(i, i)] += u[k];
        v[(j, j)] += u[k];
    }
    let shift = 1.0 / n as f64;
    let mut m = v.clone();
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] += shift;
        }
    }
    let chol = Cholesky::new(m).ok_or(MdsError::SingularSystem)?;
    Ok(MajorizationWorkspace { n, u, v, chol })
}

/// The Guttman transform X+ = V^+ B(X) X, centered.
///
/// Never increases the elastic stress evaluated at `delta_hat`. Pairs at
/// zero distance contribute nothing to B, the standard convention under
/// which the majorization inequality still holds.
pub fn guttman_update(
    ws: &MajorizationWorkspace,
    data: &DissimilarityData,
    delta_hat: &[f64],
    config: &Configuration,
) -> Result<Configuration> {
    check_delta_hat(data, delta_hat)?;
    if config.n() != ws.n {
        return Err(MdsError::PointCountMismatch {
            data_n: ws.n,
            config_n: config.n(),
        });
    }
    let n = ws.n;
    let dist = config.pair_distances();
    let mut b = DMatrix::<f64>::zeros(n, n);
    for (k, (i, j)) in pair_indices(n).enumerate() {
        if dist[k] > 0.0 {
            let t = ws.u[k] * delta_hat[k] / dist[k];
            b[(i, j)] -= t;
            b[(j, i)] -= t;
            b[(i, i)] += t;
            b[(j, j)] += t;
        }
    }
    let rhs = b * config.coords();
    let y = ws.chol.solve(&rhs);
    let mut updated = Configuration::new(y)?;
    updated.center();
    Ok(updated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stress::elastic_stress;

    fn lcg(seed: u64) -> impl FnMut() -> f64 {
        let mut state = seed;
        move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    #[test]
    fn unit_workspace_is_complete_graph_laplacian() {
        let data = DissimilarityData::new(3, vec![1.0, 1.0, 1.0]).unwrap();
        let ws = build_workspace(&data, &[1.0, 1.0, 1.0]).unwrap();
        let v = ws.laplacian();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { -1.0 };
                assert_eq!(v[(i, j)], want);
            }
        }
    }

    #[test]
    fn zero_weight_drops_edge_from_laplacian() {
        let data =
            DissimilarityData::with_weights(3, vec![1.0; 3], vec![1.0, 0.0, 1.0]).unwrap();
        let ws = build_workspace(&data, &[1.0; 3]).unwrap();
        let v = ws.laplacian();
        // pair index 1 is (3,1): that edge is absent
        assert_eq!(v[(2, 0)], 0.0);
        assert_eq!(v[(0, 0)], 1.0);
        assert_eq!(v[(2, 2)], 1.0);
        assert_eq!(v[(1, 1)], 2.0);
    }

    #[test]
    fn laplacian_row_sums_vanish() {
        let mut next = lcg(7);
        for _ in 0..20 {
            let n = 6;
            let m = n * (n - 1) / 2;
            let delta: Vec<f64> = (0..m).map(|_| 0.3 + 2.0 * next()).collect();
            let w: Vec<f64> = (0..m).map(|_| next() * 2.0).collect();
            let data = match DissimilarityData::with_weights(n, delta.clone(), w) {
                Ok(d) => d,
                Err(_) => continue,
            };
            let ws = build_workspace(&data, &delta).unwrap();
            for i in 0..n {
                assert!(ws.laplacian().row(i).sum().abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rejects_zero_delta_hat() {
        let data = DissimilarityData::new(3, vec![1.0; 3]).unwrap();
        assert!(build_workspace(&data, &[1.0, 0.0, 1.0]).is_err());
    }

    #[test]
    fn perfect_fit_is_a_fixed_point() {
        let h = 3f64.sqrt() / 2.0;
        let config = Configuration::from_rows(3, 2, &[0.0, 0.0, 1.0, 0.0, 0.5, h])
            .unwrap()
            .centered();
        let data = DissimilarityData::new(3, config.pair_distances()).unwrap();
        let ws = build_workspace(&data, data.delta()).unwrap();
        let next = guttman_update(&ws, &data, data.delta(), &config).unwrap();
        for (a, b) in next.coords().iter().zip(config.coords().iter()) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn stress_decreases_from_random_start_on_exact_data() {
        let target = Configuration::from_rows(4, 2, &[0.0, 0.0, 1.0, 0.2, 0.3, 1.1, 1.2, 0.9])
            .unwrap();
        let data = DissimilarityData::new(4, target.pair_distances()).unwrap();
        let start = Configuration::from_rows(4, 2, &[0.5, 0.1, -0.4, 0.8, 0.9, -0.2, -0.1, -0.6])
            .unwrap();
        let before = elastic_stress(&data, &start).unwrap();
        let ws = build_workspace(&data, data.delta()).unwrap();
        let after_cfg = guttman_update(&ws, &data, data.delta(), &start).unwrap();
        let after = elastic_stress(&data, &after_cfg).unwrap();
        assert!(after < before, "{after} !< {before}");
    }

    #[test]
    fn stress_never_increases_across_100_random_instances() {
        let mut next = lcg(42);
        for t in 0..100 {
            let n = 4 + (t % 7);
            let p = 1 + (t % 3);
            let m = n * (n - 1) / 2;
            let delta: Vec<f64> = (0..m).map(|_| 0.2 + 2.5 * next()).collect();
            let data = DissimilarityData::new(n, delta).unwrap();
            let coords: Vec<f64> = (0..n * p).map(|_| 4.0 * next() - 2.0).collect();
            let config = Configuration::from_rows(n, p, &coords).unwrap();
            let before = elastic_stress(&data, &config).unwrap();
            let ws = build_workspace(&data, data.delta()).unwrap();
            let updated = guttman_update(&ws, &data, data.delta(), &config).unwrap();
            let after = elastic_stress(&data, &updated).unwrap();
            assert!(after <= before + 1e-12, "ascent at trial {t}: {before} -> {after}");
        }
    }

    #[test]
    fn translation_invariant() {
        let data = DissimilarityData::new(4, vec![1.0, 2.0, 1.5, 2.5, 1.2, 2.2]).unwrap();
        let config = Configuration::from_rows(4, 2, &[0.1, 0.4, -1.1, 0.8, 0.9, -0.2, -0.5, -1.3])
            .unwrap();
        let shifted = Configuration::new(config.coords().map_with_location(|_, k, v| {
            v + if k == 0 { 3.25 } else { -1.5 }
        }))
        .unwrap();
        let ws = build_workspace(&data, data.delta()).unwrap();
        let a = guttman_update(&ws, &data, data.delta(), &config).unwrap();
        let b = guttman_update(&ws, &data, data.delta(), &shifted).unwrap();
        for (x, y) in a.coords().iter().zip(b.coords().iter()) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn update_moves_against_the_gradient() {
        // central-difference gradient of elastic stress has non-positive
        // inner product with the update direction whenever stress drops
        let mut next = lcg(1234);
        for _ in 0..10 {
            let n = 5;
            let p = 2;
            let m = n * (n - 1) / 2;
            let delta: Vec<f64> = (0..m).map(|_| 0.3 + 2.0 * next()).collect();
            let data = DissimilarityData::new(n, delta).unwrap();
            let coords: Vec<f64> = (0..n * p).map(|_| 3.0 * next() - 1.5).collect();
            let config = Configuration::from_rows(n, p, &coords).unwrap();
            let before = elastic_stress(&data, &config).unwrap();
            let ws = build_workspace(&data, data.delta()).unwrap();
            let updated = guttman_update(&ws, &data, data.delta(), &config).unwrap();
            let after = elastic_stress(&data, &updated).unwrap();
            if after >= before {
                continue;
            }
            let centered = config.clone().centered();
            let h = 1e-6;
            let mut inner = 0.0;
            for i in 0..n {
                for k in 0..p {
                    let mut plus = centered.coords().clone();
                    plus[(i, k)] += h;
                    let mut minus = centered.coords().clone();
                    minus[(i, k)] -= h;
                    let sp = elastic_stress(&data, &Configuration::new(plus).unwrap()).unwrap();
                    let sm = elastic_stress(&data, &Configuration::new(minus).unwrap()).unwrap();
                    let g = (sp - sm) / (2.0 * h);
                    inner += g * (updated.coords()[(i, k)] - centered.coords()[(i, k)]);
                }
            }
            assert!(inner <= 1e-6, "gradient inner product {inner}");
        }
    }
}
