//! Property tests for the numerical core.

use proptest::prelude::*;

use elastic_mds::{
    data_from_csv, data_to_csv, elastic_stress, ratio_form_stress, weighted_pava, Configuration,
    DissimilarityData,
};

/// Exhaustive minimization over every partition of the sequence into
/// consecutive blocks (weighted block means, feasibility-checked).
/// Independent of the pool-adjacent-violators path it checks.
fn exhaustive_isotonic(targets: &[f64], weights: &[f64]) -> Vec<f64> {
    let len = targets.len();
    assert!(len <= 8, "oracle is exponential");
    let mut best_cost = f64::INFINITY;
    let mut best_fit = vec![0.0; len];
    for mask in 0u32..1 << (len - 1) {
        let mut cuts = vec![0];
        for b in 0..len - 1 {
            if mask >> b & 1 == 1 {
                cuts.push(b + 1);
            }
        }
        cuts.push(len);
        let mut values = Vec::with_capacity(cuts.len() - 1);
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let wt: f64 = weights[a..b].iter().sum();
            let v = if wt > 0.0 {
                targets[a..b]
                    .iter()
                    .zip(&weights[a..b])
                    .map(|(t, w)| t * w)
                    .sum::<f64>()
                    / wt
            } else {
                targets[a..b].iter().sum::<f64>() / (b - a) as f64
            };
            values.push(v);
        }
        if values.windows(2).any(|w| w[0] > w[1] + 1e-15) {
            continue;
        }
        let mut cost = 0.0;
        let mut fit = vec![0.0; len];
        for (w, v) in cuts.windows(2).zip(&values) {
            for k in w[0]..w[1] {
                fit[k] = *v;
                cost += weights[k] * (targets[k] - v) * (targets[k] - v);
            }
        }
        if cost < best_cost {
            best_cost = cost;
            best_fit = fit;
        }
    }
    best_fit
}

proptest! {
    #[test]
    fn pava_output_is_monotone_and_within_hull(
        targets in prop::collection::vec(-50.0..50.0f64, 1..60),
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let weights: Vec<f64> = (0..targets.len())
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                0.05 + (state >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect();
        let fit = weighted_pava(&targets, &weights).unwrap();
        prop_assert!(fit.windows(2).all(|w| w[0] <= w[1] + 1e-12));
        let lo = targets.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = targets.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(fit.iter().all(|&v| v >= lo - 1e-9 && v <= hi + 1e-9));
        // projection is idempotent
        let again = weighted_pava(&fit, &weights).unwrap();
        for (a, b) in fit.iter().zip(&again) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn pava_matches_exhaustive_partition_oracle(
        targets in prop::collection::vec(-10.0..10.0f64, 1..=8),
        raw_weights in prop::collection::vec(0.05..5.0f64, 8),
    ) {
        let weights = &raw_weights[..targets.len()];
        let fit = weighted_pava(&targets, weights).unwrap();
        let oracle = exhaustive_isotonic(&targets, weights);
        for (a, b) in fit.iter().zip(&oracle) {
            prop_assert!((a - b).abs() < 1e-10, "pava {a} vs oracle {b}");
        }
    }

    #[test]
    fn order_is_a_sorting_bijection(
        delta in prop::collection::vec(0.01..100.0f64, 3..50),
    ) {
        // reshape to the largest complete triangle
        let mut n = 3;
        while (n + 1) * n / 2 <= delta.len() {
            n += 1;
        }
        let m = n * (n - 1) / 2;
        let data = DissimilarityData::new(n, delta[..m].to_vec()).unwrap();
        let order = data.order();
        let mut seen = vec![false; m];
        for &k in order {
            prop_assert!(!seen[k]);
            seen[k] = true;
        }
        let sorted: Vec<f64> = order.iter().map(|&k| data.delta()[k]).collect();
        prop_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn stress_forms_agree_and_scaling_is_free(
        coords in prop::collection::vec(-5.0..5.0f64, 12),
        delta in prop::collection::vec(0.05..10.0f64, 15),
        c in 0.01..50.0f64,
    ) {
        let config = Configuration::from_rows(6, 2, &coords).unwrap();
        let data = DissimilarityData::new(6, delta.clone()).unwrap();
        let a = elastic_stress(&data, &config).unwrap();
        let b = ratio_form_stress(&data, &config).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));

        let scaled = DissimilarityData::new(6, delta.iter().map(|d| c * d).collect()).unwrap();
        let s = elastic_stress(&scaled, &config.clone().scaled(c)).unwrap();
        prop_assert!((a - s).abs() <= 1e-12 * a.max(1.0));
    }

    #[test]
    fn serialized_data_round_trips_bit_exactly(
        delta in prop::collection::vec(1e-6..1e6f64, 10),
        weights in prop::collection::vec(0.0..10.0f64, 10),
    ) {
        prop_assume!(weights.iter().any(|&w| w > 0.0));
        let data = DissimilarityData::with_weights(5, delta, weights).unwrap();
        let back = data_from_csv(&data_to_csv(&data)).unwrap();
        prop_assert_eq!(back.delta(), data.delta());
        prop_assert_eq!(back.weights(), data.weights());
    }
}
