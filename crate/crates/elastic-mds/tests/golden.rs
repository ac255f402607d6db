//! Golden-value regression tests on the bundled datasets.
//!
//! The Ekman color fits are reproduced to all published digits and guard
//! the whole pipeline: data tables, preprocessing, the scaled Torgerson
//! start, the majorization step, tie handling in the monotone regression,
//! and the stopping rule. The Morse fits are looser: the published
//! confusion table has seen several transcriptions and the rank order of
//! its symmetrized entries moves the ordinal optimum by a few percent
//! (see the calibration note in the README).

use elastic_mds::{builtin_dataset, solve, Level, SolveOptions};

fn run(name: &str, level: Level) -> elastic_mds::SolveResult {
    let data = builtin_dataset(name).unwrap();
    solve(
        &data,
        &SolveOptions {
            level,
            ..Default::default()
        },
    )
    .unwrap()
}

#[test]
fn ekman_ratio_reproduces_published_stress() {
    let result = run("ekman", Level::Ratio);
    assert!(result.converged);
    assert!(
        (result.final_stress() - 2.3268637).abs() < 5e-8,
        "stress {:.7}",
        result.final_stress()
    );
    assert_eq!(result.iterations, 586);
}

#[test]
fn ekman_ordinal_reproduces_published_stress_and_log_stress() {
    let result = run("ekman", Level::Ordinal);
    assert!(result.converged);
    assert!(
        (result.final_stress() - 0.056998).abs() < 5e-7,
        "stress {:.7}",
        result.final_stress()
    );
    assert!(
        (result.report.log_stress - 0.0581521).abs() < 5e-7,
        "log-stress {:.7}",
        result.report.log_stress
    );
    assert_eq!(result.iterations, 437);
}

#[test]
fn morse_ratio_within_band() {
    let result = run("morse", Level::Ratio);
    assert!(result.converged);
    let rel = (result.final_stress() - 64.3828862).abs() / 64.3828862;
    assert!(rel < 0.05, "relative gap {rel:.4}");
}

#[test]
fn morse_ordinal_poor_fit_relationship() {
    // the bundled transcription lands below the published ordinal stress;
    // the robust property is the poor-fit gap between log and elastic
    let result = run("morse", Level::Ordinal);
    assert!(result.converged);
    let elastic = result.final_stress();
    assert!(elastic < 64.0, "ordinal should beat ratio, got {elastic}");
    assert!(
        result.report.log_stress > 1.2 * elastic,
        "log {} vs elastic {}",
        result.report.log_stress,
        elastic
    );
}
