//! Elastic multidimensional scaling.
//!
//! Fits n points in p dimensions to observed pairwise dissimilarities by
//! minimizing the ratio-normalized ("elastic") stress
//!
//! ```text
//! sigma(X, D) = sum over pairs of w * (delta - d(X))^2 / delta^2
//!             = sum over pairs of w * (1 - d(X)/delta)^2
//! ```
//!
//! which penalizes the deviation of each distance/dissimilarity ratio from
//! one, so absolute errors on large dissimilarities count less than the
//! same errors on small ones. Two measurement levels are supported:
//!
//! * **ratio** (metric): the dissimilarities are fixed; only the
//!   configuration moves. Each iteration is one Guttman majorization step
//!   with effective weights w/delta^2.
//! * **ordinal** (non-metric): fitted dissimilarities are optimized too,
//!   constrained to be monotone with the observed rank order. Each
//!   iteration alternates one majorization step with one weighted monotone
//!   regression, carried out exactly in the reciprocal space gamma =
//!   -1/delta.
//!
//! Solves start from the classical Torgerson configuration rescaled by the
//! closed-form optimal factor, iterate to a 1e-6 stress-change tolerance
//! (at most 1000 iterations by default), and are fully deterministic.
//!
//! ```
//! use elastic_mds::{builtin_dataset, solve, Level, SolveOptions};
//!
//! let data = builtin_dataset("ekman").unwrap();
//! let result = solve(&data, &SolveOptions { level: Level::Ordinal, ..Default::default() }).unwrap();
//! assert!(result.converged);
//! assert!(result.final_stress() < 0.06);
//! ```

pub mod configuration;
pub mod data;
pub mod datasets;
pub mod diagnostics;
pub mod error;
pub mod ingest;
pub mod init;
pub mod isotonic;
pub mod majorize;
pub mod pairs;
pub mod solver;
pub mod stress;

pub use configuration::Configuration;
pub use data::DissimilarityData;
pub use datasets::{builtin, builtin_dataset, builtin_names, Dataset};
pub use diagnostics::{export_configuration, import_configuration, shepard_csv, shepard_table, ShepardRow};
pub use error::{MdsError, Result};
pub use ingest::{
    data_from_csv, data_to_csv, parse_matrix, to_dissimilarities, MatrixFormat, MatrixKind,
    RawMatrix, Transform,
};
pub use init::{initial_configuration, optimal_lambda, torgerson, ScaledInit};
pub use isotonic::{update_delta, weighted_pava, IsotonicProblem};
pub use majorize::{build_workspace, guttman_update, MajorizationWorkspace};
pub use solver::{solve, stress_report, Level, SolveOptions, SolveResult};
pub use stress::{elastic_stress, kruskal_stress, log_stress, ratio_form_stress, StressReport};
