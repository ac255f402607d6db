use thiserror::Error;

/// Errors produced by data validation, parsing, and the solver.
///
/// Pair indices in messages are 1-based, matching the `(i, j)` convention
/// of the serialized formats.
#[derive(Debug, Error)]
pub enum MdsError {
    #[error("point count must be at least 3, got {0}")]
    TooFewPoints(usize),

    #[error("expected {expected} pairwise entries for n = {n}, got {actual}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        actual: usize,
    },

    #[error("dissimilarity for pair ({i}, {j}) is zero; the elastic loss is undefined there")]
    ZeroDissimilarity { i: usize, j: usize },

    #[error("dissimilarity for pair ({i}, {j}) is {value}; dissimilarities must be positive and finite")]
    InvalidDissimilarity { i: usize, j: usize, value: f64 },

    #[error("weight for pair ({i}, {j}) is {value}; weights must be non-negative and finite")]
    InvalidWeight { i: usize, j: usize, value: f64 },

    #[error("all weights are zero; at least one pair must carry positive weight")]
    AllWeightsZero,

    #[error("distance for pair ({i}, {j}) is zero; log-stress is undefined there")]
    ZeroDistance { i: usize, j: usize },

    #[error("weighted dissimilarity norm is zero")]
    ZeroNorm,

    #[error("coordinate ({i}, {k}) is {value}; coordinates must be finite")]
    InvalidCoordinate { i: usize, k: usize, value: f64 },

    #[error("dimensionality must be at least 1")]
    ZeroDimension,

    #[error("dimensionality {p} exceeds n - 1 = {max}")]
    DimensionTooLarge { p: usize, max: usize },

    #[error("data has {data_n} points but configuration has {config_n}")]
    PointCountMismatch { data_n: usize, config_n: usize },

    #[error("configuration is degenerate: every weighted pairwise distance is zero")]
    DegenerateConfiguration,

    #[error("linear solve failed: the weighted Laplacian system is singular (disconnected weight graph?)")]
    SingularSystem,

    #[error("stress became non-finite ({stress}) at iteration {iteration}")]
    NonFiniteStress { iteration: usize, stress: f64 },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown dataset '{name}'; valid names: {valid}")]
    UnknownDataset { name: String, valid: String },

    #[error("expected {expected} labels, got {actual}")]
    LabelCount { expected: usize, actual: usize },

    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

pub type Result<T> = std::result::Result<T, MdsError>;
