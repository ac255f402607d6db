//! The two classical datasets bundled with the crate.
//!
//! Both ship as plain-text CSV with a provenance comment so the golden
//! values in the test suite can be audited against the published tables.

use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::ingest::{parse_matrix, to_dissimilarities, MatrixFormat, MatrixKind, Transform};

const EKMAN_CSV: &str = include_str!("../data/ekman.csv");
const ROTHKOPF_CSV: &str = include_str!("../data/rothkopf.csv");

pub const EKMAN_CITATION: &str =
    "Ekman, G. (1954). Dimensions of Color Vision. Journal of Psychology 38, 467-474.";
pub const MORSE_CITATION: &str = "Rothkopf, E. Z. (1957). A Measure of Stimulus Similarity and \
     Errors in some Paired-associate Learning. J. Experimental Psychology 53, 94-101.";

/// A builtin dataset with its labels and source.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: &'static str,
    pub data: DissimilarityData,
    pub labels: Vec<String>,
    pub citation: &'static str,
    pub transform: Transform,
}

pub fn builtin_names() -> &'static [&'static str] {
    &["ekman", "morse"]
}

/// Load a builtin dataset with labels and citation.
///
/// `ekman` is the one-minus transform of the published 14-color similarity
/// table; `morse` symmetrizes the published 36-signal confusion percentages
/// and subtracts them from the largest entry of the table.
pub fn builtin(name: &str) -> Result<Dataset> {
    match name {
        "ekman" => {
            let raw = parse_matrix(EKMAN_CSV, MatrixFormat::CsvFull, MatrixKind::Similarity)?;
            let labels = raw.labels().expect("bundled ekman table has labels").to_vec();
            Ok(Dataset {
                name: "ekman",
                data: to_dissimilarities(&raw, Transform::OneMinus)?,
                labels,
                citation: EKMAN_CITATION,
                transform: Transform::OneMinus,
            })
        }
        "morse" => {
            let raw = parse_matrix(ROTHKOPF_CSV, MatrixFormat::CsvFull, MatrixKind::Similarity)?;
            let labels = raw.labels().expect("bundled morse table has labels").to_vec();
            Ok(Dataset {
                name: "morse",
                data: to_dissimilarities(&raw, Transform::MaxMinus)?,
                labels,
                citation: MORSE_CITATION,
                transform: Transform::MaxMinus,
            })
        }
        other => Err(MdsError::UnknownDataset {
            name: other.to_string(),
            valid: builtin_names().join(", "),
        }),
    }
}

/// Load just the dissimilarities of a builtin dataset.
pub fn builtin_dataset(name: &str) -> Result<DissimilarityData> {
    Ok(builtin(name)?.data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ekman_dimensions() {
        let ds = builtin("ekman").unwrap();
        assert_eq!(ds.data.n(), 14);
        assert_eq!(ds.data.m(), 91);
        assert_eq!(ds.labels.len(), 14);
        assert!(ds.data.delta().iter().all(|&d| d > 0.0));
        // 1 - 0.86 for the closest pair (445nm vs 434nm)
        assert!((ds.data.delta()[0] - 0.14).abs() < 1e-12);
    }

    #[test]
    fn morse_dimensions() {
        let ds = builtin("morse").unwrap();
        assert_eq!(ds.data.n(), 36);
        assert_eq!(ds.data.m(), 630);
        assert_eq!(ds.labels.len(), 36);
        assert!(ds.data.delta().iter().all(|&d| d > 0.0));
    }

    #[test]
    fn unknown_name_lists_valid_ones() {
        let err = builtin_dataset("colors").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("ekman") && msg.contains("morse"), "{msg}");
    }
}
