//! Human-inspectable result artifacts: Shepard diagram rows, configuration
//! export, all as plot-ready CSV text.

use crate::configuration::Configuration;
use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::pairs::pair_indices;
use crate::solver::SolveResult;

/// One pair of the Shepard diagram: observed dissimilarity, fitted
/// dissimilarity, configuration distance, and the ratio residual
/// 1 - d/delta_hat whose weighted squares sum to the elastic stress.
#[derive(Debug, Clone, PartialEq)]
pub struct ShepardRow {
    /// 1-based pair indices, i > j.
    pub i: usize,
    pub j: usize,
    pub delta: f64,
    pub dhat: f64,
    pub dist: f64,
    pub residual_ratio: f64,
}

/// One row per pair, sorted by observed dissimilarity (ties by fitted
/// value, then pair order, so the dhat column is non-decreasing for
/// ordinal solutions).
pub fn shepard_table(data: &DissimilarityData, result: &SolveResult) -> Vec<ShepardRow> {
    let dist = result.config.pair_distances();
    let mut rows: Vec<ShepardRow> = pair_indices(data.n())
        .enumerate()
        .map(|(k, (i, j))| ShepardRow {
            i: i + 1,
            j: j + 1,
            delta: data.delta()[k],
            dhat: result.delta_hat[k],
            dist: dist[k],
            residual_ratio: 1.0 - dist[k] / result.delta_hat[k],
        })
        .collect();
    rows.sort_by(|a, b| {
        a.delta
            .total_cmp(&b.delta)
            .then(a.dhat.total_cmp(&b.dhat))
            .then(a.j.cmp(&b.j))
            .then(a.i.cmp(&b.i))
    });
    rows
}

/// Render Shepard rows as CSV.
pub fn shepard_csv(rows: &[ShepardRow]) -> String {
    let mut out = String::from("pair_i,pair_j,delta,dhat,dist,residual_ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            r.i, r.j, r.delta, r.dhat, r.dist, r.residual_ratio
        ));
    }
    out
}

/// Export coordinates as CSV with columns label, dim1..dimp at full
/// precision. Missing labels are generated as P1..Pn.
pub fn export_configuration(config: &Configuration, labels: Option<&[String]>) -> Result<String> {
    let n = config.n();
    let p = config.p();
    if let Some(l) = labels {
        if l.len() != n {
            return Err(MdsError::LabelCount {
                expected: n,
                actual: l.len(),
            });
        }
    }
    let mut out = String::from("label");
    for k in 1..=p {
        out.push_str(&format!(",dim{k}"));
    }
    out.push('\n');
    for i in 0..n {
        match labels {
            Some(l) => out.push_str(&l[i]),
            None => out.push_str(&format!("P{}", i + 1)),
        }
        for k in 0..p {
            out.push_str(&format!(",{:.16e}", config.coords()[(i, k)]));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Parse a configuration CSV written by [`export_configuration`].
pub fn import_configuration(text: &str) -> Result<(Configuration, Vec<String>)> {
    let mut labels = Vec::new();
    let mut coords: Vec<f64> = Vec::new();
    let mut p = None;
    for (idx, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with("label,") {
            continue;
        }
        let tokens: Vec<&str> = t.split(',').collect();
        match p {
            None => p = Some(tokens.len() - 1),
            Some(p) if tokens.len() != p + 1 => {
                return Err(MdsError::Parse {
                    line: idx + 1,
                    column: tokens.len(),
                    message: format!("expected {} columns, found {}", p + 1, tokens.len()),
                })
            }
            _ => {}
        }
        labels.push(tokens[0].to_string());
        for (c, tok) in tokens[1..].iter().enumerate() {
            coords.push(tok.trim().parse::<f64>().map_err(|_| MdsError::Parse {
                line: idx + 1,
                column: c + 2,
                message: format!("expected a coordinate, found '{}'", tok.trim()),
            })?);
        }
    }
    let p = p.ok_or(MdsError::Parse {
        line: 1,
        column: 1,
        message: "empty configuration file".into(),
    })?;
    let n = labels.len();
    Ok((Configuration::from_rows(n, p, &coords)?, labels))
}
