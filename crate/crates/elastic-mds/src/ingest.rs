//! Parsing of dissimilarity inputs and conversion to canonical form.
//!
//! Two text formats are accepted: a full square CSV matrix with an optional
//! label header, and triangle-rows text where line i carries the i entries
//! of lower-triangle row i+1 (a leading "0" line with zero-terminated rows
//! is recognized as the variant that includes the diagonal). Lines starting
//! with '#' are comments. Asymmetric matrices are symmetrized by averaging,
//! with a warning recorded, since the loss is defined on unordered pairs.

use nalgebra::DMatrix;

use crate::data::DissimilarityData;
use crate::error::{MdsError, Result};
use crate::pairs::{pair_at, pair_count, pair_indices};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Similarity,
    Dissimilarity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    /// Full square matrix, comma-separated, optional label header row.
    CsvFull,
    /// One row of the lower triangle per line, comma- or whitespace-separated.
    TriangleRows,
}

/// Conversion from raw entries to dissimilarities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// Entries are already dissimilarities.
    Identity,
    /// delta = 1 - s, for similarities on a unit scale.
    OneMinus,
    /// delta = max - s, where max is the largest entry of the whole matrix
    /// (diagonal included, which keeps confusion-style data positive).
    MaxMinus,
}

impl Transform {
    pub fn name(&self) -> &'static str {
        match self {
            Transform::Identity => "identity",
            Transform::OneMinus => "one-minus",
            Transform::MaxMinus => "max-minus",
        }
    }
}

/// A parsed, symmetrized square matrix, before conversion to
/// dissimilarities.
#[derive(Debug, Clone)]
pub struct RawMatrix {
    n: usize,
    entries: DMatrix<f64>,
    kind: MatrixKind,
    labels: Option<Vec<String>>,
    warnings: Vec<String>,
}

impl RawMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

fn parse_token(tok: &str, line: usize, column: usize) -> Result<f64> {
    tok.trim().parse::<f64>().map_err(|_| MdsError::Parse {
        line,
        column,
        message: format!("expected a number, found '{}'", tok.trim()),
    })
}

struct DataLine<'a> {
    number: usize,
    text: &'a str,
}

fn data_lines(text: &str) -> Vec<DataLine<'_>> {
    text.lines()
        .enumerate()
        .map(|(idx, l)| DataLine {
            number: idx + 1,
            text: l,
        })
        .filter(|l| {
            let t = l.text.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect()
}

/// Parse matrix text in the given format.
pub fn parse_matrix(text: &str, format: MatrixFormat, kind: MatrixKind) -> Result<RawMatrix> {
    match format {
        MatrixFormat::CsvFull => parse_csv_full(text, kind),
        MatrixFormat::TriangleRows => parse_triangle_rows(text, kind),
    }
}

fn parse_csv_full(text: &str, kind: MatrixKind) -> Result<RawMatrix> {
    let lines = data_lines(text);
    if lines.is_empty() {
        return Err(MdsError::Parse {
            line: 1,
            column: 1,
            message: "empty input".into(),
        });
    }

    // a first row with any non-numeric token is a label header
    let first_tokens: Vec<&str> = lines[0].text.split(',').collect();
    let has_header = first_tokens
        .iter()
        .any(|t| t.trim().parse::<f64>().is_err());
    let (labels, rows) = if has_header {
        let labels: Vec<String> = first_tokens.iter().map(|t| t.trim().to_string()).collect();
        (Some(labels), &lines[1..])
    } else {
        (None, &lines[..])
    };

    let n = rows.len();
    if n < 3 {
        return Err(MdsError::Parse {
            line: rows.last().map(|l| l.number).unwrap_or(1),
            column: 1,
            message: format!("need at least 3 rows, found {n}"),
        });
    }
    if let Some(ref l) = labels {
        if l.len() != n {
            return Err(MdsError::LabelCount {
                expected: n,
                actual: l.len(),
            });
        }
    }

    let mut entries = DMatrix::<f64>::zeros(n, n);
    for (r, line) in rows.iter().enumerate() {
        let tokens: Vec<&str> = line.text.split(',').collect();
        if tokens.len() != n {
            return Err(MdsError::Parse {
                line: line.number,
                column: tokens.len().min(n) + 1,
                message: format!("expected {n} entries in a square matrix row, found {}", tokens.len()),
            });
        }
        for (c, tok) in tokens.iter().enumerate() {
            entries[(r, c)] = parse_token(tok, line.number, c + 1)?;
        }
    }
    Ok(finish_matrix(entries, kind, labels))
}

fn parse_triangle_rows(text: &str, kind: MatrixKind) -> Result<RawMatrix> {
    let lines = data_lines(text);
    let rows = lines.len();
    if rows < 2 {
        return Err(MdsError::Parse {
            line: lines.last().map(|l| l.number).unwrap_or(1),
            column: 1,
            message: format!("need at least 2 triangle rows, found {rows}"),
        });
    }

    let mut values: Vec<Vec<f64>> = Vec::with_capacity(rows);
    for (r, line) in lines.iter().enumerate() {
        let tokens: Vec<&str> = line
            .text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.trim().is_empty())
            .collect();
        if tokens.len() != r + 1 {
            return Err(MdsError::Parse {
                line: line.number,
                column: tokens.len().min(r + 1) + 1,
                message: format!(
                    "ragged triangle: row {} should hold {} entries, found {}",
                    r + 1,
                    r + 1,
                    tokens.len()
                ),
            });
        }
        let mut row = Vec::with_capacity(tokens.len());
        for (c, tok) in tokens.iter().enumerate() {
            row.push(parse_token(tok, line.number, c + 1)?);
        }
        values.push(row);
    }

    // shape-forced diagonal detection: a single 0 on the first line with
    // every row 0-terminated means the triangle includes the diagonal
    let with_diagonal = values[0][0] == 0.0 && values.iter().all(|row| *row.last().unwrap() == 0.0);
    let n = if with_diagonal { rows } else { rows + 1 };
    if n < 3 {
        return Err(MdsError::Parse {
            line: lines.last().unwrap().number,
            column: 1,
            message: format!("need at least 3 points, found {n}"),
        });
    }

    let mut entries = DMatrix::<f64>::zeros(n, n);
    for (r, row) in values.iter().enumerate() {
        let i = if with_diagonal { r } else { r + 1 };
        let off_diag = if with_diagonal { &row[..row.len() - 1] } else { &row[..] };
        for (j, &v) in off_diag.iter().enumerate() {
            entries[(i, j)] = v;
            entries[(j, i)] = v;
        }
    }
    Ok(finish_matrix(entries, kind, None))
}

fn finish_matrix(mut entries: DMatrix<f64>, kind: MatrixKind, labels: Option<Vec<String>>) -> RawMatrix {
    let n = entries.nrows();
    let mut warnings = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_pair = (0, 0);
    for (i, j) in pair_indices(n) {
        let gap = (entries[(i, j)] - entries[(j, i)]).abs();
        if gap > worst {
            worst = gap;
            worst_pair = (i + 1, j + 1);
        }
    }
    if worst > 0.0 {
        for (i, j) in pair_indices(n) {
            let avg = 0.5 * (entries[(i, j)] + entries[(j, i)]);
            entries[(i, j)] = avg;
            entries[(j, i)] = avg;
        }
        warnings.push(format!(
            "asymmetric matrix symmetrized by averaging; largest gap {worst} at pair ({}, {})",
            worst_pair.0, worst_pair.1
        ));
    }
    RawMatrix {
        n,
        entries,
        kind,
        labels,
        warnings,
    }
}

/// Convert a raw matrix to validated dissimilarities (unit weights).
///
/// The diagonal never produces an entry. Any transformed value that is not
/// strictly positive is rejected with the offending pair named.
pub fn to_dissimilarities(raw: &RawMatrix, transform: Transform) -> Result<DissimilarityData> {
    let n = raw.n;
    let anchor = match transform {
        Transform::MaxMinus => raw
            .entries
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max),
        _ => 0.0,
    };
    let mut delta = Vec::with_capacity(pair_count(n));
    for (i, j) in pair_indices(n) {
        let s = raw.entries[(i, j)];
        let d = match transform {
            Transform::Identity => s,
            Transform::OneMinus => 1.0 - s,
            Transform::MaxMinus => anchor - s,
        };
        delta.push(d);
    }
    DissimilarityData::new(n, delta)
}

const SERIAL_HEADER: &str = "pair_i,pair_j,delta,weight";

/// Serialize to CSV with columns pair_i, pair_j, delta, weight (1-based
/// pairs, full 17-significant-digit precision so parsing it back is
/// bit-exact).
pub fn data_to_csv(data: &DissimilarityData) -> String {
    let mut out = String::from(SERIAL_HEADER);
    out.push('\n');
    for (k, (i, j)) in pair_indices(data.n()).enumerate() {
        out.push_str(&format!(
            "{},{},{:.16e},{:.16e}\n",
            i + 1,
            j + 1,
            data.delta()[k],
            data.weights()[k]
        ));
    }
    out
}

/// Parse the serialization produced by [`data_to_csv`].
pub fn data_from_csv(text: &str) -> Result<DissimilarityData> {
    let lines = data_lines(text);
    let mut rows = Vec::new();
    for line in &lines {
        if line.text.trim() == SERIAL_HEADER {
            continue;
        }
        let tokens: Vec<&str> = line.text.split(',').collect();
        if tokens.len() != 4 {
            return Err(MdsError::Parse {
                line: line.number,
                column: tokens.len() + 1,
                message: format!("expected 4 columns (pair_i,pair_j,delta,weight), found {}", tokens.len()),
            });
        }
        let i: usize = tokens[0].trim().parse().map_err(|_| MdsError::Parse {
            line: line.number,
            column: 1,
            message: format!("expected a pair index, found '{}'", tokens[0].trim()),
        })?;
        let j: usize = tokens[1].trim().parse().map_err(|_| MdsError::Parse {
            line: line.number,
            column: 2,
            message: format!("expected a pair index, found '{}'", tokens[1].trim()),
        })?;
        let d = parse_token(tokens[2], line.number, 3)?;
        let w = parse_token(tokens[3], line.number, 4)?;
        rows.push((i, j, d, w, line.number));
    }

    let m = rows.len();
    // m = n(n-1)/2 determines n
    let mut n = 3;
    while pair_count(n) < m {
        n += 1;
    }
    if pair_count(n) != m {
        return Err(MdsError::Parse {
            line: lines.last().map(|l| l.number).unwrap_or(1),
            column: 1,
            message: format!("{m} data rows do not form a complete lower triangle"),
        });
    }
    let mut delta = vec![f64::NAN; m];
    let mut weights = vec![f64::NAN; m];
    for &(i, j, d, w, line) in &rows {
        if i <= j || i > n || j == 0 {
            return Err(MdsError::Parse {
                line,
                column: 1,
                message: format!("pair ({i}, {j}) is not a lower-triangle pair for n = {n}"),
            });
        }
        let k = pair_indices_position(n, i - 1, j - 1);
        delta[k] = d;
        weights[k] = w;
    }
    for (k, &d) in delta.iter().enumerate() {
        if d.is_nan() {
            let (i, j) = pair_at(n, k);
            return Err(MdsError::Parse {
                line: lines.last().map(|l| l.number).unwrap_or(1),
                column: 1,
                message: format!("pair ({}, {}) is missing", i + 1, j + 1),
            });
        }
    }
    DissimilarityData::with_weights(n, delta, weights)
}

fn pair_indices_position(n: usize, i: usize, j: usize) -> usize {
    // offset of column j plus the position of i within it
    let before: usize = (0..j).map(|t| n - 1 - t).sum();
    before + (i - j - 1)
}
