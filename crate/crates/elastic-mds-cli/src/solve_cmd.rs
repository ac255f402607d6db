use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use elastic_mds::{
    builtin, export_configuration, parse_matrix, shepard_csv, shepard_table, solve,
    to_dissimilarities, DissimilarityData, Level, MatrixFormat, MatrixKind, SolveOptions,
    SolveResult, Transform,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LevelArg {
    Ratio,
    Ordinal,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Ratio => Level::Ratio,
            LevelArg::Ordinal => Level::Ordinal,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformArg {
    Identity,
    OneMinus,
    MaxMinus,
}

impl From<TransformArg> for Transform {
    fn from(t: TransformArg) -> Transform {
        match t {
            TransformArg::Identity => Transform::Identity,
            TransformArg::OneMinus => Transform::OneMinus,
            TransformArg::MaxMinus => Transform::MaxMinus,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    CsvFull,
    TriangleRows,
}

impl From<FormatArg> for MatrixFormat {
    fn from(f: FormatArg) -> MatrixFormat {
        match f {
            FormatArg::CsvFull => MatrixFormat::CsvFull,
            FormatArg::TriangleRows => MatrixFormat::TriangleRows,
        }
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Input matrix file
    #[arg(conflicts_with = "dataset")]
    pub input: Option<PathBuf>,

    /// Builtin dataset name (ekman, morse) instead of an input file
    #[arg(long)]
    pub dataset: Option<String>,

    /// Dimensionality of the configuration
    #[arg(long, default_value_t = 2)]
    pub dims: usize,

    /// Measurement level
    #[arg(long, value_enum, default_value_t = LevelArg::Ordinal)]
    pub level: LevelArg,

    /// Maximum number of iterations
    #[arg(long, default_value_t = 1000)]
    pub maxiter: usize,

    /// Stress-change convergence tolerance (absolute)
    #[arg(long, default_value_t = 1e-6)]
    pub eps: f64,

    /// Conversion applied to file input (builtin datasets fix their own)
    #[arg(long, value_enum, default_value_t = TransformArg::Identity, conflicts_with = "dataset")]
    pub transform: TransformArg,

    /// Layout of the input (and weights) file
    #[arg(long, value_enum, default_value_t = FormatArg::CsvFull, conflicts_with = "dataset")]
    pub format: FormatArg,

    /// Optional weights file, same layout as the input; entry (i,j) weights pair (i,j)
    #[arg(long)]
    pub weights: Option<PathBuf>,

    /// Prefix for the output files (<prefix>.result.json etc.)
    #[arg(long, default_value = "mds")]
    pub out: String,
}

#[derive(Serialize)]
struct OptionsDoc {
    level: String,
    dims: usize,
    max_iter: usize,
    eps: f64,
    transform: String,
    dataset: Option<String>,
    input: Option<String>,
    weights: Option<String>,
}

#[derive(Serialize)]
struct StressDoc {
    elastic: f64,
    ratio_form: f64,
    log_stress: f64,
    kruskal_normalized: f64,
}

#[derive(Serialize)]
struct ResultDoc {
    schema: u32,
    options: OptionsDoc,
    n: usize,
    m: usize,
    iterations: usize,
    converged: bool,
    stress: StressDoc,
    stress_trace: Vec<f64>,
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read '{}'", path.display()))
}

fn load_data(args: &SolveArgs) -> Result<(DissimilarityData, Option<Vec<String>>, String)> {
    let (data, labels, transform_name) = match (&args.dataset, &args.input) {
        (Some(name), None) => {
            let ds = builtin(name)?;
            (ds.data, Some(ds.labels), ds.transform.name().to_string())
        }
        (None, Some(path)) => {
            let text = read_input(path)?;
            let transform: Transform = args.transform.into();
            let kind = match transform {
                Transform::Identity => MatrixKind::Dissimilarity,
                _ => MatrixKind::Similarity,
            };
            let raw = parse_matrix(&text, args.format.into(), kind)
                .with_context(|| format!("cannot parse '{}'", path.display()))?;
            for w in raw.warnings() {
                eprintln!("warning: {w}");
            }
            let labels = raw.labels().map(|l| l.to_vec());
            (
                to_dissimilarities(&raw, transform)?,
                labels,
                transform.name().to_string(),
            )
        }
        (None, None) => bail!("no input: pass a matrix file or --dataset"),
        (Some(_), Some(_)) => unreachable!("clap rejects this combination"),
    };

    let data = match &args.weights {
        Some(path) => {
            let text = read_input(path)?;
            let raw = parse_matrix(&text, args.format.into(), MatrixKind::Dissimilarity)
                .with_context(|| format!("cannot parse weights '{}'", path.display()))?;
            if raw.n() != data.n() {
                bail!(
                    "weights matrix has {} points but the data has {}",
                    raw.n(),
                    data.n()
                );
            }
            let mut weights = Vec::with_capacity(data.m());
            for (i, j) in elastic_mds::pairs::pair_indices(raw.n()) {
                weights.push(raw.entries()[(i, j)]);
            }
            DissimilarityData::with_weights(data.n(), data.delta().to_vec(), weights)?
        }
        None => data,
    };
    Ok((data, labels, transform_name))
}

pub fn run(args: &SolveArgs) -> Result<()> {
    let (data, labels, transform_name) = load_data(args)?;
    let opts = SolveOptions {
        level: args.level.into(),
        dims: args.dims,
        max_iter: args.maxiter,
        eps: args.eps,
        relative_eps: false,
    };
    let result = solve(&data, &opts)?;

    // render everything before touching the filesystem so a failed solve
    // leaves no partial files behind
    let json = render_json(args, &data, &result, &transform_name)?;
    let config_csv = export_configuration(&result.config, labels.as_deref())?;
    let shepard = shepard_csv(&shepard_table(&data, &result));

    fs::write(format!("{}.result.json", args.out), &json)
        .with_context(|| format!("cannot write {}.result.json", args.out))?;
    fs::write(format!("{}.config.csv", args.out), &config_csv)
        .with_context(|| format!("cannot write {}.config.csv", args.out))?;
    fs::write(format!("{}.shepard.csv", args.out), &shepard)
        .with_context(|| format!("cannot write {}.shepard.csv", args.out))?;

    println!(
        "{}: {} iterations, stress {:.7}, log-stress {:.7}",
        opts.level,
        result.iterations,
        result.final_stress(),
        result.report.log_stress
    );
    Ok(())
}

fn render_json(
    args: &SolveArgs,
    data: &DissimilarityData,
    result: &SolveResult,
    transform_name: &str,
) -> Result<String> {
    let doc = ResultDoc {
        schema: 1,
        options: OptionsDoc {
            level: Level::from(args.level).to_string(),
            dims: args.dims,
            max_iter: args.maxiter,
            eps: args.eps,
            transform: transform_name.to_string(),
            dataset: args.dataset.clone(),
            input: args.input.as_ref().map(|p| p.display().to_string()),
            weights: args.weights.as_ref().map(|p| p.display().to_string()),
        },
        n: data.n(),
        m: data.m(),
        iterations: result.iterations,
        converged: result.converged,
        stress: StressDoc {
            elastic: result.report.elastic,
            ratio_form: result.report.ratio_form,
            log_stress: result.report.log_stress,
            kruskal_normalized: result.report.kruskal_normalized,
        },
        stress_trace: result.stress_trace.clone(),
    };
    let mut json = serde_json::to_string_pretty(&doc)?;
    json.push('\n');
    Ok(json)
}
