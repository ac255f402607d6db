use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};

use elastic_mds::{builtin, solve, Level, SolveOptions};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BenchLevel {
    Ratio,
    Ordinal,
    Both,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Builtin dataset to time
    #[arg(long, default_value = "ekman")]
    pub dataset: String,

    /// Level to time, or both
    #[arg(long, value_enum, default_value_t = BenchLevel::Both)]
    pub level: BenchLevel,

    /// Timed repetitions per (dataset, level) cell
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,

    /// Untimed warmup solves per cell
    #[arg(long, default_value_t = 5)]
    pub warmup: u32,

    /// Dimensionality of the timed solves
    #[arg(long, default_value_t = 2)]
    pub dims: usize,

    /// CSV output path
    #[arg(long, default_value = "bench.csv")]
    pub out: PathBuf,
}

/// Wall-clock summary of repeated full solves, in milliseconds.
#[derive(Debug, Clone)]
pub struct BenchSummary {
    pub label: String,
    pub min: f64,
    pub lq: f64,
    pub mean: f64,
    pub median: f64,
    pub uq: f64,
    pub max: f64,
    pub reps: u32,
}

/// Linearly interpolated quantile of a sorted sample.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn summarize(label: &str, times_ms: &[f64]) -> BenchSummary {
    let mut sorted = times_ms.to_vec();
    sorted.sort_by(f64::total_cmp);
    BenchSummary {
        label: label.to_string(),
        min: sorted[0],
        lq: quantile(&sorted, 0.25),
        mean: sorted.iter().sum::<f64>() / sorted.len() as f64,
        median: quantile(&sorted, 0.5),
        uq: quantile(&sorted, 0.75),
        max: *sorted.last().unwrap(),
        reps: times_ms.len() as u32,
    }
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let ds = builtin(&args.dataset)?;
    let levels: &[Level] = match args.level {
        BenchLevel::Ratio => &[Level::Ratio],
        BenchLevel::Ordinal => &[Level::Ordinal],
        BenchLevel::Both => &[Level::Ratio, Level::Ordinal],
    };

    let mut summaries = Vec::new();
    for &level in levels {
        let opts = SolveOptions {
            level,
            dims: args.dims,
            ..Default::default()
        };
        for _ in 0..args.warmup {
            solve(&ds.data, &opts)?;
        }
        // timings run sequentially on one thread to keep them clean
        let mut times = Vec::with_capacity(args.reps as usize);
        for _ in 0..args.reps {
            let t0 = Instant::now();
            let result = solve(&ds.data, &opts)?;
            times.push(t0.elapsed().as_secs_f64() * 1e3);
            std::hint::black_box(result);
        }
        summaries.push(summarize(&format!("{}/{}", ds.name, level), &times));
    }

    println!(
        "{:<16}{:>9}{:>9}{:>9}{:>9}{:>9}{:>9}",
        "", "min", "lq", "mean", "median", "uq", "max"
    );
    for s in &summaries {
        println!(
            "{:<16}{:>9.3}{:>9.3}{:>9.3}{:>9.3}{:>9.3}{:>9.3}",
            s.label, s.min, s.lq, s.mean, s.median, s.uq, s.max
        );
    }
    println!("times in milliseconds, {} repetitions after {} warmup solves", args.reps, args.warmup);

    let mut csv = String::from("label,min_ms,lq_ms,mean_ms,median_ms,uq_ms,max_ms,reps\n");
    for s in &summaries {
        csv.push_str(&format!(
            "{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}\n",
            s.label, s.min, s.lq, s.mean, s.median, s.uq, s.max, s.reps
        ));
    }
    fs::write(&args.out, csv).with_context(|| format!("cannot write '{}'", args.out.display()))?;
    Ok(())
}
