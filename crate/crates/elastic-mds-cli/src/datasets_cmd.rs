use anyhow::Result;
use clap::Args;

use elastic_mds::{builtin, builtin_names, data_to_csv};

#[derive(Args, Debug)]
pub struct DatasetsArgs {
    /// Print the named dataset's dissimilarities as CSV instead of listing
    #[arg(long)]
    pub show: Option<String>,
}

pub fn run(args: &DatasetsArgs) -> Result<()> {
    if let Some(name) = &args.show {
        let ds = builtin(name)?;
        print!("{}", data_to_csv(&ds.data));
        return Ok(());
    }
    for name in builtin_names() {
        let ds = builtin(name)?;
        println!(
            "{:<8} n={:<4} m={:<5} {}",
            ds.name,
            ds.data.n(),
            ds.data.m(),
            ds.citation
        );
    }
    Ok(())
}
