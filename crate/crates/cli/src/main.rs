use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use msfractal_cli::{cmd_classify, cmd_dataset, cmd_describe, cmd_pipeline, CliError, PipelineConfig};

#[derive(Parser, Debug)]
#[command(name = "msfractal", version, about = "Multiscale fractal texture descriptors")]
struct Args {
    /// Flat key = value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Seed for the hold-out split (overrides the config file).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for descriptor extraction.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output directory.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Override a config key, e.g. `--set descriptor_mode=raw-minkowski`.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Descriptors and dimension estimate of one image.
    Describe { image: PathBuf },
    /// Feature CSV with one row per window of every dataset image.
    Dataset { root: PathBuf },
    /// Hold-out LDA evaluation of a feature CSV.
    Classify { features: PathBuf },
    /// dataset + classify in one run.
    Pipeline { root: PathBuf },
}

fn load_config(args: &Args) -> Result<PipelineConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => PipelineConfig::from_file(path)?,
        None => PipelineConfig::default(),
    };
    for kv in &args.overrides {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| CliError::InvalidConfig(format!("override '{kv}' is not KEY=VALUE")))?;
        cfg.set(k, v)?;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(args: &Args) -> Result<(), CliError> {
    let cfg = load_config(args)?;
    let progress = |line: &str| eprintln!("{line}");
    match &args.command {
        Command::Describe { image } => {
            println!("{}", cmd_describe(image, &cfg, &args.out)?.summary());
        }
        Command::Dataset { root } => {
            let (features, path) = cmd_dataset(root, &cfg, &args.out, progress)?;
            println!("rows: {}\nfeatures: {}", features.len(), path.display());
        }
        Command::Classify { features } => {
            println!("{}", cmd_classify(features, &cfg, &args.out)?.summary());
        }
        Command::Pipeline { root } => {
            println!("{}", cmd_pipeline(root, &cfg, &args.out, progress)?.summary());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    match pool.install(|| run(&args)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {}", e.code(), e);
            ExitCode::from(e.exit_status() as u8)
        }
    }
}
