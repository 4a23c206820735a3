mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sn_markov::basisgen::{self, BasisFile, BasisOptions};
use sn_markov::mcmc::{self, BasisMode, ChainConfig, ChainSample, Target};
use sn_markov::reptheory::{first_order_summary, projection_lengths, second_order_summary};
use sn_markov::{Dataset, Partition, Rational};

use report::*;

#[derive(Parser)]
#[command(name = "snmarkov", version, about = "Spectral analysis, Markov bases and MCMC for ranking data")]
struct Cli {
    /// Worker threads for parallel stages (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// First-order table, projection lengths and second-order table
    Analyze(AnalyzeArgs),
    /// Markov basis for S_n
    Basis(BasisArgs),
    /// Walk the fiber of a data set and record projection lengths
    Sample(SampleArgs),
    /// Bootstrap replicates of a data set
    Bootstrap(BootstrapArgs),
    /// Number of degree-two symmetry classes of moves
    D2 { n: usize },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Builtin name ("apa") or path to a ranking,count CSV
    dataset: String,
    /// Include exact rational values
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write first_order.csv, projection_lengths.csv, second_order.csv and report.json here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BasisArgs {
    n: usize,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Store class representatives only
    #[arg(long)]
    classes_only: bool,
    /// Check fiber connectivity up to the maximal degree
    #[arg(long)]
    verify: bool,
    /// Verify up to this degree instead of the maximal degree (implies --verify)
    #[arg(long)]
    verify_to: Option<usize>,
    /// Print classes in two-tableau layout instead of JSON
    #[arg(long)]
    text: bool,
    #[arg(long)]
    no_norm_pruning: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    dataset: String,
    /// Basis JSON written by `snmarkov basis`
    #[arg(long)]
    basis: PathBuf,
    #[arg(long, value_enum, default_value_t = TargetArg::Hypergeometric)]
    target: TargetArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Symmetrized)]
    mode: ModeArg,
    /// Steps between recorded samples
    #[arg(long, default_value_t = 10_000)]
    steps: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    burn_in: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent chains with seeds seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    chains: usize,
    /// Component for the histogram (default n-2,2)
    #[arg(long)]
    component: Option<String>,
    /// Write samples.jsonl, means.csv and histogram.csv here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BootstrapArgs {
    dataset: String,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Uniform,
    Hypergeometric,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Symmetrized,
}

/// Failures that are not input errors.
#[derive(Debug)]
struct VerificationFailed(String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<VerificationFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Analyze(a) => analyze(a),
        Command::Basis(a) => basis(a),
        Command::Sample(a) => sample(a),
        Command::Bootstrap(a) => bootstrap(a),
        Command::D2 { n } => {
            println!("{}", basisgen::d2_count(n));
            Ok(())
        }
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
}

fn analyze(a: AnalyzeArgs) -> Result<()> {
    let data = Dataset::load(&a.dataset)?;
    let f = data.to_rank_function();
    let first = first_order_summary(&f)?;
    let lengths = projection_lengths::<Rational>(&f)?;
    let second = if data.n >= 4 { Some(second_order_summary(&f)?) } else { None };

    let bundle = ReportBundle {
        provenance: Provenance::new("analyze", &data, None, json!({ "exact": a.exact })),
        first_order: Some(first_order_report(&first, a.exact)),
        projection_lengths: Some(length_rows(&lengths, a.exact)),
        second_order: second.as_ref().map(|s| second_order_report(s, a.exact)),
        chain_summaries: vec![],
    };
    let json_text = serde_json::to_string_pretty(&bundle)? + "\n";
    let first_csv = first_order_csv(bundle.first_order.as_ref().unwrap());
    let lengths_text = lengths_csv(bundle.projection_lengths.as_ref().unwrap());
    let second_csv = bundle.second_order.as_ref().map(second_order_csv);

    if let Some(dir) = &a.out {
        write_file(dir, "first_order.csv", &first_csv)?;
        write_file(dir, "projection_lengths.csv", &lengths_text)?;
        if let Some(s) = &second_csv {
            write_file(dir, "second_order.csv", s)?;
        }
        write_file(dir, "report.json", &json_text)?;
    }
    let mut out = io::stdout().lock();
    match a.format {
        Format::Json => out.write_all(json_text.as_bytes())?,
        Format::Csv => {
            writeln!(out, "# first order (percent)\n{first_csv}")?;
            writeln!(out, "# projection lengths\n{lengths_text}")?;
            if let Some(s) = &second_csv {
                writeln!(out, "# second order\n{s}")?;
            }
        }
    }
    Ok(())
}

fn basis(a: BasisArgs) -> Result<()> {
    if !(3..=6).contains(&a.n) {
        bail!("n must be between 3 and 6, got {}", a.n);
    }
    let opts = BasisOptions { max_degree: a.max_degree, norm_pruning: !a.no_norm_pruning, expand: !a.classes_only };
    let basis = basisgen::compute_markov_basis_with(a.n, opts)?;
    let report = match (a.verify, a.verify_to) {
        (_, Some(d)) => Some(basisgen::verify_basis(&basis, d)?),
        (true, None) => Some(basisgen::verify_basis(&basis, basis.max_degree)?),
        (false, None) => None,
    };
    for d in &basis.degrees {
        eprintln!(
            "degree {}: {} moves in {} classes ({} square orbits, {} fibers searched)",
            d.degree, d.moves, d.classes, d.square_orbits, d.fibers_searched
        );
    }
    let text = if a.text {
        basisgen::render_classes(&basis)
    } else {
        let file = BasisFile::new(&basis, a.classes_only, report.clone());
        let mut buf = Vec::new();
        file.write(&mut buf)?;
        buf.push(b'\n');
        String::from_utf8(buf)?
    };
    match &a.out {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let Some(r) = report {
        if !r.connected {
            let cert = r.certificate.map(|b| format!("{:?}", b.rows())).unwrap_or_default();
            return Err(VerificationFailed(format!("fiber over {cert} is disconnected")).into());
        }
        eprintln!("verified: {} squares up to degree {}", r.squares_checked, r.up_to_degree);
    }
    Ok(())
}

fn parse_component(spec: Option<&str>, n: usize) -> Result<Partition> {
    match spec {
        Some(s) => Ok(s.parse()?),
        None if n >= 4 => Ok(Partition::new(vec![n - 2, 2])?),
        None => Ok(Partition::new(vec![n])?),
    }
}

fn sample(a: SampleArgs) -> Result<()> {
    let data = Dataset::load(&a.dataset)?;
    let file = BasisFile::read(fs::File::open(&a.basis).with_context(|| format!("opening {}", a.basis.display()))?)?;
    let basis = file.into_basis();
    if basis.n != data.n {
        bail!("basis is for n = {} but the data set has n = {}", basis.n, data.n);
    }
    if a.chains == 0 {
        bail!("--chains must be positive");
    }
    let config = ChainConfig {
        target: match a.target {
            TargetArg::Uniform => Target::Uniform,
            TargetArg::Hypergeometric => Target::Hypergeometric,
        },
        basis_mode: match a.mode {
            ModeArg::Full => BasisMode::Full,
            ModeArg::Symmetrized => BasisMode::Symmetrized,
        },
        steps_per_sample: a.steps,
        num_samples: a.samples,
        burn_in: a.burn_in,
        seed: a.seed,
    };
    let component = parse_component(a.component.as_deref(), data.n)?;
    let f = data.to_rank_function();
    let seeds: Vec<u64> = (0..a.chains as u64).map(|k| a.seed.wrapping_add(k)).collect();
    let runs = mcmc::run_chains(&f, &basis, &config, &seeds)?;
    let samples: Vec<ChainSample> = runs.iter().flat_map(|r| r.samples.iter().cloned()).collect();
    let means = mean_rows(&mcmc::mean_lengths(&samples));
    let k = samples[0]
        .lengths
        .iter()
        .position(|(p, _)| *p == component)
        .ok_or_else(|| anyhow!("{component} is not a partition of {}", data.n))?;
    let values: Vec<f64> = samples.iter().map(|s| s.lengths[k].1).collect();
    let bins = mcmc::histogram(&values, 20);

    let label = format!("{:?}/{:?}", config.target, config.basis_mode).to_lowercase();
    let bundle = ReportBundle {
        provenance: Provenance::new("sample", &data, Some(a.seed), json!({ "chain": config, "chains": a.chains, "basis": a.basis })),
        first_order: None,
        projection_lengths: None,
        second_order: None,
        chain_summaries: vec![ChainSummary { label, samples: samples.len(), means: means.clone() }],
    };
    if let Some(dir) = &a.out {
        let mut jsonl = Vec::new();
        mcmc::write_samples_jsonl(&mut jsonl, &samples)?;
        write_file(dir, "samples.jsonl", std::str::from_utf8(&jsonl)?)?;
        write_file(dir, "means.csv", &means_csv(&means))?;
        let mut hist = Vec::new();
        mcmc::write_histogram_csv(&mut hist, &bins)?;
        write_file(dir, "histogram.csv", std::str::from_utf8(&hist)?)?;
        write_file(dir, "report.json", &(serde_json::to_string_pretty(&bundle)? + "\n"))?;
    }
    print!("{}", means_csv(&means));
    Ok(())
}

fn bootstrap(a: BootstrapArgs) -> Result<()> {
    let data = Dataset::load(&a.dataset)?;
    let f = data.to_rank_function();
    let reps = mcmc::bootstrap_replicates(&f, a.samples, a.seed)?;
    let samples = reps
        .iter()
        .enumerate()
        .map(|(k, r)| Ok(ChainSample { step: k as u64, lengths: projection_lengths::<f64>(r)? }))
        .collect::<Result<Vec<_>>>()?;
    let means = mean_rows(&mcmc::mean_lengths(&samples));
    match a.format {
        Format::Csv => print!("{}", means_csv(&means)),
        Format::Json => {
            let bundle = ReportBundle {
                provenance: Provenance::new("bootstrap", &data, Some(a.seed), json!({ "replicates": a.samples })),
                first_order: None,
                projection_lengths: None,
                second_order: None,
                chain_summaries: vec![ChainSummary { label: "bootstrap".into(), samples: samples.len(), means }],
            };
            println!("{}", serde_json::to_string_pretty(&bundle)?);
        }
    }
    Ok(())
}
