// SPDX-License-Identifier: Apache-2.0

//! `netfrac`: box-counting and box-entropy dimensions of network files.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use netfrac::{
    all_pairs_distances, cover_series, estimate_dimensions, generate, parse_network, write_edgelist,
    EntropyScaling, EstimateConfig, Format, Graph, GraphKind, PermutationMode,
};

use report::{CoverReport, Summary};

#[derive(Parser)]
#[command(name = "netfrac", version, about = "Fractal dimensions of complex networks by box covering")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the box-counting and information dimensions of a network.
    Analyze(AnalysisConfig),
    /// Write a synthetic graph as an edge list.
    Generate(GenerateArgs),
    /// Dump a single greedy box cover as JSON.
    Cover(CoverArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Network file, or `-` for stdin.
    input: PathBuf,
    /// Input format; guessed from the extension when omitted (stdin: edgelist).
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
}

#[derive(Args)]
struct AnalysisConfig {
    #[command(flatten)]
    input: InputArgs,
    /// Number of randomized coverings averaged per box size.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,
    /// Base seed; run r uses seed + r.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Smallest box size covered.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    lmin: u32,
    /// Largest box size covered [default: diameter + 1].
    #[arg(long)]
    lmax: Option<u32>,
    /// Smallest box size used in the fits [default: lmin].
    #[arg(long)]
    fit_lmin: Option<u32>,
    /// Largest box size used in the fits [default: largest with a positive mean].
    #[arg(long)]
    fit_lmax: Option<u32>,
    /// How the entropy series is fitted.
    #[arg(long, value_enum, default_value_t = ScalingArg::LogLog)]
    entropy_scaling: ScalingArg,
    /// Reuse one random node ordering for every box size within a run.
    #[arg(long)]
    shared_permutation: bool,
    /// What to print: the summary (json) or the scaling series (csv).
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output_format: OutputFormat,
    /// Write the main output here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Also write the scaling series as CSV to this file.
    #[arg(long)]
    series: Option<PathBuf>,
    /// Worker threads [default: all cores]. Results do not depend on it.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_parser = parse_kind)]
    kind: GraphKind,
    /// Size parameters: n for path/cycle/complete, leaves for star, rows cols for grid.
    #[arg(required = true)]
    sizes: Vec<usize>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CoverArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Box size.
    #[arg(long = "l")]
    box_size: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalingArg {
    /// ln I against ln l.
    LogLog,
    /// I against ln l.
    SemiLog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: netfrac::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<GraphKind, String> {
    s.parse().map_err(|e: netfrac::Error| e.to_string())
}

/// Failure modes and their exit codes.
enum Failure {
    /// Bad input, arguments or I/O: exit 1.
    Input(String),
    /// Too few usable points to fit: exit 2.
    Degenerate(String),
}

impl From<netfrac::Error> for Failure {
    fn from(err: netfrac::Error) -> Self {
        match err {
            netfrac::Error::Degenerate(_) => Failure::Degenerate(err.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Input(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Analyze(config) => analyze(&config),
        Command::Generate(args) => generate_cmd(&args),
        Command::Cover(args) => cover_cmd(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Degenerate(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(args: &InputArgs) -> Result<(Graph, Format), Failure> {
    let stdin = args.input == Path::new("-");
    let format = args.format.unwrap_or_else(|| {
        if stdin {
            Format::EdgeList
        } else {
            Format::from_path(&args.input)
        }
    });
    let bytes = if stdin {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(&args.input)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.input.display())))?
    };
    let graph = parse_network(&bytes, format)?;
    Ok((graph, format))
}

fn write_output(path: Option<&Path>, content: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn analyze(config: &AnalysisConfig) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.unwrap_or(0) as usize)
        .build()
        .map_err(|e| Failure::Input(e.to_string()))?;
    pool.install(|| run_analysis(config))
}

fn run_analysis(config: &AnalysisConfig) -> Result<(), Failure> {
    let (original, format) = read_input(&config.input)?;
    let graph = original.largest_connected_component();
    eprintln!(
        "largest component: {} of {} nodes, {} of {} edges",
        graph.node_count(),
        original.node_count(),
        graph.edge_count(),
        original.edge_count()
    );
    let dist = all_pairs_distances(&graph)?;
    let lmax = config.lmax.unwrap_or(dist.diameter() + 1);
    if config.lmin > lmax {
        return Err(Failure::Input(format!("lmin {} exceeds lmax {lmax}", config.lmin)));
    }
    let estimate_config = EstimateConfig {
        runs: config.runs as usize,
        seed: config.seed,
        box_sizes: Some((config.lmin..=lmax).collect()),
        fit_min: config.fit_lmin,
        fit_max: config.fit_lmax,
        entropy_scaling: match config.entropy_scaling {
            ScalingArg::LogLog => EntropyScaling::LogLog,
            ScalingArg::SemiLog => EntropyScaling::SemiLog,
        },
        permutation_mode: if config.shared_permutation {
            PermutationMode::Shared
        } else {
            PermutationMode::Independent
        },
    };
    let estimate = estimate_dimensions(&dist, &estimate_config)?;

    let csv = estimate.series.to_csv();
    if let Some(path) = &config.series {
        write_output(Some(path), csv.as_bytes())?;
    }
    let main_output = match config.output_format {
        OutputFormat::Csv => csv.into_bytes(),
        OutputFormat::Json => {
            let summary = Summary::new(
                &config.input.input,
                format,
                &original,
                &graph,
                dist.diameter(),
                &estimate_config,
                &estimate,
            );
            let mut json = serde_json::to_vec_pretty(&summary).expect("summary serializes");
            json.push(b'\n');
            json
        }
    };
    write_output(config.output.as_deref(), &main_output)
}

fn generate_cmd(args: &GenerateArgs) -> Result<(), Failure> {
    let graph = generate(args.kind, &args.sizes)?;
    let mut out = Vec::new();
    write_edgelist(&graph, &mut out)?;
    write_output(args.output.as_deref(), &out)
}

fn cover_cmd(args: &CoverArgs) -> Result<(), Failure> {
    let (original, _) = read_input(&args.input)?;
    let graph = original.largest_connected_component();
    let dist = all_pairs_distances(&graph)?;
    let cover = cover_series(&dist, &[args.box_size], args.seed, PermutationMode::Independent)?
        .pop()
        .expect("one cover per box size");
    let report = CoverReport::new(&cover, &graph);
    let mut json = serde_json::to_vec(&report).expect("cover serializes");
    json.push(b'\n');
    write_output(args.output.as_deref(), &json)
}
