use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lcaf::batched::{default_k, lcaf_batched, BatchConfig};
use lcaf::bench::{rows_to_csv, run_bench, BenchConfig};
use lcaf::network::NetworkKind;
use lcaf::oracle::lcaf_bruteforce;
use lcaf::radix::{lcaf_radix_opts, RadixOptions};
use lcaf::report::RunRecord;
use lcaf::text::remap_alphabet;
use lcaf::Algorithm;

/// Witness pairs printed unless --all-occurrences asks for full run extents.
const WITNESS_CAP: usize = 16;

const EXIT_INPUT: u8 = 2;
const EXIT_OPTIONS: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lcaf",
    version,
    about = "Longest common Abelian factor of two byte strings",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Engine: oracle | radix | batched
    #[arg(long, value_enum, default_value_t = AlgoArg::Radix)]
    algo: AlgoArg,

    /// Lengths per batch (batched only; default ceil(sqrt(sigma)))
    #[arg(long)]
    k: Option<usize>,

    /// Comparator network generator (batched only; default batcher)
    #[arg(long, value_enum)]
    network: Option<NetworkArg>,

    /// Emit one JSON record instead of text
    #[arg(long)]
    json: bool,

    /// Report full equal-run extents instead of capped witness pairs (radix only)
    #[arg(long)]
    all_occurrences: bool,

    /// Re-verify every difference-set resolution against a direct comparison
    /// (batched only)
    #[arg(long)]
    shadow_check: bool,

    /// Treat FILE_A and FILE_B as literal strings, not paths
    #[arg(long)]
    inline: bool,

    /// Input A: a binary file path (or a literal string with --inline)
    file_a: Option<String>,

    /// Input B
    file_b: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run engines over a seeded random workload matrix and emit CSV
    Bench(BenchArgs),
    /// Print a comparator network as one "p q" pair per line
    Network(NetworkDumpArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated string lengths, e.g. 64,128,256
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,

    /// Comma-separated alphabet sizes, e.g. 2,4,16
    #[arg(long, value_delimiter = ',')]
    sigmas: Vec<u32>,

    /// Engines to run
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "radix,batched"
    )]
    algos: Vec<AlgoArg>,

    /// Workload repetitions per (n, sigma) cell
    #[arg(long, default_value_t = 1)]
    repeats: usize,

    /// Master seed; identical seeds give identical workloads
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Batch size override for the batched engine
    #[arg(long)]
    k: Option<usize>,

    #[arg(long, value_enum, default_value_t = NetworkArg::Batcher)]
    network: NetworkArg,

    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NetworkDumpArgs {
    #[arg(long, value_enum, default_value_t = NetworkArg::Batcher)]
    kind: NetworkArg,

    /// Number of lanes
    #[arg(long)]
    size: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Oracle,
    Radix,
    Batched,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Oracle => Algorithm::Oracle,
            AlgoArg::Radix => Algorithm::Radix,
            AlgoArg::Batched => Algorithm::Batched,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NetworkArg {
    Batcher,
    Pratt,
}

impl From<NetworkArg> for NetworkKind {
    fn from(n: NetworkArg) -> Self {
        match n {
            NetworkArg::Batcher => NetworkKind::Batcher,
            NetworkArg::Pratt => NetworkKind::Pratt,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Some(Command::Bench(args)) => bench_command(args),
        Some(Command::Network(args)) => network_command(args),
        None => run_command(cli.run),
    }
}

fn options_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_OPTIONS)
}

fn input_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

fn run_command(args: RunArgs) -> ExitCode {
    let algo: Algorithm = args.algo.into();
    if algo != Algorithm::Batched {
        if args.k.is_some() {
            return options_error("--k applies only to --algo batched");
        }
        if args.network.is_some() {
            return options_error("--network applies only to --algo batched");
        }
        if args.shadow_check {
            return options_error("--shadow-check applies only to --algo batched");
        }
    }
    if args.all_occurrences && algo != Algorithm::Radix {
        return options_error("--all-occurrences applies only to --algo radix");
    }
    if args.k == Some(0) {
        return options_error("--k must be at least 1");
    }

    let (Some(input_a), Some(input_b)) = (&args.file_a, &args.file_b) else {
        return input_error("two inputs are required (FILE_A FILE_B)");
    };
    let read = |input: &String| -> Result<Vec<u8>, String> {
        if args.inline {
            Ok(input.clone().into_bytes())
        } else {
            fs::read(input).map_err(|e| format!("cannot read {input}: {e}"))
        }
    };
    let raw_a = match read(input_a) {
        Ok(bytes) => bytes,
        Err(e) => return input_error(&e),
    };
    let raw_b = match read(input_b) {
        Ok(bytes) => bytes,
        Err(e) => return input_error(&e),
    };

    let (a, b, alphabet) = match remap_alphabet(&raw_a, &raw_b) {
        Ok(parts) => parts,
        Err(e) => return input_error(&e.to_string()),
    };

    let started = Instant::now();
    let result = match algo {
        Algorithm::Oracle => lcaf_bruteforce(&a, &b),
        Algorithm::Radix => lcaf_radix_opts(
            &a,
            &b,
            RadixOptions {
                full_sweep: false,
                collect_runs: args.all_occurrences,
            },
        ),
        Algorithm::Batched => {
            let cfg = BatchConfig {
                k: args.k.unwrap_or_else(|| default_k(alphabet.size())),
                network: args.network.map_or(NetworkKind::Batcher, Into::into),
                shadow_check: args.shadow_check,
                full_sweep: false,
            };
            lcaf_batched(&a, &b, &cfg)
        }
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    let cap = if args.all_occurrences {
        usize::MAX
    } else {
        WITNESS_CAP
    };
    let record = RunRecord::new(
        algo.name(),
        &result,
        alphabet.size(),
        a.len(),
        b.len(),
        elapsed_ms,
        cap,
    );
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&record).expect("record serializes")
        );
    } else {
        print!("{}", record.render_text());
    }
    ExitCode::SUCCESS
}

fn bench_command(args: BenchArgs) -> ExitCode {
    let config = BenchConfig {
        sizes: args.sizes,
        sigmas: args.sigmas,
        algos: args.algos.into_iter().map(Into::into).collect(),
        repeats: args.repeats,
        seed: args.seed,
        k: args.k,
        network: args.network.into(),
    };
    let rows = match run_bench(&config) {
        Ok(rows) => rows,
        Err(e) => return options_error(&e.to_string()),
    };
    let csv = rows_to_csv(&rows);
    match args.out {
        Some(path) => {
            if let Err(e) = fs::write(&path, csv) {
                return input_error(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{csv}"),
    }
    ExitCode::SUCCESS
}

fn network_command(args: NetworkDumpArgs) -> ExitCode {
    if args.size == 0 {
        return options_error("--size must be at least 1");
    }
    let kind: NetworkKind = args.kind.into();
    print!("{}", kind.build(args.size).dump());
    ExitCode::SUCCESS
}
