use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use arrspec_cli::conjecture;
use arrspec_cli::output;
use arrspec_core::{build_graph, spectrum, verify, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact spectra of (n,k)-arrangement graphs.
///
/// Exit codes: 0 on success (and a passing check), 1 when a verification or
/// scan fails, 2 on usage or limit errors.
#[derive(Parser)]
#[command(name = "arrspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact spectrum of A(n,k) from the character formula
    Spectrum(SpectrumArgs),
    /// Rebuild A(n,k) explicitly and check the formula against it
    Verify(VerifyArgs),
    /// Scan negative eigenvalues around the threshold p(k)
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// List the witnessing (lambda, mu) pairs on every line
    #[arg(long)]
    show_witnesses: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
    /// Write the graph's adjacency structure to a text file
    #[arg(long, value_name = "PATH")]
    dump_graph: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    k: u32,
    /// Last n to scan (default: threshold(k) + 10)
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Args)]
struct LimitArgs {
    /// Cap on n for the formula path
    #[arg(long, env = "ARRSPEC_N_LIMIT", default_value_t = Limits::default().max_n)]
    n_limit: u32,
    /// Cap on k for partition enumeration
    #[arg(
        long,
        env = "ARRSPEC_PARTITION_LIMIT",
        default_value_t = Limits::default().max_partition_weight
    )]
    partition_limit: u32,
    /// Vertex cap for the exact-nullity oracle tier
    #[arg(
        long,
        env = "ARRSPEC_EXACT_LIMIT",
        default_value_t = Limits::default().exact_vertex_limit
    )]
    exact_limit: u64,
    /// Vertex cap for graph construction and the float oracle tier
    #[arg(
        long,
        env = "ARRSPEC_FLOAT_LIMIT",
        default_value_t = Limits::default().float_vertex_limit
    )]
    float_limit: u64,
    /// Distance-to-integer tolerance for float eigenvalues, scaled by size
    #[arg(
        long,
        env = "ARRSPEC_FLOAT_TOL",
        default_value_t = Limits::default().float_tolerance
    )]
    float_tol: f64,
}

impl LimitArgs {
    fn to_limits(&self) -> Limits {
        Limits {
            max_n: self.n_limit,
            max_partition_weight: self.partition_limit,
            exact_vertex_limit: self.exact_limit,
            float_vertex_limit: self.float_limit,
            float_tolerance: self.float_tol,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Spectrum(args) => {
            let result = spectrum(args.n, args.k, &args.limits.to_limits())?;
            match args.format {
                Format::Table => print!("{}", output::spectrum_table(&result, args.show_witnesses)),
                Format::Csv => print!("{}", output::spectrum_csv(&result)),
                Format::Json => println!("{}", output::spectrum_json(&result, args.show_witnesses)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let limits = args.limits.to_limits();
            if let Some(path) = &args.dump_graph {
                let graph = build_graph(args.n, args.k, &limits)?;
                graph.write_adjacency_dump(BufWriter::new(File::create(path)?))?;
            }
            let report = verify(args.n, args.k, &limits)?;
            match args.format {
                ReportFormat::Table => print!("{}", output::verify_table(&report)),
                ReportFormat::Json => println!("{}", output::verify_json(&report)),
            }
            Ok(exit_for(report.pass))
        }
        Command::Conjecture(args) => {
            let doc = conjecture::scan(args.k, args.n_max, &args.limits.to_limits())?;
            match args.format {
                ReportFormat::Table => print!("{}", output::conjecture_table(&doc)),
                ReportFormat::Json => println!("{}", output::conjecture_json(&doc)),
            }
            Ok(exit_for(doc.pass))
        }
    }
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
