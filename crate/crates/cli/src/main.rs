use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dsc2::bench::{BenchGrid, BenchOptions};
use dsc2::{generate_family, Algorithm, Execution, Family};
use dsc2_cli::bench_cmd::{bench_rows, parse_list, parse_names, write_csv};
use dsc2_cli::{
    run_isolate, CliError, InputFormat, IsolateOptions, OutputFormat, PolynomialDocument,
    SquareFreePolicy,
};

#[derive(Parser)]
#[command(
    name = "dsc2",
    version,
    about = "Exact real-root isolation for integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isolate the real roots of one polynomial.
    Isolate {
        /// Input file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        poly: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Coeffs)]
        format: InputFormat,
        #[arg(long, default_value = "dsc2")]
        algorithm: Algorithm,
        #[arg(long = "square-free", value_enum, default_value_t = SquareFreePolicy::Error)]
        square_free: SquareFreePolicy,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        /// Include subdivision statistics.
        #[arg(long)]
        stats: bool,
        /// Cross-check every descriptor with Sturm sequences before printing.
        #[arg(long, hide = true)]
        verify: bool,
    },
    /// Run both isolators over a parameter grid and emit CSV.
    Bench {
        /// Comma-separated family names.
        #[arg(long)]
        family: String,
        /// Degrees, e.g. `8,16` or `4..12`.
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "16")]
        tau: String,
        #[arg(long, default_value = "0")]
        seeds: String,
        #[arg(long, default_value = "dsc2,dsc")]
        algorithms: String,
        /// Output file, or `-` for stdout.
        #[arg(long, default_value = "-")]
        csv: String,
        /// Write 0 in the wall_time_ms column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Run instances one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Print one member of a polynomial family.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        tau: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = InputFormat::Coeffs)]
        format: InputFormat,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut s = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut s)?;
    } else {
        File::open(PathBuf::from(path))
            .map_err(|e| CliError::Input(format!("{path}: {e}")))?
            .read_to_string(&mut s)?;
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Isolate {
            poly,
            format,
            algorithm,
            square_free,
            output,
            stats,
            verify,
        } => {
            let doc = PolynomialDocument::parse(&read_input(&poly)?, format)?;
            let opts = IsolateOptions {
                algorithm,
                square_free,
                output,
                stats,
                verify,
            };
            let report = run_isolate(&doc.to_poly(), &opts)?;
            io::stdout().write_all(report.render(output, stats).as_bytes())?;
        }
        Command::Bench {
            family,
            n,
            tau,
            seeds,
            algorithms,
            csv,
            no_timing,
            sequential,
        } => {
            let grid = BenchGrid {
                families: parse_names::<Family>(&family)?,
                degrees: parse_list(&n)?.into_iter().map(|d| d as usize).collect(),
                taus: parse_list(&tau)?,
                seeds: parse_list(&seeds)?,
                algorithms: parse_names::<Algorithm>(&algorithms)?,
            };
            let opts = BenchOptions {
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
                timing: !no_timing,
            };
            let rows = bench_rows(&grid, opts)?;
            if csv == "-" {
                write_csv(&rows, io::stdout().lock())?;
            } else {
                let file =
                    File::create(&csv).map_err(|e| CliError::Input(format!("{csv}: {e}")))?;
                write_csv(&rows, BufWriter::new(file))?;
            }
        }
        Command::Generate {
            family,
            n,
            tau,
            seed,
            format,
        } => {
            let f = generate_family(family, n, tau, seed)?;
            let doc = PolynomialDocument::from_poly(&f);
            io::stdout().write_all(doc.serialize(format).as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dsc2: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
