use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use voigt_cli::bench::{run_bench, BenchConfig, Domain};
use voigt_cli::boundary::find_boundary;
use voigt_cli::errmap::run_errmap;
use voigt_cli::eval::run_eval;
use voigt_cli::grid::{Axis, GridSpec, Scale};
use voigt_cli::{CliError, Result};
use voigt_core::{AccuracyLevel, EvalOptions};

/// Faddeeva / Voigt function evaluator for 0 <= y <= 0.1.
#[derive(Parser)]
#[command(name = "voigt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate w(x + iy) = K + iL at one point.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[command(flatten)]
        acc: Accuracy,
        /// Also print the reference value and the relative errors.
        #[arg(long)]
        check: bool,
    },
    /// Relative-error map against the reference on a grid, as CSV.
    Errmap {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        acc: Accuracy,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Throughput on random points inside and outside |z| = 22.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        count: usize,
        /// Repeatable.
        #[arg(long = "y", default_values_t = [1e-8])]
        y_values: Vec<f64>,
        #[arg(long, value_enum, default_value_t = DomainArg::Both)]
        domain: DomainArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        acc: Accuracy,
        /// Write every sampled point and its value as CSV.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Smallest |z| at which the continued fraction alone meets `eps`.
    Boundary {
        #[arg(long)]
        y: f64,
        #[arg(long)]
        eps: f64,
    },
}

#[derive(Args)]
struct Accuracy {
    /// Target accuracy: 1e-16 or 1e-100.
    #[arg(long, default_value_t = 1e-16)]
    accuracy: f64,
}

impl Accuracy {
    fn options(&self) -> Result<EvalOptions> {
        Ok(EvalOptions::with_accuracy(AccuracyLevel::from_epsilon(self.accuracy)?))
    }
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long)]
    x_max: f64,
    #[arg(long)]
    x_count: usize,
    /// linear, log, or mixed:<knee>.
    #[arg(long, default_value = "linear")]
    x_scale: Scale,
    #[arg(long)]
    y_min: f64,
    #[arg(long)]
    y_max: f64,
    #[arg(long)]
    y_count: usize,
    #[arg(long, default_value = "log")]
    y_scale: Scale,
}

impl GridArgs {
    fn spec(&self) -> GridSpec {
        GridSpec {
            x: Axis::new(self.x_min, self.x_max, self.x_count, self.x_scale),
            y: Axis::new(self.y_min, self.y_max, self.y_count, self.y_scale),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Internal,
    External,
    Both,
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eval { x, y, acc, check } => {
            if !(x.is_finite() && y.is_finite()) {
                return Err(CliError::Domain("x and y must be finite".into()));
            }
            print!("{}", run_eval(x, y, AccuracyLevel::from_epsilon(acc.accuracy)?, check)?);
        }
        Command::Errmap { grid, acc, out } => {
            let map = run_errmap(&grid.spec(), &acc.options()?)?;
            let mut w = output(out.as_ref())?;
            map.write_csv(&mut w)?;
            w.flush()?;
        }
        Command::Bench { count, y_values, domain, seed, acc, dump } => {
            let domains = match domain {
                DomainArg::Internal => vec![Domain::Internal],
                DomainArg::External => vec![Domain::External],
                DomainArg::Both => vec![Domain::Internal, Domain::External],
            };
            let cfg = BenchConfig { count, y_values, domains, seed, opts: acc.options()? };
            let records = run_bench(&cfg)?;
            let mut dump = dump.as_ref().map(|p| output(Some(p))).transpose()?;
            if let Some(w) = dump.as_mut() {
                writeln!(w, "y,domain,x,k,l")?;
            }
            for r in &records {
                println!("{}", r.line());
                if !r.all_finite() {
                    eprintln!("warning: non-finite values at y = {}, {}", r.y, r.domain);
                }
                if let Some(w) = dump.as_mut() {
                    r.write_points(w)?;
                }
            }
            if let Some(mut w) = dump {
                w.flush()?;
            }
        }
        Command::Boundary { y, eps } => {
            println!("{:.2}", find_boundary(y, eps)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
