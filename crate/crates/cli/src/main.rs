//! `twofold` command line: application demos, the kernel benchmark, and a
//! one-shot evaluator for single twofold operations.

mod eval;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand};
use twofold::batch::Kernel;
use twofold::bench::{run_bench, to_csv, to_table, BenchCell, BenchConfig, SizeClass};
use twofold::demos::{gauss_solve, quadratic_roots, sum100h, DemoReport, GaussCase, QuadraticC};
use twofold::fp_core::check_fma;
use twofold::FloatFormat;

#[derive(Parser, Debug)]
#[command(name = "twofold", version, about = "Twofold floating-point arithmetic: demos, benchmarks, evaluator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one of the application demos and print its report.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
    /// Measure array-kernel throughput against plain arithmetic.
    Bench(BenchArgs),
    /// Apply one operation and print `value[error]`.
    Eval(eval::EvalArgs),
}

#[derive(Args, Debug, Clone)]
struct DemoCommon {
    /// Floating-point format; both when omitted.
    #[arg(long)]
    format: Option<FloatFormat>,
    /// Significant digits in the report.
    #[arg(long, default_value_t = twofold::format::DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=17).map(usize::from))]
    digits: usize,
}

impl DemoCommon {
    fn formats(&self) -> Vec<FloatFormat> {
        self.format.map_or_else(|| FloatFormat::ALL.to_vec(), |f| vec![f])
    }
}

#[derive(Subcommand, Debug)]
enum Demo {
    /// Clock summing 1/10 s steps.
    Sum100h {
        #[command(flatten)]
        common: DemoCommon,
        /// Simulated running time in hours.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..=10_000))]
        hours: u32,
    },
    /// Gauss elimination on a 3x3 Jordan block.
    Gauss {
        #[command(flatten)]
        common: DemoCommon,
        /// well3 or ill3; both when omitted.
        #[arg(long)]
        case: Option<GaussCase>,
    },
    /// Roots of x^2 + 2x + c by the school formula.
    Quadratic {
        #[command(flatten)]
        common: DemoCommon,
        /// The constant term: a decimal, or `A+B` / `A-B` of two decimals.
        #[arg(long, default_value = "1e-8", allow_hyphen_values = true)]
        c: QuadraticC,
    },
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Comma-separated kernel names; all twofold and coupled kernels when omitted.
    #[arg(long, value_delimiter = ',')]
    ops: Vec<Kernel>,
    /// Comma-separated size classes: small, medium, large.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<SizeClass>,
    /// Comma-separated formats.
    #[arg(long, value_delimiter = ',')]
    format: Vec<FloatFormat>,
    /// Also write the records as CSV to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Timed repetitions per cell; the best is kept.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(3..).map(|n| n as usize))]
    reps: usize,
    /// Minimum duration of one repetition, in milliseconds.
    #[arg(long, default_value_t = 10)]
    min_time_ms: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = check_fma() {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    let result = match cli.command {
        Command::Demo { demo } => run_demo(demo),
        Command::Bench(args) => bench(args),
        Command::Eval(args) => eval::run(args).map_err(|e| {
            // Bad operands are usage errors, like clap's own.
            eprintln!("error: {e}");
            std::process::exit(2);
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run_demo(demo: Demo) -> Result<()> {
    let (common, reports): (DemoCommon, Vec<DemoReport>) = match demo {
        Demo::Sum100h { common, hours } => {
            let reports = common.formats().into_iter().map(|f| sum100h(f, hours)).collect();
            (common, reports)
        }
        Demo::Gauss { common, case } => {
            let cases = case.map_or_else(|| vec![GaussCase::Well3, GaussCase::Ill3], |c| vec![c]);
            let mut reports = Vec::new();
            for case in cases {
                for format in common.formats() {
                    reports.push(gauss_solve(format, case));
                }
            }
            (common, reports)
        }
        Demo::Quadratic { common, c } => {
            let reports = common.formats().into_iter().map(|f| quadratic_roots(f, c)).collect();
            (common, reports)
        }
    };
    for report in reports {
        print!("{}", report.render_digits(common.digits));
    }
    Ok(())
}

fn bench(args: BenchArgs) -> Result<()> {
    let ops = if args.ops.is_empty() { Kernel::shaped().collect() } else { args.ops };
    let sizes = if args.sizes.is_empty() { SizeClass::ALL.to_vec() } else { args.sizes };
    let formats = if args.format.is_empty() { FloatFormat::ALL.to_vec() } else { args.format };
    let config = BenchConfig {
        repetitions: args.reps,
        min_time: std::time::Duration::from_millis(args.min_time_ms),
        ..BenchConfig::default()
    };
    let records = run_bench(&BenchCell::grid(&ops, &formats, &sizes), &config)?;
    print!("{}", to_table(&records));
    if let Some(path) = args.csv {
        std::fs::write(&path, to_csv(&records)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
