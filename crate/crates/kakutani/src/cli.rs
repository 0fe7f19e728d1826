//! Command-line front end: reproducible batch commands over the library.
//!
//! Exit codes: 0 success, 2 usage/parse error, 3 resource limit,
//! 4 verification failure.

use crate::analysis::{
    convergence_csv, convergence_json, convergence_report, counterexample_csv, counterexample_series,
    counterexample_json,
};
use crate::engine::{run as engine_run, stats_csv};
use crate::error::Error;
use crate::partition::{full_subdivide, iterate, Partition};
use crate::ratio::{decimal_string, DEFAULT_SIG_DIGITS};
use crate::rule::SplitRule;
use crate::sequences::{
    lexicographic_reordering, sequence_json, sequence_lines, sequential_random_reordering,
    van_der_corput, BlockEndpoints, PointSequence, Seed,
};
use crate::verify::{run_all, run_suite, SUITE_NAMES};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser)]
#[command(
    name = "kakutani",
    version,
    about = "Uniformly distributed sequences of partitions of [0,1] by iterated rho-refinement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the breakpoints of rho^n omega (or of the rho-adic
    /// partition [rho]^n with --full)
    Generate {
        /// Rule literal, e.g. "1/3,2/3" or "0.5,0.25,0.25"
        #[arg(long)]
        rule: String,
        /// Number of refinement steps n
        #[arg(long)]
        steps: usize,
        /// Subdivide every interval at every step instead of only the
        /// maximal ones
        #[arg(long)]
        full: bool,
        /// Decimal output instead of exact fractions
        #[arg(long)]
        decimal: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-step statistics (k_n, a_n, A_n) of a refinement run
    Stats {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Extreme and star discrepancy of W_n at the given checkpoints
    Discrepancy {
        #[arg(long)]
        rule: String,
        /// Comma-separated step indices, e.g. "1,2,4,8"
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a point sequence: a seeded sequential random reordering, the
    /// lexicographic control, or the van der Corput sequence
    Reorder(ReorderArgs),
    /// The van der Corput sequence (alias of `reorder --vdc`)
    Vdc {
        /// Number of points
        #[arg(long)]
        points: u64,
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the built-in verification suites (exit 0 iff all pass)
    Verify {
        /// Run a single suite by name
        #[arg(long)]
        suite: Option<String>,
    },
    /// The non-convergent starting partition {0, 2/5, 1} experiment
    /// (alias of `verify --suite counterexample`); use --table for the series
    Counterexample {
        /// Print the nu_n([0,2/5)) series instead of pass/fail
        #[arg(long)]
        table: bool,
        /// Steps for the table output
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct ReorderArgs {
    /// Rule literal (required unless --vdc)
    #[arg(long)]
    rule: Option<String>,
    /// Number of partition blocks to reorder
    #[arg(long)]
    blocks: Option<usize>,
    /// Seed for the random reordering (required; all randomness enters
    /// here)
    #[arg(long)]
    seed: Option<u64>,
    /// Deterministic lexicographic (sorted-within-block) order instead
    /// of a random one
    #[arg(long)]
    lexicographic: bool,
    /// Which endpoints form a block in lexicographic order
    #[arg(long, value_enum, default_value_t = EndpointArg::Left)]
    convention: EndpointArg,
    /// Emit the van der Corput sequence instead of a reordering
    #[arg(long)]
    vdc: bool,
    /// Number of points (with --vdc)
    #[arg(long)]
    points: Option<u64>,
    /// Exact p/q output instead of decimals
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum EndpointArg {
    Left,
    Right,
}

fn emit(output: &OutputArgs, text: &str) -> i32 {
    match &output.out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_USAGE
            }
        },
    }
}

fn error_exit(e: &Error) -> i32 {
    eprintln!("error: {e}");
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn partition_lines(p: &Partition, decimal: bool) -> String {
    let mut out = String::new();
    for b in p.breakpoints() {
        if decimal {
            out.push_str(&decimal_string(b, DEFAULT_SIG_DIGITS));
        } else {
            out.push_str(&b.to_string());
        }
        out.push('\n');
    }
    out
}

fn sequence_output(seq: &PointSequence, exact: bool, format: Option<Format>) -> String {
    match format {
        Some(Format::Json) => format!("{}\n", sequence_json(seq)),
        _ => sequence_lines(seq, exact),
    }
}

fn cmd_reorder(args: ReorderArgs) -> i32 {
    if args.vdc {
        let Some(points) = args.points else {
            eprintln!("error: --vdc requires --points");
            return EXIT_USAGE;
        };
        let seq = van_der_corput(points);
        return emit(&args.output, &sequence_output(&seq, args.exact, args.format));
    }
    let Some(rule_literal) = &args.rule else {
        eprintln!("error: --rule is required");
        return EXIT_USAGE;
    };
    let rule = match SplitRule::parse(rule_literal) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    let Some(blocks) = args.blocks else {
        eprintln!("error: --blocks is required");
        return EXIT_USAGE;
    };
    let seq = if args.lexicographic {
        let endpoints = match args.convention {
            EndpointArg::Left => BlockEndpoints::Left,
            EndpointArg::Right => BlockEndpoints::Right,
        };
        lexicographic_reordering(&rule, blocks, endpoints)
    } else {
        // no hidden entropy: the seed must be explicit
        let Some(seed) = args.seed else {
            eprintln!("error: --seed is required for a random reordering");
            return EXIT_USAGE;
        };
        sequential_random_reordering(&rule, blocks, Seed(seed))
    };
    match seq {
        Ok(seq) => emit(&args.output, &sequence_output(&seq, args.exact, args.format)),
        Err(e) => error_exit(&e),
    }
}

fn cmd_verify(suite: Option<String>) -> i32 {
    let results = match &suite {
        None => run_all(),
        Some(name) => match run_suite(name) {
            Some(r) => vec![r],
            None => {
                eprintln!(
                    "error: unknown suite {name:?}; available: {}",
                    SUITE_NAMES.join(", ")
                );
                return EXIT_USAGE;
            }
        },
    };
    let mut all_ok = true;
    for r in &results {
        println!(
            "{} {} — {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_ok &= r.passed;
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

/// Parses `args` (excluding the program name is not expected: pass argv
/// as-is) and runs the selected command, returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses exit code 2 for usage errors, 0 for --help/--version
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            let _ = std::io::stdout().flush();
            return code;
        }
    };
    match cli.command {
        Command::Generate {
            rule,
            steps,
            full,
            decimal,
            output,
        } => {
            let rule = match SplitRule::parse(&rule) {
                Ok(r) => r,
                Err(e) => return error_exit(&e),
            };
            let result = if full {
                full_subdivide(&rule, steps)
            } else {
                iterate(&rule, steps)
            };
            match result {
                Ok(p) => emit(&output, &partition_lines(&p, decimal)),
                Err(e) => error_exit(&e),
            }
        }
        Command::Stats {
            rule,
            steps,
            format,
            output,
        } => {
            let rule = match SplitRule::parse(&rule) {
                Ok(r) => r,
                Err(e) => return error_exit(&e),
            };
            match engine_run(&rule, steps) {
                Ok((_, stats)) => {
                    let text = match format {
                        Format::Csv => stats_csv(&stats),
                        Format::Json => {
                            let rows: Vec<_> = stats
                                .iter()
                                .map(|s| {
                                    json!({
                                        "n": s.n,
                                        "k_n": s.k_n.to_string(),
                                        "a_n": crate::ratio::to_f64(&s.a_n),
                                        "A_n": crate::ratio::to_f64(&s.big_a_n),
                                        "exact": {
                                            "a_n": s.a_n.to_string(),
                                            "A_n": s.big_a_n.to_string(),
                                        }
                                    })
                                })
                                .collect();
                            format!("{}\n", json!(rows))
                        }
                    };
                    emit(&output, &text)
                }
                Err(e) => error_exit(&e),
            }
        }
        Command::Discrepancy {
            rule,
            checkpoints,
            format,
            output,
        } => {
            let rule = match SplitRule::parse(&rule) {
                Ok(r) => r,
                Err(e) => return error_exit(&e),
            };
            match convergence_report(&rule, &checkpoints) {
                Ok(rows) => {
                    let text = match format {
                        Format::Csv => convergence_csv(&rows),
                        Format::Json => format!("{}\n", convergence_json(&rows)),
                    };
                    emit(&output, &text)
                }
                Err(e) => error_exit(&e),
            }
        }
        Command::Reorder(args) => cmd_reorder(args),
        Command::Vdc {
            points,
            exact,
            format,
            output,
        } => {
            let seq = van_der_corput(points);
            emit(&output, &sequence_output(&seq, exact, format))
        }
        Command::Verify { suite } => cmd_verify(suite),
        Command::Counterexample {
            table,
            steps,
            format,
            output,
        } => {
            if !table {
                return cmd_verify(Some("counterexample".into()));
            }
            match counterexample_series(steps) {
                Ok(rows) => {
                    let text = match format {
                        Format::Csv => counterexample_csv(&rows),
                        Format::Json => format!("{}\n", counterexample_json(&rows)),
                    };
                    emit(&output, &text)
                }
                Err(e) => error_exit(&e),
            }
        }
    }
}
