//! Command-line front end: sequence printing, determinant queries,
//! continued-fraction inspection, peeling-step traces, and named
//! verification suites with machine-readable reports.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hankelcf::closedforms::{
    cigler_det, expected_hfrac, main_det, CiglerVariant,
};
use hankelcf::exactnum::RatFunc;
use hankelcf::hankel::{build_hankel, det_exact};
use hankelcf::hfrac::{hfrac_eval, hfrac_expand};
use hankelcf::quadratic::{family_quadratic, iterate_next_abc};
use hankelcf::sequences::{conv_power_seq, family_entries, family_series, FamilySpec};

use hankelcf_cli::{render_report, run_suite, Bounds};

#[derive(Parser)]
#[command(
    name = "hankelcf",
    version,
    about = "Exact Hankel determinants and continued fractions of Narayana-type families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print sequence entries.
    Seq {
        #[command(subcommand)]
        which: SeqCommand,
    },
    /// Brute-force Hankel determinants.
    Det(DetArgs),
    /// Closed-form values.
    Closed {
        #[command(subcommand)]
        which: ClosedCommand,
    },
    /// Hankel continued fractions.
    Hfrac {
        #[command(subcommand)]
        which: HfracCommand,
    },
    /// Trace the quadratic peeling iteration on a family.
    Nextabc {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        steps: usize,
    },
    /// Run a named verification suite and print its report.
    Verify {
        /// One of: main-dets, cigler, sumcc, hfrac-lemmas, nextabc-q2,
        /// nextabc-q3, beta-lucas, fib-lucas-closed, odd-case, roundtrip,
        /// zero-pattern.
        suite: String,
        #[arg(long)]
        m_min: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        j_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Also write the report to this path.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Convolution powers of the Narayana polynomials (tau = 1 is the plain
    /// sequence); prints entries 0..=n.
    Narayana {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        tau: usize,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct DetArgs {
    #[command(subcommand)]
    cigler: Option<DetCommand>,
    /// Half convolution order of the family.
    #[arg(long, required = true)]
    m: Option<usize>,
    /// Shift of the family (0..=3).
    #[arg(long, required = true)]
    shift: Option<usize>,
    /// Matrix size N.
    #[arg(long, required = true)]
    size: Option<usize>,
}

#[derive(Subcommand)]
enum DetCommand {
    /// Hankel determinant of a fixed convolution power (tau in {3, 4, 6}).
    Cigler {
        #[arg(long, value_parser = ["3", "4", "6"])]
        variant: String,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Subcommand)]
enum ClosedCommand {
    /// Piecewise closed form of a family determinant.
    Det {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Subcommand)]
enum HfracCommand {
    /// Expand the family series generically, one quotient per line.
    Expand {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        order: usize,
    },
    /// Print the expected (closed-form) fraction of a family.
    Expected {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        terms: usize,
    },
    /// Evaluate the expected fraction back to a series.
    Eval {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Seq {
            which: SeqCommand::Narayana { n, tau },
        } => {
            let entries = conv_power_seq(tau, n + 1).map_err(|e| e.to_string())?;
            for (i, poly) in entries.iter().enumerate() {
                println!("{i}\t{poly}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Det(args) => {
            if let Some(DetCommand::Cigler { variant, size }) = args.cigler {
                let variant = match variant.as_str() {
                    "3" => CiglerVariant::Tau3,
                    "4" => CiglerVariant::Tau4,
                    _ => CiglerVariant::Tau6,
                };
                println!("{}", cigler_det(variant, size));
                return Ok(ExitCode::SUCCESS);
            }
            let (m, shift, size) = (
                args.m.expect("required"),
                args.shift.expect("required"),
                args.size.expect("required"),
            );
            let spec = FamilySpec::new(m, shift).map_err(|e| e.to_string())?;
            let entries = family_entries(&spec, if size == 0 { 1 } else { 2 * size - 1 });
            let det = det_exact(&build_hankel(
                |i| RatFunc::from_poly(entries[i].clone()),
                size,
            ));
            println!("{det}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Closed {
            which: ClosedCommand::Det { m, shift, size },
        } => {
            let spec = FamilySpec::new(m, shift).map_err(|e| e.to_string())?;
            let case = main_det(&spec, size).map_err(|e| e.to_string())?;
            println!("{}\tcase={}", case.value, case.case_label);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hfrac { which } => {
            match which {
                HfracCommand::Expand {
                    m,
                    shift,
                    terms,
                    order,
                } => {
                    let spec = FamilySpec::new(m, shift).map_err(|e| e.to_string())?;
                    let series = family_series(&spec, order);
                    let h = hfrac_expand(&series, 2, terms).map_err(|e| e.to_string())?;
                    println!("{h}");
                }
                HfracCommand::Expected { m, shift, terms } => {
                    let spec = FamilySpec::new(m, shift).map_err(|e| e.to_string())?;
                    let h = expected_hfrac(&spec, terms).map_err(|e| e.to_string())?;
                    println!("{h}");
                }
                HfracCommand::Eval {
                    m,
                    shift,
                    terms,
                    order,
                } => {
                    let spec = FamilySpec::new(m, shift).map_err(|e| e.to_string())?;
                    let h = expected_hfrac(&spec, terms).map_err(|e| e.to_string())?;
                    println!("{}", hfrac_eval(&h, order));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nextabc { m, shift, steps } => {
            let start = family_quadratic(m, shift).map_err(|e| e.to_string())?;
            let tuples = iterate_next_abc(&start, steps).map_err(|e| e.to_string())?;
            for (n, tuple) in tuples.iter().enumerate() {
                println!("step={n}\t{tuple}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            m_min,
            m_max,
            n_max,
            j_max,
            order,
            report,
        } => {
            let bounds = Bounds {
                m_min,
                m_max,
                n_max,
                j_max,
                order,
            };
            let records = run_suite(&suite, &bounds)?;
            let text = render_report(&records);
            print!("{text}");
            if let Some(path) = report {
                let mut file = std::fs::File::create(&path)
                    .map_err(|e| format!("cannot write report {}: {e}", path.display()))?;
                file.write_all(text.as_bytes())
                    .map_err(|e| format!("cannot write report {}: {e}", path.display()))?;
            }
            if records.iter().all(|r| r.passed()) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}
