//! Command-line front end. Exit codes: 0 success, 1 I/O or parse failure,
//! 2 domain error (not essential, resonant, not generic, ...).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use arrangement_lab::error::{Error, Result};
use arrangement_lab::homology::{self, Space};
use arrangement_lab::local_system::{self, LocalSystem};
use arrangement_lab::report::{self, BettiMethod};
use arrangement_lab::{oracle, Arrangement};

#[derive(Parser)]
#[command(
    name = "arrlab",
    about = "Exact invariants of hyperplane arrangement complements",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for generic-hyperplane construction.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Moebius,
    Nbc,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Summary: dimension, hyperplanes, essentiality, invariants.
    Info { arrangement: PathBuf },
    /// One line per flat of L(A): rank, index set, dim, Möbius value.
    Poset { arrangement: PathBuf },
    /// Characteristic polynomial.
    Charpoly { arrangement: PathBuf },
    /// Betti numbers via Möbius values, nbc counting, or both.
    Betti {
        arrangement: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Moebius)]
        method: MethodArg,
        /// Enumeration size gate for the nbc route.
        #[arg(long)]
        oracle_bound: Option<usize>,
    },
    /// Emit the generic section as a new arrangement file (dim l-1).
    Section {
        arrangement: PathBuf,
        /// Write the section arrangement here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Edges of the projective closure inside the hyperplane at infinity.
    DenseEdges { arrangement: PathBuf },
    /// Decide nonresonance of a local system; resonance exits 2.
    CheckNonresonant {
        arrangement: PathBuf,
        #[arg(long)]
        local_system: PathBuf,
    },
    /// Twisted homology dimensions of the full complement.
    Homology {
        arrangement: PathBuf,
        #[arg(long)]
        local_system: PathBuf,
        /// Report the generic section instead of the full complement.
        #[arg(long)]
        section: bool,
    },
    /// Hurewicz surjectivity certificate (dimension bookkeeping).
    CertifyHurewicz {
        arrangement: PathBuf,
        #[arg(long)]
        local_system: PathBuf,
    },
    /// Signed Euler characteristic of the generic section.
    EulerPositivity { arrangement: PathBuf },
    /// Non-vanishing witness for the k-dimensional generic section.
    Homotopy {
        arrangement: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Run all cross-check oracles on the arrangement.
    OracleCheck {
        arrangement: PathBuf,
        #[arg(long)]
        oracle_bound: Option<usize>,
    },
}

fn read_arrangement(path: &Path) -> Result<Arrangement> {
    Arrangement::parse(&std::fs::read_to_string(path)?)
}

fn read_local_system(path: &Path, a: &Arrangement) -> Result<LocalSystem> {
    LocalSystem::parse(&std::fs::read_to_string(path)?, a)
}

fn emit<T: Serialize>(format: Format, report: &T, text: String) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serializes")
            );
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Info { arrangement } => {
            let a = read_arrangement(arrangement)?;
            let r = report::info(&a);
            emit(cli.format, &r, r.text());
        }
        Command::Poset { arrangement } => {
            let a = read_arrangement(arrangement)?;
            let r = report::poset_report(&a);
            emit(cli.format, &r, r.text());
        }
        Command::Charpoly { arrangement } => {
            let a = read_arrangement(arrangement)?;
            let r = report::charpoly(&a);
            emit(cli.format, &r, r.text());
        }
        Command::Betti {
            arrangement,
            method,
            oracle_bound,
        } => {
            let a = read_arrangement(arrangement)?;
            let method = match method {
                MethodArg::Moebius => BettiMethod::Moebius,
                MethodArg::Nbc => BettiMethod::Nbc,
                MethodArg::Both => BettiMethod::Both,
            };
            let bound = oracle_bound.unwrap_or(arrangement_lab::os_algebra::DEFAULT_ENUM_BOUND);
            let r = report::betti(&a, method, bound)?;
            emit(cli.format, &r, r.text());
        }
        Command::Section {
            arrangement,
            output,
        } => {
            let a = read_arrangement(arrangement)?;
            let u = a.random_generic_hyperplane(cli.seed)?;
            let section = a.section(&u)?;
            eprintln!(
                "section by generic hyperplane: normal=({}) offset={}",
                u.normal
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                u.offset
            );
            let json = section.to_json();
            match output {
                Some(path) => std::fs::write(path, json + "\n")?,
                None => println!("{json}"),
            }
        }
        Command::DenseEdges { arrangement } => {
            let a = read_arrangement(arrangement)?;
            let r = report::dense_edges(&a)?;
            emit(cli.format, &r, r.text());
        }
        Command::CheckNonresonant {
            arrangement,
            local_system,
        } => {
            let a = read_arrangement(arrangement)?;
            let l = read_local_system(local_system, &a)?;
            let verdict = local_system::nonresonance_check(&a, &l)?;
            let r = report::nonresonance(&a, &verdict);
            emit(cli.format, &r, r.text());
            if !verdict.nonresonant {
                return Err(Error::Resonant(verdict));
            }
        }
        Command::Homology {
            arrangement,
            local_system,
            section,
        } => {
            let a = read_arrangement(arrangement)?;
            let l = read_local_system(local_system, &a)?;
            let space = if *section {
                Space::GenericSection
            } else {
                Space::FullComplement
            };
            let r = report::homology(&a, &l, space)?;
            emit(cli.format, &r, r.text());
        }
        Command::CertifyHurewicz {
            arrangement,
            local_system,
        } => {
            let a = read_arrangement(arrangement)?;
            let l = read_local_system(local_system, &a)?;
            let cert = homology::hurewicz_certificate(&a, &l)?;
            let r = report::hurewicz(&a, &cert);
            emit(cli.format, &r, r.text());
        }
        Command::EulerPositivity { arrangement } => {
            let a = read_arrangement(arrangement)?;
            let (value, positive) = homology::euler_positivity(&a)?;
            let r = report::EulerPositivityReport { value, positive };
            emit(cli.format, &r, r.text());
        }
        Command::Homotopy { arrangement, k } => {
            let a = read_arrangement(arrangement)?;
            let (euler, nonvanishing) = homology::homotopy_nonvanishing(&a, *k)?;
            let r = report::HomotopyReport {
                k: *k,
                euler,
                nonvanishing,
            };
            emit(cli.format, &r, r.text());
        }
        Command::OracleCheck {
            arrangement,
            oracle_bound,
        } => {
            let a = read_arrangement(arrangement)?;
            let bound = oracle::effective_bound(*oracle_bound);
            let r = report::oracle_check(&a, bound, cli.seed)?;
            let passed = r.all_passed;
            emit(cli.format, &r, r.text());
            if !passed {
                return Err(Error::MalformedInput(
                    "oracle disagreement (library bug)".into(),
                ));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
