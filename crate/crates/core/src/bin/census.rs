use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lehmer_modp::algnum::{growth_csv, growth_profile, make_algebraic};
use lehmer_modp::census::{scan, verify, Claim, ScanConfig, ScanKind, VerifyParams};
use lehmer_modp::exceptional::exceptional_primes;
use lehmer_modp::mahler::{check_l1_bounds, find_roots, mahler_measure, Check};
use lehmer_modp::{Error, IntPoly};

/// Prime censuses and claim checks around Lehmer's problem mod p.
///
/// Polynomials are written as comma-separated integer coefficients in
/// ascending degree, e.g. `-1,-1,1` for x² − x − 1.
#[derive(Parser)]
#[command(name = "census", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bad,
    VeryBad,
    Wild,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Thm1,
    Eq1,
    Claim1,
    Claim2,
    OrderLemma,
    Inclusions,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every prime up to X and append records to a JSONL file.
    Scan {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "max-x")]
        max_x: u64,
        #[arg(long, default_value_t = 0.3)]
        delta: f64,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long = "c-wild", default_value_t = 2.0)]
        c_wild: f64,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one claim verifier and print a JSON pass/fail report.
    Verify {
        #[arg(long, value_enum)]
        claim: ClaimArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<IntPoly>,
        #[arg(long)]
        d: Option<usize>,
        /// K for eq1/inclusions; number of sampled primes for claim1.
        #[arg(long)]
        k: Option<usize>,
        /// X for order-lemma; largest prime for inclusions.
        #[arg(long = "x-max")]
        x_max: Option<u64>,
    },
    /// CSV: Mahler measure with error bound and ℓ¹ checks, then the roots.
    Mahler {
        #[arg(long, allow_hyphen_values = true)]
        poly: IntPoly,
    },
    /// CSV of |S_d(α)| and its d-th root for d = 1..=d-max.
    Growth {
        #[arg(long, allow_hyphen_values = true)]
        alpha: IntPoly,
        #[arg(long = "d-max")]
        d_max: usize,
    },
    /// The d-exceptional primes as JSON.
    Exceptional {
        #[arg(long)]
        d: usize,
    },
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> lehmer_modp::Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn check_name(c: Check) -> &'static str {
    match c {
        Check::Holds => "holds",
        Check::WithinErrorBand => "within_error_band",
        Check::Fails => "fails",
    }
}

enum Outcome {
    Pass,
    Fail,
}

fn run(cli: Cli) -> lehmer_modp::Result<Outcome> {
    match cli.command {
        Command::Scan {
            kind,
            max_x,
            delta,
            epsilon,
            c_wild,
            workers,
            out,
        } => {
            let cfg = ScanConfig {
                kind: match kind {
                    Kind::Bad => ScanKind::Bad,
                    Kind::VeryBad => ScanKind::VeryBad,
                    Kind::Wild => ScanKind::Wild,
                },
                max_x,
                delta,
                epsilon,
                c_wild,
                workers: workers
                    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
                out,
            };
            emit(&format!("{}\n", scan(&cfg)?.to_json()))?;
            Ok(Outcome::Pass)
        }
        Command::Verify {
            claim,
            alpha,
            d,
            k,
            x_max,
        } => {
            let claim = match claim {
                ClaimArg::Thm1 => Claim::Thm1,
                ClaimArg::Eq1 => Claim::Eq1,
                ClaimArg::Claim1 => Claim::Claim1,
                ClaimArg::Claim2 => Claim::Claim2,
                ClaimArg::OrderLemma => Claim::OrderLemma,
                ClaimArg::Inclusions => Claim::Inclusions,
            };
            let r = verify(claim, &VerifyParams { alpha, d, k, x_max })?;
            emit(&format!("{}\n", serde_json::to_string_pretty(&r)?))?;
            Ok(if r.passed { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Mahler { poly } => {
            let m = mahler_measure(&poly)?;
            let b = check_l1_bounds(&poly)?;
            let mut csv = format!(
                "mahler,error_bound,m_le_l1,l1_le_2deg_m\n{:.15},{:.3e},{},{}\n\nre,im\n",
                m.value,
                m.error_bound,
                check_name(b.m_le_l1),
                check_name(b.l1_le_2deg_m)
            );
            if poly.degree().is_some_and(|d| d >= 1) {
                for z in find_roots(&poly)?.roots {
                    csv.push_str(&format!("{:.15},{:.15}\n", z.re, z.im));
                }
            }
            emit(&csv)?;
            Ok(Outcome::Pass)
        }
        Command::Growth { alpha, d_max } => {
            let a = make_algebraic(alpha)?;
            let rows = growth_profile(&a, d_max)?;
            emit(&growth_csv(&rows))?;
            Ok(if rows.iter().all(|r| r.lower_bound_ok) {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Exceptional { d } => {
            emit(&format!("{}\n", serde_json::to_string_pretty(&exceptional_primes(d)?)?))?;
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParam(_)
                | Error::ParsePoly { .. }
                | Error::Reducible { .. }
                | Error::Imprimitive { .. }
                | Error::ConstantMinpoly(_)
                | Error::ResourceCap { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
