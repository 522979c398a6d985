//! `ehrhart`: compute, verify, and report exact Ehrhart data over files and
//! named polytope families.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage or input
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use ehrhart_core::engine::count_points;
use ehrhart_core::hives::{self, Partition};
use ehrhart_core::rational::format_rat;

use ehrhart_cli::document::PolytopeDocument;
use ehrhart_cli::registry::{self, FamilyInstance};
use ehrhart_cli::report::{self, ReportRow};
use ehrhart_cli::verify;

#[derive(Parser)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart polynomials, h*-vectors and lattice-point counts")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Target {
    /// JSON polytope document
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Family name followed by its parameters, e.g. `--family cube 3`
    #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]")]
    family: Option<Vec<String>>,
}

impl Target {
    fn resolve(&self) -> Result<FamilyInstance> {
        match (&self.file, &self.family) {
            (Some(path), None) => {
                let doc = PolytopeDocument::load(path)?;
                let body = doc.into_polytope()?;
                Ok(FamilyInstance {
                    label: path.display().to_string(),
                    body,
                    closed_form: None,
                    known_hstar: None,
                    interior_hform: None,
                })
            }
            (None, Some(family)) => {
                let (name, params) = family.split_first().context("empty --family")?;
                registry::build(name, params)
            }
            _ => bail!("exactly one of --file or --family is required"),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Count lattice points of the t-th dilate
    Count {
        #[command(flatten)]
        target: Target,
        /// Dilation factor
        #[arg(short = 't', long = "dilation", value_name = "T")]
        t: i64,
    },
    /// Print the exact Ehrhart polynomial (coefficients from t^0 upward)
    Ehrhart {
        #[command(flatten)]
        target: Target,
        /// Also print the h*-vector
        #[arg(long)]
        hstar: bool,
        /// Also print the full analysis row (CSV)
        #[arg(long)]
        analyze: bool,
    },
    /// Run the formula-vs-oracle suite for a family
    Verify {
        /// Family suite to run
        #[arg(long)]
        family: String,
        /// Largest dimension exercised
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Number of randomized trials (where applicable)
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Random seed for the trials
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Littlewood-Richardson coefficients via hive counting
    Lr {
        /// Partition, e.g. `3,2`
        #[arg(long)]
        lambda: String,
        /// Partition
        #[arg(long)]
        mu: String,
        /// Partition
        #[arg(long)]
        nu: String,
        /// Print stretched values c_(t lambda, t mu)^(t nu) for t = 1..=T
        #[arg(long, value_name = "T")]
        stretch: Option<i64>,
        /// Fit and validate a polynomial through the stretched values
        #[arg(long)]
        fit: bool,
    },
    /// Write a CSV analysis report for a catalog suite
    Report {
        /// `full` or `counterexamples`
        #[arg(long)]
        suite: String,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Count { target, t } => {
            if t < 0 {
                bail!("the dilation factor must be nonnegative");
            }
            let fam = target.resolve()?;
            println!("{}", count_points(&fam.body, t)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ehrhart { target, hstar, analyze } => {
            let fam = target.resolve()?;
            let poly = fam.ehrhart()?;
            let coeffs: Vec<String> = (0..=poly.degree().unwrap_or(0))
                .map(|i| format_rat(&poly.coeff(i)))
                .collect();
            println!("{}", coeffs.join(", "));
            if hstar {
                let h = fam.hstar()?;
                let entries: Vec<String> = h.entries().iter().map(|e| e.to_string()).collect();
                println!("h*: {}", entries.join(","));
            }
            if analyze {
                let row = ReportRow::for_family(&fam)?;
                println!("{}", report::REPORT_HEADER);
                println!("{}", row.to_csv_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { family, max_dim, trials, seed } => {
            println!("verify {} (max-dim {}, trials {}, seed {})", family, max_dim, trials, seed);
            let opts = verify::VerifyOptions { max_dim, trials, seed };
            let results = verify::run_family(&family, &opts)?;
            let mut failures = 0usize;
            for r in &results {
                if r.pass {
                    println!("ok   {}", r.name);
                } else {
                    failures += 1;
                    println!("FAIL {}: {}", r.name, r.detail);
                }
            }
            println!("{} checks, {} failures", results.len(), failures);
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Lr { lambda, mu, nu, stretch, fit } => {
            let lambda = parse_partition(&lambda)?;
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            if let Some(t_max) = stretch {
                if t_max < 1 {
                    bail!("--stretch needs a positive bound");
                }
                for v in hives::stretched_values(&lambda, &mu, &nu, t_max) {
                    println!("{}", v);
                }
            } else if !fit {
                println!("{}", hives::hive_count(&lambda, &mu, &nu));
            }
            if fit {
                let bound = hives::default_degree_bound(&lambda, &mu, &nu);
                match hives::stretched_fit(&lambda, &mu, &nu, bound) {
                    hives::FitResult::Fit(f) => {
                        let coeffs: Vec<String> = (0..=f.degree().unwrap_or(0))
                            .map(|i| format_rat(&f.coeff(i)))
                            .collect();
                        println!("fit: {}", coeffs.join(", "));
                    }
                    hives::FitResult::NoFit => println!("no-fit"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Report { suite, out } => {
            let rows = report::write_report(&suite, &out)?;
            println!("wrote {} ({} rows)", out.display(), rows);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_partition(raw: &str) -> Result<Partition> {
    if raw.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<i64> = raw
        .split(',')
        .map(|s| s.trim().parse().with_context(|| format!("bad partition `{}`", raw)))
        .collect::<Result<_>>()?;
    Ok(Partition::new(parts)?)
}
