//! `symthick`: exact Specht-module computations, density scans, and
//! non-thickness certificates from the command line.
//!
//! Exit codes: 0 verified/classified, 1 refuted with a counterexample,
//! 2 usage or computation error, 3 infeasible-scale (sampled-only) result.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::json;

use symthick_core::density;
use symthick_core::specht::SpechtModule;
use symthick_core::symcomb::{standard_tableaux, Partition, Permutation, Tableau};
use symthick_core::thickness::{
    classify_thick_with, construct_certificate, cover_design, diagram_bounds, exact_min_cover,
    propagate, verify_certificate_with, NonThickCertificate, Verdict, VerifyMode, VerifyOptions,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable indented JSON.
    Pretty,
    /// Single-line JSON.
    Compact,
}

#[derive(Parser)]
#[command(
    name = "symthick",
    version,
    about = "Specht modules of S_n: exact dimensions, characters, density, and non-thickness certificates"
)]
struct Cli {
    /// Cap the number of worker threads for the parallel verifier.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Prime modulus for sampled-mode rank screening.
    #[arg(long, global = true, default_value_t = symthick_core::exactla::DEFAULT_PRIME)]
    prime: u64,

    /// Seed for sampled verification.
    #[arg(long, global = true, default_value_t = symthick_core::thickness::DEFAULT_SEED)]
    seed: u64,

    /// Sample count for sampled verification.
    #[arg(long, global = true, default_value_t = symthick_core::thickness::DEFAULT_SAMPLES)]
    samples: u64,

    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Dimension d(λ) by hook lengths.
    Dim { shape: String },
    /// Enumerate tabloids of shape λ (row-sorted representatives), or the
    /// standard-tableau basis with --standard.
    Tableaux {
        shape: String,
        #[arg(long)]
        standard: bool,
    },
    /// Straighten a tableau (e.g. "[[3,2,5],[4,1]]") to standard-basis
    /// coordinates.
    Straighten { tableau: String },
    /// Exact action matrix of σ (one-line images, e.g. "2,1,3,4,5") on V_λ.
    Matrix { shape: String, sigma: String },
    /// Character of V_λ on all conjugacy classes.
    Character { shape: String },
    /// Density verdict for V_λ (all m), or a single m with --m.
    Density {
        shape: String,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Pair-covering triple design on {1..n}; --exact computes the true
    /// minimum size (n ≤ 7).
    Cover {
        n: usize,
        #[arg(long)]
        exact: bool,
    },
    /// Construct the non-thickness certificate for λ and print it as JSON.
    Certificate {
        shape: String,
        /// Also write the JSON to this file.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Verify a certificate JSON file. Exit 0 on full verification, 1 on a
    /// counterexample, 3 when only a sampled sweep is feasible.
    Verify { path: PathBuf },
    /// Classify one shape: dense-and-thick, or not thick with a verified
    /// certificate.
    Classify { shape: String },
    /// Classify every partition of n.
    ClassifyAll { n: usize },
    /// Certified partial bounds on the thick diagram of V_λ.
    Diagram { shape: String },
    /// Propagate one exclusion: the m-range excluded by (i,j) at dimension d.
    Propagate { i: usize, j: usize, d: usize },
}

fn emit(format: Format, value: &serde_json::Value) {
    let out = match format {
        Format::Pretty => serde_json::to_string_pretty(value).expect("serializable"),
        Format::Compact => serde_json::to_string(value).expect("serializable"),
    };
    println!("{out}");
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<u8, String> {
    let opts = VerifyOptions {
        prime: cli.prime,
        seed: cli.seed,
        samples: cli.samples,
    };
    match &cli.command {
        Command::Dim { shape } => {
            let lam = parse_shape(shape)?;
            emit(
                cli.format,
                &json!({ "shape": lam.to_string(), "dim": lam.hook_dimension() }),
            );
            Ok(0)
        }
        Command::Tableaux { shape, standard } => {
            let lam = parse_shape(shape)?;
            let list: Vec<String> = if *standard {
                let entries: Vec<u8> = (1..=lam.n() as u8).collect();
                standard_tableaux(&lam, &entries)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|t| t.to_string())
                    .collect()
            } else {
                let m = SpechtModule::new(&lam).map_err(|e| e.to_string())?;
                (0..m.tabloid_count() as u32)
                    .map(|i| m.tabloid(i).to_string())
                    .collect()
            };
            emit(
                cli.format,
                &json!({
                    "shape": lam.to_string(),
                    "standard": standard,
                    "count": list.len(),
                    "tableaux": list,
                }),
            );
            Ok(0)
        }
        Command::Straighten { tableau } => {
            let t: Tableau = tableau.parse().map_err(|e: symthick_core::Error| e.to_string())?;
            let m = SpechtModule::new(&t.shape()).map_err(|e| e.to_string())?;
            let v = m.straighten(&t).map_err(|e| e.to_string())?;
            let coords: serde_json::Map<String, serde_json::Value> = v
                .coords()
                .into_iter()
                .map(|(b, c)| (b.to_string(), json!(c.to_string())))
                .collect();
            emit(
                cli.format,
                &json!({ "tableau": t.to_string(), "coordinates": coords }),
            );
            Ok(0)
        }
        Command::Matrix { shape, sigma } => {
            let lam = parse_shape(shape)?;
            let s: Permutation = sigma.parse().map_err(|e: symthick_core::Error| e.to_string())?;
            let m = SpechtModule::new(&lam).map_err(|e| e.to_string())?;
            let mat = m.action_matrix(&s).map_err(|e| e.to_string())?;
            let rows: Vec<Vec<String>> = (0..mat.rows())
                .map(|r| mat.row(r).iter().map(|x| x.to_string()).collect())
                .collect();
            emit(
                cli.format,
                &json!({
                    "shape": lam.to_string(),
                    "sigma": s.to_string(),
                    "dim": mat.rows(),
                    "matrix": rows,
                }),
            );
            Ok(0)
        }
        Command::Character { shape } => {
            let lam = parse_shape(shape)?;
            let chi = density::character(&lam).map_err(|e| e.to_string())?;
            emit(cli.format, &chi.to_json());
            Ok(0)
        }
        Command::Density { shape, m } => {
            let lam = parse_shape(shape)?;
            match m {
                Some(m) => {
                    let dense = density::is_m_dense(&lam, *m).map_err(|e| e.to_string())?;
                    emit(
                        cli.format,
                        &json!({ "shape": lam.to_string(), "m": m, "m_dense": dense }),
                    );
                }
                None => {
                    let v = density::is_dense(&lam).map_err(|e| e.to_string())?;
                    emit(
                        cli.format,
                        &json!({
                            "shape": lam.to_string(),
                            "dense": v.dense,
                            "witness": v.witness,
                            "filter_hit": v.filter_hit,
                        }),
                    );
                }
            }
            Ok(0)
        }
        Command::Cover { n, exact } => {
            let design = cover_design(*n).map_err(|e| e.to_string())?;
            let minimum = if *exact {
                Some(exact_min_cover(*n).map_err(|e| e.to_string())?)
            } else {
                None
            };
            emit(
                cli.format,
                &json!({
                    "n": n,
                    "size": design.size(),
                    "covers_all_edges": design.covers_all_edges(),
                    "triples": design.triples,
                    "exact_minimum": minimum,
                }),
            );
            Ok(0)
        }
        Command::Certificate { shape, output } => {
            let lam = parse_shape(shape)?;
            let cert = construct_certificate(&lam).map_err(|e| e.to_string())?;
            let value = serde_json::to_value(&cert).expect("certificate serializes");
            if let Some(path) = output {
                std::fs::write(path, cert.to_json()).map_err(|e| e.to_string())?;
            }
            emit(cli.format, &value);
            Ok(0)
        }
        Command::Verify { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let cert = NonThickCertificate::from_json(&text).map_err(|e| e.to_string())?;
            let report = verify_certificate_with(&cert, &opts).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                &serde_json::to_value(&report).expect("report serializes"),
            );
            eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
            if report.counterexample.is_some() {
                Ok(1)
            } else if report.mode == VerifyMode::Sampled {
                Ok(3)
            } else if report.verified {
                Ok(0)
            } else {
                Ok(1)
            }
        }
        Command::Classify { shape } => {
            let lam = parse_shape(shape)?;
            let c = classify_thick_with(&lam, &opts).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                &serde_json::to_value(&c).expect("classification serializes"),
            );
            match &c.verdict {
                Verdict::NotThick { report, .. } if report.counterexample.is_some() => Ok(1),
                Verdict::NotThick { report, .. } if report.mode == VerifyMode::Sampled => Ok(3),
                _ => Ok(0),
            }
        }
        Command::ClassifyAll { n } => {
            let shapes = symthick_core::symcomb::partitions_of(*n);
            let mut out = Vec::with_capacity(shapes.len());
            let mut sampled = false;
            for lam in &shapes {
                let c = classify_thick_with(lam, &opts).map_err(|e| e.to_string())?;
                if let Verdict::NotThick { report, .. } = &c.verdict {
                    if report.counterexample.is_some() {
                        return Err(format!("certificate for {lam} was refuted"));
                    }
                    sampled |= report.mode == VerifyMode::Sampled;
                }
                out.push(serde_json::to_value(&c).expect("classification serializes"));
            }
            emit(cli.format, &json!({ "n": n, "classifications": out }));
            Ok(if sampled { 3 } else { 0 })
        }
        Command::Diagram { shape } => {
            let lam = parse_shape(shape)?;
            let d = diagram_bounds(&lam).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                &serde_json::to_value(&d).expect("diagram serializes"),
            );
            Ok(0)
        }
        Command::Propagate { i, j, d } => {
            let ms = propagate(*i, *j, *d).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                &json!({ "i": i, "j": j, "dim": d, "excluded_m": ms }),
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("{}", json!({ "error": format!("thread pool: {e}") }));
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(code) => {
            eprintln!("total: {:.3}s", start.elapsed().as_secs_f64());
            ExitCode::from(code)
        }
        Err(msg) => {
            let _ = writeln!(
                std::io::stderr(),
                "{}",
                json!({ "error": msg })
            );
            ExitCode::from(2)
        }
    }
}
