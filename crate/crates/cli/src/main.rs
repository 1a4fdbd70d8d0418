//! `statemap`: construct, apply, verify, and benchmark the closed-form
//! single-exponential unitary mapping between pure states.
//!
//! Exit codes: 0 success, 1 input error, 2 numerical/property failure.

mod bench;
mod io;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statemap::exponential::{exp_apply, exp_matrix, map_with_generator};
use statemap::generator::CLASSIFY_EPS;
use statemap::oracle::dense_expm;
use statemap::{Branch, CaseTag, Generator, StateVector};

use io::{InvariantsOut, MappingReport, StatePairFile};

#[derive(Parser)]
#[command(name = "statemap", version, about)]
struct Cli {
    /// Override the default residual thresholds.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Seed for all randomized commands.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Relative case-classification threshold on squared invariants.
    #[arg(long, global = true, default_value_t = CLASSIFY_EPS)]
    classify_eps: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Short,
    Long,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Short => Branch::ShortWay,
            BranchArg::Long => Branch::LongWay,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the mapping for a state-pair file and emit a report.
    Map {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "short")]
        branch: BranchArg,
        /// Include the dense matrix of the unitary in the report.
        #[arg(long)]
        emit_matrix: bool,
        /// Cross-check against the dense exponential oracle.
        #[arg(long)]
        oracle: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply the mapping unitary to a third vector.
    Apply {
        input: PathBuf,
        vector: PathBuf,
        /// Use this angle instead of the solved one.
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long, value_enum, default_value = "short")]
        branch: BranchArg,
    },
    /// Run the identity suite on a pair file or on random pairs.
    Verify {
        input: Option<PathBuf>,
        /// Comma-separated dimensions for random pairs, e.g. 2,4,8.
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the closed-form path against the dense baselines.
    Bench {
        /// Comma-separated dimensions, e.g. 64,256,1024.
        #[arg(long)]
        dims: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the records as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn input_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn read_pair(path: &PathBuf) -> Result<(StateVector, StateVector), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file: StatePairFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.states()
}

fn parse_dims(spec: &str) -> Result<Vec<usize>, String> {
    let dims: Result<Vec<usize>, _> = spec
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<usize>())
        .collect();
    let dims = dims.map_err(|e| format!("invalid dimension list: {e}"))?;
    if dims.is_empty() {
        return Err("empty dimension list".into());
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(format!("dimension {d} below minimum of 2"));
    }
    Ok(dims)
}

fn write_or_print(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_map(
    cli_tol: Option<f64>,
    seed: u64,
    classify_eps: f64,
    input: PathBuf,
    branch: Branch,
    emit_matrix: bool,
    oracle: bool,
    output: Option<PathBuf>,
) -> ExitCode {
    let (a, b) = match read_pair(&input) {
        Ok(p) => p,
        Err(e) => return input_error(&e),
    };
    let gen = match Generator::with_eps(a.clone(), b.clone(), classify_eps) {
        Ok(g) => g,
        Err(e) => return input_error(&e.to_string()),
    };
    let (res, u) = map_with_generator(gen.clone(), branch);
    let ua = u.apply(&a).unwrap();
    let residual_map = ua.sub(&b.scale(res.scale)).unwrap().norm() / a.norm();

    // norm preservation probed on seeded random vectors
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut unitarity_residual: f64 = 0.0;
    for _ in 0..8 {
        let c = verify::random_state(&mut r, a.dimension());
        let uc = u.apply(&c).unwrap();
        unitarity_residual = unitarity_residual.max((uc.norm() - c.norm()).abs() / c.norm());
    }

    let oracle_frobenius_distance = if oracle && res.case_tag != CaseTag::RealCollinear {
        let normalizer = res.exponent_normalizer.unwrap();
        let closed = exp_matrix(&gen, res.theta_prime).unwrap();
        let dense = dense_expm(
            &gen.dense_matrix()
                .scale(Complex64::new(res.theta_prime / normalizer, 0.0)),
        );
        Some(closed.frobenius_distance(&dense))
    } else {
        None
    };

    let matrix = if emit_matrix {
        let m = exp_matrix(&gen, res.theta_prime).unwrap();
        let d = m.dimension();
        Some(
            (0..d)
                .map(|i| (0..d).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
                .collect(),
        )
    } else {
        None
    };

    let report = MappingReport {
        case_tag: res.case_tag.as_str().to_string(),
        invariants: InvariantsOut {
            g: gen.invariants().g,
            sigma: gen.invariants().sigma,
            g_sq: gen.invariants().g_sq,
            gamma: gen.invariants().gamma,
        },
        theta_prime: res.theta_prime,
        branch: res.branch.as_str().to_string(),
        scale: [res.scale.re, res.scale.im],
        residual_map,
        unitarity_residual,
        oracle_frobenius_distance,
        matrix,
    };
    let text = serde_json::to_string_pretty(&report).unwrap();
    if let Err(e) = write_or_print(&output, &text) {
        return input_error(&e);
    }
    if residual_map > cli_tol.unwrap_or(1e-8) {
        eprintln!("error: mapping residual {residual_map:e} exceeds tolerance");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn cmd_apply(
    classify_eps: f64,
    input: PathBuf,
    vector: PathBuf,
    theta: Option<f64>,
    branch: Branch,
) -> ExitCode {
    let (a, b) = match read_pair(&input) {
        Ok(p) => p,
        Err(e) => return input_error(&e),
    };
    let text = match std::fs::read_to_string(&vector) {
        Ok(t) => t,
        Err(e) => return input_error(&format!("{}: {e}", vector.display())),
    };
    let pairs: Vec<[f64; 2]> = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return input_error(&format!("{}: {e}", vector.display())),
    };
    let c = match io::parse_state(&pairs) {
        Ok(c) => c,
        Err(e) => return input_error(&e),
    };
    let gen = match Generator::with_eps(a, b, classify_eps) {
        Ok(g) => g,
        Err(e) => return input_error(&e.to_string()),
    };
    if c.dimension() != gen.dimension() {
        return input_error(&format!(
            "dimension mismatch: pair has {}, vector has {}",
            gen.dimension(),
            c.dimension()
        ));
    }
    let angle = theta.unwrap_or_else(|| statemap::exponential::solve_angle(&gen, branch));
    let out = exp_apply(&gen, angle, &c).unwrap();
    println!("{}", serde_json::to_string(&io::to_pairs(&out)).unwrap());
    ExitCode::SUCCESS
}

fn cmd_verify(
    tolerance: Option<f64>,
    seed: u64,
    input: Option<PathBuf>,
    random: Option<String>,
    trials: usize,
    output: Option<PathBuf>,
) -> ExitCode {
    let pairs = match (&input, &random) {
        (Some(path), _) => match read_pair(path) {
            Ok(p) => {
                if let Err(e) = Generator::new(p.0.clone(), p.1.clone()) {
                    return input_error(&e.to_string());
                }
                vec![p]
            }
            Err(e) => return input_error(&e),
        },
        (None, Some(spec)) => {
            let dims = match parse_dims(spec) {
                Ok(d) => d,
                Err(e) => return input_error(&e),
            };
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            dims.iter()
                .map(|&d| {
                    (
                        verify::random_state(&mut r, d),
                        verify::random_state(&mut r, d),
                    )
                })
                .collect()
        }
        (None, None) => return input_error("provide an input file or --random dims"),
    };
    let report = verify::run(&pairs, trials, seed, tolerance);
    let text = serde_json::to_string_pretty(&report).unwrap();
    if let Err(e) = write_or_print(&output, &text) {
        return input_error(&e);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn cmd_bench(
    seed: u64,
    dims: String,
    trials: usize,
    output: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> ExitCode {
    let dims = match parse_dims(&dims) {
        Ok(d) => d,
        Err(e) => return input_error(&e),
    };
    if trials == 0 {
        return input_error("trials must be positive");
    }
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let report = bench::run(&dims, trials, &mut r);
    let text = serde_json::to_string_pretty(&report).unwrap();
    if let Err(e) = write_or_print(&output, &text) {
        return input_error(&e);
    }
    if let Some(path) = csv {
        if let Err(e) = std::fs::write(&path, io::bench_csv(&report)) {
            return input_error(&format!("{}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Map {
            input,
            branch,
            emit_matrix,
            oracle,
            output,
        } => cmd_map(
            cli.tolerance,
            cli.seed,
            cli.classify_eps,
            input,
            branch.into(),
            emit_matrix,
            oracle,
            output,
        ),
        Command::Apply {
            input,
            vector,
            theta,
            branch,
        } => cmd_apply(cli.classify_eps, input, vector, theta, branch.into()),
        Command::Verify {
            input,
            random,
            trials,
            output,
        } => cmd_verify(cli.tolerance, cli.seed, input, random, trials, output),
        Command::Bench {
            dims,
            trials,
            output,
            csv,
        } => cmd_bench(cli.seed, dims, trials, output, csv),
    }
}
