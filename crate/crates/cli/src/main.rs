//! `pnorm`: operator p-norm bounds, classification, profiles and matrix
//! generation from the command line.

mod generate;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pnorm::io::MatrixFile;
use pnorm::structured::{
    block_diagonal_split, classify_circulant_la, doubly_balanced_norm, Circulant, HankelMod, TensorRankOne,
    UnitaryPermutation,
};
use pnorm::{
    default_grid, is_log_affine, oracle_norm, profile_with, BoundOptions, CMatrix, Certifier, Exponent, NormError,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pnorm", version, about = "Operator p-norms of complex square matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified lower and upper bounds, one JSON line per exponent.
    Bounds {
        file: PathBuf,
        /// Comma-separated exponents, each >= 1 or "inf".
        #[arg(long, default_value = "1,2,inf")]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = pnorm::estimator::DEFAULT_RESTARTS)]
        restarts: usize,
    },
    /// Structural recognizers and the logarithmic-affine anchor test.
    Classify { file: PathBuf },
    /// Bounds over a grid of exponents, written as CSV.
    Profile {
        file: PathBuf,
        /// "default" or a comma-separated increasing list containing 1, 2 and inf.
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Writes a structured matrix. Families: circulant, hankel,
    /// unitary-permutation, magic3, magic4, tensor, direct-sum.
    Generate(generate::Args),
    /// Brute-force angular search for real matrices up to 3x3.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 720)]
        resolution: usize,
    },
}

/// Failure with its exit code: 2 for usage and parse errors, 3 for I/O.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<NormError> for CliError {
    fn from(e: NormError) -> Self {
        match e {
            NormError::Io(m) => CliError::Io(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) | CliError::Io(m) => eprintln!("pnorm: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Bounds { file, p, seed, restarts } => bounds(&file, &p, seed, restarts),
        Command::Classify { file } => classify(&file),
        Command::Profile { file, grid, out, seed } => profile(&file, &grid, &out, seed),
        Command::Generate(args) => generate::run(&args),
        Command::Oracle { file, p, resolution } => oracle(&file, &p, resolution),
    }
}

fn emit(v: &Value) {
    println!("{v}");
}

fn read_matrix(path: &Path) -> CliResult<CMatrix> {
    Ok(MatrixFile::read(path)?.matrix)
}

fn read_square(path: &Path) -> CliResult<CMatrix> {
    let a = read_matrix(path)?;
    a.require_square()?;
    Ok(a)
}

pub(crate) fn parse_exponents(list: &str) -> CliResult<Vec<Exponent>> {
    let out = list
        .split(',')
        .map(|t| t.parse::<Exponent>())
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(CliError::Usage("empty exponent list".into()));
    }
    Ok(out)
}

fn bounds(file: &Path, p: &str, seed: u64, restarts: usize) -> CliResult<()> {
    let ps = parse_exponents(p)?;
    let a = read_square(file)?;
    let options = BoundOptions { restarts, ..BoundOptions::default() };
    let cert = Certifier::new(&a, &options)?;
    for p in ps {
        let b = cert.bound(p, seed);
        let mut v = serde_json::to_value(b).expect("bound serializes");
        v["structure"] = json!(cert.structure());
        emit(&v);
    }
    Ok(())
}

fn classify(file: &Path) -> CliResult<()> {
    let a = read_square(file)?;
    let anchor = is_log_affine(&a, pnorm::interp::DEFAULT_LA_TOL)?;
    let cert = Certifier::new(&a, &BoundOptions::default())?;
    let circulant = Circulant::recognize(&a).map(|c| {
        json!({
            "coeffs": c.coeffs(),
            "witness": classify_circulant_la(&c),
        })
    });
    let hankel = HankelMod::recognize(&a).map(|h| json!({ "coeffs": h.coeffs() }));
    let perm = UnitaryPermutation::recognize(&a).map(|u| {
        json!({
            "sigma": u.sigma(),
            "phases": u.phases(),
        })
    });
    let sizes = block_diagonal_split(&a);
    let direct_sum = (sizes.len() > 1).then(|| json!(sizes));
    let tensor = TensorRankOne::recognize(&a).map(|t| {
        json!({
            "alpha": t.alpha,
            "beta": t.beta,
            "core_size": t.core.rows(),
        })
    });
    emit(&json!({
        "size": a.rows(),
        "structure": cert.structure(),
        "doubly_balanced": doubly_balanced_norm(&a).map(|alpha| json!({ "alpha": alpha })),
        "circulant": circulant,
        "hankel_mod": hankel,
        "unitary_permutation": perm,
        "direct_sum": direct_sum,
        "tensor": tensor,
        "anchor_test": anchor,
        "la": anchor.is_la,
    }));
    Ok(())
}

fn profile(file: &Path, grid: &str, out: &Path, seed: u64) -> CliResult<()> {
    let grid = if grid == "default" { default_grid() } else { parse_exponents(grid)? };
    let a = read_square(file)?;
    let options = BoundOptions::default();
    let structure = Certifier::new(&a, &options)?.structure();
    let prof = profile_with(&a, &grid, seed, &options)?;
    let d = prof.diagnostics;
    let mut csv = String::new();
    writeln!(
        csv,
        "# log-convex={} unimodal={} p0={} p0_interval={}..{} structure={}",
        d.convex, d.unimodal, d.p0, d.p0_interval.0, d.p0_interval.1, structure
    )
    .unwrap();
    csv.push_str("p,one_over_p,lower,upper,envelope\n");
    for (b, env) in prof.bounds.iter().zip(&prof.envelope) {
        writeln!(csv, "{},{},{},{},{}", b.p, b.p.reciprocal(), b.lower, b.upper, env).unwrap();
    }
    fs::write(out, csv).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    emit(&json!({
        "out": out.display().to_string(),
        "points": prof.grid.len(),
        "structure": structure,
        "diagnostics": d,
    }));
    Ok(())
}

fn oracle(file: &Path, p: &str, resolution: usize) -> CliResult<()> {
    let p: Exponent = p.parse()?;
    let a = read_square(file)?;
    if !a.is_real() {
        return Err(CliError::Usage("unsupported for oracle: complex entries".into()));
    }
    if a.rows() > 3 {
        return Err(CliError::Usage(format!("unsupported for oracle: n = {} exceeds 3", a.rows())));
    }
    let r = oracle_norm(&a, p, resolution)?;
    emit(&json!({
        "p": p,
        "value": r.value,
        "angles": r.angles,
        "maximizer": r.maximizer,
    }));
    Ok(())
}
