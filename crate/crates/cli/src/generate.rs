use std::path::PathBuf;

use pnorm::io::{parse_complex, render, Format, MatrixFile};
use pnorm::sample;
use pnorm::structured::{direct_sum, magic3, magic4, Circulant, Densify, HankelMod, TensorRankOne, UnitaryPermutation};
use pnorm::{CMatrix, CVector, Complex64};
use serde_json::json;

use crate::{emit, read_matrix, CliError, CliResult};

#[derive(clap::Args)]
pub struct Args {
    family: String,
    /// Coefficients for circulant and hankel, e.g. "1,2-i,0".
    #[arg(long)]
    coeffs: Option<String>,
    /// Permutation images, e.g. "2,0,1".
    #[arg(long)]
    sigma: Option<String>,
    /// Unimodular phases for unitary-permutation; all 1 when omitted.
    #[arg(long)]
    phases: Option<String>,
    /// Size of a random unitary permutation when --sigma is absent.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    /// Tensor core with rows separated by ';'.
    #[arg(long, default_value = "1,3;3,1")]
    core: String,
    /// Comma-separated matrix files for direct-sum.
    #[arg(long)]
    parts: Option<String>,
    /// Output file; JSON on stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn required<'a>(v: &'a Option<String>, flag: &str, family: &str) -> CliResult<&'a str> {
    v.as_deref()
        .ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

fn complex_list(s: &str) -> CliResult<Vec<Complex64>> {
    Ok(s.split(',').map(parse_complex).collect::<Result<Vec<_>, _>>()?)
}

fn index_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid index {t:?}")))
        })
        .collect()
}

fn matrix_rows(s: &str) -> CliResult<CMatrix> {
    let rows = s.split(';').map(complex_list).collect::<CliResult<Vec<_>>>()?;
    Ok(CMatrix::from_rows(&rows)?)
}

pub fn build(args: &Args) -> CliResult<CMatrix> {
    let family = args.family.as_str();
    let a = match family {
        "circulant" => Circulant::new(complex_list(required(&args.coeffs, "coeffs", family)?)?)?.densify(),
        "hankel" => HankelMod::new(complex_list(required(&args.coeffs, "coeffs", family)?)?)?.densify(),
        "unitary-permutation" => match (&args.sigma, args.n) {
            (Some(sigma), _) => {
                let sigma = index_list(sigma)?;
                let u = match &args.phases {
                    Some(ph) => UnitaryPermutation::new(sigma, complex_list(ph)?)?,
                    None => UnitaryPermutation::permutation(sigma)?,
                };
                u.densify()
            }
            (None, Some(n)) => UnitaryPermutation::random(&mut sample::rng(args.seed), n)?.densify(),
            (None, None) => return Err(CliError::Usage("unitary-permutation needs --sigma or --n".into())),
        },
        "magic3" => magic3(),
        "magic4" => magic4(),
        "tensor" => {
            let alpha = CVector::new(complex_list(required(&args.alpha, "alpha", family)?)?)?;
            let beta = CVector::new(complex_list(required(&args.beta, "beta", family)?)?)?;
            TensorRankOne::new(alpha, beta, matrix_rows(&args.core)?)?.densify()
        }
        "direct-sum" => {
            let parts = required(&args.parts, "parts", family)?
                .split(',')
                .map(|f| read_matrix(PathBuf::from(f.trim()).as_path()))
                .collect::<CliResult<Vec<_>>>()?;
            direct_sum(&parts)?
        }
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    };
    Ok(a)
}

pub fn run(args: &Args) -> CliResult<()> {
    let a = build(args)?;
    match &args.out {
        Some(path) => {
            MatrixFile { format: Format::from_path(path), matrix: a.clone() }.write(path)?;
            emit(&json!({
                "family": args.family,
                "size": a.rows(),
                "out": path.display().to_string(),
            }));
        }
        None => print!("{}", render(&a, Format::Json)),
    }
    Ok(())
}
