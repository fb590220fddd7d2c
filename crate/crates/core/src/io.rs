//! Matrix files in JSON and CSV.
//!
//! JSON is `{"rows": n, "cols": m, "entries": [[re, im], ...]}` in row-major
//! order. CSV holds one matrix row per line with comma-separated tokens such
//! as `3`, `-1.5`, `2i`, `1+2i` or `0.5-1e-3i`; blank lines and lines starting
//! with `#` are skipped.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{NormError, Result};
use crate::matrix::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    /// CSV for a `.csv` extension (any case), JSON otherwise.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }
}

/// A matrix together with the format it was read from or will be written in.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub format: Format,
    pub matrix: CMatrix,
}

impl MatrixFile {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| NormError::Io(format!("{}: {e}", path.display())))?;
        let format = Format::from_path(path);
        let matrix = parse(&text, format)?;
        Ok(MatrixFile { format, matrix })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, render(&self.matrix, self.format)).map_err(|e| NormError::Io(format!("{}: {e}", path.display())))
    }
}

pub fn parse(text: &str, format: Format) -> Result<CMatrix> {
    match format {
        Format::Json => from_json(text),
        Format::Csv => from_csv(text),
    }
}

pub fn render(a: &CMatrix, format: Format) -> String {
    match format {
        Format::Json => to_json(a),
        Format::Csv => to_csv(a),
    }
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

pub fn to_json(a: &CMatrix) -> String {
    let raw = RawMatrix {
        rows: a.rows(),
        cols: a.cols(),
        entries: a.entries().iter().map(|z| [z.re, z.im]).collect(),
    };
    let mut s = serde_json::to_string(&raw).expect("finite entries serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<CMatrix> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(|e| NormError::Parse(e.to_string()))?;
    if raw.entries.len() != raw.rows * raw.cols {
        return Err(NormError::Parse(format!(
            "{} entries for a {}x{} matrix",
            raw.entries.len(),
            raw.rows,
            raw.cols
        )));
    }
    let data = raw.entries.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
    CMatrix::new(raw.rows, raw.cols, data).map_err(|e| NormError::Parse(e.to_string()))
}

pub fn to_csv(a: &CMatrix) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(|z| format_complex(*z)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn from_csv(text: &str) -> Result<CMatrix> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| NormError::Parse(format!("line {}: {e}", k + 1)))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(NormError::Parse("no matrix rows".into()));
    }
    CMatrix::from_rows(&rows).map_err(|e| NormError::Parse(e.to_string()))
}

/// Shortest round-tripping text: `a` for real values, `a+bi` / `a-bi` otherwise.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 && !z.im.is_sign_negative() {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (also with `j`); whitespace is ignored.
pub fn parse_complex(token: &str) -> Result<Complex64> {
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || NormError::Parse(format!("invalid complex number {token:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let real = |s: &str| -> Result<f64> {
        let v: f64 = s.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let imag = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => real(s),
        }
    };
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return Ok(Complex64::new(real(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(real(&body[..k])?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_tokens() {
        assert_eq!(parse_complex("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex(" -1.5 ").unwrap(), c(-1.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1 - 2i").unwrap(), c(1.0, -2.0));
        assert_eq!(parse_complex("1e-3-2.5e+2i").unwrap(), c(1e-3, -250.0));
        assert_eq!(parse_complex("-1e3+i").unwrap(), c(-1000.0, 1.0));
        assert_eq!(parse_complex("2j").unwrap(), c(0.0, 2.0));
        for bad in ["", "x", "1+", "nan", "inf", "1+2", "1++2i", "i2"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_layout() {
        let a = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, -1.0)], vec![c(2.5, 3.0), c(0.0, 0.0)]]).unwrap();
        let js = to_json(&a);
        assert_eq!(js, "{\"rows\":2,\"cols\":2,\"entries\":[[1.0,0.0],[0.0,-1.0],[2.5,3.0],[0.0,0.0]]}\n");
        assert_eq!(from_json(&js).unwrap(), a);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(from_json("{"), Err(NormError::Parse(_))));
        let short = "{\"rows\":2,\"cols\":2,\"entries\":[[1,0]]}";
        assert!(matches!(from_json(short), Err(NormError::Parse(_))));
        let empty = "{\"rows\":0,\"cols\":0,\"entries\":[]}";
        assert!(matches!(from_json(empty), Err(NormError::Parse(_))));
    }

    #[test]
    fn csv_layout() {
        let text = "# magic\n8,1,6\n3,5,7\n\n4,9,2\n";
        let a = from_csv(text).unwrap();
        assert_eq!(a.rows(), 3);
        assert_eq!(a.get(2, 1), c(9.0, 0.0));
        assert!(matches!(from_csv("1,2\n3\n"), Err(NormError::Parse(_))));
        assert!(matches!(from_csv("\n# nothing\n"), Err(NormError::Parse(_))));
    }

    #[test]
    fn negative_zero_imaginary_survives_csv() {
        let z = c(1.0, -0.0);
        let back = parse_complex(&format_complex(z)).unwrap();
        assert_eq!(back.im.to_bits(), z.im.to_bits());
    }

    #[test]
    fn file_round_trip_and_io_errors() {
        let dir = std::env::temp_dir().join(format!("pnorm-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let mut rng = sample::rng(9);
        let a = sample::complex_matrix(&mut rng, 3, 3);
        for name in ["m.json", "m.csv"] {
            let path = dir.join(name);
            let f = MatrixFile { format: Format::from_path(&path), matrix: a.clone() };
            f.write(&path).unwrap();
            assert_eq!(MatrixFile::read(&path).unwrap(), f);
        }
        assert!(matches!(MatrixFile::read(&dir.join("missing.json")), Err(NormError::Io(_))));
        fs::remove_dir_all(&dir).unwrap();
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![any::<f64>().prop_filter("finite", |v| v.is_finite()), -10.0f64..10.0]
    }

    proptest! {
        #[test]
        fn json_round_trip_is_bit_exact(rows in 1usize..5, cols in 1usize..5, vals in proptest::collection::vec(finite(), 50)) {
            let data: Vec<Complex64> = (0..rows * cols).map(|k| c(vals[2 * k], vals[2 * k + 1])).collect();
            let a = CMatrix::new(rows, cols, data).unwrap();
            let back = from_json(&to_json(&a)).unwrap();
            for (x, y) in a.entries().iter().zip(back.entries()) {
                prop_assert_eq!(x.re.to_bits(), y.re.to_bits());
                prop_assert_eq!(x.im.to_bits(), y.im.to_bits());
            }
        }

        #[test]
        fn csv_round_trip_is_exact(re in finite(), im in finite()) {
            let z = c(re, im);
            prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
