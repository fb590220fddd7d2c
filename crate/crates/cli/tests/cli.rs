use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pnorm::exact::{max_column_sum, max_row_sum};
use pnorm::io::MatrixFile;
use pnorm::{certified_bound, Exponent};
use serde_json::Value;
use tempfile::TempDir;

fn pnorm(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnorm"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str], dir: &Path) -> Vec<Value> {
    let out = pnorm(args, dir);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn code(args: &[&str], dir: &Path) -> (i32, String) {
    let out = pnorm(args, dir);
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn magic3_bounds_are_exact() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "magic3", "--out", "m.json"], dir.path());
    let recs = ok(&["bounds", "m.json", "--p", "2"], dir.path());
    assert_eq!(recs.len(), 1);
    assert_eq!(f(&recs[0]["p"]), 2.0);
    assert_eq!(f(&recs[0]["lower"]), 15.0);
    assert_eq!(f(&recs[0]["upper"]), 15.0);
    assert!(recs[0]["lower_provenance"].is_string());
    assert!(recs[0]["upper_provenance"].is_string());
}

#[test]
fn identity_at_infinity() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "id.csv", "1,0,0\n0,1,0\n0,0,1\n");
    let recs = ok(&["bounds", "id.csv", "--p", "inf"], dir.path());
    assert_eq!(recs[0]["p"], "inf");
    assert_eq!(f(&recs[0]["lower"]), 1.0);
    assert_eq!(f(&recs[0]["upper"]), 1.0);
}

#[test]
fn random_bounds_are_intervals_one_line_per_exponent() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "r.csv", "0.3,-1.2+0.5i,2\n1,0.7,-0.4i\n-2,0.1,1.5\n");
    let recs = ok(&["bounds", "r.csv", "--p", "1,1.5,2.0,7,inf", "--seed", "4"], dir.path());
    assert_eq!(recs.len(), 5);
    for r in &recs {
        assert!(f(&r["lower"]) <= f(&r["upper"]), "{r}");
    }
    assert_eq!(f(&recs[2]["p"]), 2.0);
    let two = ok(&["bounds", "r.csv", "--p", "2", "--seed", "4"], dir.path());
    assert_eq!(two[0], recs[2]);
}

#[test]
fn same_seed_same_output() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "r.csv", "1,2,0.5\n-1,0.3,2\n0,1,-1\n");
    let a = ok(&["bounds", "r.csv", "--p", "1.3,3", "--seed", "11"], dir.path());
    let b = ok(&["bounds", "r.csv", "--p", "1.3,3", "--seed", "11"], dir.path());
    assert_eq!(a, b);
}

#[test]
fn classify_magic4() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "magic4", "--out", "m4.json"], dir.path());
    let r = &ok(&["classify", "m4.json"], dir.path())[0];
    assert_eq!(f(&r["doubly_balanced"]["alpha"]), 34.0);
    assert_eq!(r["la"], true);
}

#[test]
fn classify_shift_circulant() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "circulant", "--coeffs", "0,1,0,0", "--out", "s.json"], dir.path());
    let r = &ok(&["classify", "s.json"], dir.path())[0];
    let w = &r["circulant"]["witness"];
    assert_eq!(w["is_la"], true);
    assert_eq!(w["beta"][0].as_f64(), Some(1.0));
    assert_eq!(w["omega_index"], 0);
    assert!(r["unitary_permutation"].is_object());
    assert_eq!(r["la"], true);
}

#[test]
fn classify_generic_two_by_two() {
    // n1 = 6, ninf = 7 and sigma_max^2 = 15 + sqrt(221)
    let dir = TempDir::new().unwrap();
    write(dir.path(), "a.csv", "1,2\n3,4\n");
    let r = &ok(&["classify", "a.csv"], dir.path())[0];
    for key in ["doubly_balanced", "circulant", "hankel_mod", "unitary_permutation", "direct_sum", "tensor"] {
        assert!(r[key].is_null(), "{key}");
    }
    assert_eq!(r["la"], false);
    let t = &r["anchor_test"];
    assert_eq!(f(&t["n1"]), 6.0);
    assert_eq!(f(&t["ninf"]), 7.0);
    let n2 = (15.0 + 221f64.sqrt()).sqrt();
    assert!(close(f(&t["n2"]), n2, 1e-10));
    assert!(close(f(&t["ratio"]), n2 / 42f64.sqrt(), 1e-10));
    assert!(f(&t["ratio"]) < 1.0);
}

#[test]
fn classify_hankel() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "hankel", "--coeffs", "1,2,3", "--out", "h.json"], dir.path());
    let r = &ok(&["classify", "h.json"], dir.path())[0];
    assert!(r["hankel_mod"].is_object());
    assert_eq!(r["structure"], "hankel-mod");
}

fn read_csv_profile(path: &Path) -> (String, Vec<Vec<String>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    assert_eq!(lines.next().unwrap(), "p,one_over_p,lower,upper,envelope");
    (header, lines.map(|l| l.split(',').map(str::to_string).collect()).collect())
}

#[test]
fn profile_magic3_is_flat() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "magic3", "--out", "m.json"], dir.path());
    let rec = &ok(&["profile", "m.json", "--out", "prof.csv"], dir.path())[0];
    assert_eq!(rec["diagnostics"]["convex"], true);
    let (header, rows) = read_csv_profile(&dir.path().join("prof.csv"));
    assert!(header.starts_with("# log-convex=true unimodal=true"), "{header}");
    assert_eq!(rows.len(), 11);
    for r in &rows {
        assert_eq!(r[2], "15");
        assert_eq!(r[3], "15");
    }
    assert_eq!(rows[10][0], "inf");
    assert_eq!(rows[10][1], "0");
}

#[test]
fn profile_identity_custom_grid() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "id.json", "{\"rows\":2,\"cols\":2,\"entries\":[[1,0],[0,0],[0,0],[1,0]]}");
    ok(&["profile", "id.json", "--grid", "1,1.5,2,6,inf", "--out", "p.csv"], dir.path());
    let (_, rows) = read_csv_profile(&dir.path().join("p.csv"));
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r[2] == "1" && r[3] == "1"));
}

#[test]
fn profile_rank_one_tensor_curve() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "tensor", "--alpha", "1,i,0", "--beta", "1,-1,i", "--out", "b.json"], dir.path());
    ok(&["profile", "b.json", "--out", "p.csv"], dir.path());
    let (_, rows) = read_csv_profile(&dir.path().join("p.csv"));
    for r in &rows {
        let t: f64 = r[1].parse().unwrap();
        let want = 4.0 * 2f64.powf(t) * 3f64.powf(1.0 - t);
        for col in [2, 3] {
            let got: f64 = r[col].parse().unwrap();
            assert!(close(got, want, 1e-9), "p = {}: {got} vs {want}", r[0]);
        }
    }
}

#[test]
fn profile_rejects_bad_grid() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "magic3", "--out", "m.json"], dir.path());
    assert_eq!(code(&["profile", "m.json", "--grid", "1,3,inf", "--out", "p.csv"], dir.path()).0, 2);
}

#[test]
fn generate_reference_matrices() {
    let dir = TempDir::new().unwrap();
    ok(&["generate", "magic3", "--out", "m.csv"], dir.path());
    assert_eq!(fs::read_to_string(dir.path().join("m.csv")).unwrap(), "8,1,6\n3,5,7\n4,9,2\n");
    ok(&["generate", "magic4", "--out", "m4.csv"], dir.path());
    assert_eq!(
        fs::read_to_string(dir.path().join("m4.csv")).unwrap(),
        "16,3,2,13\n5,10,11,8\n9,6,7,12\n4,15,14,1\n"
    );
    ok(&["generate", "circulant", "--coeffs", "1,2,0", "--out", "c.csv"], dir.path());
    assert_eq!(fs::read_to_string(dir.path().join("c.csv")).unwrap(), "1,2,0\n0,1,2\n2,0,1\n");
    ok(&["generate", "tensor", "--alpha", "1,-1", "--beta", "1,2", "--out", "t.csv"], dir.path());
    assert_eq!(
        fs::read_to_string(dir.path().join("t.csv")).unwrap(),
        "1,3,2,6\n3,1,6,2\n-1,-3,-2,-6\n-3,-1,-6,-2\n"
    );
}

#[test]
fn generate_to_stdout_is_matrix_json() {
    let dir = TempDir::new().unwrap();
    let out = pnorm(&["generate", "circulant", "--coeffs", "1,i"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let a = pnorm::io::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(a.get(1, 0), pnorm::Complex64::new(0.0, 1.0));
}

#[test]
fn generate_permutations_and_direct_sums() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(&["generate", "unitary-permutation", "--sigma", "2,0,1", "--phases", "i,-1,1", "--out", "u.json"], d);
    let r = &ok(&["classify", "u.json"], d)[0];
    assert_eq!(r["unitary_permutation"]["sigma"], serde_json::json!([2, 0, 1]));
    ok(&["generate", "unitary-permutation", "--n", "5", "--seed", "3", "--out", "a.json"], d);
    ok(&["generate", "unitary-permutation", "--n", "5", "--seed", "3", "--out", "b.json"], d);
    assert_eq!(fs::read(d.join("a.json")).unwrap(), fs::read(d.join("b.json")).unwrap());
    ok(&["generate", "magic3", "--out", "m.json"], d);
    write(d, "s.csv", "1,2\n3,4\n");
    ok(&["generate", "direct-sum", "--parts", "m.json,s.csv", "--out", "ds.json"], d);
    let r = &ok(&["classify", "ds.json"], d)[0];
    assert_eq!(r["direct_sum"], serde_json::json!([3, 2]));
    let b = &ok(&["bounds", "ds.json", "--p", "3"], d)[0];
    assert_eq!(f(&b["lower"]), 15.0);
    assert_eq!(f(&b["upper"]), 15.0);
}

#[test]
fn generated_files_give_identical_bounds_and_line_sums() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    write(d, "s.csv", "1,2\n3,-4i\n");
    let families: &[&[&str]] = &[
        &["circulant", "--coeffs", "1,2-i,0.5"],
        &["hankel", "--coeffs", "1,-2,3i,0.25"],
        &["unitary-permutation", "--n", "4", "--seed", "9"],
        &["magic3"],
        &["magic4"],
        &["tensor", "--alpha", "1,i,0", "--beta", "1,-1,i"],
        &["direct-sum", "--parts", "s.csv,s.csv"],
    ];
    for (k, fam) in families.iter().enumerate() {
        for ext in ["json", "csv"] {
            let name = format!("g{k}.{ext}");
            let mut args = vec!["generate"];
            args.extend_from_slice(fam);
            args.extend_from_slice(&["--out", &name]);
            ok(&args, d);
            let a = MatrixFile::read(&d.join(&name)).unwrap().matrix;
            let recs = ok(&["bounds", &name, "--p", "1,1.7,inf", "--seed", "2"], d);
            for (r, p) in recs.iter().zip(["1", "1.7", "inf"]) {
                let lib = certified_bound(&a, p.parse::<Exponent>().unwrap(), 2).unwrap();
                assert_eq!(f(&r["lower"]), lib.lower, "{name} p = {p}");
                assert_eq!(f(&r["upper"]), lib.upper, "{name} p = {p}");
            }
            let col = max_column_sum(&a).value;
            let row = max_row_sum(&a).value;
            assert!(close(f(&recs[0]["lower"]), col, 1e-12) && close(f(&recs[0]["upper"]), col, 1e-12), "{name}");
            assert!(close(f(&recs[2]["lower"]), row, 1e-12) && close(f(&recs[2]["upper"]), row, 1e-12), "{name}");
        }
    }
}

#[test]
fn oracle_examples() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(&["generate", "magic3", "--out", "m.json"], d);
    let r = &ok(&["oracle", "m.json", "--p", "1.7"], d)[0];
    assert!((f(&r["value"]) - 15.0).abs() < 1e-6);
    assert_eq!(r["angles"].as_array().unwrap().len(), 2);
    write(d, "id.csv", "1,0\n0,1\n");
    assert!((f(&ok(&["oracle", "id.csv", "--p", "3"], d)[0]["value"]) - 1.0).abs() < 1e-9);
    write(d, "b.csv", "1,1\n0,0\n");
    assert!((f(&ok(&["oracle", "b.csv", "--p", "2"], d)[0]["value"]) - 2f64.sqrt()).abs() < 1e-6);
}

#[test]
fn oracle_rejects_complex_and_large() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    write(d, "z.csv", "1,i\n0,1\n");
    let (c, msg) = code(&["oracle", "z.csv", "--p", "2"], d);
    assert_eq!(c, 2);
    assert!(msg.contains("unsupported for oracle"), "{msg}");
    ok(&["generate", "magic4", "--out", "m4.json"], d);
    let (c, msg) = code(&["oracle", "m4.json", "--p", "2"], d);
    assert_eq!(c, 2);
    assert!(msg.contains("unsupported for oracle"), "{msg}");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(&["generate", "magic3", "--out", "m.json"], d);
    write(d, "bad.json", "{\"rows\": 2");
    write(d, "rect.csv", "1,2,3\n4,5,6\n");
    assert_eq!(code(&["bounds", "bad.json"], d).0, 2);
    assert_eq!(code(&["bounds", "rect.csv"], d).0, 2);
    assert_eq!(code(&["bounds", "m.json", "--p", "0.5"], d).0, 2);
    assert_eq!(code(&["bounds", "m.json", "--p", "two"], d).0, 2);
    assert_eq!(code(&["bounds", "missing.json"], d).0, 3);
    assert_eq!(code(&["classify", "missing.csv"], d).0, 3);
    assert_eq!(code(&["generate", "spiral"], d).0, 2);
    assert_eq!(code(&["generate", "circulant"], d).0, 2);
    assert_eq!(code(&["generate", "magic3", "--out", "no/such/dir/m.json"], d).0, 3);
    assert_eq!(code(&["profile", "m.json", "--out", "no/such/dir/p.csv"], d).0, 3);
    assert_eq!(code(&["frobnicate"], d).0, 2);
    assert_eq!(code(&[], d).0, 2);
}
