use pnorm_web::{circulant_report, classify_report, parse_matrix, profile_report};
use serde_json::{json, Value};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn matrix_text_forms() {
    let a = parse_matrix("8,1,6;3,5,7;4,9,2").unwrap();
    assert_eq!(a, parse_matrix("8,1,6\n3,5,7\n4,9,2\n").unwrap());
    assert!(parse_matrix("1,2,3;4,5,6").is_err());
    assert!(parse_matrix("1,x;2,3").is_err());
    assert!(parse_matrix("").is_err());
}

#[test]
fn magic_profile_is_flat() {
    let v = parse(&profile_report("8,1,6;3,5,7;4,9,2", 0).unwrap());
    assert_eq!(v["structure"], "doubly-balanced");
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 11);
    for p in points {
        assert_eq!(p["lower"], 15.0);
        assert_eq!(p["upper"], 15.0);
    }
    assert_eq!(points[10]["p"], "inf");
    assert_eq!(points[10]["t"], 0.0);
}

#[test]
fn generic_profile_brackets() {
    let v = parse(&profile_report("1,2;3,4", 5).unwrap());
    assert_eq!(v["diagnostics"]["convex"], true);
    for p in v["points"].as_array().unwrap() {
        assert!(p["lower"].as_f64().unwrap() <= p["upper"].as_f64().unwrap());
    }
}

#[test]
fn classify_reports() {
    let v = parse(&classify_report("1,2;3,4").unwrap());
    assert_eq!(v["anchor_test"]["is_la"], false);
    assert!(v["doubly_balanced"].is_null());
    let v = parse(&classify_report("0,1,0;0,0,1;1,0,0").unwrap());
    assert_eq!(v["unitary_permutation"], true);
    assert_eq!(v["circulant"]["is_la"], true);
    assert_eq!(v["doubly_balanced"], 1.0);
}

#[test]
fn circulant_explorer() {
    let v = parse(&circulant_report("1,2,0", 0).unwrap());
    assert_eq!(v["matrix"], json!([["1", "2", "0"], ["0", "1", "2"], ["2", "0", "1"]]));
    assert_eq!(v["abs_sum"], 3.0);
    assert_eq!(v["witness"]["is_la"], true);
    let spectrum = v["spectrum"].as_array().unwrap();
    assert_eq!(spectrum.len(), 3);
    // eigenvalue at omega = 1 is the coefficient sum
    assert!((spectrum[0][0].as_f64().unwrap() - 3.0).abs() < 1e-12);

    let v = parse(&circulant_report("1,-1,0,1", 0).unwrap());
    assert_eq!(v["witness"]["is_la"], false);
    for p in v["profile"]["points"].as_array().unwrap() {
        assert!(p["lower"].as_f64().unwrap() <= p["upper"].as_f64().unwrap());
    }
    assert!(circulant_report("1,,2", 0).is_err());
}
