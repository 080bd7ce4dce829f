use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fgap"))
        .args(args)
        .output()
        .expect("spawn fgap")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn classify_elliptic() {
    let o = fgap(&["classify", "0", "-1", "1", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["class"], "Elliptic");
    assert_eq!(v["order"]["Finite"], 2);
    assert_eq!(v["fixed_point"]["x"].as_f64(), Some(0.0));
    assert_eq!(v["fixed_point"]["y"].as_f64(), Some(1.0));
}

#[test]
fn classify_hyperbolic_and_parabolic() {
    let v = json(&fgap(&["classify", "2", "1", "1", "1", "--format", "json"]));
    assert_eq!(v["class"], "Hyperbolic");
    let t = v["translation_length"].as_f64().unwrap();
    assert!((t - 1.924_847_300_238_413_8).abs() < 1e-12);

    let o = fgap(&["classify", "1", "1", "0", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("class") && l.ends_with("Parabolic")));
}

#[test]
fn classify_usage_errors() {
    assert_eq!(
        fgap(&["classify", "1", "0", "0", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fgap(&["classify", "1", "x", "0", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(fgap(&["classify", "1", "0"]).status.code(), Some(2));
}

#[test]
fn verify_modular_json() {
    let o = fgap(&["verify", "modular", "--depth", "10", "--radius", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["preset"], "modular");
    let d = v["d_min"].as_f64().unwrap();
    assert!((d - 0.549_306_144_334_054_8).abs() < 1e-9);
    let l = v["systole_estimate"].as_f64().unwrap();
    assert!((l - 1.924_847_300_238_413_8).abs() < 1e-9);
    assert_eq!(v["systole_depth"], 10);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        for key in ["claim", "lhs", "rhs", "margin", "pass"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn csv_matches_json() {
    let j = json(&fgap(&["verify", "hecke:7", "--depth", "8"]));
    let csv = stdout(&fgap(&[
        "verify", "hecke:7", "--depth", "8", "--format", "csv",
    ]));
    let mut seen = 0;
    for line in csv.lines().skip(1) {
        let (key, value) = line.split_once(',').unwrap();
        let mut node = &j;
        for part in key.split('.') {
            node = match part.parse::<usize>() {
                Ok(i) if node.is_array() => &node[i],
                _ => &node[part],
            };
        }
        if let (Some(a), Ok(b)) = (node.as_f64(), value.parse::<f64>()) {
            assert!(
                (a - b).abs() <= 1e-12 * a.abs().max(1e-300),
                "{key}: {a} vs {b}"
            );
            seen += 1;
        }
    }
    assert!(seen > 20);
}

#[test]
fn verify_text_and_triangle_pairs() {
    let o = fgap(&["verify", "triangle:2,3,7", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("PASS MardenYamada").count(), 3);
    assert!(out.contains("overall           PASS"));
}

#[test]
fn gap_and_systole_commands() {
    let v = json(&fgap(&["gap", "hecke:5"]));
    assert!((v["d_min"].as_f64().unwrap() - 1.124_177_215_697_930_2).abs() < 1e-9);
    let v = json(&fgap(&["systole", "triangle:3,3,4"]));
    assert!((v["systole_estimate"].as_f64().unwrap() - 1.265_948_638_401_888).abs() < 1e-9);
    assert_eq!(v["systole_label"], "estimate (upper bound at depth 10)");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fgap(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(fgap(&["verify", "hecke:2"]).status.code(), Some(2));
    assert_eq!(fgap(&["verify", "triangle:2,3,6"]).status.code(), Some(2));
    assert_eq!(
        fgap(&["verify", "modular", "--depth", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fgap(&["verify", "modular", "--radius", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fgap(&["verify", "modular", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fgap(&["verify", "modular", "--tol", "class=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fgap(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        fgap(&["check-points", "/nonexistent.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn synthetic_violation_exits_one() {
    let o = fgap(&["check-points", &data("synthetic_violation.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    let prop = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["claim"] == "Proposition")
        .unwrap();
    assert_eq!(prop["pass"], false);
    assert!(prop["margin"].as_f64().unwrap() < 0.0);
}

#[test]
fn synthetic_pass_exits_zero() {
    let o = fgap(&[
        "check-points",
        &data("hexagonal_pass.json"),
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS Proposition"));
}

#[test]
fn verify_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let oa = fgap(&["verify", "modular", "--svg", a.to_str().unwrap()]);
    let ob = fgap(&["verify", "modular", "--svg", b.to_str().unwrap()]);
    assert_eq!(oa.stdout, ob.stdout);
    let (sa, sb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(sa, sb);
    let svg = String::from_utf8(sa).unwrap();
    assert!(svg.matches(r#"class="pt order-2""#).count() >= 1);
    assert!(svg.matches(r#"class="pt order-3""#).count() >= 2);
    assert!(svg.contains(r#"class="geodesic""#));
}

#[test]
fn unwritable_svg_path() {
    let o = fgap(&[
        "verify",
        "modular",
        "--depth",
        "4",
        "--svg",
        "/nonexistent-dir/x.svg",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
