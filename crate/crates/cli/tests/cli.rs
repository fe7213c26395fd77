use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn examples(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
        .display()
        .to_string()
}

/// Runs in-process; returns (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hyperreal").chain(args.iter().copied());
    let code = hyperreal_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn derive_prints_plain_number() {
    let (code, out, _) = run(&["derive", "x^3", "--at", "2", "--order", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "12");
}

#[test]
fn mvt_theta_json_series() {
    let v = json(&["mvt-theta", "exp(x)", "--x", "0", "--h-infinitesimal"]);
    let theta = v["theta"].as_array().unwrap();
    assert_eq!(theta[0]["exp"], "0/1");
    assert!((theta[0]["coef"].as_f64().unwrap() - 0.5).abs() <= 1e-12);
    assert_eq!(theta[1]["exp"], "1/1");
    assert!((theta[1]["coef"].as_f64().unwrap() - 1.0 / 24.0).abs() <= 1e-8);
    assert_eq!(v["leading_order"], 1);
    assert_eq!(v["degenerate"], false);
    assert!(v["residual_norm"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn mvt_theta_real_json_is_number() {
    let v = json(&["mvt-theta", "exp(x)", "--x", "0", "--h", "1"]);
    let expected = (std::f64::consts::E - 1.0).ln();
    assert!((v["theta"].as_f64().unwrap() - expected).abs() <= 1e-10);
    assert!(v["leading_order"].is_null());
}

#[test]
fn eval_and_st() {
    let v = json(&["eval", "x*x", "--at", "x=1 + eps"]);
    assert_eq!(v["classification"], "finite-with-infinitesimal-part");
    let terms: Vec<(String, f64)> = v["value"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["exp"].as_str().unwrap().to_string(), t["coef"].as_f64().unwrap()))
        .collect();
    assert_eq!(terms, vec![("0/1".into(), 1.0), ("1/1".into(), 2.0), ("2/1".into(), 1.0)]);

    let v = json(&["st", "3 - 2*eps^(1/2)"]);
    assert_eq!(v["st"], 3.0);
    assert_eq!(v["classification"], "finite-with-infinitesimal-part");
}

#[test]
fn integral_evt_taylor_shapes() {
    let v = json(&["integrate", "x^2", "--a", "0", "--b", "1"]);
    assert!((v["value"].as_f64().unwrap() - 1.0 / 3.0).abs() <= 1e-8);
    assert_eq!(v["sums"].as_array().unwrap().len(), 7);

    let v = json(&["evt-max", "x*(1-x)", "--a", "0", "--b", "1"]);
    assert!((v["c"].as_f64().unwrap() - 0.5).abs() <= 1e-8);
    let row = &v["trace"][0];
    assert_eq!(row.as_array().unwrap().len(), 3);
    assert_eq!(row[0], 1000);

    let v = json(&["taylor-check", "log(x)", "--a", "1", "--infinitesimal"]);
    assert!(v["residual"].is_array());
    assert!(v["residual_norm"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn transfer_check_exit_codes() {
    let (code, out, _) = run(&["transfer-check", &examples("ordered_field.fof"), "--samples", "10000", "--seed", "7"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 14);
    assert!(lines.iter().all(|l| l.contains("not-falsified")), "{out}");

    let (code, out, _) = run(&["transfer-check", &examples("reciprocal_negated.fof")]);
    assert_eq!(code, 2);
    assert!(out.contains("falsified") && out.contains("binding"), "{out}");
}

#[test]
fn transfer_check_json_binding() {
    let file = examples("reciprocal_negated.fof");
    let (code, out, _) = run(&["transfer-check", &file, "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r = &v[0];
    assert_eq!(r["verdict"], "falsified");
    assert_eq!(r["line"], 2);
    let vars: Vec<&str> = r["binding"].as_array().unwrap().iter().map(|b| b["var"].as_str().unwrap()).collect();
    assert_eq!(vars, ["x", "y"]);
    assert_eq!(r["eq_tol"], 1e-10);
}

#[test]
fn errors_name_their_module() {
    let (code, out, err) = run(&["eval", "log(x)", "--at", "x=0"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(err.trim(), "error[transfer_ext]: DomainError: log of a nonpositive number");

    let (code, _, err) = run(&["st", "eps^-1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[lc_field]: NotFinite"), "{err}");

    let (code, _, err) = run(&["derive", "x^2", "--at", "0", "--order", "11"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[calculus]: OrderTooHigh"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.fof");
    std::fs::write(&bad, "forall x: real. y < x\n").unwrap();
    let (code, _, err) = run(&["transfer-check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[formula_dsl]: BindingError"), "{err}");

    let (code, _, err) = run(&["derive", "x^3"]);
    assert_eq!(code, 1);
    assert!(err.contains("--at"));

    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# coarse\ndepth = 3\nformat = json\n").unwrap();
    let p = path.to_str().unwrap();

    let (code, out, _) = run(&["--config", p, "eval", "exp(x)", "--at", "x=eps"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"].as_array().unwrap().len(), 4);

    // Flags win over the file.
    let (_, out, _) = run(&["--config", p, "--format", "text", "--depth", "2", "eval", "exp(x)", "--at", "x=eps"]);
    assert_eq!(out.trim(), "1 + eps + 0.5*eps^2");

    std::fs::write(&path, "depth = 3\nbogus = 1\n").unwrap();
    let (code, _, err) = run(&["--config", p, "st", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("ConfigError at line 2"), "{err}");

    std::fs::write(&path, "max_terms = 0\n").unwrap();
    let (code, _, err) = run(&["--config", p, "st", "1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[lc_field]"), "{err}");
}

#[test]
fn config_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.conf");
    std::fs::write(&path, "format = json\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hyperreal"))
        .args(["derive", "x^3", "--at", "2", "--order", "1"])
        .env("HYPERREAL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 12.0);
    assert_eq!(v["order"], 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hyperreal");
    let ok = Command::new(bin).args(["st", "2 + eps"]).env_remove("HYPERREAL_CONFIG").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "2");
    let falsified = Command::new(bin)
        .args(["transfer-check", &examples("reciprocal_negated.fof")])
        .env_remove("HYPERREAL_CONFIG")
        .output()
        .unwrap();
    assert_eq!(falsified.status.code(), Some(2));
    let bad = Command::new(bin).args(["st"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn json_output_is_repeatable() {
    let cases: [&[&str]; 3] = [
        &["mvt-theta", "sin(x)*exp(x)", "--x", "0.4", "--h-infinitesimal", "--format", "json"],
        &["integrate", "cos(x)", "--a", "0", "--b", "2", "--format", "json"],
        &["transfer-check", "PLACEHOLDER", "--seed", "11", "--format", "json"],
    ];
    let file = examples("continuity.fof");
    for c in cases {
        let args: Vec<&str> = c.iter().map(|a| if *a == "PLACEHOLDER" { file.as_str() } else { a }).collect();
        let first = run(&args);
        assert_eq!(first.0, 0, "{}", first.2);
        assert_eq!(first, run(&args));
    }
}
