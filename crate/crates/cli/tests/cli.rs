use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagmod")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json from {args:?}: {e}"));
    (v, out.status.code().unwrap())
}

#[test]
fn kl_a1_lists_three_trivial_pairs() {
    let out = run(&["kl", "--type", "A1", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "y_word,w_word,coefficients\ne,e,[1]\ne,s0,[1]\ns0,s0,[1]\n");
}

#[test]
fn kl_a2_counts_comparable_pairs() {
    let (v, code) = json(&["kl", "--type", "A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pairs"], 19);
    assert!(v["polynomials"].as_array().unwrap().iter().all(|p| p["coeffs"] == serde_json::json!([1])));
}

#[test]
fn kl_a3_nontrivial_contains_one_plus_q() {
    let (v, _) = json(&["kl", "--type", "A3", "--nontrivial-only"]);
    let rows = v["polynomials"].as_array().unwrap();
    assert!(rows.iter().any(|p| p["y"] == "s1" && p["w"] == "s1*s0*s2*s1" && p["coeffs"] == serde_json::json!([1, 1])));
}

#[test]
fn unknown_type_is_a_usage_error() {
    assert_eq!(run(&["kl", "--type", "H3"]).status.code(), Some(2));
    assert_eq!(run(&["kl"]).status.code(), Some(2));
}

#[test]
fn reduce_worked_example() {
    let (v, code) = json(&["reduce", "--type", "A2", "--subset", "[0]", "--vector", r#"[("s1", 1)]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["steps"], serde_json::json!([1, 0]));
    assert_eq!(v["final_scalar"], "-1");
    assert_eq!(v["replay_valid"], true);
    assert_eq!(v["config"]["seed"], 42);
}

#[test]
fn reduce_pure_generator_needs_no_steps() {
    let (v, code) = json(&["reduce", "--type", "A2", "--subset", "[0]", "--field", "5", "--vector", r#"[("", 7)]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["steps"], serde_json::json!([]));
    assert_eq!(v["final_scalar"], "2");
}

#[test]
fn reduce_rejects_zero_and_bad_words() {
    assert_eq!(
        run(&["reduce", "--type", "A2", "--subset", "[0]", "--vector", r#"[("s1", 0)]"#]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["reduce", "--type", "A2", "--subset", "[0]", "--vector", r#"[("s7", 1)]"#]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["reduce", "--type", "A2", "--vector", "nonsense"]).status.code(), Some(2));
}

#[test]
fn reduce_fuzz_all_valid() {
    let (v, code) = json(&["reduce", "--type", "A2", "--subset", "[0]", "--fuzz", "1000", "--seed", "42"]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], 1000);
}

#[test]
fn permod_sl3_report() {
    let (v, code) = json(&["permod", "--group", "SL3", "--n", "3", "--q", "2", "--char", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["group"], "SL3(F2)");
    assert_eq!(v["char"], 5);
    assert_eq!(v["composition"]["factor_dims"], serde_json::json!([1, 6, 6, 8]));
    assert_eq!(v["dims"]["E_J"]["[0]"], 6);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn permod_sl2_reports() {
    let (v, code) = json(&["permod", "--n", "2", "--q", "2", "--char", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["composition"]["factor_dims"], serde_json::json!([1, 2]));
    // the finite Steinberg module splits when r = 3, so the length check fails
    let (v, code) = json(&["permod", "--n", "2", "--q", "2", "--char", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["composition"]["length"], 3);
}

#[test]
fn permod_char_zero_uses_large_prime() {
    let (v, code) = json(&["permod", "--n", "2", "--q", "2", "--level", "quick"]);
    assert_eq!(code, 0);
    assert_eq!(v["char"], 7);
}

#[test]
fn permod_input_errors() {
    assert_eq!(run(&["permod", "--n", "2", "--q", "2", "--char", "2"]).status.code(), Some(2));
    assert_eq!(run(&["permod", "--group", "SL3", "--n", "2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["permod", "--n", "2", "--q", "6"]).status.code(), Some(2));
}

#[test]
fn permod_json_is_deterministic() {
    let args = ["permod", "--n", "3", "--q", "2", "--char", "5", "--seed", "7", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn coxeter_involution_report() {
    let (v, code) = json(&["coxeter", "--type", "A3"]);
    assert_eq!(code, 0);
    assert_eq!(v["involutions"], 10);
    assert_eq!(v["two_pow_rank"], 8);
    assert_eq!(v["involutions_exceed_two_pow_rank"], true);
    assert_eq!(v["partition_holds"], true);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("flagmod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kl.csv");
    let out = run(&["kl", "--type", "A1", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("y_word,w_word"));
    std::fs::remove_dir_all(&dir).unwrap();
}
