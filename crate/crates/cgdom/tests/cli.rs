//! End-to-end tests of the cgdom binary: subcommands, exit codes, cache
//! behavior, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn cgdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgdom"))
        .args(args)
        .env_remove("CGDOM_CACHE_DIR")
        .env_remove("CGDOM_BUDGET_SECS")
        .output()
        .expect("binary runs")
}

fn cgdom_in(dir: &Path, args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cgdom"));
    cmd.args(args).current_dir(dir);
    cmd.env_remove("CGDOM_CACHE_DIR").env_remove("CGDOM_BUDGET_SECS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gamma_heisenberg_example() {
    let out = cgdom(&["gamma", "--family", "heisenberg", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("gamma = 4"), "{text}");
    assert!(text.contains("witness (4):"), "{text}");
}

#[test]
fn gamma_json_parses_back() {
    let out = cgdom(&["gamma", "--json", "dihedral(10)"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["value"], 6);
    assert_eq!(v["method"], "exact");
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn gamma_total_nonexistence() {
    let out = cgdom(&["gamma", "--total", "dihedral(10)"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("does not exist"));
}

#[test]
fn gamma_ratio_flag() {
    let out = cgdom(&["gamma", "--ratio", "symmetric(3)"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("ratio gamma/|G| = 2/3"), "{}", stdout_of(&out));
}

#[test]
fn formula_suzuki() {
    let out = cgdom(&["formula", "suzuki", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("4161") && text.contains("8322"), "{text}");
    let alias = cgdom(&["suzuki-formula", "1"]);
    assert_eq!(stdout_of(&alias), text);
}

#[test]
fn make_roundtrips_through_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    let out = cgdom(&["make", "quaternion", "8", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let gamma = cgdom(&["gamma", path.to_str().unwrap()]);
    assert!(gamma.status.success());
    assert!(stdout_of(&gamma).contains("gamma = 3"));
}

#[test]
fn graph_export_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let out = cgdom(&["graph", "symmetric(3)", "--kind", "proper-commuting", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 5);
    let solved = cgdom(&["gamma", "--graph-file", path.to_str().unwrap()]);
    assert!(stdout_of(&solved).contains("gamma = 4"));
}

#[test]
fn usage_errors_exit_1() {
    let out = cgdom(&["gamma", "--family", "sporadic", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cgdom(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cgdom(&["formula", "nope", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_json() {
    let out = cgdom(&["invariants", "--json", "symmetric(3)"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["cent_count"], 5);
    assert_eq!(v["order2_centralizer_count"], 3);
    assert_eq!(v["is_ac_group"], true);
}

#[test]
fn cache_outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["gamma", "--json", "--family", "dihedral", "10"];
    let cold = cgdom_in(dir.path(), &args, &[("CGDOM_CACHE_DIR", cache.to_str().unwrap())]);
    assert!(cold.status.success());
    assert!(std::fs::read_dir(&cache).unwrap().count() > 0, "cache populated");
    let warm = cgdom_in(dir.path(), &args, &[("CGDOM_CACHE_DIR", cache.to_str().unwrap())]);
    let off = cgdom_in(dir.path(), &args, &[]);
    assert_eq!(cold.stdout, warm.stdout, "cache hit must not change output");
    assert_eq!(cold.stdout, off.stdout, "cache off must not change output");
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache hit"));
}

#[test]
fn corrupted_cache_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["gamma", "--json", "quaternion(8)"];
    let env = [("CGDOM_CACHE_DIR", cache.to_str().unwrap())];
    let first = cgdom_in(dir.path(), &args, &env);
    for entry in std::fs::read_dir(&cache).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let second = cgdom_in(dir.path(), &args, &env);
    assert_eq!(first.stdout, second.stdout);
    let third = cgdom_in(dir.path(), &args, &env);
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn sweep_exit_codes() {
    // a corpus with no known-defective predictions exits 0
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    std::fs::write(
        &corpus,
        r#"[{"family":"symmetric","n":3},{"family":"dihedral","order":10}]"#,
    )
    .unwrap();
    let out = cgdom(&["sweep", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));

    // the stated projective-group count at q = 3 fails against the solver
    let corpus2 = dir.path().join("corpus2.json");
    std::fs::write(&corpus2, r#"[{"family":"pgl2","q":3}]"#).unwrap();
    let out = cgdom(&["sweep", "--corpus", corpus2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("FAIL Prop6.7"));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    std::fs::write(
        &corpus,
        r#"[{"family":"symmetric","n":4},{"family":"generalized_quaternion","order":16}]"#,
    )
    .unwrap();
    let out1 = dir.path().join("r1.json");
    let out2 = dir.path().join("r2.json");
    for (workers, path) in [("1", &out1), ("4", &out2)] {
        let out = cgdom(&[
            "verify",
            "--corpus",
            corpus.to_str().unwrap(),
            "--trials",
            "10",
            "--workers",
            workers,
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read_to_string(&out1).unwrap(),
        std::fs::read_to_string(&out2).unwrap(),
        "reports must not depend on worker count"
    );
}

#[test]
fn sweep_max_order_filters() {
    let out = cgdom(&["sweep", "--max-order", "12"]);
    assert!(stdout_of(&out).contains("pass"));
    // all remaining groups have order <= 12, so the sweep is small and clean
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    std::fs::write(&corpus, r#"[{"family":"symmetric","n":3}]"#).unwrap();
    let csv = dir.path().join("report.csv");
    let out = cgdom(&[
        "sweep",
        "--corpus",
        corpus.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("group,order,gamma,gamma_t,ratio"));
    assert!(text.contains("symmetric(3),6,4,nonexistent,2/3"), "{text}");
}

#[test]
fn require_exact_exit_code() {
    // the 31-cycle has packing bound 10 < gamma = 11, so zero budget leaves
    // only bounds and --require-exact turns that into exit 3
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c31.json");
    let edges: Vec<(usize, usize)> = (0..31).map(|v| (v.min((v + 1) % 31), v.max((v + 1) % 31))).collect();
    std::fs::write(
        &path,
        serde_json::json!({"n": 31, "edges": edges}).to_string(),
    )
    .unwrap();
    let out = cgdom(&[
        "gamma",
        "--graph-file",
        path.to_str().unwrap(),
        "--budget",
        "0",
        "--require-exact",
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stdout_of(&out));
    assert!(stdout_of(&out).contains("budget exhausted"));
    // with time it closes exactly and exits 0
    let out = cgdom(&["gamma", "--graph-file", path.to_str().unwrap(), "--require-exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("gamma = 11"));
}
