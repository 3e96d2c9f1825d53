//! End-to-end checks of the binary: subcommands, file formats, exit codes,
//! and the campaign artifacts.

use std::io::Write;
use std::process::{Command, Output};

fn normcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

#[test]
fn selfcheck_passes_with_exit_zero() {
    let out = normcheck(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("anchors hold"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn checks_lists_registry_and_table() {
    let out = normcheck(&["checks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in [
        "agm",
        "commutator",
        "moore-penrose",
        "numrad",
        "parallelism",
        "weyl-chain",
    ] {
        assert!(text.contains(name), "missing strategy {name}");
    }
    for id in ["thm3.1-a", "cor-weyl-chain", "par-iff-wAstarB"] {
        assert!(text.contains(id), "missing check id {id}");
    }
}

#[test]
fn wbound_reports_shift_radius() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j3.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "3 3\n0 0\n1 0\n0 0\n0 0\n0 0\n1 0\n0 0\n0 0\n0 0\n").unwrap();
    let out = normcheck(&["wbound", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("w(A) = 0.707106781"), "{text}");
    assert!(text.contains("thm-numrad-kit3"));
    assert!(!text.contains("VIOLATED"));
}

#[test]
fn wbound_rejects_missing_file_with_exit_two() {
    let out = normcheck(&["wbound", "--matrix", "/nonexistent/m.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polyzeros_tight_anchor() {
    let out = normcheck(&["polyzeros", "--coeffs", "[[1,0],[0,0]]"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("zero_sum      = 2.0000000000"));
    assert!(text.contains("bound         = 2.0000000000"));
}

#[test]
fn polyzeros_rejects_non_monic_without_flag_and_normalizes_with_it() {
    let json = r#"{"coefficients": [[2,0],[0,0]], "leading": [2,0]}"#;
    let rejected = normcheck(&["polyzeros", "--coeffs", json]);
    assert_eq!(rejected.status.code(), Some(2));

    let normalized = normcheck(&["polyzeros", "--coeffs", json, "--normalize"]);
    assert_eq!(normalized.status.code(), Some(0), "{}", stdout(&normalized));
    // z² + 1 after dividing by 2
    assert!(stdout(&normalized).contains("zero_sum      = 2.0000000000"));
}

#[test]
fn polyzeros_rejects_zero_constant_term() {
    let out = normcheck(&["polyzeros", "--coeffs", "[[0,0],[1,0]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_energy_star_anchor() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    std::fs::write(&path, "# star on four vertices\n4\n0 1\n0 2\n0 3\n").unwrap();
    let out = normcheck(&["graph-energy", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("energy          = 3.4641016151"));
    assert!(text.contains("rank            = 2"));
    assert!(text.contains("bound_rank      = 3.4641016151"));
    assert!(text.contains("bound_mcclelland = 4.8989794855"));
}

#[test]
fn graph_energy_rejects_duplicate_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.txt");
    std::fs::write(&path, "3\n0 1\n1 0\n").unwrap();
    let out = normcheck(&["graph-energy", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate edge"));
}

#[test]
fn verify_writes_reports_and_respects_check_filter() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(
        &config,
        r#"{
            "seed": 11,
            "trials_per_check": 2,
            "dims": [2, 3],
            "p_grid": [2, "inf"],
            "alpha_t_grid": [[0.5, 0.5]],
            "tol_rel": 1e-8
        }"#,
    )
    .unwrap();
    let out_dir = dir.path().join("reports");
    let out = normcheck(&[
        "verify",
        "--config",
        config.to_str().unwrap(),
        "--output",
        out_dir.to_str().unwrap(),
        "--check",
        "agm",
        "--check",
        "monotone",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("results.json")).unwrap())
            .unwrap();
    assert_eq!(json["schema_version"], 1);
    let checks = json["checks"].as_object().unwrap();
    assert!(checks.contains_key("lem-agm"));
    assert!(checks.contains_key("monotone-seq"));
    assert!(!checks.contains_key("thm3.1-a"), "filter must exclude sum-product");
    for agg in checks.values() {
        assert_eq!(agg["fail"], 0);
        let total = agg["pass"].as_u64().unwrap()
            + agg["fail"].as_u64().unwrap()
            + agg["indeterminate"].as_u64().unwrap();
        assert_eq!(agg["reports"].as_u64().unwrap(), total);
    }

    let csv = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert!(csv.starts_with("check_id,reports,pass,fail,indeterminate"));
    assert!(csv.lines().count() > 2);
}

#[test]
fn verify_rejects_unknown_check_with_exit_two() {
    let out = normcheck(&["verify", "--check", "definitely-not-a-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown check"));
}

#[test]
fn verify_config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.json");
    std::fs::write(&config, r#"{"seed": 1}"#).unwrap();
    let out = normcheck(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
