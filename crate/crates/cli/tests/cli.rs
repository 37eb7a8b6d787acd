use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclo-schur")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PROFILE: [&str; 8] = ["--m", "2", "--n", "2", "--bk", "1,1", "--bl", "1,1"];

fn with_profile<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(PROFILE.iter()).chain(tail).copied().collect()
}

#[test]
fn dim_hecke_prints_the_dimension() {
    let o = run(&["dim-hecke", "--m", "2", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn hooks_lists_the_three_component_example() {
    let o = run(&["hooks", "--m", "3", "--bk", "1,1,1", "--bl", "1,2,3", "--n", "20", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("\"((2,1,1);(3,2,2,1);(4,3,1))\"") || l.starts_with("((2,1,1);(3,2,2,1);(4,3,1))")));
}

#[test]
fn supermod_reports_every_weight() {
    let o = run(&with_profile(&["supermod"], &["--format", "json"]));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "cyclo-schur/supermod/v1");
    let ws = v["weights"].as_array().unwrap();
    assert_eq!(ws.len(), 10);
    for w in ws {
        for key in ["weight", "parity", "rank", "multiplicities"] {
            assert!(w.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn verify_all_passes() {
    let o = run(&with_profile(&["verify-all"], &[]));
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn schur_subcommands_succeed() {
    for (head, tail) in [
        (vec!["schur", "dims"], vec!["--spec", "q=1,Q=1,-1"]),
        (vec!["schur", "gram"], vec!["--shape", "((1);(1))", "--format", "json"]),
        (vec!["schur", "verify-cellular"], vec![]),
        (vec!["schur", "verify-duality"], vec!["--spec", "q=1,Q=1,-1"]),
    ] {
        let o = run(&with_profile(&head, &tail));
        assert!(o.status.success(), "{head:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn golden_suite_passes() {
    let o = run(&["golden"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 5);
}

#[test]
fn invalid_config_and_scale_limit_have_distinct_codes() {
    assert_eq!(run(&["hooks", "--m", "3", "--bk", "1,1", "--bl", "1,1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&with_profile(&["schur", "dims"], &["--spec", "nonsense"])).status.code(), Some(2));
    assert_eq!(run(&["dim-hecke", "--m", "3", "--n", "6"]).status.code(), Some(3));
    assert_eq!(run(&with_profile(&["schur", "dims"], &["--max-dim-module", "10"])).status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = with_profile(&["supermod"], &["--format", "json"]);
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn cache_dir_receives_artifacts() {
    let dir = std::env::temp_dir().join(format!("cyclo-schur-cli-test-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_cyclo-schur"))
        .args(["dim-hecke", "--m", "1", "--n", "3", "--format", "json"])
        .env("CYCLO_SCHUR_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), 1);
    let body = std::fs::read_to_string(files[0].as_ref().unwrap().path()).unwrap();
    assert_eq!(body, stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}
