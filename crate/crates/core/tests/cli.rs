use std::process::{Command, Output};

use cayleylab::cli::parse_report_json;

fn cayleylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayleylab"))
        .args(args)
        .env_remove("CAYLEYLAB_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_c4_json() {
    let o = cayleylab(&["analyze", "cycle:4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report_json(&stdout(&o)).unwrap();
    assert_eq!((r.aut_order, r.le_is_klein, r.r_normal), (Some(768), Some(true), Some(false)));
    assert!(!r.theorem1.applicable);
    assert!(r.lemma2.checked && !r.theorem4.checked);
}

#[test]
fn analyze_tree_reports_infinite_girth() {
    let o = cayleylab(&["analyze", "tree:2,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"girth\": \"infinite\""));
    let r = parse_report_json(&text).unwrap();
    assert_eq!(r.aut_order, Some(144));
    assert!(r.theorem1.confirmed);
}

#[test]
fn non_generating_sets_exit_with_one() {
    let o = cayleylab(&["analyze", "1-2 3-4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S does not generate S_n"));
    assert_eq!(cayleylab(&["analyze", "1-1"]).status.code(), Some(1));
    assert_eq!(cayleylab(&["analyze", "--bogus"]).status.code(), Some(1));
}

#[test]
fn max_n_from_flag_and_environment() {
    assert_eq!(cayleylab(&["analyze", "path:5", "--max-n", "4"]).status.code(), Some(1));
    let capped = Command::new(env!("CARGO_BIN_EXE_cayleylab"))
        .args(["analyze", "path:5"])
        .env("CAYLEYLAB_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap 4"));
    let overridden = Command::new(env!("CARGO_BIN_EXE_cayleylab"))
        .args(["analyze", "path:5", "--max-n", "5", "--skip-full-aut"])
        .env("CAYLEYLAB_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn spec_from_file() {
    let dir = std::env::temp_dir().join(format!("cayleylab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    std::fs::write(&path, "# pentagon\n1-2 2-3\n3-4 4-5\n5-1\n").unwrap();
    let o = cayleylab(&["analyze", "--file", path.to_str().unwrap(), "--json"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report_json(&stdout(&o)).unwrap();
    assert_eq!((r.aut_order, r.le_order, r.r_normal), (Some(1200), Some(1), Some(true)));
    assert_eq!(cayleylab(&["analyze", "--file", "/nonexistent/spec"]).status.code(), Some(1));
}

#[test]
fn cycles_command() {
    let o = cayleylab(&["cycles", "cycle:4", "--t", "1-2", "--k", "2-3", "--len", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().last(), Some("8 cycles"));
    assert!(text.lines().next().unwrap().starts_with("(e, "));
    let o = cayleylab(&["cycles", "path:4", "--t", "1-2", "--k", "3-4", "--len", "4"]);
    assert_eq!(stdout(&o).lines().last(), Some("1 cycles"));
    assert_eq!(cayleylab(&["cycles", "path:4", "--t", "1-3", "--k", "3-4"]).status.code(), Some(1));
}

#[test]
fn verify_paper_passes() {
    let o = cayleylab(&["verify-paper", "--slow"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 12);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("has 768 elements"));
}
