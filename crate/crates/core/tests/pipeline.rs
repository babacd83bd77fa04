use std::fs;
use std::path::Path;

use cfg_rank_core::pipeline::{report_json, run_project, MemberError, MemberMetrics, RunOptions};
use cfg_rank_core::sat::verify;
use tempfile::TempDir;

fn write(root: &Path, rel: &str, text: &str) {
    let path = root.join(rel);
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, text).unwrap();
}

const TWO_FUNCTIONS: &str = r#"#[cfg(feature = "a")]
fn foo() {
    #[cfg(any(feature = "b", feature = "c"))]
    fn bar() {
        let x = 1;
    }
}

fn qux() {
    bar();
}
"#;

fn package(root: &Path, name: &str, features: &str, lib: &str) {
    write(
        root,
        "Cargo.toml",
        &format!("[package]\nname = \"{name}\"\nversion = \"0.1.0\"\n\n[features]\n{features}"),
    );
    write(root, "src/lib.rs", lib);
}

#[test]
fn two_function_project_golden_configurations() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "golden", "a = []\nb = []\nc = []\n", TWO_FUNCTIONS);
    let opts = RunOptions { k: 2, ..RunOptions::default() };
    let run = run_project(dir.path(), &opts).unwrap();
    assert_eq!(run.members.len(), 1);
    let a = run.members[0].result.as_ref().unwrap();
    // a collects edges from b, c and the patch node, so it leads the ranking
    assert_eq!(a.ranking[0], "a");
    // anchored at a, the solver branches true-first in variable order
    let enabled: Vec<Vec<&str>> = a
        .configurations
        .iter()
        .map(|c| c.enabled.iter().map(String::as_str).collect())
        .collect();
    assert_eq!(enabled, vec![vec!["a", "b", "c"], vec!["a", "b"]]);
    assert!(a.configurations.iter().all(|c| c.anchor.as_deref() == Some("a")));
    assert!(!a.exhausted);
}

#[test]
fn two_function_project_has_five_models() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "golden", "a = []\nb = []\nc = []\n", TWO_FUNCTIONS);
    let opts = RunOptions { k: 100, ..RunOptions::default() };
    let run = run_project(dir.path(), &opts).unwrap();
    let a = run.members[0].result.as_ref().unwrap();
    // b and c each require a; everything off is also valid
    assert_eq!(a.configurations.len(), 5);
    assert!(a.exhausted);
    for c in &a.configurations {
        assert!(verify(&a.cnf, &c.to_assignment(&a.cnf)));
    }
}

#[test]
fn empty_project_yields_nothing() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "empty", "", "");
    let run = run_project(dir.path(), &RunOptions::default()).unwrap();
    let a = run.members[0].result.as_ref().unwrap();
    assert!(a.configurations.is_empty());
    let agg = run.aggregate();
    assert_eq!(agg.configurations, 0);
    assert_eq!(agg.cnf_variables, 0);
    assert_eq!(agg.declared_features, 0);
}

#[test]
fn workspace_without_members_reports_zero() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "Cargo.toml", "[workspace]\nmembers = []\n");
    let run = run_project(dir.path(), &RunOptions::default()).unwrap();
    assert!(run.members.is_empty());
    assert_eq!(run.aggregate(), MemberMetrics::default());
    let report = report_json(&run, false);
    assert_eq!(report["aggregate"]["members"], 0);
}

#[test]
fn syntax_error_fails_only_its_member() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "Cargo.toml", "[workspace]\nmembers = [\"crates/*\"]\n");
    package(&dir.path().join("crates/good"), "good", "x = []\n", "#[cfg(feature = \"x\")]\nfn f() {}\n");
    package(&dir.path().join("crates/bad"), "bad", "y = []\n", "fn broken( {\n");
    let run = run_project(dir.path(), &RunOptions::default()).unwrap();
    let names: Vec<&str> = run.members.iter().map(|m| m.name.as_str()).collect();
    assert_eq!(names, ["bad", "good"]);
    assert!(matches!(run.members[0].result, Err(MemberError::Syntax(_))));
    let good = run.members[1].result.as_ref().unwrap();
    assert_eq!(good.configurations.len(), 2);
    assert_eq!(run.failed_members(), 1);
    assert_eq!(run.aggregate(), good.metrics);
    let report = report_json(&run, false);
    assert_eq!(report["members"][0]["status"], "failed");
    assert_eq!(report["aggregate"]["failed_members"], 1);
}

#[test]
fn missing_root_manifest_is_fatal() {
    let dir = TempDir::new().unwrap();
    assert!(run_project(dir.path(), &RunOptions::default()).is_err());
}

#[test]
fn reports_without_timing_are_reproducible() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "golden", "a = []\nb = []\nc = []\n", TWO_FUNCTIONS);
    let render = || serde_json::to_string(&report_json(&run_project(dir.path(), &RunOptions::default()).unwrap(), false)).unwrap();
    assert_eq!(render(), render());
    assert!(!render().contains("wall_time"));
}
