use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn cfg_rank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfg-rank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(root: &Path, rel: &str, text: &str) {
    let path = root.join(rel);
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, text).unwrap();
}

fn package(root: &Path, name: &str, lib: &str) {
    write(
        root,
        "Cargo.toml",
        &format!("[package]\nname = \"{name}\"\nversion = \"0.1.0\"\n\n[features]\na = []\nb = []\n"),
    );
    write(root, "src/lib.rs", lib);
}

const LIB: &str = "#[cfg(feature = \"a\")]\nmod m {\n    #[cfg(feature = \"b\")]\n    fn f() {\n        let x = 1;\n    }\n}\n";

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_prints_json_and_succeeds() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "demo", LIB);
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "-n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["members"][0]["name"], "demo");
    assert_eq!(report["members"][0]["configurations"].as_array().unwrap().len(), 2);
    assert_eq!(report["aggregate"]["configurations"], 2);
    assert!(report["aggregate"].get("wall_time_ms").is_none());
}

#[test]
fn timing_flag_adds_wall_times() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "demo", LIB);
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "--timing"]);
    assert!(json(&out)["aggregate"]["wall_time_ms"].is_u64());
}

#[test]
fn every_centrality_measure_runs() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "demo", LIB);
    for m in ["degree-in", "degree-out", "harmonic", "closeness", "betweenness", "eigenvector", "katz"] {
        let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "--centrality", m]);
        assert_eq!(out.status.code(), Some(0), "{m}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["members"][0]["status"], "ok");
    }
}

#[test]
fn oversized_katz_beta_fails_the_member() {
    let dir = TempDir::new().unwrap();
    // a ⇄ b forms a cycle, so a large attenuation diverges
    package(
        dir.path(),
        "cyclic",
        "#[cfg(feature = \"a\")]\nfn f() {\n    #[cfg(feature = \"b\")]\n    fn g() {\n        #[cfg(feature = \"a\")]\n        fn h() {}\n    }\n}\n",
    );
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "--centrality", "katz", "--beta", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["members"][0]["status"], "failed");
}

#[test]
fn failed_member_exits_with_one() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "Cargo.toml", "[workspace]\nmembers = [\"good\", \"bad\"]\n");
    package(&dir.path().join("good"), "good", LIB);
    package(&dir.path().join("bad"), "bad", "fn (");
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("member bad failed"));
    assert_eq!(json(&out)["aggregate"]["failed_members"], 1);
}

#[test]
fn missing_manifest_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn artifacts_are_written() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "demo", LIB);
    let out_dir = TempDir::new().unwrap();
    let cnf = out_dir.path().join("demo.cnf");
    let report = out_dir.path().join("report.json");
    let dots = out_dir.path().join("dot");
    let out = cfg_rank(&[
        "analyze",
        dir.path().to_str().unwrap(),
        "--format",
        "text",
        "--emit-dimacs",
        cnf.to_str().unwrap(),
        "--emit-dot",
        dots.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("member demo"));
    let dimacs = fs::read_to_string(&cnf).unwrap();
    assert!(dimacs.contains("p cnf 2 "), "{dimacs}");
    let written: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(written["members"][0]["name"], "demo");
    for kind in ["uir", "multigraph", "features", "atoms"] {
        let text = fs::read_to_string(dots.join(format!("demo.{kind}.dot"))).unwrap();
        assert!(text.starts_with("digraph"), "{kind}");
    }
}

#[test]
fn dimacs_names_are_split_per_member() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "Cargo.toml", "[workspace]\nmembers = [\"one\", \"two\"]\n");
    package(&dir.path().join("one"), "one", LIB);
    package(&dir.path().join("two"), "two", LIB);
    let out_dir = TempDir::new().unwrap();
    let base = out_dir.path().join("out.cnf");
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "--emit-dimacs", base.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out_dir.path().join("out.one.cnf").exists());
    assert!(out_dir.path().join("out.two.cnf").exists());
}

#[test]
fn zero_count_is_rejected() {
    let dir = TempDir::new().unwrap();
    package(dir.path(), "demo", LIB);
    let out = cfg_rank(&["analyze", dir.path().to_str().unwrap(), "-n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_corpus_writes_ten_projects() {
    let dir = TempDir::new().unwrap();
    let out = cfg_rank(&["gen-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for i in 0..10 {
        assert!(dir.path().join(format!("synth{i:02}/Cargo.toml")).exists());
    }
}
