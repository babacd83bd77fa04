//! End-to-end analysis of a project: every workspace member goes through
//! parsing, UIR weighting, graph construction, ranking, refinement and CNF
//! encoding, after which the top-k configurations are drawn from the solver
//! in rank order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::atomtree::{extract_atom_tree, refine, AtomTree, RefineError};
use crate::centrality::{
    compute, rank, CentralityError, CentralityParams, CentralityVector, DenseGraph, Measure,
};
use crate::featgraph::{
    add_patch_node, extract_feature_graph_with, is_reserved, squash, ChiMode, FeatureGraph,
    FeatureMultigraph,
};
use crate::frontend::{
    parse_manifest, parse_source, parse_workspace_members, Manifest, ManifestError, SyntaxError,
};
use crate::logic::{
    build_formula_with, feature_variables, to_cnf_over, CnfError, CnfFormula, Formula, PhiMode,
    DEFAULT_CLAUSE_LIMIT,
};
use crate::sat::{blocking_clause, Assignment, SolveResult, Solver};
use crate::uir::{self, Uir};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    pub enabled: BTreeSet<String>,
    pub disabled: BTreeSet<String>,
    /// Ranked feature that was assumed when the model was found; `None` for
    /// models drawn after the ranking ran out.
    pub anchor: Option<String>,
}

impl Configuration {
    pub fn from_model(cnf: &CnfFormula, model: &Assignment, anchor: Option<String>) -> Self {
        let mut enabled = BTreeSet::new();
        let mut disabled = BTreeSet::new();
        for (name, &on) in cnf.variables.iter().zip(model) {
            if on {
                enabled.insert(name.clone());
            } else {
                disabled.insert(name.clone());
            }
        }
        Configuration {
            enabled,
            disabled,
            anchor,
        }
    }

    pub fn to_assignment(&self, cnf: &CnfFormula) -> Assignment {
        cnf.variables
            .iter()
            .map(|v| self.enabled.contains(v))
            .collect()
    }
}

/// Fewer valid configurations exist than were requested.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("only {} distinct valid configurations exist", .configurations.len())]
pub struct Exhausted {
    pub configurations: Vec<Configuration>,
}

impl Exhausted {
    pub fn n(&self) -> usize {
        self.configurations.len()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AnchorMode {
    /// Keep drawing models for an anchor until it is unsatisfiable.
    #[default]
    Exhaust,
    /// Move on to the next anchor after one model.
    OnePerAnchor,
}

pub fn generate_configurations(
    ranking: &[String],
    cnf: &CnfFormula,
    k: usize,
) -> Result<Vec<Configuration>, Exhausted> {
    generate_configurations_with(ranking, cnf, k, AnchorMode::Exhaust)
}

/// Draws models anchored at each ranked feature in turn, blocking each one
/// found. Once the ranking is used up the remaining budget is filled without
/// an anchor, so every model of the formula is reachable.
pub fn generate_configurations_with(
    ranking: &[String],
    cnf: &CnfFormula,
    k: usize,
    mode: AnchorMode,
) -> Result<Vec<Configuration>, Exhausted> {
    let mut solver = Solver::new(cnf);
    let mut out: Vec<Configuration> = Vec::new();
    let anchors = ranking
        .iter()
        .filter_map(|f| cnf.index_of(f).map(|i| (Some(f), vec![i as i32])));
    for (anchor, assumptions) in anchors.chain(std::iter::once((None, Vec::new()))) {
        loop {
            if out.len() >= k {
                return Ok(out);
            }
            match solver.solve(&assumptions) {
                SolveResult::Sat(model) => {
                    solver.add_clause(&blocking_clause(&model));
                    out.push(Configuration::from_model(cnf, &model, anchor.cloned()));
                    if mode == AnchorMode::OnePerAnchor && anchor.is_some() {
                        break;
                    }
                }
                SolveResult::Unsat => break,
            }
        }
    }
    if out.len() >= k {
        Ok(out)
    } else {
        Err(Exhausted {
            configurations: out,
        })
    }
}

/// Distinct feature variants used by cfg predicates, counting `not(f)`
/// separately from `f`.
pub fn detected_feature_count(g: &FeatureGraph, uir: &Uir) -> usize {
    let mut seen: BTreeSet<(&str, bool)> = BTreeSet::new();
    for atom in uir.atoms() {
        if let Some(p) = atom.predicate() {
            for o in p.occurrences() {
                if !is_reserved(o.name) && g.nodes.contains_key(o.name) {
                    seen.insert((o.name, o.negated));
                }
            }
        }
    }
    seen.len()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub k: usize,
    pub measure: Measure,
    pub params: CentralityParams,
    pub default_weight: u64,
    pub timeout: Duration,
    pub phi_mode: PhiMode,
    pub chi_mode: ChiMode,
    pub anchor_mode: AnchorMode,
    pub clause_limit: usize,
    /// Include wall-clock times in reports, which makes them run-dependent.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            k: 10,
            measure: Measure::Eigenvector,
            params: CentralityParams::default(),
            default_weight: uir::DEFAULT_WEIGHT,
            timeout: Duration::from_secs(600),
            phi_mode: PhiMode::Implication,
            chi_mode: ChiMode::Occurrences,
            anchor_mode: AnchorMode::Exhaust,
            clause_limit: DEFAULT_CLAUSE_LIMIT,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MemberError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Manifest(#[from] ManifestError),
    #[error("{0}")]
    Cnf(#[from] CnfError),
    #[error("{0}")]
    Refine(#[from] RefineError),
    #[error("{0}")]
    Centrality(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("analysis exceeded the {0:?} timeout")]
    Timeout(Duration),
    #[error("analysis panicked")]
    Panicked,
}

impl From<CentralityError> for MemberError {
    fn from(e: CentralityError) -> Self {
        MemberError::Centrality(e.to_string())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MemberMetrics {
    pub source_files: usize,
    pub source_lines: usize,
    pub uir_nodes: usize,
    pub uir_edges: usize,
    pub uir_height: usize,
    /// Includes the global-scope node, excludes the patch node.
    pub feature_graph_nodes: usize,
    /// Parallel edges counted individually.
    pub feature_graph_edges: usize,
    pub squashed_edges: usize,
    pub atom_tree_nodes: usize,
    pub atom_tree_edges: usize,
    pub detected_features: usize,
    pub declared_features: usize,
    pub cnf_variables: usize,
    pub cnf_clauses: usize,
    pub configurations: usize,
}

impl MemberMetrics {
    /// Field-wise sums, except `uir_height` which takes the maximum.
    pub fn aggregate<'a>(all: impl IntoIterator<Item = &'a MemberMetrics>) -> MemberMetrics {
        let mut out = MemberMetrics::default();
        for m in all {
            out.source_files += m.source_files;
            out.source_lines += m.source_lines;
            out.uir_nodes += m.uir_nodes;
            out.uir_edges += m.uir_edges;
            out.uir_height = out.uir_height.max(m.uir_height);
            out.feature_graph_nodes += m.feature_graph_nodes;
            out.feature_graph_edges += m.feature_graph_edges;
            out.squashed_edges += m.squashed_edges;
            out.atom_tree_nodes += m.atom_tree_nodes;
            out.atom_tree_edges += m.atom_tree_edges;
            out.detected_features += m.detected_features;
            out.declared_features += m.declared_features;
            out.cnf_variables += m.cnf_variables;
            out.cnf_clauses += m.cnf_clauses;
            out.configurations += m.configurations;
        }
        out
    }
}

/// Every intermediate artifact of one member's analysis.
#[derive(Clone, Debug)]
pub struct MemberAnalysis {
    pub manifest: Manifest,
    pub uir: Uir,
    pub multigraph: FeatureMultigraph,
    pub graph: FeatureGraph,
    pub patched: FeatureGraph,
    pub centrality: CentralityVector,
    pub atom_tree: AtomTree,
    pub refined: CentralityVector,
    pub ranking: Vec<String>,
    pub formula: Formula,
    pub cnf: CnfFormula,
    pub configurations: Vec<Configuration>,
    /// Fewer than `k` configurations exist.
    pub exhausted: bool,
    pub metrics: MemberMetrics,
}

/// Runs the whole pipeline on in-memory sources.
pub fn analyze_sources(
    files: &[(String, String)],
    manifest: &Manifest,
    opts: &RunOptions,
) -> Result<MemberAnalysis, MemberError> {
    let ast = parse_source(files)?;
    let uir = uir::build(&ast, opts.default_weight);
    let multigraph = extract_feature_graph_with(&uir, opts.chi_mode);
    let graph = squash(&multigraph);
    let patched = add_patch_node(&graph);
    let centrality = compute(&DenseGraph::from_feature_graph(&patched), opts.measure, &opts.params)?;
    let atom_tree = extract_atom_tree(&uir);
    let refined = refine(&centrality, &atom_tree)?;
    let ranking = rank(&refined);
    let formula = build_formula_with(&graph, manifest, opts.phi_mode);
    let cnf = to_cnf_over(&formula, &feature_variables(&graph, manifest), opts.clause_limit)?;
    // nothing to configure without a single feature
    let (configurations, exhausted) = if cnf.num_vars() == 0 {
        (Vec::new(), false)
    } else {
        match generate_configurations_with(&ranking, &cnf, opts.k, opts.anchor_mode) {
            Ok(c) => (c, false),
            Err(e) => (e.configurations, true),
        }
    };

    let uir_m = uir.metrics();
    let tree_m = atom_tree.metrics();
    let metrics = MemberMetrics {
        source_files: files.len(),
        source_lines: files.iter().map(|(_, t)| t.lines().count()).sum(),
        uir_nodes: uir_m.nodes,
        uir_edges: uir_m.edges,
        uir_height: uir_m.height,
        feature_graph_nodes: graph.nodes.len(),
        feature_graph_edges: multigraph.edges.len(),
        squashed_edges: graph.edges.len(),
        atom_tree_nodes: tree_m.nodes,
        atom_tree_edges: tree_m.edges,
        detected_features: detected_feature_count(&graph, &uir),
        declared_features: manifest.features.len(),
        cnf_variables: cnf.num_vars(),
        cnf_clauses: cnf.clauses.len(),
        configurations: configurations.len(),
    };
    Ok(MemberAnalysis {
        manifest: manifest.clone(),
        uir,
        multigraph,
        graph,
        patched,
        centrality,
        atom_tree,
        refined,
        ranking,
        formula,
        cnf,
        configurations,
        exhausted,
        metrics,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FatalConfig {
    #[error("cannot read manifest {path}: {message}")]
    Unreadable { path: String, message: String },
    #[error("invalid root manifest: {0}")]
    Manifest(#[from] ManifestError),
    #[error("cannot list workspace members: {0}")]
    Members(String),
}

#[derive(Debug)]
pub struct MemberOutcome {
    pub name: String,
    /// Directory relative to the project root; empty for the root itself.
    pub path: String,
    pub result: Result<MemberAnalysis, MemberError>,
    pub wall_time: Duration,
}

#[derive(Debug)]
pub struct ProjectRun {
    pub members: Vec<MemberOutcome>,
}

impl ProjectRun {
    pub fn failed_members(&self) -> usize {
        self.members.iter().filter(|m| m.result.is_err()).count()
    }

    pub fn aggregate(&self) -> MemberMetrics {
        MemberMetrics::aggregate(
            self.members
                .iter()
                .filter_map(|m| m.result.as_ref().ok().map(|a| &a.metrics)),
        )
    }
}

fn read(path: &Path) -> Result<String, MemberError> {
    fs::read_to_string(path).map_err(|e| MemberError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Every `.rs` file below `dir/src`, as (path relative to `dir`, text).
pub fn collect_sources(dir: &Path) -> Result<Vec<(String, String)>, MemberError> {
    let mut out = Vec::new();
    let src = dir.join("src");
    if !src.is_dir() {
        return Ok(out);
    }
    let mut stack = vec![src];
    while let Some(d) = stack.pop() {
        let entries = fs::read_dir(&d).map_err(|e| MemberError::Io {
            path: d.display().to_string(),
            message: e.to_string(),
        })?;
        for entry in entries.flatten() {
            let path = entry.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "rs") {
                let rel = path
                    .strip_prefix(dir)
                    .expect("below the member directory")
                    .components()
                    .map(|c| c.as_os_str().to_string_lossy().into_owned())
                    .collect::<Vec<_>>()
                    .join("/");
                out.push((rel, read(&path)?));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Shell-style match of one path segment with `*` and `?`.
fn segment_matches(pattern: &str, name: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let n: Vec<char> = name.chars().collect();
    let (mut pi, mut ni) = (0, 0);
    let mut backtrack: Option<(usize, usize)> = None;
    while ni < n.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == n[ni]) {
            pi += 1;
            ni += 1;
        } else if pi < p.len() && p[pi] == '*' {
            backtrack = Some((pi, ni));
            pi += 1;
        } else if let Some((bp, bn)) = backtrack {
            pi = bp + 1;
            ni = bn + 1;
            backtrack = Some((bp, bn + 1));
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == '*')
}

/// Directories (relative to `root`) matched by a member pattern.
fn expand_member_pattern(root: &Path, pattern: &str) -> Vec<String> {
    let mut current = vec![String::new()];
    for segment in pattern.split('/').filter(|s| !s.is_empty() && *s != ".") {
        let mut next = Vec::new();
        for base in &current {
            let dir = root.join(base);
            if !segment.contains(['*', '?']) {
                if dir.join(segment).is_dir() {
                    next.push(join_rel(base, segment));
                }
                continue;
            }
            let Ok(entries) = fs::read_dir(&dir) else {
                continue;
            };
            let mut names: Vec<String> = entries
                .flatten()
                .filter(|e| e.path().is_dir())
                .map(|e| e.file_name().to_string_lossy().into_owned())
                .filter(|n| segment_matches(segment, n))
                .collect();
            names.sort();
            next.extend(names.into_iter().map(|n| join_rel(base, &n)));
        }
        current = next;
    }
    current
}

fn join_rel(base: &str, name: &str) -> String {
    if base.is_empty() {
        name.to_string()
    } else {
        format!("{base}/{name}")
    }
}

/// Member directories relative to `root`; `""` is the root package.
pub fn discover_members(root: &Path) -> Result<Vec<String>, FatalConfig> {
    let manifest_path = root.join("Cargo.toml");
    let text = fs::read_to_string(&manifest_path).map_err(|e| FatalConfig::Unreadable {
        path: manifest_path.display().to_string(),
        message: e.to_string(),
    })?;
    let (patterns, has_package) = parse_workspace_members(&text)?;
    let Some(patterns) = patterns else {
        return Ok(vec![String::new()]);
    };
    let mut members = BTreeSet::new();
    if has_package {
        members.insert(String::new());
    }
    for p in &patterns {
        for dir in expand_member_pattern(root, p) {
            if root.join(&dir).join("Cargo.toml").is_file() {
                members.insert(dir);
            }
        }
    }
    Ok(members.into_iter().collect())
}

fn load_member(root: &Path, rel: &str) -> Result<(Manifest, Vec<(String, String)>), MemberError> {
    let dir = root.join(rel);
    let manifest = parse_manifest(&read(&dir.join("Cargo.toml"))?)?;
    let files = collect_sources(&dir)?;
    Ok((manifest, files))
}

fn member_name(rel: &str, manifest: Option<&Manifest>) -> String {
    match manifest {
        Some(m) if !m.package.is_empty() => m.package.clone(),
        _ if rel.is_empty() => ".".to_string(),
        _ => rel.to_string(),
    }
}

/// Analyzes every member of the project at `root`. Members run on their own
/// threads; one that exceeds the timeout is recorded as failed and left
/// behind.
pub fn run_project(root: &Path, opts: &RunOptions) -> Result<ProjectRun, FatalConfig> {
    let members = discover_members(root)?;
    let parallel = thread::available_parallelism().map_or(1, |n| n.get());
    let mut outcomes = Vec::with_capacity(members.len());
    for batch in members.chunks(parallel) {
        let mut pending = Vec::new();
        for rel in batch {
            let (tx, rx) = mpsc::channel();
            let root: PathBuf = root.to_path_buf();
            let rel_owned = rel.clone();
            let opts = opts.clone();
            let started = Instant::now();
            let spawned = thread::Builder::new()
                .name(format!("member {rel}"))
                .stack_size(64 * 1024 * 1024)
                .spawn(move || {
                    let loaded = load_member(&root, &rel_owned);
                    let name = member_name(&rel_owned, loaded.as_ref().ok().map(|(m, _)| m));
                    let result = loaded.and_then(|(m, files)| analyze_sources(&files, &m, &opts));
                    let _ = tx.send((name, result));
                });
            pending.push((rel.clone(), started, rx, spawned.is_ok()));
        }
        for (rel, started, rx, spawned) in pending {
            let deadline = started + opts.timeout;
            let received = if spawned {
                rx.recv_timeout(deadline.saturating_duration_since(Instant::now()))
            } else {
                Err(mpsc::RecvTimeoutError::Disconnected)
            };
            let (name, result) = match received {
                Ok(pair) => pair,
                Err(mpsc::RecvTimeoutError::Timeout) => {
                    (member_name(&rel, None), Err(MemberError::Timeout(opts.timeout)))
                }
                Err(mpsc::RecvTimeoutError::Disconnected) => {
                    (member_name(&rel, None), Err(MemberError::Panicked))
                }
            };
            outcomes.push(MemberOutcome {
                name,
                path: rel,
                result,
                wall_time: started.elapsed(),
            });
        }
    }
    outcomes.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.path.cmp(&b.path)));
    Ok(ProjectRun { members: outcomes })
}

/// The machine-readable report. Wall times appear only with `timing`, so
/// repeated runs on the same input produce identical documents.
pub fn report_json(run: &ProjectRun, timing: bool) -> Value {
    let members: Vec<Value> = run
        .members
        .iter()
        .map(|m| {
            let mut obj = match &m.result {
                Ok(a) => json!({
                    "name": m.name,
                    "path": m.path,
                    "status": "ok",
                    "ranking": a.ranking,
                    "configurations": a.configurations,
                    "exhausted": a.exhausted,
                    "metrics": a.metrics,
                }),
                Err(e) => json!({
                    "name": m.name,
                    "path": m.path,
                    "status": "failed",
                    "error": e.to_string(),
                    "configurations": [],
                }),
            };
            if timing {
                obj["wall_time_ms"] = json!(m.wall_time.as_millis() as u64);
            }
            obj
        })
        .collect();
    let mut aggregate = serde_json::to_value(run.aggregate()).expect("metrics serialize");
    aggregate["members"] = json!(run.members.len());
    aggregate["failed_members"] = json!(run.failed_members());
    if timing {
        let total: u128 = run.members.iter().map(|m| m.wall_time.as_millis()).sum();
        aggregate["wall_time_ms"] = json!(total as u64);
    }
    json!({ "members": members, "aggregate": aggregate })
}

pub fn report_text(run: &ProjectRun, timing: bool) -> String {
    let mut out = String::new();
    for m in &run.members {
        match &m.result {
            Ok(a) => {
                let _ = writeln!(out, "member {} ({} configurations)", m.name, a.configurations.len());
                let top: Vec<&str> = a.ranking.iter().take(10).map(String::as_str).collect();
                let _ = writeln!(out, "  ranking: {}", top.join(", "));
                for (i, c) in a.configurations.iter().enumerate() {
                    let enabled: Vec<&str> = c.enabled.iter().map(String::as_str).collect();
                    let _ = writeln!(
                        out,
                        "  #{:<3} anchor={:<16} enabled=[{}]",
                        i + 1,
                        c.anchor.as_deref().unwrap_or("-"),
                        enabled.join(", ")
                    );
                }
                if a.exhausted {
                    let _ = writeln!(out, "  (every valid configuration listed)");
                }
            }
            Err(e) => {
                let _ = writeln!(out, "member {} FAILED: {e}", m.name);
            }
        }
        if timing {
            let _ = writeln!(out, "  time: {} ms", m.wall_time.as_millis());
        }
    }
    let agg = run.aggregate();
    let fields = serde_json::to_value(&agg).expect("metrics serialize");
    let _ = writeln!(
        out,
        "aggregate over {} members ({} failed):",
        run.members.len(),
        run.failed_members()
    );
    if let Value::Object(map) = fields {
        let ordered: BTreeMap<_, _> = map.into_iter().collect();
        for (k, v) in ordered {
            let _ = writeln!(out, "  {k:<20} {v}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::verify;

    fn cnf(vars: &[&str], clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula {
            variables: vars.iter().map(|s| s.to_string()).collect(),
            clauses: clauses.iter().map(|c| c.to_vec()).collect(),
        }
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn anchored_model_follows_implication() {
        let c = cnf(&["a", "b"], &[&[-1, 2]]);
        let out = generate_configurations(&names(&["a"]), &c, 1).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].enabled, ["a", "b"].iter().map(|s| s.to_string()).collect());
        assert_eq!(out[0].anchor.as_deref(), Some("a"));
    }

    #[test]
    fn exhausted_returns_every_model() {
        let c = cnf(&["a", "b"], &[&[1, 2]]);
        let err = generate_configurations(&names(&["a", "b"]), &c, 10).unwrap_err();
        assert_eq!(err.n(), 3);
        let distinct: BTreeSet<_> = err.configurations.iter().map(|c| &c.enabled).collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn unsatisfiable_anchor_is_skipped() {
        let c = cnf(&["a", "b"], &[&[-1]]);
        let out = generate_configurations(&names(&["a", "b"]), &c, 1).unwrap();
        assert_eq!(out[0].anchor.as_deref(), Some("b"));
        assert!(!out[0].enabled.contains("a"));
    }

    #[test]
    fn one_per_anchor_mode() {
        let c = cnf(&["a", "b"], &[]);
        let out =
            generate_configurations_with(&names(&["a", "b"]), &c, 2, AnchorMode::OnePerAnchor)
                .unwrap();
        assert_eq!(out[0].anchor.as_deref(), Some("a"));
        assert_eq!(out[1].anchor.as_deref(), Some("b"));
    }

    #[test]
    fn tail_phase_reaches_all_false_model() {
        let c = cnf(&["a"], &[]);
        let err = generate_configurations(&names(&["a"]), &c, 5).unwrap_err();
        assert_eq!(err.n(), 2);
        assert_eq!(err.configurations[1].anchor, None);
        assert!(err.configurations[1].enabled.is_empty());
    }

    #[test]
    fn detected_count_separates_negation() {
        let count = |src: &str| {
            let ast = parse_source(&[("src/lib.rs".into(), src.into())]).unwrap();
            let uir = uir::build(&ast, 1);
            let g = squash(&extract_feature_graph_with(&uir, ChiMode::Occurrences));
            detected_feature_count(&g, &uir)
        };
        assert_eq!(count("#[cfg(a)] fn f() {}\n#[cfg(not(a))] fn f() {}"), 2);
        assert_eq!(count("#[cfg(a)] fn f() {}\n#[cfg(a)] fn g() {}"), 1);
        assert_eq!(count("#[cfg(any(a, not(b)))] fn f() {}"), 2);
    }

    #[test]
    fn in_memory_pipeline_produces_valid_configurations() {
        let files = vec![(
            "src/lib.rs".to_string(),
            "#[cfg(feature = \"a\")]\nfn foo() {\n  #[cfg(any(feature = \"b\", feature = \"c\"))]\n  fn bar() { let x = 1; }\n}\nfn qux() { bar(); }\n"
                .to_string(),
        )];
        let m = parse_manifest("[features]\ndefault = [\"a\"]\na = []\nb = []\nc = []").unwrap();
        let a = analyze_sources(&files, &m, &RunOptions::default()).unwrap();
        assert!(!a.configurations.is_empty());
        for c in &a.configurations {
            assert!(verify(&a.cnf, &c.to_assignment(&a.cnf)));
            assert!(c.enabled.contains("a"));
        }
        assert_eq!(a.metrics.configurations, a.configurations.len());
    }

    #[test]
    fn glob_segments() {
        assert!(segment_matches("*", "core"));
        assert!(segment_matches("c*e", "core"));
        assert!(segment_matches("c?re", "core"));
        assert!(!segment_matches("c*x", "core"));
        assert!(segment_matches("*-sys", "foo-sys"));
    }

    #[test]
    fn aggregate_sums_and_takes_max_height() {
        let a = MemberMetrics {
            uir_nodes: 3,
            uir_height: 2,
            ..Default::default()
        };
        let b = MemberMetrics {
            uir_nodes: 4,
            uir_height: 5,
            ..Default::default()
        };
        let agg = MemberMetrics::aggregate([&a, &b]);
        assert_eq!(agg.uir_nodes, 7);
        assert_eq!(agg.uir_height, 5);
    }
}
