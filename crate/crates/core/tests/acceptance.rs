//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::{BTreeMap, BTreeSet};
use std::panic;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cfg_rank_core::centrality::{
    betweenness_opsahl, closeness_newman, eigenvector, harmonic, katz, CentralityVector, DenseGraph,
};
use cfg_rank_core::featgraph::{
    add_patch_node, extract_feature_graph, ratio, squash, FeatureGraph, Weight, GLOBAL, PATCH,
};
use cfg_rank_core::frontend::{parse_manifest, parse_source, NodeKind};
use cfg_rank_core::logic::{to_cnf_over, Formula, DEFAULT_CLAUSE_LIMIT};
use cfg_rank_core::pipeline::{analyze_sources, report_json, run_project, MemberMetrics, RunOptions};
use cfg_rank_core::sat::verify;
use cfg_rank_core::synth::{corpus, fuzz_project};
use cfg_rank_core::uir::{build, Status, Uir};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graph_of(src: &str) -> FeatureGraph {
    let ast = parse_source(&[("src/lib.rs".into(), src.into())]).expect("fixture parses");
    squash(&extract_feature_graph(&build(&ast, 1)))
}

fn edges_without_patch(g: &FeatureGraph) -> BTreeMap<(String, String), Weight> {
    g.edges
        .iter()
        .filter(|((s, t), _)| s != PATCH && t != PATCH)
        .map(|(k, w)| (k.clone(), w.clone()))
        .collect()
}

fn edge(s: &str, t: &str, w: Weight) -> ((String, String), Weight) {
    ((s.to_string(), t.to_string()), w)
}

fn ac1() -> Outcome {
    let src = r#"#[cfg(feature = "a")]
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
    let started = Instant::now();
    let g = graph_of(src);
    let patched = add_patch_node(&g);
    let elapsed = started.elapsed();
    let expected: BTreeMap<_, _> = [
        edge("a", GLOBAL, ratio(1, 1)),
        edge("b", "a", ratio(1, 1)),
        edge("c", "a", ratio(1, 1)),
    ]
    .into_iter()
    .collect();
    ensure(edges_without_patch(&patched) == expected, || {
        format!("feature edges {:?}", edges_without_patch(&patched))
    })?;
    let patch_edges: BTreeSet<_> = patched
        .edges
        .keys()
        .filter(|(s, t)| s == PATCH || t == PATCH)
        .cloned()
        .collect();
    let expected_patch: BTreeSet<_> = [(GLOBAL, PATCH), (PATCH, "a"), (PATCH, "b"), (PATCH, "c")]
        .iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
    ensure(patch_edges == expected_patch, || format!("patch edges {patch_edges:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("b->a = c->a = 1 in {elapsed:?}"))
}

fn ac2() -> Outcome {
    let g = graph_of("#[cfg(all(feature = \"c\", feature = \"d\"))]\nfn f() {\n    let x = 1;\n}\n");
    let expected: BTreeMap<_, _> = [edge("c", GLOBAL, ratio(1, 2)), edge("d", GLOBAL, ratio(1, 2))]
        .into_iter()
        .collect();
    ensure(g.edges == expected, || format!("edges {:?}", g.edges))?;
    Ok("c->G = d->G = 1/2".into())
}

fn fuzz_seed(i: u64) -> u64 {
    0xac3_0000 + i
}

fn ac3() -> Outcome {
    let opts = RunOptions::default();
    let (mut projects, mut configs, mut failed) = (0, 0, 0);
    for i in 0..500 {
        let p = fuzz_project(fuzz_seed(i));
        let manifest = parse_manifest(&p.manifest).map_err(|e| format!("{}: {e}", p.name))?;
        let a = match analyze_sources(&p.root_sources(), &manifest, &opts) {
            Ok(a) => a,
            Err(_) => {
                failed += 1;
                continue;
            }
        };
        projects += 1;
        for c in &a.configurations {
            configs += 1;
            ensure(verify(&a.cnf, &c.to_assignment(&a.cnf)), || {
                format!("{}: configuration {:?} violates the CNF", p.name, c.enabled)
            })?;
        }
    }
    ensure(failed == 0, || format!("{failed} fuzz projects failed to analyze"))?;
    Ok(format!("{configs} configurations over {projects} projects verified"))
}

fn truth_table(cnf: &cfg_rank_core::logic::CnfFormula) -> BTreeSet<Vec<bool>> {
    let n = cnf.num_vars();
    (0u64..1 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|a| cnf.satisfied_by(a))
        .collect()
}

fn ac4() -> Outcome {
    let opts = RunOptions {
        k: 1 << 12,
        ..RunOptions::default()
    };
    let (mut checked, mut models) = (0, 0);
    for i in 0..100 {
        let p = fuzz_project(0xac4_0000 + i);
        let manifest = parse_manifest(&p.manifest).map_err(|e| format!("{}: {e}", p.name))?;
        let a = analyze_sources(&p.root_sources(), &manifest, &opts).map_err(|e| format!("{}: {e}", p.name))?;
        ensure(a.cnf.num_vars() <= 12, || format!("{}: {} variables", p.name, a.cnf.num_vars()))?;
        let generated: BTreeSet<Vec<bool>> = a.configurations.iter().map(|c| c.to_assignment(&a.cnf)).collect();
        ensure(generated.len() == a.configurations.len(), || format!("{}: duplicate configurations", p.name))?;
        let expected = if a.cnf.num_vars() == 0 { BTreeSet::new() } else { truth_table(&a.cnf) };
        ensure(generated == expected, || {
            format!("{}: generated {} models, truth table has {}", p.name, generated.len(), expected.len())
        })?;
        checked += 1;
        models += expected.len();
    }
    Ok(format!("{checked} projects, {models} models enumerated exactly"))
}

fn random_graph(rng: &mut ChaCha8Rng, strongly_connected: bool) -> DenseGraph {
    let n = rng.gen_range(2..=12);
    let density = rng.gen_range(0.15..0.5);
    let mut w = vec![vec![0.0; n]; n];
    for (i, row) in w.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i != j && rng.gen_bool(density) {
                *cell = rng.gen_range(1..=4) as f64;
            }
        }
    }
    if strongly_connected {
        for i in 0..n {
            let j = (i + 1) % n;
            if w[i][j] == 0.0 {
                w[i][j] = rng.gen_range(1..=4) as f64;
            }
        }
    }
    let names = (0..n).map(|i| format!("n{i:02}")).collect();
    DenseGraph::from_matrix(names, w)
}

fn floyd_warshall(w: &[Vec<f64>], exp: f64) -> Vec<Vec<f64>> {
    let n = w.len();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for i in 0..n {
        d[i][i] = 0.0;
        for j in 0..n {
            if w[i][j] > 0.0 {
                d[i][j] = d[i][j].min(1.0 / w[i][j].powf(exp));
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// All shortest s→t paths by depth-first enumeration, pruned by the known
/// distances.
fn shortest_paths(w: &[Vec<f64>], d: &[Vec<f64>], exp: f64, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(
        w: &[Vec<f64>],
        d: &[Vec<f64>],
        exp: f64,
        t: usize,
        target_len: f64,
        path: &mut Vec<usize>,
        len: f64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().expect("path starts at the source");
        let tol = 1e-9 * target_len.max(1.0);
        if u == t {
            if (len - target_len).abs() <= tol {
                out.push(path.clone());
            }
            return;
        }
        for v in 0..w.len() {
            if w[u][v] <= 0.0 || path.contains(&v) {
                continue;
            }
            let next = len + 1.0 / w[u][v].powf(exp);
            if next + d[v][t] > target_len + tol {
                continue;
            }
            path.push(v);
            go(w, d, exp, t, target_len, path, next, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if d[s][t].is_finite() {
        go(w, d, exp, t, d[s][t], &mut vec![s], 0.0, &mut out);
    }
    out
}

fn compare(label: &str, got: &CentralityVector, names: &[String], want: &[f64]) -> Result<(), String> {
    for (name, expected) in names.iter().zip(want) {
        let actual = got.entries[name];
        ensure((actual - expected).abs() <= 1e-6, || {
            format!("{label} {name}: got {actual}, oracle {expected}")
        })?;
    }
    Ok(())
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac5);
    let alpha = 0.5;
    for case in 0..100 {
        let g = random_graph(&mut rng, false);
        let n = g.len();
        let d1 = floyd_warshall(&g.w, 1.0);
        let closeness: Vec<f64> = (0..n)
            .map(|i| {
                let total: f64 = (0..n).filter(|&j| j != i && d1[i][j].is_finite()).map(|j| d1[i][j]).sum();
                if total > 0.0 { 1.0 / total } else { 0.0 }
            })
            .collect();
        let harmonic_oracle: Vec<f64> = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && d1[i][j].is_finite()).map(|j| 1.0 / d1[i][j]).sum())
            .collect();
        let da = floyd_warshall(&g.w, alpha);
        let mut between = vec![0.0; n];
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let paths = shortest_paths(&g.w, &da, alpha, s, t);
                for p in &paths {
                    for &v in &p[1..p.len() - 1] {
                        between[v] += 1.0 / paths.len() as f64;
                    }
                }
            }
        }
        let tag = |m: &str| format!("graph {case} {m}");
        compare(&tag("closeness"), &closeness_newman(&g), &g.names, &closeness)?;
        compare(&tag("harmonic"), &harmonic(&g), &g.names, &harmonic_oracle)?;
        compare(&tag("betweenness"), &betweenness_opsahl(&g, alpha), &g.names, &between)?;

        // Katz against a dense inverse. Nilpotent matrices have eigenvalues
        // that are only approximately zero, so the attenuation is also
        // bounded by the largest weight to keep scores moderate.
        let a = DMatrix::from_fn(n, n, |i, j| g.w[i][j]);
        let rho = a.complex_eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max);
        let max_w = g.w.iter().flatten().copied().fold(0.0, f64::max);
        let beta = 0.5 / rho.max(max_w).max(1.0);
        let m = DMatrix::identity(n, n) - a.transpose() * beta;
        let inv = m.try_inverse().ok_or_else(|| tag("katz system singular"))?;
        let k = inv * nalgebra::DVector::from_element(n, 1.0);
        let got = katz(&g, Some(beta)).map_err(|e| tag(&e.to_string()))?;
        compare(&tag("katz"), &got, &g.names, k.as_slice())?;

        // eigenvector on a strongly connected variant: Perron vector of Aᵀ
        let sc = random_graph(&mut rng, true);
        let n = sc.len();
        let at = DMatrix::from_fn(n, n, |i, j| sc.w[j][i]);
        let lambda = at
            .complex_eigenvalues()
            .iter()
            .filter(|z| z.im.abs() < 1e-9)
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max);
        let shifted = at - DMatrix::identity(n, n) * lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t.ok_or_else(|| tag("svd without V"))?;
        let (smallest, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty");
        let mut v: Vec<f64> = v_t.row(smallest).iter().copied().collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let sign = if v.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
        v.iter_mut().for_each(|x| *x *= sign / norm);
        let got = eigenvector(&sc, 200_000, 1e-14);
        ensure(got.converged == Some(true), || tag("eigenvector did not converge"))?;
        compare(&tag("eigenvector"), &got, &sc.names, &v)?;
    }
    Ok("100 graphs agree with Floyd-Warshall, path enumeration and dense linear algebra".into())
}

fn uir_of(src: &str, default_weight: u64) -> Uir {
    build(&parse_source(&[("src/lib.rs".into(), src.into())]).expect("fixture parses"), default_weight)
}

fn weight_of(uir: &Uir, kind: NodeKind, ident: &str) -> Result<u64, String> {
    uir.nodes()
        .iter()
        .find(|n| n.term.kind == kind && n.term.ident.as_deref() == Some(ident))
        .map(|n| n.weight)
        .ok_or_else(|| format!("no {kind:?} named {ident}"))
}

fn ac6() -> Outcome {
    type Check = Box<dyn Fn(&Uir) -> Result<(), String>>;
    let expect = |kind: NodeKind, ident: &'static str, w: u64| -> Check {
        Box::new(move |u: &Uir| {
            let got = weight_of(u, kind, ident)?;
            ensure(got == w, || format!("{kind:?} {ident}: weight {got}, expected {w}"))
        })
    };
    let fixtures: Vec<(&str, &str, u64, Vec<Check>)> = vec![
        (
            "intrinsic",
            "fn f() {\n    let a = 1;\n}\n",
            1,
            vec![expect(NodeKind::Fn, "f", 1)],
        ),
        (
            "children-sum",
            "fn f() {\n    let a = 1;\n    let b = 2;\n    let c = 3;\n}\n",
            1,
            vec![expect(NodeKind::Fn, "f", 3)],
        ),
        (
            "reference-average",
            "#[cfg(feature = \"x\")]\nfn bar() {\n    let a = 1;\n    let b = 2;\n}\n\
             #[cfg(not(feature = \"x\"))]\nfn bar() {\n    let a = 1;\n    let b = 2;\n    let c = 3;\n    let d = 4;\n}\n\
             fn qux() {\n    bar();\n}\n",
            1,
            vec![expect(NodeKind::Call, "bar", 3), expect(NodeKind::Fn, "qux", 3)],
        ),
        (
            "unresolved-reference",
            "fn f() {\n    external();\n}\n",
            4,
            vec![expect(NodeKind::Call, "external", 4), expect(NodeKind::Fn, "f", 4)],
        ),
        (
            "mutual-recursion",
            "fn even() {\n    odd();\n}\nfn odd() {\n    even();\n}\n",
            6,
            vec![expect(NodeKind::Fn, "even", 6), expect(NodeKind::Fn, "odd", 6)],
        ),
    ];
    let mut report = Vec::new();
    for (name, src, default, checks) in fixtures {
        let started = Instant::now();
        let uir = uir_of(src, default);
        let elapsed = started.elapsed();
        for c in &checks {
            c(&uir).map_err(|e| format!("{name}: {e}"))?;
        }
        ensure(uir.nodes().iter().all(|n| n.status == Status::Weighted), || {
            format!("{name}: unweighted nodes remain")
        })?;
        ensure(elapsed < Duration::from_millis(100), || format!("{name}: took {elapsed:?}"))?;
        report.push(format!("{name} {elapsed:?}"));
    }
    Ok(report.join(", "))
}

fn random_formula(rng: &mut ChaCha8Rng, vars: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..20) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::var(&vars[rng.gen_range(0..vars.len())]),
        };
    }
    match rng.gen_range(0..4) {
        0 => Formula::not(random_formula(rng, vars, depth - 1)),
        1 => Formula::implies(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1)),
        2 => Formula::And((0..rng.gen_range(2..=3)).map(|_| random_formula(rng, vars, depth - 1)).collect()),
        _ => Formula::Or((0..rng.gen_range(2..=3)).map(|_| random_formula(rng, vars, depth - 1)).collect()),
    }
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac7);
    let mut total_models = 0u64;
    for case in 0..200 {
        let n = rng.gen_range(1..=16);
        let vars: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
        let f = random_formula(&mut rng, &vars, 4);
        let over: BTreeSet<String> = vars.iter().cloned().collect();
        let cnf = to_cnf_over(&f, &over, DEFAULT_CLAUSE_LIMIT).map_err(|e| format!("formula {case}: {e}"))?;
        ensure(cnf.variables == vars, || format!("formula {case}: variables {:?}", cnf.variables))?;
        for bits in 0u32..1 << n {
            let a: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            let lookup = |name: &str| a[vars.iter().position(|v| v == name).expect("known variable")];
            let want = f.eval(&lookup);
            ensure(cnf.satisfied_by(&a) == want, || format!("formula {case} differs at {a:?}: {f}"))?;
            total_models += want as u64;
        }
    }
    Ok(format!("200 formulas, {total_models} models matched"))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn check_aggregate(name: &str, members: &[&MemberMetrics], agg: &MemberMetrics) -> Result<(), String> {
    let mut expected = MemberMetrics::default();
    for m in members {
        expected.source_files += m.source_files;
        expected.source_lines += m.source_lines;
        expected.uir_nodes += m.uir_nodes;
        expected.uir_edges += m.uir_edges;
        expected.uir_height = expected.uir_height.max(m.uir_height);
        expected.feature_graph_nodes += m.feature_graph_nodes;
        expected.feature_graph_edges += m.feature_graph_edges;
        expected.squashed_edges += m.squashed_edges;
        expected.atom_tree_nodes += m.atom_tree_nodes;
        expected.atom_tree_edges += m.atom_tree_edges;
        expected.detected_features += m.detected_features;
        expected.declared_features += m.declared_features;
        expected.cnf_variables += m.cnf_variables;
        expected.cnf_clauses += m.cnf_clauses;
        expected.configurations += m.configurations;
    }
    ensure(&expected == agg, || format!("{name}: aggregate {agg:?} != recomputed {expected:?}"))
}

fn ac8() -> Outcome {
    let dir = corpus_dir();
    let opts = RunOptions::default();
    let mut slowest = Duration::ZERO;
    let mut projects = 0;
    for p in corpus() {
        let root = dir.join(&p.name);
        for (rel, text) in p.files.iter().chain([("Cargo.toml".to_string(), p.manifest.clone())].iter()) {
            let on_disk = std::fs::read_to_string(root.join(rel)).map_err(|e| format!("{}/{rel}: {e}", p.name))?;
            ensure(&on_disk == text, || format!("{}/{rel} differs from the generator", p.name))?;
        }
        let lines = p.lines();
        ensure((1000..=10_000).contains(&lines), || format!("{}: {lines} lines", p.name))?;
        let started = Instant::now();
        let run = run_project(&root, &opts).map_err(|e| format!("{}: {e}", p.name))?;
        let elapsed = started.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < Duration::from_secs(10), || format!("{}: took {elapsed:?}", p.name))?;
        ensure(run.failed_members() == 0, || format!("{}: failed members", p.name))?;
        let mut metrics = Vec::new();
        for m in &run.members {
            let a = m.result.as_ref().map_err(|e| format!("{}: {e}", m.name))?;
            let mm = &a.metrics;
            ensure(
                mm.source_files > 0
                    && mm.source_lines > 0
                    && mm.uir_nodes > 0
                    && mm.uir_edges + 1 == mm.uir_nodes
                    && mm.uir_height > 0
                    && mm.feature_graph_nodes > 1
                    && mm.squashed_edges <= mm.feature_graph_edges
                    && mm.atom_tree_nodes > 0
                    && mm.declared_features > 0
                    && mm.cnf_variables > 0
                    && mm.configurations == a.configurations.len()
                    && mm.configurations <= 10
                    && (a.exhausted || mm.configurations == 10),
                || format!("{}: inconsistent metrics {mm:?}", m.name),
            )?;
            for c in &a.configurations {
                ensure(verify(&a.cnf, &c.to_assignment(&a.cnf)), || format!("{}: invalid configuration", m.name))?;
            }
            metrics.push(mm);
        }
        check_aggregate(&p.name, &metrics, &run.aggregate())?;
        ensure(run.aggregate().source_lines == lines, || format!("{}: line count mismatch", p.name))?;
        projects += 1;
    }
    let peak = peak_rss_kb().ok_or("VmHWM unavailable")?;
    ensure(peak < 512 * 1024, || format!("peak resident set {peak} kB"))?;
    Ok(format!("{projects} projects, slowest {slowest:?}, peak RSS {} MB", peak / 1024))
}

fn ac9() -> Outcome {
    let dir = corpus_dir();
    let opts = RunOptions::default();
    for p in corpus() {
        let root = dir.join(&p.name);
        let render = || -> Result<String, String> {
            let run = run_project(&root, &opts).map_err(|e| e.to_string())?;
            serde_json::to_string_pretty(&report_json(&run, false)).map_err(|e| e.to_string())
        };
        let (first, second) = (render()?, render()?);
        ensure(first == second, || format!("{}: reports differ between runs", p.name))?;
    }
    Ok("10 projects, identical reports".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 nested any-predicate edges", ac1),
        ("AC2 all-predicate weight at global scope", ac2),
        ("AC3 fuzz soundness", ac3),
        ("AC4 enumeration exactness", ac4),
        ("AC5 centrality oracles", ac5),
        ("AC6 weight propagation fixtures", ac6),
        ("AC7 CNF equivalence", ac7),
        ("AC8 bundled corpus", ac8),
        ("AC9 determinism", ac9),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
