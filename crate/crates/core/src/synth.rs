//! Seeded generators for synthetic configurable projects.
//!
//! `fuzz_project` builds small single-file packages (at most ten features
//! and thirty guarded items) for property testing. `corpus_project` builds
//! larger packages and workspaces of a requested size for benchmarking.
//! Output depends only on the seed.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frontend::CfgPredicate;

/// A package or workspace as manifest and source texts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthProject {
    pub name: String,
    /// Root `Cargo.toml`.
    pub manifest: String,
    /// Paths relative to the project root.
    pub files: Vec<(String, String)>,
}

impl SynthProject {
    pub fn lines(&self) -> usize {
        self.files
            .iter()
            .filter(|(p, _)| p.ends_with(".rs"))
            .map(|(_, t)| t.lines().count())
            .sum()
    }

    /// Sources of the root package with paths relative to it.
    pub fn root_sources(&self) -> Vec<(String, String)> {
        self.files
            .iter()
            .filter(|(p, _)| p.starts_with("src/"))
            .cloned()
            .collect()
    }

    pub fn write_to(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("Cargo.toml"), &self.manifest)?;
        for (rel, text) in &self.files {
            let path = dir.join(rel);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, text)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Params {
    features: Vec<String>,
    /// Features that may appear under `not(...)`.
    negatable: Vec<String>,
    /// Probability that an item or statement carries a `cfg` attribute.
    guard_rate: f64,
    /// Remaining `cfg` attributes that may be emitted.
    guard_budget: usize,
    max_depth: usize,
    /// Ignore the feature hierarchy and negate anything.
    wild: bool,
}

struct Gen {
    rng: ChaCha8Rng,
    p: Params,
    out: String,
    indent: usize,
    fn_names: Vec<String>,
    counter: usize,
    /// Index of the first feature nested guards may use; `None` while
    /// inside a negated scope.
    floor: Option<usize>,
}

impl Gen {
    fn new(seed: u64, p: Params) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            p,
            out: String::new(),
            indent: 0,
            fn_names: Vec::new(),
            counter: 0,
            floor: Some(0),
        }
    }

    fn line(&mut self, s: &str) {
        for _ in 0..self.indent {
            self.out.push_str("    ");
        }
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn fresh(&mut self, prefix: &str) -> String {
        self.counter += 1;
        format!("{prefix}_{}", self.counter)
    }

    fn feature(&mut self) -> String {
        self.p
            .features
            .choose(&mut self.rng)
            .expect("at least one feature")
            .clone()
    }

    /// A positive feature allowed at the current nesting level.
    fn positive(&mut self) -> Option<String> {
        let floor = self.floor?;
        let candidates: Vec<usize> = (floor..self.p.features.len())
            .filter(|&i| !self.p.negatable.contains(&self.p.features[i]))
            .collect();
        let i = *candidates.choose(&mut self.rng)?;
        Some(self.p.features[i].clone())
    }

    fn negated(&mut self) -> Option<String> {
        self.p.negatable.choose(&mut self.rng).cloned()
    }

    fn predicate(&mut self, depth: usize) -> Option<CfgPredicate> {
        if self.p.wild {
            return Some(self.wild_predicate(depth));
        }
        let roll: f64 = self.rng.gen();
        if depth >= 1 || roll < 0.6 {
            self.positive().map(CfgPredicate::Single)
        } else if roll < 0.75 {
            match self.negated() {
                Some(f) => Some(CfgPredicate::Not(f)),
                None => self.positive().map(CfgPredicate::Single),
            }
        } else if roll < 0.9 {
            let n = self.rng.gen_range(2..=3);
            let children: Vec<CfgPredicate> = (0..n).filter_map(|_| self.predicate(depth + 1)).collect();
            match children.len() {
                0 => None,
                1 => children.into_iter().next(),
                _ => Some(CfgPredicate::Any(children)),
            }
        } else {
            // conjoining two positive features would make them imply each
            // other, so a conjunction only ever excludes a negatable one
            let pos = self.positive()?;
            match self.negated() {
                Some(n) => Some(CfgPredicate::All(vec![CfgPredicate::Single(pos), CfgPredicate::Not(n)])),
                None => Some(CfgPredicate::Single(pos)),
            }
        }
    }

    fn wild_predicate(&mut self, depth: usize) -> CfgPredicate {
        let roll: f64 = self.rng.gen();
        if depth >= 2 || roll < 0.55 {
            CfgPredicate::Single(self.feature())
        } else if roll < 0.7 {
            CfgPredicate::Not(self.feature())
        } else {
            let n = self.rng.gen_range(2..=3);
            let children = (0..n).map(|_| self.wild_predicate(depth + 1)).collect();
            if roll < 0.85 {
                CfgPredicate::Any(children)
            } else {
                CfgPredicate::All(children)
            }
        }
    }

    /// Emits a `cfg` attribute with the configured probability and narrows
    /// the features available to nested guards. Returns the previous
    /// nesting state, to be restored once the guarded item is complete.
    fn maybe_guard(&mut self) -> Option<usize> {
        let saved = self.floor;
        if self.p.guard_budget == 0 || !self.rng.gen_bool(self.p.guard_rate) {
            return saved;
        }
        let Some(pred) = self.predicate(0) else {
            return saved;
        };
        self.p.guard_budget -= 1;
        self.line(&format!("#[cfg({})]", render(&pred)));
        let occurrences = pred.occurrences();
        self.floor = if occurrences.iter().any(|o| o.negated) {
            // nesting under a negation would imply the negated feature
            None
        } else {
            let deepest = occurrences
                .iter()
                .filter_map(|o| self.p.features.iter().position(|f| f == o.name))
                .max()
                .unwrap_or(0);
            Some(deepest + 1)
        };
        saved
    }

    fn expr(&mut self) -> String {
        match self.rng.gen_range(0..5) {
            0 | 1 if !self.fn_names.is_empty() => {
                let callee = self.fn_names.choose(&mut self.rng).expect("non-empty").clone();
                format!("{callee}()")
            }
            2 => format!("ext_{}()", self.rng.gen_range(0..4)),
            3 => format!("{} + {}", self.rng.gen_range(0..100), self.rng.gen_range(0..100)),
            _ => format!("{}", self.rng.gen_range(0..1000)),
        }
    }

    fn statement(&mut self, depth: usize) {
        let roll = self.rng.gen_range(0..10);
        match roll {
            0..=3 => {
                let saved = self.maybe_guard();
                let v = self.fresh("v");
                let e = self.expr();
                self.line(&format!("let {v} = {e};"));
                self.floor = saved;
            }
            4 | 5 => {
                let saved = self.maybe_guard();
                let e = self.expr();
                if e.ends_with(')') {
                    self.line(&format!("{e};"));
                } else {
                    self.line(&format!("let _ = {e};"));
                }
                self.floor = saved;
            }
            6 => {
                let msg = self.fresh("msg");
                self.line(&format!("println!(\"{msg} {{}}\", 1);"));
            }
            7 if depth < self.p.max_depth => {
                let c = self.rng.gen_range(0..20);
                self.line(&format!("if {c} > 10 {{"));
                self.indent += 1;
                self.block(depth + 1);
                self.indent -= 1;
                self.line("} else {");
                self.indent += 1;
                self.block(depth + 1);
                self.indent -= 1;
                self.line("}");
            }
            8 if depth < self.p.max_depth => {
                let c = self.rng.gen_range(0..5);
                self.line(&format!("match {c} {{"));
                self.indent += 1;
                self.line("0 => {");
                self.indent += 1;
                self.block(depth + 1);
                self.indent -= 1;
                self.line("}");
                self.line("_ => {}");
                self.indent -= 1;
                self.line("}");
            }
            9 if depth < self.p.max_depth => {
                let saved = self.maybe_guard();
                self.function(depth + 1);
                self.floor = saved;
            }
            _ => {
                let v = self.fresh("w");
                let c = self.rng.gen_range(0..9);
                self.line(&format!("let {v} = {c};"));
            }
        }
    }

    fn block(&mut self, depth: usize) {
        let n = self.rng.gen_range(1..=4);
        for _ in 0..n {
            self.statement(depth);
        }
    }

    fn function(&mut self, depth: usize) {
        // reuse an existing name now and then to create same-named definitions
        let name = if !self.fn_names.is_empty() && self.rng.gen_bool(0.15) {
            self.fn_names.choose(&mut self.rng).expect("non-empty").clone()
        } else {
            self.fresh("func")
        };
        self.line(&format!("pub fn {name}() {{"));
        self.indent += 1;
        self.block(depth);
        self.indent -= 1;
        self.line("}");
        if !self.fn_names.contains(&name) {
            self.fn_names.push(name);
        }
    }

    fn item(&mut self, depth: usize) {
        let roll = self.rng.gen_range(0..14);
        let saved = if roll == 10 { self.floor } else { self.maybe_guard() };
        match roll {
            0..=5 => self.function(depth),
            6 => {
                let name = self.fresh("Record");
                self.line(&format!("pub struct {name} {{"));
                self.indent += 1;
                for _ in 0..self.rng.gen_range(1..=4) {
                    let outer = self.maybe_guard();
                    let f = self.fresh("field");
                    self.line(&format!("pub {f}: u32,"));
                    self.floor = outer;
                }
                self.indent -= 1;
                self.line("}");
            }
            7 => {
                let name = self.fresh("Kind");
                self.line(&format!("pub enum {name} {{"));
                self.indent += 1;
                for _ in 0..self.rng.gen_range(1..=4) {
                    let outer = self.maybe_guard();
                    let v = self.fresh("Variant");
                    self.line(&format!("{v},"));
                    self.floor = outer;
                }
                self.indent -= 1;
                self.line("}");
            }
            8 => {
                let name = self.fresh("LIMIT").to_uppercase();
                let e = self.expr();
                self.line(&format!("pub const {name}: u32 = {e};"));
            }
            9 if depth < self.p.max_depth => {
                let name = self.fresh("inner");
                self.line(&format!("pub mod {name} {{"));
                self.indent += 1;
                self.line("use super::*;");
                for _ in 0..self.rng.gen_range(1..=3) {
                    self.item(depth + 1);
                }
                self.indent -= 1;
                self.line("}");
            }
            10 => {
                let ty = self.fresh("Handle");
                self.line(&format!("pub struct {ty};"));
                let outer = self.maybe_guard();
                self.line(&format!("impl {ty} {{"));
                self.indent += 1;
                for _ in 0..self.rng.gen_range(1..=2) {
                    let before = self.maybe_guard();
                    self.function(depth + 1);
                    self.floor = before;
                }
                self.indent -= 1;
                self.line("}");
                self.floor = outer;
            }
            9 | 11 => {
                let name = self.fresh("Alias");
                self.line(&format!("pub type {name} = u64;"));
            }
            12 => self.line("use std::collections::HashMap;"),
            _ => {
                let name = self.fresh("COUNTER").to_uppercase();
                self.line(&format!("pub static {name}: u32 = 0;"));
            }
        }
        self.floor = saved;
    }
}

fn render(p: &CfgPredicate) -> String {
    match p {
        CfgPredicate::Single(n) => format!("feature = \"{n}\""),
        CfgPredicate::Not(n) => format!("not(feature = \"{n}\")"),
        CfgPredicate::Any(ps) | CfgPredicate::All(ps) => {
            let head = if matches!(p, CfgPredicate::Any(_)) { "any" } else { "all" };
            let inner: Vec<String> = ps.iter().map(render).collect();
            format!("{head}({})", inner.join(", "))
        }
    }
}

/// `[package]` plus a `[features]` table over `features`; members of
/// `never_default` are kept out of the default set.
fn package_manifest(
    rng: &mut ChaCha8Rng,
    name: &str,
    features: &[String],
    never_default: &[String],
) -> String {
    let mut out = format!("[package]\nname = \"{name}\"\nversion = \"0.1.0\"\nedition = \"2021\"\n\n[features]\n");
    let mut defaults: Vec<&str> = Vec::new();
    for f in features {
        if !never_default.contains(f) && rng.gen_bool(0.15) {
            defaults.push(f);
        }
    }
    let quoted: Vec<String> = defaults.iter().map(|d| format!("\"{d}\"")).collect();
    let _ = writeln!(out, "default = [{}]", quoted.join(", "));
    for (i, f) in features.iter().enumerate() {
        let mut implied = Vec::new();
        let earlier: Vec<&String> = features[..i].iter().filter(|e| !never_default.contains(e)).collect();
        if !earlier.is_empty() && rng.gen_bool(0.25) {
            implied.push(format!("\"{}\"", earlier[rng.gen_range(0..earlier.len())]));
        }
        if rng.gen_bool(0.1) {
            implied.push("\"dep:serde\"".to_string());
        }
        let _ = writeln!(out, "{f} = [{}]", implied.join(", "));
    }
    out
}

fn feature_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Roughly a quarter of the features, which alone may be negated. A feature
/// used under `not(f)` is constrained by `f ⇒ ¬f`, so it must not also be a
/// default or the model becomes unsatisfiable.
fn pick_negatable(rng: &mut ChaCha8Rng, features: &[String]) -> Vec<String> {
    features
        .iter()
        .filter(|_| rng.gen_bool(0.25))
        .cloned()
        .collect()
}

/// A single-file package with 1 to 10 features and at most 30 guarded items.
pub fn fuzz_project(seed: u64) -> SynthProject {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_features = rng.gen_range(1..=10);
    let features = feature_names("f", n_features);
    // one project in five ignores the feature hierarchy and may negate
    // anything, defaults included
    let wild = rng.gen_bool(0.2);
    let (negatable, protected) = if wild {
        (features.clone(), Vec::new())
    } else {
        let n = pick_negatable(&mut rng, &features);
        (n.clone(), n)
    };
    let manifest = package_manifest(&mut rng, "fuzz", &features, &protected);
    let params = Params {
        features,
        negatable,
        guard_rate: 0.45,
        guard_budget: 30,
        max_depth: 3,
        wild,
    };
    let mut g = Gen::new(rng.gen(), params);
    for _ in 0..rng.gen_range(1..=10) {
        g.item(0);
    }
    SynthProject {
        name: format!("fuzz-{seed}"),
        manifest,
        files: vec![("src/lib.rs".into(), g.out)],
    }
}

/// Generates top-level items until the text reaches `lines` lines.
fn fill_file(g: &mut Gen, lines: usize) -> String {
    g.out.clear();
    while g.out.lines().count() < lines {
        g.item(0);
    }
    std::mem::take(&mut g.out)
}

/// Source files of one package: `src/lib.rs` declaring file modules, some
/// of them with nested submodules.
fn package_sources(g: &mut Gen, rng: &mut ChaCha8Rng, target_lines: usize) -> Vec<(String, String)> {
    let n_modules = (target_lines / 400).clamp(1, 24);
    let per_module = target_lines / (n_modules + 1);
    let mut files = Vec::new();
    let mut lib = String::new();
    for m in 0..n_modules {
        let name = format!("module{m}");
        g.out.clear();
        let saved = g.maybe_guard();
        lib.push_str(&g.out);
        let _ = writeln!(lib, "pub mod {name};");
        if rng.gen_bool(0.3) {
            let mut body = fill_file(g, per_module / 2);
            body.push_str("pub mod nested;\n");
            files.push((format!("src/{name}.rs"), body));
            files.push((format!("src/{name}/nested.rs"), fill_file(g, per_module / 2)));
        } else {
            files.push((format!("src/{name}.rs"), fill_file(g, per_module)));
        }
        g.floor = saved;
    }
    lib.push_str(&fill_file(g, per_module));
    files.push(("src/lib.rs".into(), lib));
    files.sort();
    files
}

/// A package (or, for every third index, a workspace of packages) of about
/// `target_lines` lines of source.
pub fn corpus_project(index: usize, seed: u64, target_lines: usize) -> SynthProject {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("synth{index:02}");
    let n_features = (8 + target_lines / 400).min(48);
    if index % 3 == 2 {
        let n_members = 3;
        let mut files = Vec::new();
        let mut manifest = String::from("[workspace]\nmembers = [\"crates/*\"]\n");
        manifest.push_str("resolver = \"2\"\n");
        for m in 0..n_members {
            let member = format!("{name}-part{m}");
            let features = feature_names(&format!("m{m}_"), n_features / n_members + 2);
            let negatable = pick_negatable(&mut rng, &features);
            let member_manifest = package_manifest(&mut rng, &member, &features, &negatable);
            let params = Params {
                features,
                negatable,
                guard_rate: 0.18,
                guard_budget: usize::MAX,
                max_depth: 3,
                wild: false,
            };
            let mut g = Gen::new(rng.gen(), params);
            let dir = format!("crates/{member}");
            files.push((format!("{dir}/Cargo.toml"), member_manifest));
            for (p, t) in package_sources(&mut g, &mut rng, target_lines / n_members) {
                files.push((format!("{dir}/{p}"), t));
            }
        }
        files.sort();
        SynthProject {
            name,
            manifest,
            files,
        }
    } else {
        let features = feature_names("feat", n_features);
        let negatable = pick_negatable(&mut rng, &features);
        let manifest = package_manifest(&mut rng, &name, &features, &negatable);
        let params = Params {
            features,
            negatable,
            guard_rate: 0.18,
            guard_budget: usize::MAX,
            max_depth: 3,
            wild: false,
        };
        let mut g = Gen::new(rng.gen(), params);
        let files = package_sources(&mut g, &mut rng, target_lines);
        SynthProject {
            name,
            manifest,
            files,
        }
    }
}

/// The ten benchmark projects, from about one to about ten thousand lines.
pub fn corpus() -> Vec<SynthProject> {
    (0..10)
        .map(|i| corpus_project(i, 0x5eed_0000 + i as u64, 1000 + 900 * i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{parse_manifest, parse_source};

    #[test]
    fn fuzz_projects_respect_bounds_and_parse() {
        for seed in 0..50 {
            let p = fuzz_project(seed);
            let m = parse_manifest(&p.manifest).unwrap();
            assert!(!m.features.is_empty() && m.features.len() <= 10);
            let src = &p.files[0].1;
            assert!(src.matches("#[cfg(").count() <= 30);
            parse_source(&p.files).unwrap();
        }
    }

    #[test]
    fn generation_is_seeded() {
        assert_eq!(fuzz_project(7), fuzz_project(7));
        assert_ne!(fuzz_project(7), fuzz_project(8));
        assert_eq!(corpus_project(1, 3, 1500), corpus_project(1, 3, 1500));
    }

    #[test]
    fn corpus_project_sizes() {
        let p = corpus_project(0, 1, 1000);
        let lines = p.lines();
        assert!((1000..1600).contains(&lines), "{lines}");
        parse_source(&p.root_sources()).unwrap();
        let ws = corpus_project(2, 1, 3000);
        assert!(ws.manifest.starts_with("[workspace]"));
        assert!(ws.files.iter().any(|(p, _)| p.ends_with("part2/Cargo.toml")));
    }
}
