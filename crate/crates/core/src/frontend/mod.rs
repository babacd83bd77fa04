//! Source ingestion: the Rust-subset parser, the JSON tree format, and the
//! `[features]` table of the package manifest.

mod ast;
mod json;
mod lexer;
mod manifest;
mod parser;
mod predicate;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use ast::{AstNode, NodeKind, Span};
pub use json::{export_json_tree, ingest_json_tree, SchemaError};
pub use manifest::{parse_manifest, parse_workspace_members, Manifest, ManifestError};
pub use parser::parse_file;
pub use predicate::{CfgPredicate, Connective, Occurrence};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{path}:{line}: {message}")]
pub struct SyntaxError {
    pub path: String,
    pub line: u32,
    pub message: String,
}

/// Parses a set of source files into one tree.
///
/// `mod name;` declarations are resolved against the other inputs
/// (`dir/name.rs` or `dir/name/mod.rs`, relative to the declaring file), and
/// the declared module takes the file's items as children. Files that no
/// declaration reaches become direct children of the synthetic root, in path
/// order.
pub fn parse_source(files: &[(String, String)]) -> Result<AstNode, SyntaxError> {
    let mut parsed: BTreeMap<String, AstNode> = BTreeMap::new();
    for (path, text) in files {
        let path = normalize(path);
        let module = parse_file(&path, text)?;
        parsed.insert(path, module);
    }

    let mut referenced = BTreeSet::new();
    for (path, module) in &parsed {
        collect_mod_targets(
            &module_dir(path),
            &module.children,
            &parsed,
            &mut referenced,
        );
    }

    let mut root = AstNode::root();
    let mut done = BTreeSet::new();
    let roots: Vec<String> = parsed
        .keys()
        .filter(|p| !referenced.contains(*p))
        .cloned()
        .collect();
    for path in roots {
        if let Some(module) = stitch(&path, &parsed, &mut done) {
            root.children.push(module);
        }
    }
    Ok(root)
}

fn normalize(path: &str) -> String {
    path.replace('\\', "/")
}

/// Directory in which `mod x;` declared in `path` looks for `x.rs`.
fn module_dir(path: &str) -> String {
    let (dir, file) = match path.rsplit_once('/') {
        Some((d, f)) => (d.to_string(), f),
        None => (String::new(), path),
    };
    let stem = file.strip_suffix(".rs").unwrap_or(file);
    if matches!(stem, "mod" | "lib" | "main") {
        dir
    } else if dir.is_empty() {
        stem.to_string()
    } else {
        format!("{dir}/{stem}")
    }
}

fn join(dir: &str, name: &str) -> String {
    if dir.is_empty() {
        name.to_string()
    } else {
        format!("{dir}/{name}")
    }
}

fn resolve_mod(dir: &str, name: &str, files: &BTreeMap<String, AstNode>) -> Option<String> {
    [
        join(dir, &format!("{name}.rs")),
        join(dir, &format!("{name}/mod.rs")),
    ]
    .into_iter()
    .find(|c| files.contains_key(c))
}

fn collect_mod_targets(
    dir: &str,
    items: &[AstNode],
    files: &BTreeMap<String, AstNode>,
    out: &mut BTreeSet<String>,
) {
    for item in items {
        match item.kind {
            NodeKind::ModDecl => {
                if let Some(target) = item
                    .ident
                    .as_deref()
                    .and_then(|n| resolve_mod(dir, n, files))
                {
                    out.insert(target);
                }
            }
            NodeKind::Module => {
                if let Some(name) = &item.ident {
                    collect_mod_targets(&join(dir, name), &item.children, files, out);
                }
            }
            _ => {}
        }
    }
}

fn stitch(
    path: &str,
    files: &BTreeMap<String, AstNode>,
    done: &mut BTreeSet<String>,
) -> Option<AstNode> {
    if !done.insert(path.to_string()) {
        return None;
    }
    let mut module = files.get(path)?.clone();
    let dir = module_dir(path);
    stitch_items(&dir, &mut module.children, files, done);
    Some(module)
}

fn stitch_items(
    dir: &str,
    items: &mut [AstNode],
    files: &BTreeMap<String, AstNode>,
    done: &mut BTreeSet<String>,
) {
    for item in items {
        match item.kind {
            NodeKind::ModDecl => {
                let target = item
                    .ident
                    .as_deref()
                    .and_then(|n| resolve_mod(dir, n, files));
                if let Some(file_module) = target.and_then(|t| stitch(&t, files, done)) {
                    item.kind = NodeKind::Module;
                    item.children = file_module.children;
                }
            }
            NodeKind::Module => {
                if let Some(name) = item.ident.clone() {
                    stitch_items(&join(dir, &name), &mut item.children, files, done);
                }
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn files(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter()
            .map(|(p, t)| (p.to_string(), t.to_string()))
            .collect()
    }

    #[test]
    fn file_modules_are_stitched_under_their_declaration() {
        let root = parse_source(&files(&[
            ("src/lib.rs", "#[cfg(feature = \"net\")]\nmod net;\nfn a() {}"),
            ("src/net.rs", "mod tcp;\nfn b() {}"),
            ("src/net/tcp.rs", "fn c() {}"),
            ("src/bin/tool.rs", "fn main() {}"),
        ]))
        .unwrap();
        assert_eq!(root.kind, NodeKind::Root);
        // lib.rs and bin/tool.rs are the unreferenced roots
        assert_eq!(root.children.len(), 2);
        let lib = &root.children[1];
        assert_eq!(lib.span.file, "src/lib.rs");
        let net = &lib.children[0];
        assert_eq!(net.kind, NodeKind::Module);
        assert_eq!(net.attributes.len(), 1);
        assert_eq!(net.children[0].kind, NodeKind::Module);
        assert_eq!(net.children[0].children[0].ident.as_deref(), Some("c"));
    }

    #[test]
    fn unresolved_mod_declaration_is_kept() {
        let root = parse_source(&files(&[("src/lib.rs", "mod missing;")])).unwrap();
        assert_eq!(root.children[0].children[0].kind, NodeKind::ModDecl);
    }

    #[test]
    fn mod_rs_layout() {
        let root = parse_source(&files(&[
            ("src/main.rs", "mod a;"),
            ("src/a/mod.rs", "mod b;"),
            ("src/a/b.rs", "fn deep() {}"),
        ]))
        .unwrap();
        assert_eq!(root.children.len(), 1);
        let a = &root.children[0].children[0];
        assert_eq!(a.children[0].children[0].ident.as_deref(), Some("deep"));
    }

    #[test]
    fn parsing_is_deterministic() {
        let input = files(&[("src/lib.rs", "#[cfg(all(a, b))] fn f() { g(); }")]);
        assert_eq!(parse_source(&input).unwrap(), parse_source(&input).unwrap());
    }

    #[test]
    fn empty_input_gives_empty_root() {
        let root = parse_source(&[]).unwrap();
        assert_eq!(root, AstNode::root());
    }
}
