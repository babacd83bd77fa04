//! The atom dependency tree and centrality refinement.
//!
//! The tree keeps only the atoms of the UIR. Each atom's weight starts from
//! its UIR weight and additionally collects the weights of the atoms nested
//! directly below it, so a feature guarding a large region ranks higher
//! after refinement.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::centrality::CentralityVector;
use crate::frontend::{CfgPredicate, Connective};
use crate::uir::{NodeId, Uir};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error("atom predicate mentions `{0}`, which is not in the centrality vector")]
    UnknownFeature(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTreeNode {
    pub id: NodeId,
    pub predicate: Option<CfgPredicate>,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTree {
    /// Keyed by UIR node id.
    pub nodes: BTreeMap<NodeId, AtomTreeNode>,
    /// Atom → parent atom.
    pub edges: Vec<(NodeId, NodeId)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtomTreeMetrics {
    pub nodes: usize,
    pub edges: usize,
}

pub fn extract_atom_tree(uir: &Uir) -> AtomTree {
    let mut nodes: BTreeMap<NodeId, AtomTreeNode> = uir
        .atoms()
        .map(|a| {
            (
                a.id,
                AtomTreeNode {
                    id: a.id,
                    predicate: a.predicate().cloned(),
                    weight: a.weight,
                },
            )
        })
        .collect();
    let mut edges = Vec::new();
    for atom in uir.atoms() {
        let Some(parent) = uir.nearest_atom_ancestor(atom.id) else {
            continue;
        };
        // an unguarded atom contributes weight without a dependency edge
        if atom.predicate().is_some() {
            edges.push((atom.id, parent));
        }
        nodes.get_mut(&parent).expect("parent is an atom").weight += atom.weight;
    }
    AtomTree { nodes, edges }
}

impl AtomTree {
    pub fn metrics(&self) -> AtomTreeMetrics {
        AtomTreeMetrics {
            nodes: self.guarded().count(),
            edges: self.edges.len(),
        }
    }

    fn guarded(&self) -> impl Iterator<Item = (&AtomTreeNode, &CfgPredicate)> + '_ {
        self.nodes
            .values()
            .filter_map(|n| n.predicate.as_ref().map(|p| (n, p)))
    }

    /// Largest weight among guarded atoms, or 0 when there are none.
    pub fn max_weight(&self) -> u64 {
        self.guarded().map(|(n, _)| n.weight).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.values().map(|n| json!({
                "id": n.id,
                "cfg": n.predicate.as_ref().map(|p| p.to_string()),
                "weight": n.weight,
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(c, p)| json!([c, p])).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph atoms {\n");
        for n in self.nodes.values() {
            let label = match &n.predicate {
                Some(p) => format!("{p}\\nw={}", n.weight),
                None => format!("G\\nw={}", n.weight),
            };
            let _ = writeln!(out, "  a{} [label=\"{}\"];", n.id, label.replace('"', "\\\""));
        }
        for (c, p) in &self.edges {
            let _ = writeln!(out, "  a{c} -> a{p};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn atomtree_metrics(t: &AtomTree) -> AtomTreeMetrics {
    t.metrics()
}

/// Adds normalised atom weights to the scores of the features guarding them.
///
/// An occurrence directly under `all(...)` receives the normalised weight
/// divided by the number of distinct features of the predicate; any other
/// occurrence receives it whole.
pub fn refine(v: &CentralityVector, t: &AtomTree) -> Result<CentralityVector, RefineError> {
    let mut out = v.clone();
    let max = t.max_weight();
    if max == 0 {
        return Ok(out);
    }
    for (node, pred) in t.guarded() {
        let norm = node.weight as f64 / max as f64;
        let mut distinct: Vec<&str> = pred.feature_names();
        distinct.sort_unstable();
        distinct.dedup();
        for occ in pred.occurrences() {
            let inc = match occ.connective {
                Connective::All => norm / distinct.len() as f64,
                Connective::None | Connective::Any => norm,
            };
            let score = out
                .entries
                .get_mut(occ.name)
                .ok_or_else(|| RefineError::UnknownFeature(occ.name.to_string()))?;
            *score += inc;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::Measure;
    use crate::frontend::{ingest_json_tree, parse_source};
    use crate::uir::build;

    fn tree_of(src: &str) -> (Uir, AtomTree) {
        let ast = parse_source(&[("src/lib.rs".into(), src.into())]).unwrap();
        let uir = build(&ast, 1);
        let t = extract_atom_tree(&uir);
        (uir, t)
    }

    fn vector(names: &[&str]) -> CentralityVector {
        CentralityVector {
            measure: Measure::Eigenvector,
            entries: names.iter().map(|n| (n.to_string(), 0.0)).collect(),
            converged: None,
        }
    }

    fn single_atom_tree(pred: CfgPredicate, weight: u64, max_other: Option<u64>) -> AtomTree {
        let mut nodes = BTreeMap::new();
        nodes.insert(
            0,
            AtomTreeNode {
                id: 0,
                predicate: None,
                weight: 100,
            },
        );
        nodes.insert(
            1,
            AtomTreeNode {
                id: 1,
                predicate: Some(pred),
                weight,
            },
        );
        let mut edges = vec![(1, 0)];
        if let Some(w) = max_other {
            nodes.insert(
                2,
                AtomTreeNode {
                    id: 2,
                    predicate: Some(CfgPredicate::Single("z".into())),
                    weight: w,
                },
            );
            edges.push((2, 0));
        }
        AtomTree { nodes, edges }
    }

    #[test]
    fn plain_function_adds_to_enclosing_atom_without_edge() {
        let (uir, t) = tree_of(
            "#[cfg(feature = \"a\")]\nfn foo() {\n  fn qux() { let x = 1; let y = 2; }\n}",
        );
        let foo = uir
            .atoms()
            .find(|a| a.term.ident.as_deref() == Some("foo"))
            .unwrap();
        assert_eq!(t.edges, vec![(foo.id, uir.root())]);
        // qux weighs 2 and sits inside foo, so foo's own weight already covers it
        assert_eq!(foo.weight, 2);
        assert_eq!(t.nodes[&foo.id].weight, 2);
    }

    #[test]
    fn single_atom_under_global() {
        let (uir, t) = tree_of("#[cfg(a)]\nfn f() { let x = 1; }");
        let root_w = uir.node(uir.root()).weight;
        let f = uir.atoms().find(|a| a.predicate().is_some()).unwrap();
        assert_eq!(t.edges, vec![(f.id, uir.root())]);
        assert_eq!(t.nodes[&uir.root()].weight, root_w + f.weight);
        assert_eq!(t.metrics(), AtomTreeMetrics { nodes: 1, edges: 1 });
    }

    #[test]
    fn three_levels() {
        let (uir, t) = tree_of(
            "#[cfg(b)]\nmod outer {\n  #[cfg(a)]\n  fn inner() { let x = 1; let y = 2; let z = 3; }\n}",
        );
        let a = uir.atoms().find(|n| n.term.ident.as_deref() == Some("inner")).unwrap();
        let b = uir.atoms().find(|n| n.term.ident.as_deref() == Some("outer")).unwrap();
        assert_eq!(t.edges, vec![(b.id, uir.root()), (a.id, b.id)]);
        assert_eq!(t.nodes[&b.id].weight, b.weight + a.weight);
        assert_eq!(
            t.nodes[&uir.root()].weight,
            uir.node(uir.root()).weight + b.weight
        );
    }

    #[test]
    fn empty_tree_metrics() {
        let ast = ingest_json_tree(r#"{"kind":"root"}"#).unwrap();
        let t = extract_atom_tree(&build(&ast, 1));
        assert_eq!(t.metrics(), AtomTreeMetrics { nodes: 0, edges: 0 });
    }

    #[test]
    fn refine_max_weight_single() {
        let t = single_atom_tree(CfgPredicate::Single("a".into()), 5, None);
        let r = refine(&vector(&["a"]), &t).unwrap();
        assert_eq!(r.entries["a"], 1.0);
    }

    #[test]
    fn refine_all_divides() {
        let p = CfgPredicate::All(vec![
            CfgPredicate::Single("b".into()),
            CfgPredicate::Single("c".into()),
        ]);
        let t = single_atom_tree(p, 2, Some(5));
        let r = refine(&vector(&["b", "c", "z"]), &t).unwrap();
        assert!((r.entries["b"] - 0.2).abs() < 1e-12);
        assert!((r.entries["c"] - 0.2).abs() < 1e-12);
        assert_eq!(r.entries["z"], 1.0);
    }

    #[test]
    fn refine_any_does_not_divide() {
        let p = CfgPredicate::Any(vec![
            CfgPredicate::Single("b".into()),
            CfgPredicate::Not("c".into()),
        ]);
        let t = single_atom_tree(p, 2, Some(5));
        let r = refine(&vector(&["b", "c", "z"]), &t).unwrap();
        assert!((r.entries["b"] - 0.4).abs() < 1e-12);
        assert!((r.entries["c"] - 0.4).abs() < 1e-12);
    }

    #[test]
    fn refine_uses_innermost_connective() {
        let p = CfgPredicate::All(vec![
            CfgPredicate::Single("a".into()),
            CfgPredicate::Any(vec![
                CfgPredicate::Single("b".into()),
                CfgPredicate::Single("c".into()),
            ]),
        ]);
        let t = single_atom_tree(p, 3, None);
        let r = refine(&vector(&["a", "b", "c"]), &t).unwrap();
        assert!((r.entries["a"] - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.entries["b"], 1.0);
    }

    #[test]
    fn refine_rejects_unknown_features() {
        let t = single_atom_tree(CfgPredicate::Single("ghost".into()), 1, None);
        assert_eq!(
            refine(&vector(&["a"]), &t),
            Err(RefineError::UnknownFeature("ghost".into()))
        );
    }

    #[test]
    fn exports_mention_every_atom() {
        let (_, t) = tree_of("#[cfg(a)] fn f() {}\n#[cfg(b)] fn g() {}");
        assert_eq!(t.to_dot().matches(" -> ").count(), 2);
        assert_eq!(t.to_json()["nodes"].as_array().unwrap().len(), 3);
    }
}
