//! Feature dependency graphs.
//!
//! An edge `f → g` records that a predicate mentioning `f` guards code in the
//! lexical scope of an atom guarded by `g`. Weights are exact rationals so
//! that squashing is independent of edge order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::frontend::CfgPredicate;
use crate::uir::Uir;

/// Name of the node standing for code outside any `cfg` guard.
pub const GLOBAL: &str = "<G>";
/// Name of the synthetic connectivity node.
pub const PATCH: &str = "<PATCH>";

pub fn is_reserved(name: &str) -> bool {
    name == GLOBAL || name == PATCH
}

pub type Weight = BigRational;

pub fn ratio(n: i64, d: i64) -> Weight {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// How `all(...)` predicates split the incoming weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChiMode {
    /// Every branch receives `w / n`, `n` being the number of feature
    /// occurrences in the whole `all`.
    #[default]
    Occurrences,
    /// Binary right fold where each operand `p` receives `1 / (w · |p|)`.
    Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatureNode {
    pub name: String,
    /// Distinct predicates accumulated on this feature, in discovery order.
    pub predicates: Vec<CfgPredicate>,
}

impl FeatureNode {
    fn new(name: &str) -> Self {
        FeatureNode {
            name: name.to_string(),
            predicates: Vec::new(),
        }
    }

    fn accumulate(&mut self, p: &CfgPredicate) {
        if !self.predicates.contains(p) {
            self.predicates.push(p.clone());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatureMultigraph {
    pub nodes: BTreeMap<String, FeatureNode>,
    /// Parallel edges are kept; order follows atom discovery.
    pub edges: Vec<(String, String, Weight)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatureGraph {
    pub nodes: BTreeMap<String, FeatureNode>,
    pub edges: BTreeMap<(String, String), Weight>,
}

/// Feature/weight pairs a predicate contributes when it depends on a parent.
pub fn chi(predicate: &CfgPredicate, w: &Weight) -> Vec<(String, Weight)> {
    chi_with(predicate, w, ChiMode::Occurrences)
}

pub fn chi_with(predicate: &CfgPredicate, w: &Weight, mode: ChiMode) -> Vec<(String, Weight)> {
    let mut out = Vec::new();
    match mode {
        ChiMode::Occurrences => chi_occurrences(predicate, w, &mut out),
        ChiMode::Formula => chi_formula(&predicate.to_binary(), w, &mut out),
    }
    out
}

fn chi_occurrences(p: &CfgPredicate, w: &Weight, out: &mut Vec<(String, Weight)>) {
    match p {
        CfgPredicate::Single(f) | CfgPredicate::Not(f) => out.push((f.clone(), w.clone())),
        CfgPredicate::Any(children) => {
            for c in children {
                chi_occurrences(c, &Weight::one(), out);
            }
        }
        CfgPredicate::All(children) => {
            let n = BigInt::from(p.occurrence_count());
            let share = w / Weight::from_integer(n);
            for c in children {
                chi_occurrences(c, &share, out);
            }
        }
    }
}

fn chi_formula(p: &CfgPredicate, w: &Weight, out: &mut Vec<(String, Weight)>) {
    match p {
        CfgPredicate::Single(f) | CfgPredicate::Not(f) => out.push((f.clone(), w.clone())),
        CfgPredicate::Any(children) => {
            for c in children {
                chi_formula(c, &Weight::one(), out);
            }
        }
        CfgPredicate::All(children) => {
            for c in children {
                let size = Weight::from_integer(BigInt::from(c.occurrence_count()));
                let d = (w * size).recip();
                chi_formula(c, &d, out);
            }
        }
    }
}

/// Distinct feature names of a predicate, in order of first occurrence.
fn distinct_names(p: &CfgPredicate) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for o in p.occurrences() {
        if !names.iter().any(|n| n == o.name) {
            names.push(o.name.to_string());
        }
    }
    names
}

pub fn extract_feature_graph(uir: &Uir) -> FeatureMultigraph {
    extract_feature_graph_with(uir, ChiMode::Occurrences)
}

pub fn extract_feature_graph_with(uir: &Uir, mode: ChiMode) -> FeatureMultigraph {
    let mut mg = FeatureMultigraph {
        nodes: BTreeMap::new(),
        edges: Vec::new(),
    };
    mg.nodes.insert(GLOBAL.into(), FeatureNode::new(GLOBAL));
    for atom in uir.atoms() {
        let Some(pred) = atom.predicate() else {
            continue;
        };
        let parent_pred = uir
            .nearest_atom_ancestor(atom.id)
            .and_then(|p| uir.node(p).predicate());
        let targets = match parent_pred {
            Some(pp) => distinct_names(pp),
            None => vec![GLOBAL.to_string()],
        };
        for (f, w) in chi_with(pred, &Weight::one(), mode) {
            mg.nodes
                .entry(f.clone())
                .or_insert_with(|| FeatureNode::new(&f))
                .accumulate(pred);
            for t in &targets {
                let node = mg
                    .nodes
                    .entry(t.clone())
                    .or_insert_with(|| FeatureNode::new(t));
                if let Some(pp) = parent_pred {
                    node.accumulate(pp);
                }
                mg.edges.push((f.clone(), t.clone(), w.clone()));
            }
        }
    }
    mg
}

pub fn squash(mg: &FeatureMultigraph) -> FeatureGraph {
    let mut edges: BTreeMap<(String, String), Weight> = BTreeMap::new();
    for (s, t, w) in &mg.edges {
        *edges
            .entry((s.clone(), t.clone()))
            .or_insert_with(Weight::zero) += w;
    }
    FeatureGraph {
        nodes: mg.nodes.clone(),
        edges,
    }
}

/// Adds `PATCH` with an edge from `G` and an edge to every node except `G`.
pub fn add_patch_node(g: &FeatureGraph) -> FeatureGraph {
    let mut out = g.clone();
    out.nodes.insert(PATCH.into(), FeatureNode::new(PATCH));
    out.nodes
        .entry(GLOBAL.into())
        .or_insert_with(|| FeatureNode::new(GLOBAL));
    out.edges
        .insert((GLOBAL.into(), PATCH.into()), Weight::one());
    for name in g.nodes.keys() {
        if name != GLOBAL && name != PATCH {
            out.edges.insert((PATCH.into(), name.clone()), Weight::one());
        }
    }
    out
}

impl FeatureGraph {
    pub fn total_weight(&self) -> Weight {
        self.edges.values().fold(Weight::zero(), |a, w| a + w)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.values().map(node_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|((s, t), w)| json!({
                "source": s, "target": t, "weight": w.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        dot(
            "features",
            self.nodes.keys(),
            self.edges.iter().map(|((s, t), w)| (s, t, w)),
        )
    }
}

impl FeatureMultigraph {
    pub fn total_weight(&self) -> Weight {
        self.edges.iter().fold(Weight::zero(), |a, (_, _, w)| a + w)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.values().map(node_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(s, t, w)| json!({
                "source": s, "target": t, "weight": w.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        dot(
            "multigraph",
            self.nodes.keys(),
            self.edges.iter().map(|(s, t, w)| (s, t, w)),
        )
    }
}

fn node_json(n: &FeatureNode) -> Value {
    json!({
        "name": n.name,
        "predicates": n.predicates.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

fn dot<'a>(
    name: &str,
    nodes: impl Iterator<Item = &'a String>,
    edges: impl Iterator<Item = (&'a String, &'a String, &'a Weight)>,
) -> String {
    let mut out = format!("digraph {name} {{\n");
    for n in nodes {
        let _ = writeln!(out, "  \"{n}\";");
    }
    for (s, t, w) in edges {
        let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{w}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_source;
    use crate::uir::build;

    fn s(n: &str) -> CfgPredicate {
        CfgPredicate::Single(n.into())
    }

    fn pairs(list: &[(&str, Weight)]) -> Vec<(String, Weight)> {
        list.iter().map(|(n, w)| (n.to_string(), w.clone())).collect()
    }

    fn graph_of(src: &str) -> FeatureGraph {
        let ast = parse_source(&[("src/lib.rs".into(), src.into())]).unwrap();
        squash(&extract_feature_graph(&build(&ast, 1)))
    }

    #[test]
    fn chi_any_resets_to_one() {
        let p = CfgPredicate::Any(vec![s("b"), s("c")]);
        assert_eq!(chi(&p, &ratio(1, 1)), pairs(&[("b", ratio(1, 1)), ("c", ratio(1, 1))]));
        assert_eq!(chi(&p, &ratio(1, 7)), pairs(&[("b", ratio(1, 1)), ("c", ratio(1, 1))]));
    }

    #[test]
    fn chi_all_halves() {
        let p = CfgPredicate::All(vec![s("c"), s("d")]);
        assert_eq!(chi(&p, &ratio(1, 1)), pairs(&[("c", ratio(1, 2)), ("d", ratio(1, 2))]));
    }

    #[test]
    fn chi_base_case() {
        assert_eq!(chi(&s("f"), &ratio(3, 4)), pairs(&[("f", ratio(3, 4))]));
        assert_eq!(
            chi(&CfgPredicate::Not("f".into()), &ratio(3, 4)),
            pairs(&[("f", ratio(3, 4))])
        );
    }

    #[test]
    fn chi_all_with_nested_any() {
        let p = CfgPredicate::All(vec![s("a"), CfgPredicate::Any(vec![s("b"), s("c")])]);
        assert_eq!(
            chi(&p, &ratio(1, 1)),
            pairs(&[("a", ratio(1, 3)), ("b", ratio(1, 1)), ("c", ratio(1, 1))])
        );
    }

    #[test]
    fn chi_formula_mode_follows_the_printed_recursion() {
        let p = CfgPredicate::All(vec![s("c"), s("d")]);
        // each operand has one feature, so d = 1 / (1 * 1)
        assert_eq!(
            chi_with(&p, &ratio(1, 1), ChiMode::Formula),
            pairs(&[("c", ratio(1, 1)), ("d", ratio(1, 1))])
        );
        let p = CfgPredicate::All(vec![s("a"), CfgPredicate::All(vec![s("b"), s("c")])]);
        // inner all gets 1/2, its operands 1/(1/2 * 1) = 2
        assert_eq!(
            chi_with(&p, &ratio(1, 1), ChiMode::Formula),
            pairs(&[("a", ratio(1, 1)), ("b", ratio(2, 1)), ("c", ratio(2, 1))])
        );
    }

    #[test]
    fn nested_any_under_single_parent() {
        let g = graph_of(
            "#[cfg(feature = \"a\")]\nfn foo() {\n  #[cfg(any(feature = \"b\", feature = \"c\"))]\n  fn bar() {}\n}",
        );
        let b_a = &g.edges[&("b".to_string(), "a".to_string())];
        assert_eq!(*b_a, ratio(1, 1));
        assert_eq!(g.edges[&("c".to_string(), "a".to_string())], ratio(1, 1));
        assert_eq!(g.edges[&("a".to_string(), GLOBAL.to_string())], ratio(1, 1));
        assert_eq!(g.edges.len(), 3);
    }

    #[test]
    fn all_at_global_scope() {
        let g = graph_of("#[cfg(all(feature = \"c\", feature = \"d\"))]\nfn f() {}");
        assert_eq!(g.edges[&("c".to_string(), GLOBAL.to_string())], ratio(1, 2));
        assert_eq!(g.edges[&("d".to_string(), GLOBAL.to_string())], ratio(1, 2));
    }

    #[test]
    fn single_top_level_atom() {
        let g = graph_of("#[cfg(feature = \"a\")]\nconst X: u8 = 1;");
        assert_eq!(g.nodes.keys().collect::<Vec<_>>(), vec![GLOBAL, "a"]);
        assert_eq!(g.edges.len(), 1);
    }

    #[test]
    fn predicates_accumulate_on_both_ends() {
        let g = graph_of("#[cfg(a)]\nmod m {\n  #[cfg(not(b))]\n  fn f() {}\n}");
        assert_eq!(g.nodes["b"].predicates, vec![CfgPredicate::Not("b".into())]);
        assert_eq!(g.nodes["a"].predicates, vec![s("a")]);
    }

    #[test]
    fn squash_sums_parallel_edges() {
        let mut nodes = BTreeMap::new();
        nodes.insert("a".to_string(), FeatureNode::new("a"));
        nodes.insert("b".to_string(), FeatureNode::new("b"));
        let mg = FeatureMultigraph {
            nodes,
            edges: vec![
                ("b".into(), "a".into(), ratio(1, 1)),
                ("b".into(), "a".into(), ratio(1, 2)),
            ],
        };
        let g = squash(&mg);
        assert_eq!(g.edges[&("b".to_string(), "a".to_string())], ratio(3, 2));
        assert_eq!(g.total_weight(), mg.total_weight());
    }

    #[test]
    fn squash_empty() {
        let mg = FeatureMultigraph {
            nodes: BTreeMap::new(),
            edges: vec![],
        };
        assert!(squash(&mg).edges.is_empty());
    }

    #[test]
    fn patch_smallest_cases() {
        let g = graph_of("#[cfg(a)] fn f() {}");
        let p = add_patch_node(&g);
        let keys: Vec<_> = p.edges.keys().cloned().collect();
        assert_eq!(
            keys,
            vec![
                (GLOBAL.to_string(), PATCH.to_string()),
                (PATCH.to_string(), "a".to_string()),
                ("a".to_string(), GLOBAL.to_string()),
            ]
        );
        let only_g = add_patch_node(&graph_of(""));
        assert_eq!(only_g.edges.len(), 1);
        assert!(only_g.edges.contains_key(&(GLOBAL.to_string(), PATCH.to_string())));
    }

    #[test]
    fn exports() {
        let g = add_patch_node(&graph_of("#[cfg(all(a, b))] fn f() {}"));
        assert!(g.to_dot().contains("\"a\" -> \"<G>\" [label=\"1/2\"]"));
        let j = g.to_json();
        assert_eq!(j["edges"].as_array().unwrap().len(), 5);
    }
}
