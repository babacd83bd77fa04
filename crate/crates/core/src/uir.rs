//! Unified intermediate representation.
//!
//! Every term carrying `cfg` predicates is unified with them into an atom;
//! other relevant terms stay plain nodes; `use`/`extern crate`/generic
//! parameters are dropped and their children reattached to the nearest
//! retained ancestor. Edges point from child to parent. Node weights come
//! from a post-order fixed point in which calls inherit the (averaged)
//! weight of the definitions they name.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::frontend::{AstNode, CfgPredicate, NodeKind, Span};

pub type NodeId = usize;

/// Default weight given to references that never resolve.
pub const DEFAULT_WEIGHT: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UirVariant {
    /// A term unified with its predicate. The global scope is the only atom
    /// with no predicate.
    Atom(Option<CfgPredicate>),
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub kind: NodeKind,
    pub ident: Option<String>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    NoWeight,
    Intrinsic,
    Children,
    Reference(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Unweighted,
    Wait,
    Weighted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UirNode {
    pub id: NodeId,
    pub variant: UirVariant,
    pub term: Term,
    pub weight_kind: WeightKind,
    pub weight: u64,
    pub status: Status,
}

impl UirNode {
    pub fn is_atom(&self) -> bool {
        matches!(self.variant, UirVariant::Atom(_))
    }

    pub fn predicate(&self) -> Option<&CfgPredicate> {
        match &self.variant {
            UirVariant::Atom(p) => p.as_ref(),
            UirVariant::Plain => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uir {
    nodes: Vec<UirNode>,
    parent: Vec<Option<NodeId>>,
    /// The transposed edges, children in source order.
    children: Vec<Vec<NodeId>>,
    root: NodeId,
    /// Identifier → weight of every same-named definition, keyed by node.
    name_weights: BTreeMap<String, BTreeMap<NodeId, u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UirMetrics {
    pub nodes: usize,
    pub edges: usize,
    pub height: usize,
}

impl Uir {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &UirNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[UirNode] {
        &self.nodes
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.parent[id]
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.children[id]
    }

    /// Child → parent edges, ordered by child id.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (c, p)))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &UirNode> + '_ {
        self.nodes.iter().filter(|n| n.is_atom())
    }

    pub fn name_weights(&self) -> &BTreeMap<String, BTreeMap<NodeId, u64>> {
        &self.name_weights
    }

    /// Nearest proper ancestor that is an atom. Only the root has none.
    pub fn nearest_atom_ancestor(&self, id: NodeId) -> Option<NodeId> {
        let mut cur = self.parent[id];
        while let Some(p) = cur {
            if self.nodes[p].is_atom() {
                return Some(p);
            }
            cur = self.parent[p];
        }
        None
    }

    fn push(&mut self, variant: UirVariant, term: Term, parent: Option<NodeId>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(UirNode {
            id,
            variant,
            term,
            weight_kind: WeightKind::NoWeight,
            weight: 0,
            status: Status::Unweighted,
        });
        self.parent.push(parent);
        self.children.push(Vec::new());
        if let Some(p) = parent {
            self.children[p].push(id);
        }
        id
    }

    fn term_of(node: &AstNode) -> Term {
        Term {
            kind: node.kind,
            ident: node.ident.clone(),
            span: node.span.clone(),
        }
    }

    /// Unifies `cfg` predicates with their terms.
    pub fn unify(ast: &AstNode) -> Uir {
        let mut uir = Uir {
            nodes: Vec::new(),
            parent: Vec::new(),
            children: Vec::new(),
            root: 0,
            name_weights: BTreeMap::new(),
        };
        let root_pred = CfgPredicate::conjoin(ast.attributes.clone());
        let root = uir.push(UirVariant::Atom(root_pred), Self::term_of(ast), None);
        uir.root = root;
        for child in &ast.children {
            uir.visit(child, root);
        }
        uir
    }

    fn visit(&mut self, node: &AstNode, parent: NodeId) {
        let id = if let Some(pred) = CfgPredicate::conjoin(node.attributes.clone()) {
            self.push(UirVariant::Atom(Some(pred)), Self::term_of(node), Some(parent))
        } else if node.kind.is_irrelevant() {
            parent
        } else {
            self.push(UirVariant::Plain, Self::term_of(node), Some(parent))
        };
        for child in &node.children {
            self.visit(child, id);
        }
    }

    pub fn assign_weight_kinds(&mut self) {
        for node in &mut self.nodes {
            node.weight_kind = weight_kind_for(node.term.kind, node.term.ident.as_deref());
        }
        // the global scope sums its children whatever term it wraps
        self.nodes[self.root].weight_kind = WeightKind::Children;
    }

    /// Fixed-point weighting. Calls wait until every definition of their
    /// callee is weighted; waiting calls are retried from a FIFO queue, and a
    /// call seen again at an unchanged queue length gets `default_weight`.
    pub fn compute_weights(&mut self, default_weight: u64) {
        let default_weight = default_weight.max(1);
        let mut defs: BTreeMap<String, Vec<NodeId>> = BTreeMap::new();
        for n in &self.nodes {
            if let (true, Some(name)) = (n.term.kind.is_definition(), &n.term.ident) {
                if n.weight_kind != WeightKind::NoWeight {
                    defs.entry(name.clone()).or_default().push(n.id);
                }
            }
        }
        self.name_weights.clear();
        for n in &mut self.nodes {
            n.status = Status::Unweighted;
            n.weight = 0;
        }
        let mut state = Weighing {
            defs,
            queue: VecDeque::new(),
            queued: HashSet::new(),
        };
        self.calc_weight(self.root, &mut state);
        self.resolve_queue(&mut state, default_weight);
        debug_assert!(self.nodes.iter().all(|n| n.status == Status::Weighted));
    }

    fn resolve_reference(&self, callee: &str, state: &Weighing) -> Option<u64> {
        let ids = state.defs.get(callee)?;
        let weights = self.name_weights.get(callee)?;
        if ids.iter().any(|id| !weights.contains_key(id)) {
            return None;
        }
        let sum: u64 = weights.values().sum();
        let k = weights.len() as u64;
        // mean rounded half up
        Some((2 * sum + k) / (2 * k))
    }

    fn calc_weight(&mut self, n: NodeId, state: &mut Weighing) {
        if self.nodes[n].status == Status::Weighted {
            return;
        }
        let children = self.children[n].clone();
        for &c in &children {
            self.calc_weight(c, state);
        }
        let mut child_weight = 0u64;
        for &c in &children {
            if self.nodes[c].status == Status::Wait {
                self.nodes[n].status = Status::Wait;
                return;
            }
            child_weight += self.nodes[c].weight;
        }
        let weight = match &self.nodes[n].weight_kind {
            WeightKind::NoWeight => 0,
            WeightKind::Intrinsic => 1 + child_weight,
            // empty containers still count as one unit of code
            WeightKind::Children => child_weight.max(1),
            WeightKind::Reference(callee) => match self.resolve_reference(callee, state) {
                Some(w) => w,
                None => {
                    self.nodes[n].status = Status::Wait;
                    state.enqueue(n);
                    return;
                }
            },
        };
        self.set_weighted(n, weight);
    }

    fn set_weighted(&mut self, n: NodeId, weight: u64) {
        let node = &mut self.nodes[n];
        node.weight = weight;
        node.status = Status::Weighted;
        if let (true, Some(name)) = (node.term.kind.is_definition(), &node.term.ident) {
            if node.weight_kind != WeightKind::NoWeight {
                self.name_weights
                    .entry(name.clone())
                    .or_default()
                    .insert(n, weight);
            }
        }
    }

    /// Re-evaluates waiting ancestors of a node that just became weighted.
    fn propagate(&mut self, n: NodeId, state: &mut Weighing) {
        let mut cur = self.parent[n];
        while let Some(p) = cur {
            if self.nodes[p].status != Status::Wait {
                break;
            }
            self.calc_weight(p, state);
            if self.nodes[p].status != Status::Weighted {
                break;
            }
            cur = self.parent[p];
        }
    }

    fn resolve_queue(&mut self, state: &mut Weighing, default_weight: u64) {
        let mut seen: HashSet<(NodeId, usize)> = HashSet::new();
        while let Some(c) = state.queue.pop_front() {
            state.queued.remove(&c);
            if self.nodes[c].status == Status::Weighted {
                continue;
            }
            let key = (c, state.queue.len());
            if seen.contains(&key) {
                // the queue went a full round without progress
                self.set_weighted(c, default_weight);
                self.propagate(c, state);
                continue;
            }
            seen.insert(key);
            self.calc_weight(c, state);
            if self.nodes[c].status == Status::Wait {
                state.enqueue(c);
            } else {
                self.propagate(c, state);
            }
        }
    }

    pub fn metrics(&self) -> UirMetrics {
        let mut depth = vec![0usize; self.nodes.len()];
        let mut height = 0;
        // parents always precede children in id order
        for id in 0..self.nodes.len() {
            if let Some(p) = self.parent[id] {
                depth[id] = depth[p] + 1;
                height = height.max(depth[id]);
            }
        }
        UirMetrics {
            nodes: self.nodes.len(),
            edges: self.parent.iter().filter(|p| p.is_some()).count(),
            height,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph uir {\n  node [shape=box];\n");
        for n in &self.nodes {
            let head = match &n.variant {
                UirVariant::Atom(None) => "G".to_string(),
                UirVariant::Atom(Some(p)) => format!("#[cfg({p})]"),
                UirVariant::Plain => String::new(),
            };
            let kind = match &n.weight_kind {
                WeightKind::NoWeight => "no".to_string(),
                WeightKind::Intrinsic => "intrinsic".to_string(),
                WeightKind::Children => "children".to_string(),
                WeightKind::Reference(r) => format!("ref {r}"),
            };
            let label = format!(
                "{head}\\n{} {}\\n{kind} w={}",
                n.term.kind.as_str(),
                n.term.ident.as_deref().unwrap_or(""),
                n.weight
            );
            let shape = if n.is_atom() { ", style=bold" } else { "" };
            let _ = writeln!(
                out,
                "  n{} [label=\"{}\"{shape}];",
                n.id,
                label.replace('"', "\\\"")
            );
        }
        for (c, p) in self.edges() {
            let _ = writeln!(out, "  n{c} -> n{p};");
        }
        out.push_str("}\n");
        out
    }
}

struct Weighing {
    defs: BTreeMap<String, Vec<NodeId>>,
    queue: VecDeque<NodeId>,
    queued: HashSet<NodeId>,
}

impl Weighing {
    fn enqueue(&mut self, n: NodeId) {
        if self.queued.insert(n) {
            self.queue.push_back(n);
        }
    }
}

/// Weight kind of a term, decided by its syntactic category alone.
pub fn weight_kind_for(kind: NodeKind, ident: Option<&str>) -> WeightKind {
    match kind {
        NodeKind::Root
        | NodeKind::Module
        | NodeKind::Fn
        | NodeKind::Impl
        | NodeKind::Trait
        | NodeKind::Struct
        | NodeKind::Enum
        | NodeKind::Union
        | NodeKind::Block
        | NodeKind::If
        | NodeKind::Match
        | NodeKind::Arm
        | NodeKind::Loop => WeightKind::Children,
        NodeKind::Let
        | NodeKind::ExprStmt
        | NodeKind::Field
        | NodeKind::Variant
        | NodeKind::Const
        | NodeKind::Static
        | NodeKind::Macro
        | NodeKind::Opaque => WeightKind::Intrinsic,
        NodeKind::Call => match ident {
            Some(name) => WeightKind::Reference(name.to_string()),
            None => WeightKind::Intrinsic,
        },
        NodeKind::FnDecl
        | NodeKind::ModDecl
        | NodeKind::TypeAlias
        | NodeKind::Use
        | NodeKind::ExternCrate
        | NodeKind::Generic => WeightKind::NoWeight,
    }
}

pub fn unify(ast: &AstNode) -> Uir {
    Uir::unify(ast)
}

pub fn assign_weight_kinds(mut uir: Uir) -> Uir {
    uir.assign_weight_kinds();
    uir
}

pub fn compute_weights(mut uir: Uir, default_weight: u64) -> Uir {
    uir.compute_weights(default_weight);
    uir
}

pub fn uir_metrics(uir: &Uir) -> UirMetrics {
    uir.metrics()
}

/// Unifies the tree, assigns weight kinds and computes weights.
pub fn build(ast: &AstNode, default_weight: u64) -> Uir {
    compute_weights(assign_weight_kinds(unify(ast)), default_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_source;

    fn uir_of(src: &str) -> Uir {
        build(
            &parse_source(&[("src/lib.rs".into(), src.into())]).unwrap(),
            DEFAULT_WEIGHT,
        )
    }

    fn find<'a>(uir: &'a Uir, kind: NodeKind, ident: &str) -> &'a UirNode {
        uir.nodes()
            .iter()
            .find(|n| n.term.kind == kind && n.term.ident.as_deref() == Some(ident))
            .unwrap_or_else(|| panic!("no {kind:?} {ident}"))
    }

    #[test]
    fn cfg_term_becomes_one_atom() {
        let uir = uir_of("#[cfg(feature = \"a\")]\nfn foo() {}");
        let foo = find(&uir, NodeKind::Fn, "foo");
        assert_eq!(
            foo.variant,
            UirVariant::Atom(Some(CfgPredicate::Single("a".into())))
        );
        assert_eq!(uir.atoms().count(), 2); // foo + G
    }

    #[test]
    fn plain_function_keeps_body_nodes() {
        let uir = uir_of("fn qux() { let x = 1; }");
        let qux = find(&uir, NodeKind::Fn, "qux");
        assert_eq!(qux.variant, UirVariant::Plain);
        let body = uir.children(qux.id);
        assert_eq!(body.len(), 1);
        assert_eq!(uir.node(body[0]).variant, UirVariant::Plain);
    }

    #[test]
    fn irrelevant_nodes_are_dropped() {
        let uir = uir_of("use std::io;\nextern crate alloc;");
        assert_eq!(uir.nodes().len(), 2); // G + file module
    }

    #[test]
    fn generic_children_reattach_to_nearest_retained_ancestor() {
        let ast = crate::frontend::ingest_json_tree(
            r#"{"kind":"root","children":[{"kind":"fn","ident":"f","children":[
                {"kind":"use","children":[{"kind":"let"}]}]}]}"#,
        )
        .unwrap();
        let uir = build(&ast, 1);
        let f = find(&uir, NodeKind::Fn, "f");
        let let_id = uir
            .nodes()
            .iter()
            .find(|n| n.term.kind == NodeKind::Let)
            .unwrap()
            .id;
        assert_eq!(uir.parent(let_id), Some(f.id));
    }

    #[test]
    fn multiple_attributes_conjoin() {
        let uir = uir_of("#[cfg(a)]\n#[cfg(b)]\nfn f() {}");
        let f = find(&uir, NodeKind::Fn, "f");
        assert_eq!(
            f.predicate(),
            Some(&CfgPredicate::All(vec![
                CfgPredicate::Single("a".into()),
                CfgPredicate::Single("b".into())
            ]))
        );
    }

    #[test]
    fn weight_kinds() {
        assert_eq!(weight_kind_for(NodeKind::Let, None), WeightKind::Intrinsic);
        assert_eq!(
            weight_kind_for(NodeKind::Fn, Some("foo")),
            WeightKind::Children
        );
        assert_eq!(
            weight_kind_for(NodeKind::Call, Some("bar")),
            WeightKind::Reference("bar".into())
        );
        assert_eq!(weight_kind_for(NodeKind::Use, None), WeightKind::NoWeight);
    }

    #[test]
    fn three_lets_weigh_three() {
        let uir = uir_of("fn f() { let a = 1; let b = 2; let c = 3; }");
        assert_eq!(find(&uir, NodeKind::Fn, "f").weight, 3);
    }

    #[test]
    fn call_averages_same_named_definitions() {
        let uir = uir_of(
            "#[cfg(x)] fn bar() { let a = 1; let b = 2; }\n\
             #[cfg(not(x))] fn bar() { let a = 1; let b = 2; let c = 3; let d = 4; }\n\
             fn qux() { bar(); }",
        );
        let call = find(&uir, NodeKind::Call, "bar");
        assert_eq!(call.weight, 3);
        assert_eq!(uir.name_weights()["bar"].len(), 2);
    }

    #[test]
    fn call_before_definition_resolves_through_queue() {
        let uir = uir_of("fn a() { b(); }\nfn b() { let x = 1; let y = 2; }");
        assert_eq!(find(&uir, NodeKind::Call, "b").weight, 2);
        assert_eq!(find(&uir, NodeKind::Fn, "a").weight, 2);
    }

    #[test]
    fn mutual_recursion_recovers_with_default() {
        for default in [1, 7] {
            let ast = parse_source(&[(
                "src/lib.rs".into(),
                "fn f() { g(); }\nfn g() { f(); }".into(),
            )])
            .unwrap();
            let uir = build(&ast, default);
            assert_eq!(find(&uir, NodeKind::Fn, "f").weight, default);
            assert_eq!(find(&uir, NodeKind::Fn, "g").weight, default);
            assert!(uir.nodes().iter().all(|n| n.status == Status::Weighted));
        }
    }

    #[test]
    fn undefined_callee_gets_default() {
        let ast = parse_source(&[("src/lib.rs".into(), "fn f() { ext(); }".into())]).unwrap();
        let uir = build(&ast, 5);
        assert_eq!(find(&uir, NodeKind::Call, "ext").weight, 5);
    }

    #[test]
    fn nested_waiting_call_resolves_outer_call() {
        let uir = uir_of("fn a() { let v = b(c()); }\nfn b() { let q = 1; }\nfn c() { let r = 1; let s = 2; }");
        assert_eq!(find(&uir, NodeKind::Call, "b").weight, 1);
        assert_eq!(find(&uir, NodeKind::Fn, "a").weight, 2);
    }

    #[test]
    fn metrics_small_cases() {
        let empty = build(&AstNode::root(), 1);
        assert_eq!(
            empty.metrics(),
            UirMetrics {
                nodes: 1,
                edges: 0,
                height: 0
            }
        );
        let ast = crate::frontend::ingest_json_tree(
            r#"{"kind":"root","children":[{"kind":"fn","ident":"f","cfg":[{"single":"a"}]}]}"#,
        )
        .unwrap();
        assert_eq!(
            build(&ast, 1).metrics(),
            UirMetrics {
                nodes: 2,
                edges: 1,
                height: 1
            }
        );
    }

    #[test]
    fn dot_export_mentions_every_node() {
        let uir = uir_of("#[cfg(a)] fn f() { g(); }");
        let dot = uir.to_dot();
        assert!(dot.starts_with("digraph uir"));
        assert_eq!(dot.matches(" -> ").count(), uir.metrics().edges);
    }
}
