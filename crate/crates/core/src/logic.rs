//! Propositional encoding of the feature model.
//!
//! The formula conjoins, for every feature, an implication from the feature
//! to its accumulated predicates, one implication per dependency edge between
//! real features, the manifest's `feature = [implied, ...]` entries and unit
//! facts for default features. CNF conversion is the textbook
//! equivalence-preserving one, so no auxiliary variables are introduced.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::featgraph::{is_reserved, FeatureGraph};
use crate::frontend::{CfgPredicate, Manifest};

/// Default cap on the number of clauses produced by distribution.
pub const DEFAULT_CLAUSE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    True,
    False,
    Var(String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Conjunction that collapses the trivial cases.
    pub fn and(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::True,
            1 => fs.pop().expect("one element"),
            _ => Formula::And(fs),
        }
    }

    pub fn or(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::False,
            1 => fs.pop().expect("one element"),
            _ => Formula::Or(fs),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Not(f) => f.collect_vars(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_vars(out)),
            Formula::Implies(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates with `value` supplying the truth value of each variable.
    pub fn eval(&self, value: &dyn Fn(&str) -> bool) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Var(v) => value(v),
            Formula::Not(f) => !f.eval(value),
            Formula::And(fs) => fs.iter().all(|f| f.eval(value)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(value)),
            Formula::Implies(a, b) => !a.eval(value) || b.eval(value),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, fs: &[Formula], op: &str) -> fmt::Result {
            f.write_str("(")?;
            for (i, x) in fs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")
        }
        match self {
            Formula::True => f.write_str("⊤"),
            Formula::False => f.write_str("⊥"),
            Formula::Var(v) => f.write_str(v),
            Formula::Not(x) => write!(f, "¬{x}"),
            Formula::And(fs) => join(f, fs, "∧"),
            Formula::Or(fs) => join(f, fs, "∨"),
            Formula::Implies(a, b) => write!(f, "({a} ⇒ {b})"),
        }
    }
}

/// Translation of a configuration predicate into a formula.
pub fn predicate_formula(p: &CfgPredicate) -> Formula {
    match p {
        CfgPredicate::Single(n) => Formula::var(n),
        CfgPredicate::Not(n) => Formula::not(Formula::var(n)),
        CfgPredicate::Any(ps) => Formula::Or(ps.iter().map(predicate_formula).collect()),
        CfgPredicate::All(ps) => Formula::And(ps.iter().map(predicate_formula).collect()),
    }
}

/// How a feature's own predicates enter the formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PhiMode {
    /// `f ⇒ pred(f)`: the predicate only has to hold when `f` is enabled.
    #[default]
    Implication,
    /// `pred(f)` as a bare conjunct.
    Literal,
}

pub fn build_formula(g: &FeatureGraph, m: &Manifest) -> Formula {
    build_formula_with(g, m, PhiMode::Implication)
}

pub fn build_formula_with(g: &FeatureGraph, m: &Manifest, mode: PhiMode) -> Formula {
    let mut conjuncts = Vec::new();
    for node in g.nodes.values() {
        if is_reserved(&node.name) || node.predicates.is_empty() {
            continue;
        }
        let pred = Formula::and(node.predicates.iter().map(predicate_formula).collect());
        conjuncts.push(match mode {
            PhiMode::Implication => Formula::implies(Formula::var(&node.name), pred),
            PhiMode::Literal => pred,
        });
    }
    for (s, t) in g.edges.keys() {
        if !is_reserved(s) && !is_reserved(t) {
            conjuncts.push(Formula::implies(Formula::var(s), Formula::var(t)));
        }
    }
    for (f, implied) in &m.features {
        for d in implied {
            conjuncts.push(Formula::implies(Formula::var(f), Formula::var(d)));
        }
    }
    for d in &m.defaults {
        conjuncts.push(Formula::var(d));
    }
    Formula::and(conjuncts)
}

/// Every selectable feature: graph features plus manifest features.
pub fn feature_variables(g: &FeatureGraph, m: &Manifest) -> BTreeSet<String> {
    g.nodes
        .keys()
        .filter(|n| !is_reserved(n))
        .cloned()
        .chain(m.all_features())
        .collect()
}

pub type Literal = i32;
pub type Clause = Vec<Literal>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    /// Variable `i` (1-based) is named `variables[i - 1]`.
    pub variables: Vec<String>,
    /// Normalised clauses, sorted and free of duplicates and tautologies.
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("CNF conversion would exceed {limit} clauses")]
    BlowupLimit { limit: usize },
}

impl CnfFormula {
    pub fn empty() -> Self {
        CnfFormula {
            variables: Vec::new(),
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name).map(|i| i + 1)
    }

    pub fn name_of(&self, var: usize) -> &str {
        &self.variables[var - 1]
    }

    /// Clause-wise evaluation; `assignment[i - 1]` is the value of variable `i`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = assignment[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    /// The clauses read back as a formula over the variable names.
    pub fn to_formula(&self) -> Formula {
        Formula::and(
            self.clauses
                .iter()
                .map(|c| {
                    Formula::or(
                        c.iter()
                            .map(|&l| {
                                let v = Formula::var(self.name_of(l.unsigned_abs() as usize));
                                if l > 0 {
                                    v
                                } else {
                                    Formula::not(v)
                                }
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// Sorts literals by variable then sign and drops duplicates; `None` for a
/// tautology.
pub fn normalize_clause(mut c: Clause) -> Option<Clause> {
    c.sort_by_key(|&l| (l.unsigned_abs(), l > 0));
    c.dedup();
    if c.windows(2).any(|w| w[0] == -w[1]) {
        None
    } else {
        Some(c)
    }
}

pub fn to_cnf(p: &Formula) -> Result<CnfFormula, CnfError> {
    to_cnf_over(p, &BTreeSet::new(), DEFAULT_CLAUSE_LIMIT)
}

/// Converts over the union of the formula's variables and `extra`, which
/// lets unconstrained features keep a variable.
pub fn to_cnf_over(
    p: &Formula,
    extra: &BTreeSet<String>,
    limit: usize,
) -> Result<CnfFormula, CnfError> {
    let mut names = p.variables();
    names.extend(extra.iter().cloned());
    let variables: Vec<String> = names.into_iter().collect();
    let index: BTreeMap<&str, Literal> = variables
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i as Literal + 1))
        .collect();
    let nnf = to_nnf(p, false);
    let clauses = distribute(&nnf, &index, limit)?;
    Ok(CnfFormula {
        variables,
        clauses: clauses.into_iter().collect(),
    })
}

/// Negation normal form without implications; `Not` only wraps variables.
fn to_nnf(p: &Formula, negate: bool) -> Formula {
    match (p, negate) {
        (Formula::True, false) | (Formula::False, true) => Formula::True,
        (Formula::True, true) | (Formula::False, false) => Formula::False,
        (Formula::Var(_), false) => p.clone(),
        (Formula::Var(_), true) => Formula::not(p.clone()),
        (Formula::Not(x), _) => to_nnf(x, !negate),
        (Formula::And(xs), false) | (Formula::Or(xs), true) => {
            Formula::And(xs.iter().map(|x| to_nnf(x, negate)).collect())
        }
        (Formula::Or(xs), false) | (Formula::And(xs), true) => {
            Formula::Or(xs.iter().map(|x| to_nnf(x, negate)).collect())
        }
        (Formula::Implies(a, b), false) => Formula::Or(vec![to_nnf(a, true), to_nnf(b, false)]),
        (Formula::Implies(a, b), true) => Formula::And(vec![to_nnf(a, false), to_nnf(b, true)]),
    }
}

fn distribute(
    p: &Formula,
    index: &BTreeMap<&str, Literal>,
    limit: usize,
) -> Result<BTreeSet<Clause>, CnfError> {
    let out = match p {
        Formula::True => BTreeSet::new(),
        Formula::False => BTreeSet::from([Vec::new()]),
        Formula::Var(v) => BTreeSet::from([vec![index[v.as_str()]]]),
        Formula::Not(x) => match x.as_ref() {
            Formula::Var(v) => BTreeSet::from([vec![-index[v.as_str()]]]),
            _ => unreachable!("input is in negation normal form"),
        },
        Formula::And(xs) => {
            let mut acc = BTreeSet::new();
            for x in xs {
                acc.extend(distribute(x, index, limit)?);
                if acc.len() > limit {
                    return Err(CnfError::BlowupLimit { limit });
                }
            }
            acc
        }
        Formula::Or(xs) => {
            // the empty disjunction is false: one empty clause
            let mut acc: BTreeSet<Clause> = BTreeSet::from([Vec::new()]);
            for x in xs {
                let part = distribute(x, index, limit)?;
                if part.is_empty() {
                    // a true disjunct makes the whole disjunction true
                    return Ok(BTreeSet::new());
                }
                if acc.len().saturating_mul(part.len()) > limit.saturating_mul(4) {
                    return Err(CnfError::BlowupLimit { limit });
                }
                let mut next = BTreeSet::new();
                for a in &acc {
                    for b in &part {
                        let mut c = a.clone();
                        c.extend_from_slice(b);
                        if let Some(c) = normalize_clause(c) {
                            next.insert(c);
                        }
                    }
                }
                if next.is_empty() {
                    return Ok(next);
                }
                acc = next;
            }
            acc
        }
        Formula::Implies(..) => unreachable!("input is in negation normal form"),
    };
    if out.len() > limit {
        return Err(CnfError::BlowupLimit { limit });
    }
    Ok(out)
}

/// DIMACS text with the variable names as `c var <index> <name>` comments.
pub fn export_dimacs(c: &CnfFormula) -> String {
    let mut out = String::new();
    for (i, name) in c.variables.iter().enumerate() {
        out.push_str(&format!("c var {} {}\n", i + 1, name));
    }
    out.push_str(&format!("p cnf {} {}\n", c.num_vars(), c.clauses.len()));
    for clause in &c.clauses {
        for l in clause {
            out.push_str(&l.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::featgraph::{add_patch_node, extract_feature_graph, squash};
    use crate::frontend::{parse_manifest, parse_source};
    use crate::uir::build;
    use proptest::prelude::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    fn graph(src: &str) -> FeatureGraph {
        let ast = parse_source(&[("src/lib.rs".into(), src.into())]).unwrap();
        add_patch_node(&squash(&extract_feature_graph(&build(&ast, 1))))
    }

    /// Every assignment of `vars`, as closures-friendly maps.
    fn assignments(vars: &[String]) -> Vec<BTreeMap<String, bool>> {
        (0..1u32 << vars.len())
            .map(|bits| {
                vars.iter()
                    .enumerate()
                    .map(|(i, n)| (n.clone(), bits >> i & 1 == 1))
                    .collect()
            })
            .collect()
    }

    fn equivalent(p: &Formula, c: &CnfFormula) -> bool {
        assignments(&c.variables).iter().all(|a| {
            let bools: Vec<bool> = c.variables.iter().map(|n| a[n]).collect();
            p.eval(&|n| a[n]) == c.satisfied_by(&bools)
        })
    }

    #[test]
    fn edge_between_real_features_becomes_implication() {
        let g = graph("#[cfg(a)]\nmod m {\n  #[cfg(b)]\n  fn f() {}\n}");
        let f = build_formula(&g, &Manifest::default());
        let Formula::And(parts) = &f else { panic!("{f}") };
        assert!(parts.contains(&Formula::implies(v("b"), v("a"))));
        // nothing mentions the reserved nodes
        assert!(f.variables().iter().all(|n| !is_reserved(n)));
    }

    #[test]
    fn manifest_defaults_and_implications() {
        let m = parse_manifest("[features]\ndefault = [\"a\"]\na = [\"b\"]\nb = []").unwrap();
        let g = graph("");
        let f = build_formula(&g, &m);
        assert_eq!(f, Formula::And(vec![Formula::implies(v("a"), v("b")), v("a")]));
    }

    #[test]
    fn empty_inputs_give_true() {
        assert_eq!(build_formula(&graph(""), &Manifest::default()), Formula::True);
        let c = to_cnf(&Formula::True).unwrap();
        assert!(c.clauses.is_empty());
        assert_eq!(export_dimacs(&c), "p cnf 0 0\n");
    }

    #[test]
    fn textbook_conversion() {
        let p = Formula::And(vec![
            Formula::implies(v("a"), v("b")),
            Formula::Or(vec![v("a"), v("c")]),
        ]);
        let c = to_cnf(&p).unwrap();
        assert_eq!(c.variables, vec!["a", "b", "c"]);
        assert_eq!(c.clauses, vec![vec![-1, 2], vec![1, 3]]);
    }

    #[test]
    fn implication_over_nested_connectives() {
        let p = Formula::implies(
            v("a"),
            Formula::And(vec![v("b"), Formula::Or(vec![v("c"), Formula::not(v("d"))])]),
        );
        let c = to_cnf(&p).unwrap();
        assert_eq!(c.clauses, vec![vec![-1, 2], vec![-1, 3, -4]]);
        assert!(equivalent(&p, &c));
    }

    #[test]
    fn tautologies_and_duplicates_vanish() {
        let p = Formula::And(vec![
            Formula::Or(vec![v("a"), Formula::not(v("a"))]),
            Formula::Or(vec![v("b"), v("b")]),
            v("b"),
        ]);
        let c = to_cnf(&p).unwrap();
        assert_eq!(c.clauses, vec![vec![2]]);
    }

    #[test]
    fn false_gives_empty_clause() {
        let c = to_cnf(&Formula::False).unwrap();
        assert_eq!(c.clauses, vec![Vec::<Literal>::new()]);
    }

    #[test]
    fn blowup_limit() {
        // (a1 ∧ b1) ∨ ... ∨ (a12 ∧ b12) has 2^12 clauses
        let p = Formula::Or(
            (0..12)
                .map(|i| Formula::And(vec![v(&format!("a{i}")), v(&format!("b{i}"))]))
                .collect(),
        );
        assert_eq!(
            to_cnf_over(&p, &BTreeSet::new(), 1000),
            Err(CnfError::BlowupLimit { limit: 1000 })
        );
        assert_eq!(to_cnf(&p).unwrap().clauses.len(), 4096);
    }

    #[test]
    fn dimacs_layout() {
        let c = CnfFormula {
            variables: vec!["a".into(), "b".into()],
            clauses: vec![vec![-1, 2]],
        };
        assert_eq!(
            export_dimacs(&c),
            "c var 1 a\nc var 2 b\np cnf 2 1\n-1 2 0\n"
        );
    }

    #[test]
    fn literal_mode_forces_predicates() {
        let g = graph("#[cfg(not(a))] fn f() {}");
        let f = build_formula_with(&g, &Manifest::default(), PhiMode::Literal);
        assert_eq!(f, Formula::not(v("a")));
        let f = build_formula(&g, &Manifest::default());
        assert_eq!(f, Formula::implies(v("a"), Formula::not(v("a"))));
    }

    #[test]
    fn feature_variables_include_manifest_only_features() {
        let m = parse_manifest("[features]\nx = [\"y\"]").unwrap();
        let vars = feature_variables(&graph("#[cfg(a)] fn f() {}"), &m);
        assert_eq!(vars.into_iter().collect::<Vec<_>>(), vec!["a", "x", "y"]);
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            4 => (0..6u8).prop_map(|i| Formula::var(&format!("x{i}"))),
            1 => Just(Formula::True),
            1 => Just(Formula::False),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                prop::collection::vec(inner.clone(), 0..3).prop_map(Formula::And),
                prop::collection::vec(inner.clone(), 0..3).prop_map(Formula::Or),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn cnf_is_equivalent(p in arb_formula()) {
            let c = to_cnf(&p).unwrap();
            prop_assert!(equivalent(&p, &c));
        }

        #[test]
        fn cnf_is_idempotent(p in arb_formula()) {
            let c = to_cnf(&p).unwrap();
            let again = to_cnf_over(&c.to_formula(), &c.variables.iter().cloned().collect(), DEFAULT_CLAUSE_LIMIT).unwrap();
            prop_assert_eq!(again, c);
        }

        #[test]
        fn clauses_are_normalized(p in arb_formula()) {
            let c = to_cnf(&p).unwrap();
            for clause in &c.clauses {
                prop_assert_eq!(normalize_clause(clause.clone()), Some(clause.clone()));
            }
        }
    }
}
