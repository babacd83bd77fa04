use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lexer::{tokenize, Tok, Token};
use super::SyntaxError;

/// A configuration predicate as written in a `cfg(...)` attribute.
///
/// `Any`/`All` hold at least two children. Negation is kept only at the
/// leaves: `not(any(..))` and `not(all(..))` are pushed inward when parsed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CfgPredicate {
    Single(String),
    Not(String),
    Any(Vec<CfgPredicate>),
    All(Vec<CfgPredicate>),
}

/// Where a feature occurrence sits inside a predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connective {
    /// The occurrence is the whole predicate.
    None,
    Any,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence<'a> {
    pub name: &'a str,
    pub negated: bool,
    /// Innermost connective enclosing the occurrence.
    pub connective: Connective,
}

impl CfgPredicate {
    /// Conjoins a list of predicates; a single predicate is returned as is.
    pub fn conjoin(mut preds: Vec<CfgPredicate>) -> Option<CfgPredicate> {
        match preds.len() {
            0 => None,
            1 => preds.pop(),
            _ => Some(CfgPredicate::All(preds)),
        }
    }

    /// Every feature occurrence in source order, duplicates included.
    pub fn occurrences(&self) -> Vec<Occurrence<'_>> {
        let mut out = Vec::new();
        self.collect_occurrences(Connective::None, &mut out);
        out
    }

    fn collect_occurrences<'a>(&'a self, parent: Connective, out: &mut Vec<Occurrence<'a>>) {
        match self {
            CfgPredicate::Single(name) => out.push(Occurrence {
                name,
                negated: false,
                connective: parent,
            }),
            CfgPredicate::Not(name) => out.push(Occurrence {
                name,
                negated: true,
                connective: parent,
            }),
            CfgPredicate::Any(ps) => ps
                .iter()
                .for_each(|p| p.collect_occurrences(Connective::Any, out)),
            CfgPredicate::All(ps) => ps
                .iter()
                .for_each(|p| p.collect_occurrences(Connective::All, out)),
        }
    }

    /// Feature names in source order, duplicates included.
    pub fn feature_names(&self) -> Vec<&str> {
        self.occurrences().into_iter().map(|o| o.name).collect()
    }

    /// Number of feature occurrences, duplicates included.
    pub fn occurrence_count(&self) -> usize {
        match self {
            CfgPredicate::Single(_) | CfgPredicate::Not(_) => 1,
            CfgPredicate::Any(ps) | CfgPredicate::All(ps) => {
                ps.iter().map(CfgPredicate::occurrence_count).sum()
            }
        }
    }

    /// The binary right-folded view: `any(a, b, c)` becomes `any(a, any(b, c))`.
    pub fn to_binary(&self) -> CfgPredicate {
        fn fold(ps: &[CfgPredicate], make: fn(Vec<CfgPredicate>) -> CfgPredicate) -> CfgPredicate {
            match ps {
                [only] => only.to_binary(),
                [first, rest @ ..] => make(vec![first.to_binary(), fold(rest, make)]),
                [] => unreachable!("connectives hold at least two children"),
            }
        }
        match self {
            CfgPredicate::Single(_) | CfgPredicate::Not(_) => self.clone(),
            CfgPredicate::Any(ps) => fold(ps, CfgPredicate::Any),
            CfgPredicate::All(ps) => fold(ps, CfgPredicate::All),
        }
    }

    fn negate(self) -> CfgPredicate {
        match self {
            CfgPredicate::Single(n) => CfgPredicate::Not(n),
            CfgPredicate::Not(n) => CfgPredicate::Single(n),
            CfgPredicate::Any(ps) => CfgPredicate::All(ps.into_iter().map(Self::negate).collect()),
            CfgPredicate::All(ps) => CfgPredicate::Any(ps.into_iter().map(Self::negate).collect()),
        }
    }
}

impl fmt::Display for CfgPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, head: &str, ps: &[CfgPredicate]) -> fmt::Result {
            write!(f, "{head}(")?;
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")
        }
        match self {
            CfgPredicate::Single(n) => write!(f, "feature = {n:?}"),
            CfgPredicate::Not(n) => write!(f, "not(feature = {n:?})"),
            CfgPredicate::Any(ps) => list(f, "any", ps),
            CfgPredicate::All(ps) => list(f, "all", ps),
        }
    }
}

impl FromStr for CfgPredicate {
    type Err = SyntaxError;

    /// Parses the inside of a `cfg(...)` attribute, e.g. `any(unix, feature = "a")`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks = tokenize("<predicate>", s)?;
        let mut p = PredicateParser {
            toks: &toks,
            pos: 0,
            path: "<predicate>",
        };
        let pred = p.predicate()?;
        if let Some(t) = toks.get(p.pos) {
            return Err(p.err(t.line, "trailing tokens after predicate"));
        }
        Ok(pred)
    }
}

/// Parses the token slice between the parentheses of `cfg(...)`.
pub(crate) fn parse_predicate_tokens(
    path: &str,
    toks: &[Token],
    line: u32,
) -> Result<CfgPredicate, SyntaxError> {
    let mut p = PredicateParser { toks, pos: 0, path };
    if toks.is_empty() {
        return Err(p.err(line, "empty cfg predicate"));
    }
    let pred = p.predicate()?;
    if let Some(t) = toks.get(p.pos) {
        return Err(p.err(t.line, "trailing tokens in cfg predicate"));
    }
    Ok(pred)
}

struct PredicateParser<'a> {
    toks: &'a [Token],
    pos: usize,
    path: &'a str,
}

impl PredicateParser<'_> {
    fn err(&self, line: u32, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            path: self.path.to_string(),
            line,
            message: message.into(),
        }
    }

    fn line(&self) -> u32 {
        self.toks
            .get(self.pos)
            .or(self.toks.last())
            .map_or(0, |t| t.line)
    }

    fn expect(&mut self, p: &str) -> Result<(), SyntaxError> {
        match self.toks.get(self.pos) {
            Some(t) if t.is_punct(p) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(self.line(), format!("expected `{p}` in cfg predicate"))),
        }
    }

    fn predicate(&mut self) -> Result<CfgPredicate, SyntaxError> {
        let line = self.line();
        let name = match self.toks.get(self.pos).map(|t| &t.tok) {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return Err(self.err(line, "expected a configuration name")),
        };
        self.pos += 1;
        let next = self.toks.get(self.pos);
        if next.is_some_and(|t| t.is_punct("=")) {
            self.pos += 1;
            let value = match self.toks.get(self.pos).map(|t| &t.tok) {
                Some(Tok::Str(v)) => v.clone(),
                _ => return Err(self.err(line, "expected a string after `=`")),
            };
            self.pos += 1;
            if value.is_empty() {
                return Err(self.err(line, "empty configuration value"));
            }
            return Ok(CfgPredicate::Single(if name == "feature" {
                value
            } else {
                format!("{name}:{value}")
            }));
        }
        let is_call = next.is_some_and(|t| t.is_punct("("));
        match (name.as_str(), is_call) {
            ("not" | "any" | "all", true) => {
                self.pos += 1;
                let mut children = Vec::new();
                while !self.toks.get(self.pos).is_some_and(|t| t.is_punct(")")) {
                    children.push(self.predicate()?);
                    if self.toks.get(self.pos).is_some_and(|t| t.is_punct(",")) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(")")?;
                match name.as_str() {
                    "not" => {
                        if children.len() != 1 {
                            return Err(self.err(line, "`not` takes exactly one predicate"));
                        }
                        Ok(children.pop().expect("one child").negate())
                    }
                    _ if children.is_empty() => {
                        Err(self.err(line, format!("empty `{name}()` is not supported")))
                    }
                    _ if children.len() == 1 => Ok(children.pop().expect("one child")),
                    "any" => Ok(CfgPredicate::Any(children)),
                    _ => Ok(CfgPredicate::All(children)),
                }
            }
            (_, true) => Err(self.err(line, format!("unknown cfg operator `{name}`"))),
            (_, false) => Ok(CfgPredicate::Single(name)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: &str) -> CfgPredicate {
        CfgPredicate::Single(n.into())
    }

    #[test]
    fn feature_and_bare_names_normalize() {
        assert_eq!("feature = \"x\"".parse::<CfgPredicate>().unwrap(), s("x"));
        assert_eq!("unix".parse::<CfgPredicate>().unwrap(), s("unix"));
        assert_eq!(
            "target_os = \"linux\"".parse::<CfgPredicate>().unwrap(),
            s("target_os:linux")
        );
    }

    #[test]
    fn negation_is_pushed_to_leaves() {
        let p: CfgPredicate = "not(any(feature = \"a\", not(b)))".parse().unwrap();
        assert_eq!(
            p,
            CfgPredicate::All(vec![CfgPredicate::Not("a".into()), s("b")])
        );
    }

    #[test]
    fn single_child_connective_collapses() {
        assert_eq!("any(a)".parse::<CfgPredicate>().unwrap(), s("a"));
    }

    #[test]
    fn malformed_predicates_error() {
        for bad in ["any(a,", "feature =", "not(a, b)", "frob(a)", "all()", "a b"] {
            assert!(bad.parse::<CfgPredicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn binary_view_right_folds() {
        let p = CfgPredicate::Any(vec![s("a"), s("b"), s("c")]);
        assert_eq!(
            p.to_binary(),
            CfgPredicate::Any(vec![s("a"), CfgPredicate::Any(vec![s("b"), s("c")])])
        );
    }

    #[test]
    fn occurrences_report_innermost_connective() {
        let p: CfgPredicate = "all(a, any(b, not(c)))".parse().unwrap();
        let occ = p.occurrences();
        assert_eq!(occ[0].connective, Connective::All);
        assert_eq!(occ[1].connective, Connective::Any);
        assert!(occ[2].negated);
        assert_eq!(p.occurrence_count(), 3);
    }

    #[test]
    fn json_encoding_matches_schema() {
        let p = CfgPredicate::Any(vec![s("a"), CfgPredicate::Not("b".into())]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"any":[{"single":"a"},{"not":"b"}]}"#
        );
    }

    pub(crate) fn arb_predicate() -> impl Strategy<Value = CfgPredicate> {
        let leaf = prop_oneof![
            "[a-e]".prop_map(CfgPredicate::Single),
            "[a-e]".prop_map(CfgPredicate::Not),
        ];
        leaf.prop_recursive(3, 16, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(CfgPredicate::Any),
                prop::collection::vec(inner, 2..4).prop_map(CfgPredicate::All),
            ]
        })
    }

    proptest! {
        #[test]
        fn pretty_print_round_trips(p in arb_predicate()) {
            let printed = p.to_string();
            prop_assert_eq!(printed.parse::<CfgPredicate>().unwrap(), p);
        }
    }
}
