//! JSON encoding of the attributed tree.
//!
//! ```json
//! {"kind": "fn", "ident": "foo", "cfg": [{"single": "a"}],
//!  "span": {"file": "src/lib.rs", "start": 1, "end": 2}, "children": []}
//! ```

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::{AstNode, CfgPredicate, NodeKind, Span};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("schema error at `{pointer}`: {message}")]
pub struct SchemaError {
    /// JSON pointer to the offending value.
    pub pointer: String,
    pub message: String,
}

fn schema(pointer: &str, message: impl Into<String>) -> SchemaError {
    SchemaError {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

pub fn export_json_tree(node: &AstNode) -> String {
    serde_json::to_string(&to_value(node)).expect("tree values always serialize")
}

fn to_value(node: &AstNode) -> Value {
    json!({
        "kind": node.kind.as_str(),
        "ident": node.ident,
        "cfg": node.attributes,
        "span": {"file": node.span.file, "start": node.span.start, "end": node.span.end},
        "children": node.children.iter().map(to_value).collect::<Vec<_>>(),
    })
}

pub fn ingest_json_tree(document: &str) -> Result<AstNode, SchemaError> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    node_from(&value, "")
}

fn node_from(value: &Value, ptr: &str) -> Result<AstNode, SchemaError> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema(ptr, "expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "kind" | "ident" | "cfg" | "span" | "children") {
            return Err(schema(&format!("{ptr}/{key}"), "unknown field"));
        }
    }
    let kind_ptr = format!("{ptr}/kind");
    let kind_name = obj
        .get("kind")
        .ok_or_else(|| schema(&kind_ptr, "missing field"))?
        .as_str()
        .ok_or_else(|| schema(&kind_ptr, "expected a string"))?;
    let kind = NodeKind::from_name(kind_name)
        .ok_or_else(|| schema(&kind_ptr, format!("unknown node kind `{kind_name}`")))?;

    let ident = match obj.get("ident") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema(&format!("{ptr}/ident"), "expected a string or null")),
    };

    let mut attributes = Vec::new();
    if let Some(cfg) = obj.get("cfg") {
        let arr = cfg
            .as_array()
            .ok_or_else(|| schema(&format!("{ptr}/cfg"), "expected an array"))?;
        for (i, p) in arr.iter().enumerate() {
            attributes.push(predicate_from(p, &format!("{ptr}/cfg/{i}"))?);
        }
    }

    let span = match obj.get("span") {
        None => Span::default(),
        Some(v) => span_from(v, &format!("{ptr}/span"))?,
    };

    let mut children = Vec::new();
    if let Some(ch) = obj.get("children") {
        let arr = ch
            .as_array()
            .ok_or_else(|| schema(&format!("{ptr}/children"), "expected an array"))?;
        for (i, c) in arr.iter().enumerate() {
            children.push(node_from(c, &format!("{ptr}/children/{i}"))?);
        }
    }

    Ok(AstNode {
        kind,
        ident,
        attributes,
        children,
        span,
    })
}

fn span_from(value: &Value, ptr: &str) -> Result<Span, SchemaError> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema(ptr, "expected an object"))?;
    let file = match obj.get("file") {
        None => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema(&format!("{ptr}/file"), "expected a string")),
    };
    let line = |key: &str| -> Result<u32, SchemaError> {
        match obj.get(key) {
            None => Ok(0),
            Some(v) => v
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| schema(&format!("{ptr}/{key}"), "expected a line number")),
        }
    };
    Ok(Span {
        file,
        start: line("start")?,
        end: line("end")?,
    })
}

fn predicate_from(value: &Value, ptr: &str) -> Result<CfgPredicate, SchemaError> {
    let obj: &Map<String, Value> = value
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| schema(ptr, "expected an object with exactly one key"))?;
    let (key, inner) = obj.iter().next().expect("one entry");
    let inner_ptr = format!("{ptr}/{key}");
    match key.as_str() {
        "single" | "not" => {
            let name = inner
                .as_str()
                .filter(|s| !s.is_empty())
                .ok_or_else(|| schema(&inner_ptr, "expected a non-empty feature name"))?
                .to_string();
            Ok(if key == "single" {
                CfgPredicate::Single(name)
            } else {
                CfgPredicate::Not(name)
            })
        }
        "any" | "all" => {
            let arr = inner
                .as_array()
                .ok_or_else(|| schema(&inner_ptr, "expected an array"))?;
            if arr.len() < 2 {
                return Err(schema(&inner_ptr, "connectives need at least two operands"));
            }
            let children = arr
                .iter()
                .enumerate()
                .map(|(i, p)| predicate_from(p, &format!("{inner_ptr}/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(if key == "any" {
                CfgPredicate::Any(children)
            } else {
                CfgPredicate::All(children)
            })
        }
        other => Err(schema(ptr, format!("unknown predicate `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_source;

    #[test]
    fn minimal_root() {
        let root = ingest_json_tree(r#"{"kind":"root","children":[]}"#).unwrap();
        assert_eq!(root, AstNode::root());
    }

    #[test]
    fn export_then_ingest_is_identity() {
        let src = "#[cfg(feature = \"a\")]\nfn foo() {\n  #[cfg(any(feature = \"b\", not(c)))]\n  fn bar() { let x = g(); }\n}\nfn qux() { bar(); }";
        let tree = parse_source(&[("src/lib.rs".into(), src.into())]).unwrap();
        let doc = export_json_tree(&tree);
        assert_eq!(ingest_json_tree(&doc).unwrap(), tree);
    }

    #[test]
    fn errors_carry_json_pointers() {
        let err = ingest_json_tree(r#"{"kind":"root","children":[{"kind":"fn","cfg":[{"any":[{"single":"a"}]}]}]}"#)
            .unwrap_err();
        assert_eq!(err.pointer, "/children/0/cfg/0/any");

        let err = ingest_json_tree(r#"{"kind":"root","children":[{"kind":"lambda"}]}"#).unwrap_err();
        assert_eq!(err.pointer, "/children/0/kind");

        let err = ingest_json_tree(r#"{"children":[]}"#).unwrap_err();
        assert_eq!(err.pointer, "/kind");

        let err = ingest_json_tree("[").unwrap_err();
        assert_eq!(err.pointer, "");
    }
}
