use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;
use toml::{Table, Value};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ManifestError {
    #[error("duplicate feature `{0}` in [features]")]
    DuplicateFeature(String),
    #[error("malformed manifest: {0}")]
    Parse(String),
    #[error("feature `{feature}`: {message}")]
    Feature { feature: String, message: String },
}

/// Feature declarations of one package.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    pub package: String,
    /// Declared feature → features it enables.
    pub features: BTreeMap<String, Vec<String>>,
    pub defaults: Vec<String>,
    /// Names enabled by some feature without being declared themselves
    /// (typically optional dependencies).
    pub implicit: BTreeSet<String>,
}

impl Manifest {
    /// Every feature name the manifest knows about, declared or implicit.
    pub fn all_features(&self) -> BTreeSet<String> {
        self.features
            .keys()
            .chain(self.implicit.iter())
            .chain(self.defaults.iter())
            .cloned()
            .collect()
    }
}

/// Keys of the `[features]` table, in order of appearance.
fn feature_keys(text: &str) -> Vec<String> {
    let mut keys = Vec::new();
    let mut in_features = false;
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('[') {
            in_features = line == "[features]";
            continue;
        }
        if !in_features || line.starts_with('#') {
            continue;
        }
        if let Some((key, _)) = line.split_once('=') {
            let key = key.trim().trim_matches('"').trim_matches('\'');
            if !key.is_empty() && !key.contains(char::is_whitespace) && !key.contains(',') {
                keys.push(key.to_string());
            }
        }
    }
    keys
}

/// A feature-table entry that names a feature of this package, if any.
/// `dep:x` and `x/y` refer to dependencies and are not features here.
fn local_feature(entry: &str) -> Option<&str> {
    if entry.starts_with("dep:") || entry.contains('/') {
        None
    } else {
        Some(entry)
    }
}

fn string_list(feature: &str, value: &Value) -> Result<Vec<String>, ManifestError> {
    let arr = value.as_array().ok_or_else(|| ManifestError::Feature {
        feature: feature.to_string(),
        message: "expected an array of strings".into(),
    })?;
    arr.iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| ManifestError::Feature {
                    feature: feature.to_string(),
                    message: "expected an array of strings".into(),
                })
        })
        .collect()
}

pub fn parse_manifest(text: &str) -> Result<Manifest, ManifestError> {
    let mut seen = BTreeSet::new();
    for key in feature_keys(text) {
        if !seen.insert(key.clone()) {
            return Err(ManifestError::DuplicateFeature(key));
        }
    }
    let table: Table = text
        .parse()
        .map_err(|e: toml::de::Error| ManifestError::Parse(e.message().to_string()))?;

    let mut manifest = Manifest {
        package: table
            .get("package")
            .and_then(|p| p.get("name"))
            .and_then(Value::as_str)
            .unwrap_or_default()
            .to_string(),
        ..Manifest::default()
    };
    let Some(features) = table.get("features") else {
        return Ok(manifest);
    };
    let features = features
        .as_table()
        .ok_or_else(|| ManifestError::Parse("[features] is not a table".into()))?;
    for (name, value) in features {
        let list = string_list(name, value)?;
        let local: Vec<String> = list
            .iter()
            .filter_map(|e| local_feature(e))
            .map(str::to_string)
            .collect();
        if name == "default" {
            manifest.defaults = local;
        } else {
            manifest.features.insert(name.clone(), local);
        }
    }
    let implied: Vec<String> = manifest
        .features
        .values()
        .flatten()
        .chain(manifest.defaults.iter())
        .cloned()
        .collect();
    for name in implied {
        if !manifest.features.contains_key(&name) {
            manifest.implicit.insert(name);
        }
    }
    Ok(manifest)
}

/// Member patterns of a `[workspace]` table, or `None` if there is none.
/// The second value tells whether the manifest also declares a package.
pub fn parse_workspace_members(text: &str) -> Result<(Option<Vec<String>>, bool), ManifestError> {
    let table: Table = text
        .parse()
        .map_err(|e: toml::de::Error| ManifestError::Parse(e.message().to_string()))?;
    let has_package = table.contains_key("package");
    let members = match table.get("workspace") {
        None => None,
        Some(ws) => Some(match ws.get("members") {
            None => Vec::new(),
            Some(v) => string_list("workspace.members", v)?,
        }),
    };
    Ok((members, has_package))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_implications() {
        let m = parse_manifest("[features]\ndefault = [\"a\"]\na = [\"b\"]\nb = []").unwrap();
        assert_eq!(m.defaults, vec!["a"]);
        assert_eq!(m.features["a"], vec!["b"]);
        assert!(m.features["b"].is_empty());
        assert!(m.implicit.is_empty());
    }

    #[test]
    fn empty_document() {
        let m = parse_manifest("").unwrap();
        assert!(m.features.is_empty());
        assert!(m.defaults.is_empty());
    }

    #[test]
    fn undeclared_implied_feature_is_recorded() {
        let m = parse_manifest("[features]\nx = [\"y\"]").unwrap();
        assert_eq!(m.features["x"], vec!["y"]);
        assert!(m.implicit.contains("y"));
        assert!(m.all_features().contains("y"));
    }

    #[test]
    fn duplicate_feature_keys() {
        let err = parse_manifest("[features]\na = []\na = [\"b\"]").unwrap_err();
        assert_eq!(err, ManifestError::DuplicateFeature("a".into()));
    }

    #[test]
    fn dependency_entries_are_not_features() {
        let m = parse_manifest(
            "[package]\nname = \"p\"\n\n[features]\nfull = [\"dep:serde\", \"tokio/rt\", \"fast\"]\nfast = []\n",
        )
        .unwrap();
        assert_eq!(m.package, "p");
        assert_eq!(m.features["full"], vec!["fast"]);
    }

    #[test]
    fn multiline_arrays_and_other_tables() {
        let text = "[package]\nname = \"q\"\n[dependencies]\nserde = \"1\"\n[features]\ndefault = [\n  \"std\", # comment\n]\nstd = []\n[dev-dependencies]\nx = \"1\"\n";
        let m = parse_manifest(text).unwrap();
        assert_eq!(m.defaults, vec!["std"]);
        assert_eq!(m.features.len(), 1);
    }

    #[test]
    fn workspace_members() {
        let (members, pkg) =
            parse_workspace_members("[workspace]\nmembers = [\"crates/*\", \"tool\"]").unwrap();
        assert_eq!(members.unwrap(), vec!["crates/*", "tool"]);
        assert!(!pkg);
        let (members, pkg) = parse_workspace_members("[package]\nname = \"x\"").unwrap();
        assert!(members.is_none());
        assert!(pkg);
    }
}
