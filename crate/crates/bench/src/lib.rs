//! Fixtures shared by the benchmarks.

use cfg_rank_core::frontend::{parse_manifest, Manifest};
use cfg_rank_core::synth::corpus_project;

/// Sources and manifest of a single synthetic package of about `lines` lines.
pub fn package(lines: usize) -> (Vec<(String, String)>, Manifest) {
    // index 0 always produces a single package rather than a workspace
    let p = corpus_project(0, 0xbe7c + lines as u64, lines);
    let manifest = parse_manifest(&p.manifest).expect("generated manifests parse");
    (p.root_sources(), manifest)
}
