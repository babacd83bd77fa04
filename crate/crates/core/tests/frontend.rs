use cfg_rank_core::frontend::{export_json_tree, ingest_json_tree, parse_source};
use cfg_rank_core::synth::{corpus_project, fuzz_project};
use cfg_rank_core::uir::build;

#[test]
fn json_round_trip_preserves_the_uir() {
    for seed in 0..40 {
        let p = fuzz_project(seed);
        let ast = parse_source(&p.root_sources()).unwrap();
        let restored = ingest_json_tree(&export_json_tree(&ast)).unwrap();
        assert_eq!(restored, ast, "{}", p.name);
        assert_eq!(build(&restored, 1), build(&ast, 1), "{}", p.name);
    }
}

#[test]
fn multi_file_package_round_trips() {
    let p = corpus_project(0, 7, 1500);
    let ast = parse_source(&p.root_sources()).unwrap();
    let json = export_json_tree(&ast);
    assert_eq!(ingest_json_tree(&json).unwrap(), ast);
    assert_eq!(export_json_tree(&ingest_json_tree(&json).unwrap()), json);
}

#[test]
fn schema_errors_point_at_the_offending_field() {
    let err = ingest_json_tree(r#"{"kind":"root","children":[{"kind":"nonsense"}]}"#).unwrap_err();
    assert!(err.pointer.starts_with("/children/0"), "{}", err.pointer);
}
