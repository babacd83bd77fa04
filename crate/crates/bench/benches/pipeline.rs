use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use cfg_rank_bench::package;
use cfg_rank_core::centrality::{compute, CentralityParams, DenseGraph, Measure};
use cfg_rank_core::featgraph::{add_patch_node, extract_feature_graph, squash};
use cfg_rank_core::frontend::parse_source;
use cfg_rank_core::logic::{build_formula, feature_variables, to_cnf_over, DEFAULT_CLAUSE_LIMIT};
use cfg_rank_core::pipeline::{analyze_sources, RunOptions};
use cfg_rank_core::uir;

fn end_to_end(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    for lines in [1_000, 4_000, 10_000] {
        let (files, manifest) = package(lines);
        let opts = RunOptions::default();
        group.throughput(Throughput::Elements(lines as u64));
        group.bench_with_input(BenchmarkId::from_parameter(lines), &lines, |b, _| {
            b.iter(|| analyze_sources(&files, &manifest, &opts).expect("analysis succeeds"))
        });
    }
    group.finish();
}

fn stages(c: &mut Criterion) {
    let (files, manifest) = package(4_000);
    let ast = parse_source(&files).unwrap();
    let weighted = uir::build(&ast, 1);
    let graph = squash(&extract_feature_graph(&weighted));
    let dense = DenseGraph::from_feature_graph(&add_patch_node(&graph));
    let formula = build_formula(&graph, &manifest);
    let vars = feature_variables(&graph, &manifest);

    c.bench_function("parse", |b| b.iter(|| parse_source(&files).unwrap()));
    c.bench_function("uir", |b| b.iter(|| uir::build(&ast, 1)));
    c.bench_function("feature_graph", |b| b.iter(|| squash(&extract_feature_graph(&weighted))));
    c.bench_function("cnf", |b| b.iter(|| to_cnf_over(&formula, &vars, DEFAULT_CLAUSE_LIMIT).unwrap()));
    let params = CentralityParams::default();
    let mut group = c.benchmark_group("centrality");
    for m in Measure::ALL {
        group.bench_function(m.as_str(), |b| b.iter(|| compute(&dense, m, &params).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, end_to_end, stages);
criterion_main!(benches);
