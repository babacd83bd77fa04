use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cfg_rank_core::centrality::{CentralityParams, Measure};
use cfg_rank_core::featgraph::ChiMode;
use cfg_rank_core::logic::{export_dimacs, PhiMode};
use cfg_rank_core::pipeline::{report_json, report_text, run_project, AnchorMode, ProjectRun, RunOptions};
use cfg_rank_core::synth;

#[derive(Parser)]
#[command(name = "cfg-rank", version, about = "Rank cfg features and emit the most relevant valid configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum CentralityArg {
    DegreeIn,
    DegreeOut,
    Harmonic,
    Closeness,
    Betweenness,
    Eigenvector,
    Katz,
}

impl From<CentralityArg> for Measure {
    fn from(c: CentralityArg) -> Self {
        match c {
            CentralityArg::DegreeIn => Measure::DegreeIn,
            CentralityArg::DegreeOut => Measure::DegreeOut,
            CentralityArg::Harmonic => Measure::Harmonic,
            CentralityArg::Closeness => Measure::Closeness,
            CentralityArg::Betweenness => Measure::Betweenness,
            CentralityArg::Eigenvector => Measure::Eigenvector,
            CentralityArg::Katz => Measure::Katz,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a package or workspace and print its top configurations.
    Analyze {
        /// Directory containing Cargo.toml.
        root: PathBuf,
        /// Number of configurations per member.
        #[arg(short = 'n', long = "count", default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value = "eigenvector")]
        centrality: CentralityArg,
        /// Opsahl exponent for betweenness.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Katz attenuation factor; derived from the spectral radius when omitted.
        #[arg(long)]
        beta: Option<f64>,
        /// Weight of calls whose callee cannot be weighed.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        default_weight: u64,
        /// Per-member time limit in seconds.
        #[arg(long, default_value_t = 600)]
        timeout: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the CNF of each member in DIMACS format.
        #[arg(long, value_name = "PATH")]
        emit_dimacs: Option<PathBuf>,
        /// Write DOT renderings of the intermediate graphs into DIR.
        #[arg(long, value_name = "DIR")]
        emit_dot: Option<PathBuf>,
        /// Also write the JSON report to PATH.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// Require every feature's predicates to hold unconditionally.
        #[arg(long)]
        phi_literal: bool,
        /// Split `all(...)` weights with the per-operand reciprocal rule.
        #[arg(long)]
        chi_formula_mode: bool,
        /// Take a single configuration per ranked feature.
        #[arg(long)]
        one_per_anchor: bool,
        /// Include wall-clock times in the output.
        #[arg(long)]
        timing: bool,
    },
    /// Write the synthetic benchmark corpus into DIR.
    GenCorpus {
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::GenCorpus { dir } => {
            for p in synth::corpus() {
                let target = dir.join(&p.name);
                p.write_to(&target)
                    .with_context(|| format!("writing {}", target.display()))?;
                println!("{} ({} lines)", target.display(), p.lines());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            root,
            k,
            centrality,
            alpha,
            beta,
            default_weight,
            timeout,
            format,
            emit_dimacs,
            emit_dot,
            report,
            phi_literal,
            chi_formula_mode,
            one_per_anchor,
            timing,
        } => {
            let opts = RunOptions {
                k: k as usize,
                measure: centrality.into(),
                params: CentralityParams {
                    alpha,
                    beta,
                    ..CentralityParams::default()
                },
                default_weight,
                timeout: Duration::from_secs(timeout),
                phi_mode: if phi_literal { PhiMode::Literal } else { PhiMode::Implication },
                chi_mode: if chi_formula_mode { ChiMode::Formula } else { ChiMode::Occurrences },
                anchor_mode: if one_per_anchor { AnchorMode::OnePerAnchor } else { AnchorMode::Exhaust },
                timing,
                ..RunOptions::default()
            };
            let run = run_project(&root, &opts)?;
            let json = serde_json::to_string_pretty(&report_json(&run, timing))? + "\n";
            match format {
                Format::Json => print!("{json}"),
                Format::Text => print!("{}", report_text(&run, timing)),
            }
            if let Some(path) = report {
                fs::write(&path, &json).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = emit_dimacs {
                write_dimacs(&run, &path)?;
            }
            if let Some(dir) = emit_dot {
                write_dots(&run, &dir)?;
            }
            for m in &run.members {
                if let Err(e) = &m.result {
                    eprintln!("member {} failed: {e}", m.name);
                }
            }
            Ok(if run.failed_members() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

/// With several members, each file gets the member name before its extension.
fn member_path(base: &Path, member: &str, many: bool) -> PathBuf {
    if !many {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}.{member}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{member}"),
    };
    base.with_file_name(name)
}

fn write_dimacs(run: &ProjectRun, base: &Path) -> Result<()> {
    let ok: Vec<_> = run.members.iter().filter_map(|m| m.result.as_ref().ok().map(|a| (m, a))).collect();
    for (m, a) in &ok {
        let path = member_path(base, &m.name, ok.len() > 1);
        fs::write(&path, export_dimacs(&a.cnf)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn write_dots(run: &ProjectRun, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for m in &run.members {
        let Ok(a) = &m.result else { continue };
        let files = [
            ("uir", a.uir.to_dot()),
            ("multigraph", a.multigraph.to_dot()),
            ("features", a.patched.to_dot()),
            ("atoms", a.atom_tree.to_dot()),
        ];
        for (kind, text) in files {
            let path = dir.join(format!("{}.{kind}.dot", m.name));
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}
