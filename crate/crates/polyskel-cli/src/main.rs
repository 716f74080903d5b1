//! Command-line front end: parse poset/graph files, run the construction
//! and verification pipelines, sweep instance families, and generate random
//! instances.
//!
//! Exit codes: 0 all checks passed; 1 a mathematical verdict failed;
//! 2 input error; 3 hypothesis violation (imperfect graph without
//! `--unchecked`).

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use polyskel::error::Error;
use polyskel::graph::SimpleGraph;
use polyskel::io::{format_graph, format_poset, parse_graph, parse_poset};
use polyskel::parallel::parallel_map;
use polyskel::poset::Poset;
use polyskel::random::{random_comparability_graph, random_poset, SplitMix64};
use polyskel::report::InstanceReport;
use polyskel::verify::{verify_instance, VerificationOutcome, VerifyConfig};
use polyskel::{enumerate, order, stable};

const EXIT_VERDICT_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;

#[derive(Parser)]
#[command(
    name = "polyskel",
    about = "Order and stable set polytopes: skeletons, clique complexes, and exact face verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct VerifyFlags {
    /// Cross-check every verdict against the exact LP face oracle.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    verify_oracle: bool,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the order polytope of a poset file.
    Order {
        file: std::path::PathBuf,
        #[command(flatten)]
        flags: VerifyFlags,
    },
    /// Verify the stable set polytope of a graph file.
    Stab {
        file: std::path::PathBuf,
        #[command(flatten)]
        flags: VerifyFlags,
        /// Run even if the graph is not perfect (experiment mode).
        #[arg(long)]
        unchecked: bool,
    },
    /// Verify the chain polytope of a poset file (stable set polytope of
    /// its comparability graph), cross-checked against the antichains.
    ChainPolytope {
        file: std::path::PathBuf,
        #[command(flatten)]
        flags: VerifyFlags,
    },
    /// Verify whole instance families, exhaustively or by seeded sampling.
    Sweep {
        /// Sweep posets (order polytopes).
        #[arg(long, conflicts_with = "graphs")]
        posets: bool,
        /// Sweep perfect graphs (stable set polytopes).
        #[arg(long)]
        graphs: bool,
        /// Largest poset size.
        #[arg(long, value_name = "D")]
        max_d: Option<usize>,
        /// Largest graph size.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Verify this many random instances at the top size instead of
        /// enumerating exhaustively.
        #[arg(long, value_name = "COUNT")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        flags: VerifyFlags,
    },
    /// Emit a random poset or a random perfect graph in the text format.
    Random {
        /// Generate a poset.
        #[arg(long, conflicts_with = "graphs")]
        posets: bool,
        /// Generate a perfect graph (comparability graph of a random poset).
        #[arg(long)]
        graphs: bool,
        #[arg(long, value_name = "D")]
        max_d: Option<usize>,
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::NotPerfect => EXIT_HYPOTHESIS,
                _ => EXIT_INPUT_ERROR,
            })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Order { file, flags } => {
            let poset = parse_poset(&read(&file)?)?;
            let outcome = verify_order_instance(&poset, flags.verify_oracle)?;
            let report = InstanceReport::for_poset(&poset, &outcome);
            print_instance(&report, &flags, &outcome);
            Ok(verdict_exit(&outcome))
        }
        Command::Stab {
            file,
            flags,
            unchecked,
        } => {
            let graph = parse_graph(&read(&file)?)?;
            let perfect = graph.is_perfect();
            if !perfect && !unchecked {
                return Err(Error::NotPerfect);
            }
            let outcome = verify_stab_instance(&graph, flags.verify_oracle)?;
            let report = InstanceReport::for_graph(&graph, perfect, &outcome);
            print_instance(&report, &flags, &outcome);
            if !perfect {
                // Experiment outside the theorems' hypothesis: the verdict
                // is reported, not asserted.
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(verdict_exit(&outcome))
            }
        }
        Command::ChainPolytope { file, flags } => {
            let poset = parse_poset(&read(&file)?)?;
            let graph = poset.comparability_graph();
            if !graph.is_perfect() {
                return Err(Error::NotPerfect);
            }
            // Definitional cross-check: chain polytope vertices are the
            // antichain indicators.
            let chain_vertices = stable::chain_polytope_vertices(&poset);
            let antichain_vertices: Vec<_> = poset
                .antichains()
                .into_iter()
                .map(|s| polyskel::geometry::LatticePoint::indicator(poset.size(), s))
                .collect();
            if chain_vertices != antichain_vertices {
                println!("chain polytope vertices do not match antichain indicators");
                return Ok(ExitCode::from(EXIT_VERDICT_FAILURE));
            }
            let outcome = verify_stab_instance(&graph, flags.verify_oracle)?;
            let report = InstanceReport::for_graph(&graph, true, &outcome);
            if !flags.json {
                println!(
                    "chain polytope of poset (d={}) = stable set polytope of its comparability graph",
                    poset.size()
                );
                println!(
                    "antichain cross-check: {} vertices match",
                    chain_vertices.len()
                );
            }
            print_instance(&report, &flags, &outcome);
            Ok(verdict_exit(&outcome))
        }
        Command::Sweep {
            posets,
            graphs,
            max_d,
            max_n,
            sample,
            seed,
            flags,
        } => run_sweep(posets, graphs, max_d, max_n, sample, seed, flags),
        Command::Random {
            posets,
            graphs,
            max_d,
            max_n,
            seed,
            output,
        } => {
            let text = match (posets, graphs) {
                (true, false) => {
                    let d = max_d.ok_or_else(|| usage("random --posets needs --max-d"))?;
                    guard_positive(d)?;
                    format_poset(&random_poset(&mut SplitMix64::new(seed), d))
                }
                (false, true) => {
                    let n = max_n.ok_or_else(|| usage("random --graphs needs --max-n"))?;
                    guard_positive(n)?;
                    format_graph(&random_comparability_graph(&mut SplitMix64::new(seed), n))
                }
                _ => return Err(usage("random needs exactly one of --posets / --graphs")),
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read(path: &std::path::Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn usage(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        message: message.into(),
    }
}

fn guard_positive(size: usize) -> Result<(), Error> {
    if size == 0 {
        Err(usage("size must be positive"))
    } else {
        Ok(())
    }
}

fn verify_order_instance(poset: &Poset, with_oracle: bool) -> Result<VerificationOutcome, Error> {
    let vertices = order::order_polytope_vertices(poset);
    let skeleton = order::order_skeleton(poset);
    verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let chain: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            order::order_clique_face_system(poset, &chain)
        },
        VerifyConfig { with_oracle },
    )
}

fn verify_stab_instance(
    graph: &SimpleGraph,
    with_oracle: bool,
) -> Result<VerificationOutcome, Error> {
    let vertices = stable::stab_vertices(graph);
    let skeleton = stable::stab_skeleton_unchecked(graph)?;
    verify_instance(
        &vertices,
        &skeleton,
        |indices| {
            let sets: Vec<_> = indices.iter().map(|&i| *skeleton.payload(i)).collect();
            stable::stab_clique_face_system_unchecked(graph, &sets)
        },
        VerifyConfig { with_oracle },
    )
}

fn verdict_exit(outcome: &VerificationOutcome) -> ExitCode {
    if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERDICT_FAILURE)
    }
}

fn print_instance(report: &InstanceReport, flags: &VerifyFlags, outcome: &VerificationOutcome) {
    if flags.json {
        println!("{}", report.to_json());
        return;
    }
    if let Some(p) = &report.poset {
        println!(
            "order polytope: poset d={} with {} covers",
            p.d,
            p.covers.len()
        );
    }
    if let Some(g) = &report.graph {
        println!(
            "stable set polytope: graph n={} with {} edges",
            g.n,
            g.edges.len()
        );
    }
    if let Some(perfect) = report.perfect {
        println!("  perfect: {perfect}");
    }
    println!("  vertices: {}", report.num_vertices);
    println!("  skeleton edges: {}", report.edges.len());
    println!("  cliques checked: {}", report.cliques_checked);
    println!(
        "  oracle: {}",
        if outcome.oracle_ran { "on" } else { "off" }
    );
    match &report.counterexample {
        None => println!("  verdict: PASS"),
        Some(cx) => {
            println!("  verdict: FAIL ({})", cx.kind);
            println!("{}", report.to_json());
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_sweep(
    posets: bool,
    graphs: bool,
    max_d: Option<usize>,
    max_n: Option<usize>,
    sample: Option<usize>,
    seed: u64,
    flags: VerifyFlags,
) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let mut failures: Vec<InstanceReport> = Vec::new();
    let mut total = 0usize;

    if posets {
        let max_d = max_d.ok_or_else(|| usage("sweep --posets needs --max-d"))?;
        guard_positive(max_d)?;
        match sample {
            None => {
                if max_d > 5 {
                    return Err(usage(
                        "exhaustive poset sweeps are capped at --max-d 5; use --sample",
                    ));
                }
                println!("sweep posets exhaustive max-d={max_d}");
                for d in 1..=max_d {
                    let instances = enumerate::all_posets(d);
                    let count = instances.len();
                    let outcomes = parallel_map(instances, |p| {
                        let outcome = verify_order_instance(p, flags.verify_oracle)
                            .expect("enumerated posets verify cleanly");
                        (InstanceReport::for_poset(p, &outcome), outcome.passed())
                    });
                    let failed: Vec<_> = outcomes
                        .into_iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(r, _)| r)
                        .collect();
                    println!("  d={d}: {count} posets, {} failures", failed.len());
                    total += count;
                    failures.extend(failed);
                }
            }
            Some(sample) => {
                println!("sweep posets sample={sample} d={max_d} seed={seed}");
                let mut rng = SplitMix64::new(seed);
                let instances: Vec<Poset> =
                    (0..sample).map(|_| random_poset(&mut rng, max_d)).collect();
                let outcomes = parallel_map(instances, |p| {
                    let outcome = verify_order_instance(p, flags.verify_oracle)
                        .expect("random posets verify cleanly");
                    (InstanceReport::for_poset(p, &outcome), outcome.passed())
                });
                let failed: Vec<_> = outcomes
                    .into_iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(r, _)| r)
                    .collect();
                println!("  d={max_d}: {sample} posets, {} failures", failed.len());
                total += sample;
                failures.extend(failed);
            }
        }
    } else if graphs {
        let max_n = max_n.ok_or_else(|| usage("sweep --graphs needs --max-n"))?;
        guard_positive(max_n)?;
        match sample {
            None => {
                if max_n > 5 {
                    return Err(usage(
                        "exhaustive graph sweeps are capped at --max-n 5; use --sample",
                    ));
                }
                println!("sweep graphs exhaustive max-n={max_n} (perfect only)");
                for n in 1..=max_n {
                    let instances: Vec<SimpleGraph> = enumerate::all_graphs(n)
                        .into_iter()
                        .filter(|g| g.is_perfect())
                        .collect();
                    let count = instances.len();
                    let outcomes = parallel_map(instances, |g| {
                        let outcome = verify_stab_instance(g, flags.verify_oracle)
                            .expect("perfect graphs verify cleanly");
                        (
                            InstanceReport::for_graph(g, true, &outcome),
                            outcome.passed(),
                        )
                    });
                    let failed: Vec<_> = outcomes
                        .into_iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(r, _)| r)
                        .collect();
                    println!("  n={n}: {count} perfect graphs, {} failures", failed.len());
                    total += count;
                    failures.extend(failed);
                }
            }
            Some(sample) => {
                println!("sweep graphs sample={sample} n={max_n} seed={seed} (comparability)");
                let mut rng = SplitMix64::new(seed);
                let instances: Vec<SimpleGraph> = (0..sample)
                    .map(|_| random_comparability_graph(&mut rng, max_n))
                    .collect();
                let outcomes = parallel_map(instances, |g| {
                    let outcome = verify_stab_instance(g, flags.verify_oracle)
                        .expect("comparability graphs verify cleanly");
                    (
                        InstanceReport::for_graph(g, true, &outcome),
                        outcome.passed(),
                    )
                });
                let failed: Vec<_> = outcomes
                    .into_iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(r, _)| r)
                    .collect();
                println!("  n={max_n}: {sample} graphs, {} failures", failed.len());
                total += sample;
                failures.extend(failed);
            }
        }
    } else {
        return Err(usage("sweep needs one of --posets / --graphs"));
    }

    println!("total: {total} instances, {} failures", failures.len());
    for report in &failures {
        println!("{}", report.to_json());
    }
    // Wall time goes to stderr so stdout stays byte-identical across runs.
    let _ = writeln!(std::io::stderr(), "elapsed: {:?}", started.elapsed());

    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERDICT_FAILURE))
    }
}
