//! Command line front end. Subcommands map one-to-one onto the library:
//! `construct` builds the extremal families, `check` and `count` query
//! pattern containment and enumerate nonisomorphic graphs, `blocks`,
//! `pack`, and `levels` expose the structural decompositions, `clean`
//! runs the edge-deletion pipeline, `certify` replays the inductive
//! inequality proofs or closed-form bounds, `search` computes extremal
//! values, and `report` renders the results database.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! errors, 2 for usage errors (clap's own, or anything rejected as an
//! invalid argument).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cleaning::{certify_books, certify_half, certify_unit, clean_for_p4hat, replay};
use crate::constructions::{build_fnk, build_hn};
use crate::error::{Error, Result};
use crate::graph::BigGraph;
use crate::graph6::{from_graph6, read_graph6_file, to_graph6};
use crate::manifest::RunManifest;
use crate::pattern::{self, Pattern};
use crate::records::{load_records, monotonicity_warnings, report_csv, report_json, store_record};
use crate::records::{METHOD_EXHAUSTIVE, METHOD_LOCAL_SEARCH};
use crate::search::{
    enumerate, exact_extremal, local_search_lower_bound, verify_bounds, ExtremalOptions,
    ExtremalRecord,
};
use crate::structure::{
    check_level_inequalities, is_book, max_edge_disjoint_triangles, triangle_blocks,
    DEFAULT_EXACT_PACKING_LIMIT,
};

/// Triangle-count workbench for graphs avoiding fixed forbidden subgraphs.
#[derive(Debug, Parser)]
#[command(name = "turan3", version, about)]
pub struct Cli {
    /// Largest vertex count accepted for inputs and instance sizes.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_vertices: usize,

    /// Worker threads for parallel search (0 picks automatically).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Emit machine readable JSON on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// Which extremal construction to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete bipartite graph plus a perfect matching inside each side.
    Matched,
    /// Complete bipartite graph plus disjoint clique blocks in one side.
    Blocks,
}

/// Which certificate to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertKind {
    /// Decompose a sparse-neighborhood graph into books.
    Books,
    /// Edge-deletion proof of 2t <= e.
    Half,
    /// Edge-deletion proof of t <= e.
    Unit,
    /// Closed-form upper and lower bounds for an (n, forbidden) instance.
    Bounds,
}

/// How `search` computes its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Exhaustive isomorph-free search; exact but limited to small n.
    Exhaustive,
    /// Randomized local search; a lower bound with a witness.
    Local,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an extremal construction and print it in graph6 form.
    Construct {
        /// Construction family.
        #[arg(value_enum)]
        family: Family,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Forbidden suspended path edge count (blocks family only).
        #[arg(long)]
        k: Option<usize>,
        /// Write the graph6 line here, with a manifest sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a graph for forbidden patterns; exits 1 if any is present.
    Check {
        /// A graph6 string, or a path to a graph6 file (first graph).
        graph: String,
        /// Comma separated patterns, e.g. "complete:4,suspension:path:3".
        #[arg(long)]
        forbid: String,
    },
    /// Count nonisomorphic graphs on n vertices avoiding the patterns.
    Count {
        /// Number of vertices (at most 11).
        #[arg(long)]
        n: usize,
        /// Comma separated patterns to avoid; omit to count all graphs.
        #[arg(long)]
        forbid: Option<String>,
    },
    /// Group a graph's triangles into edge-sharing blocks and spot books.
    Blocks {
        /// A graph6 string, or a path to a graph6 file (first graph).
        graph: String,
    },
    /// Find a maximum set of pairwise edge-disjoint triangles.
    Pack {
        /// A graph6 string, or a path to a graph6 file (first graph).
        graph: String,
        /// Triangle count cap for the exact search; above it, greedy only.
        #[arg(long, default_value_t = DEFAULT_EXACT_PACKING_LIMIT)]
        exact_limit: usize,
    },
    /// Check BFS level density inequalities; exits 1 on any failure.
    Levels {
        /// A graph6 string, or a path to a graph6 file (first graph).
        graph: String,
        /// Root vertex; omit to check every vertex as a root.
        #[arg(long)]
        root: Option<usize>,
        /// Density parameter: each level obeys bounds with factor k - 1.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Delete light edge pairs until the suspended-path-free graph is tame.
    Clean {
        /// A graph6 string, or a path to a graph6 file (first graph).
        graph: String,
        /// Write the cleaned graph6 line here, with a manifest sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Produce and replay a step-by-step certificate; exits 1 if it fails.
    Certify {
        /// Certificate kind.
        #[arg(long, value_enum)]
        kind: CertKind,
        /// Graph input for books, half, and unit certificates.
        graph: Option<String>,
        /// Instance size for bound certificates.
        #[arg(long)]
        n: Option<usize>,
        /// Forbidden patterns for bound certificates.
        #[arg(long)]
        forbid: Option<String>,
        /// Write the certificate JSON here, with a manifest sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the maximum triangle count over forbidden-free graphs.
    Search {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Comma separated patterns to avoid.
        #[arg(long)]
        forbid: String,
        /// Exhaustive (exact) or local (lower bound).
        #[arg(long, value_enum, default_value_t = Method::Exhaustive)]
        method: Method,
        /// Random seed for local search and pruning seeds.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Local search round budget.
        #[arg(long, default_value_t = 2000)]
        budget: u64,
        /// Disable the potential-bound pruning (for cross-checking).
        #[arg(long)]
        no_prune: bool,
        /// Results database path (defaults to $TURAN3_DB when set).
        #[arg(long)]
        db: Option<PathBuf>,
        /// Write the record JSON here, with a manifest sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the results database as CSV (or JSON with --json).
    Report {
        /// Results database path (defaults to $TURAN3_DB when set).
        #[arg(long)]
        db: Option<PathBuf>,
        /// Write the table here, with a manifest sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Load a graph argument: if it names an existing file, read the first
/// graph6 line from it, otherwise parse it as a graph6 literal. Returns
/// the source path when the input was a file, for manifests.
fn load_graph(input: &str, max_vertices: usize) -> Result<(BigGraph, Option<PathBuf>)> {
    let path = Path::new(input);
    let (g, src): (BigGraph, Option<PathBuf>) = if path.is_file() {
        let graphs = read_graph6_file(path)?;
        let first = graphs.into_iter().next().ok_or_else(|| {
            Error::InvalidArgument(format!("no graphs in '{input}'"))
        })?;
        (first, Some(path.to_path_buf()))
    } else {
        (from_graph6(input)?, None)
    };
    if g.n() > max_vertices {
        return Err(Error::InvalidArgument(format!(
            "graph has {} vertices, over the --max-vertices limit of {max_vertices}",
            g.n()
        )));
    }
    Ok((g, src))
}

fn parse_forbid(input: &str) -> Result<Vec<Pattern>> {
    Pattern::parse_list(input)
}

fn resolve_db(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone()
        .or_else(|| std::env::var_os("TURAN3_DB").map(PathBuf::from))
}

fn check_instance_size(n: usize, max_vertices: usize) -> Result<()> {
    if n > max_vertices {
        return Err(Error::InvalidArgument(format!(
            "n = {n} is over the --max-vertices limit of {max_vertices}"
        )));
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Write `payload` to `out` and a manifest sidecar next to it. `inputs`
/// are the files the command read, if any.
fn write_output(
    out: &Path,
    payload: &str,
    config: serde_json::Value,
    inputs: &[&Path],
) -> Result<()> {
    std::fs::write(out, payload)?;
    RunManifest::capture(config, inputs)?.write_sidecar(out)?;
    Ok(())
}

fn names(pats: &[Pattern]) -> Vec<String> {
    pats.iter().map(|p| p.name()).collect()
}

/// Execute one parsed command line. Returns the process exit code; errors
/// are mapped by the caller (invalid arguments to 2, the rest to 1).
pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Construct { family, n, k, out } => {
            check_instance_size(*n, cli.max_vertices)?;
            let g = match family {
                Family::Matched => {
                    if k.is_some() {
                        return Err(Error::InvalidArgument(
                            "--k only applies to the blocks family".into(),
                        ));
                    }
                    build_hn(*n)?
                }
                Family::Blocks => {
                    let k = k.ok_or_else(|| {
                        Error::InvalidArgument("the blocks family needs --k".into())
                    })?;
                    build_fnk(*n, k)?
                }
            };
            let g6 = to_graph6(&g);
            let config = serde_json::json!({
                "family": format!("{family:?}").to_lowercase(),
                "n": n,
                "k": k,
            });
            if cli.json {
                print_json(&serde_json::json!({
                    "family": config["family"],
                    "n": g.n(),
                    "k": k,
                    "graph6": g6,
                    "edges": g.edge_count(),
                    "triangles": g.triangle_count(),
                }))?;
            } else {
                println!("{g6}");
                eprintln!(
                    "n = {}, edges = {}, triangles = {}",
                    g.n(),
                    g.edge_count(),
                    g.triangle_count()
                );
            }
            if let Some(out) = out {
                write_output(out, &format!("{g6}\n"), config, &[])?;
            }
            Ok(0)
        }

        Command::Check { graph, forbid } => {
            let (g, _) = load_graph(graph, cli.max_vertices)?;
            let pats = parse_forbid(forbid)?;
            let mut found = Vec::new();
            for pat in &pats {
                if let Some(witness) = pattern::find(&g, pat) {
                    found.push((pat.name(), witness));
                }
            }
            if cli.json {
                print_json(&serde_json::json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "triangles": g.triangle_count(),
                    "forbidden": names(&pats),
                    "free": found.is_empty(),
                    "found": found
                        .iter()
                        .map(|(name, w)| serde_json::json!({"pattern": name, "witness": w}))
                        .collect::<Vec<_>>(),
                }))?;
            } else {
                for pat in &pats {
                    match found.iter().find(|(name, _)| *name == pat.name()) {
                        Some((_, w)) => println!("{}: found at {w:?}", pat.name()),
                        None => println!("{}: absent", pat.name()),
                    }
                }
                println!("free: {}", found.is_empty());
            }
            Ok(if found.is_empty() { 0 } else { 1 })
        }

        Command::Count { n, forbid } => {
            check_instance_size(*n, cli.max_vertices)?;
            let pats = match forbid {
                Some(list) => parse_forbid(list)?,
                None => Vec::new(),
            };
            let count = enumerate(*n, &pats)?.len();
            if cli.json {
                print_json(&serde_json::json!({
                    "n": n,
                    "forbidden": names(&pats),
                    "count": count,
                }))?;
            } else if pats.is_empty() {
                println!("{count} nonisomorphic graphs on {n} vertices");
            } else {
                println!(
                    "{count} nonisomorphic graphs on {n} vertices avoiding {{{}}}",
                    names(&pats).join(", ")
                );
            }
            Ok(0)
        }

        Command::Blocks { graph } => {
            let (g, _) = load_graph(graph, cli.max_vertices)?;
            let dec = triangle_blocks(&g);
            let described: Vec<(Vec<(usize, usize)>, Option<crate::structure::Book>)> = dec
                .blocks
                .iter()
                .map(|block| (block.clone(), is_book(&g, block)))
                .collect();
            if cli.json {
                print_json(&serde_json::json!({
                    "n": g.n(),
                    "blocks": described
                        .iter()
                        .map(|(edges, book)| serde_json::json!({
                            "edges": edges,
                            "book": book.as_ref().map(|b| serde_json::json!({
                                "spine": b.spine,
                                "pages": b.pages,
                            })),
                        }))
                        .collect::<Vec<_>>(),
                    "uncovered": dec.uncovered,
                }))?;
            } else {
                for (i, (edges, book)) in described.iter().enumerate() {
                    match book {
                        Some(b) => println!(
                            "block {i}: {} edges, book with spine {:?} and {} pages",
                            edges.len(),
                            b.spine,
                            b.pages.len()
                        ),
                        None => println!("block {i}: {} edges, not a book", edges.len()),
                    }
                }
                println!("uncovered edges: {}", dec.uncovered.len());
            }
            Ok(0)
        }

        Command::Pack { graph, exact_limit } => {
            let (g, _) = load_graph(graph, cli.max_vertices)?;
            let packing = max_edge_disjoint_triangles(&g, *exact_limit);
            if cli.json {
                print_json(&serde_json::json!({
                    "n": g.n(),
                    "size": packing.size,
                    "optimal": packing.optimal,
                    "triangles": packing
                        .triangles
                        .iter()
                        .map(|t| t.vertices())
                        .collect::<Vec<_>>(),
                }))?;
            } else {
                println!(
                    "packing size {}{}",
                    packing.size,
                    if packing.optimal { " (optimal)" } else { " (greedy lower bound)" }
                );
                for t in &packing.triangles {
                    println!("  {:?}", t.vertices());
                }
            }
            Ok(0)
        }

        Command::Levels { graph, root, k } => {
            let (g, _) = load_graph(graph, cli.max_vertices)?;
            if g.n() == 0 {
                return Err(Error::InvalidArgument("the empty graph has no roots".into()));
            }
            let roots: Vec<usize> = match root {
                Some(r) => {
                    if *r >= g.n() {
                        return Err(Error::InvalidArgument(format!(
                            "root {r} is out of range for {} vertices",
                            g.n()
                        )));
                    }
                    vec![*r]
                }
                None => (0..g.n()).collect(),
            };
            let reports: Vec<_> = roots
                .iter()
                .map(|&r| check_level_inequalities(&g, r, *k))
                .collect();
            let all_hold = reports.iter().all(|r| r.all_hold);
            if cli.json {
                print_json(&serde_json::to_value(&reports)?)?;
            } else {
                for report in &reports {
                    if report.all_hold {
                        println!("root {}: all level inequalities hold", report.root);
                    } else {
                        println!("root {}: VIOLATED", report.root);
                        for row in &report.rows {
                            if !row.holds {
                                println!(
                                    "  level {}: within {} > {} or between {} > {}",
                                    row.level,
                                    row.within_edges,
                                    row.within_bound,
                                    row.between_edges,
                                    row.between_bound
                                );
                            }
                        }
                    }
                }
            }
            Ok(if all_hold { 0 } else { 1 })
        }

        Command::Clean { graph, out } => {
            let (g, src) = load_graph(graph, cli.max_vertices)?;
            let (cleaned, report) = clean_for_p4hat(&g)?;
            let g6 = to_graph6(&cleaned);
            if cli.json {
                print_json(&serde_json::json!({
                    "graph6": g6,
                    "report": serde_json::to_value(&report)?,
                }))?;
            } else {
                println!("{g6}");
                eprintln!(
                    "{} deletion steps: edges {} -> {}, triangles {} -> {}",
                    report.totals.steps,
                    report.totals.initial_edges,
                    report.totals.final_edges,
                    report.totals.initial_triangles,
                    report.totals.final_triangles
                );
            }
            if let Some(out) = out {
                let inputs: Vec<&Path> = src.iter().map(PathBuf::as_path).collect();
                write_output(
                    out,
                    &format!("{g6}\n"),
                    serde_json::json!({"command": "clean", "graph": graph}),
                    &inputs,
                )?;
            }
            Ok(0)
        }

        Command::Certify { kind, graph, n, forbid, out } => match kind {
            CertKind::Bounds => {
                if graph.is_some() {
                    return Err(Error::InvalidArgument(
                        "bound certificates take --n and --forbid, not a graph".into(),
                    ));
                }
                let n = n.ok_or_else(|| {
                    Error::InvalidArgument("certify --kind bounds needs --n".into())
                })?;
                check_instance_size(n, cli.max_vertices)?;
                let forbid = forbid.as_ref().ok_or_else(|| {
                    Error::InvalidArgument("certify --kind bounds needs --forbid".into())
                })?;
                let pats = parse_forbid(forbid)?;
                let report = verify_bounds(n, &pats)?;
                let value = serde_json::to_value(&report)?;
                if cli.json {
                    print_json(&value)?;
                } else {
                    for line in &report.inequalities {
                        println!("{line}");
                    }
                    println!(
                        "upper: {}, lower: {}",
                        report.upper.map_or("none".into(), |v| v.to_string()),
                        report.lower.map_or("none".into(), |v| v.to_string())
                    );
                }
                if let Some(out) = out {
                    write_output(
                        out,
                        &format!("{}\n", serde_json::to_string_pretty(&value)?),
                        serde_json::json!({"kind": "bounds", "n": n, "forbid": forbid}),
                        &[],
                    )?;
                }
                Ok(0)
            }
            CertKind::Books | CertKind::Half | CertKind::Unit => {
                if n.is_some() || forbid.is_some() {
                    return Err(Error::InvalidArgument(
                        "graph certificates take a graph argument, not --n or --forbid".into(),
                    ));
                }
                let graph = graph.as_ref().ok_or_else(|| {
                    Error::InvalidArgument(
                        "certify --kind books|half|unit needs a graph argument".into(),
                    )
                })?;
                let (g, src) = load_graph(graph, cli.max_vertices)?;
                let cert = match kind {
                    CertKind::Books => certify_books(&g)?,
                    CertKind::Half => certify_half(&g)?,
                    CertKind::Unit => certify_unit(&g)?,
                    CertKind::Bounds => unreachable!(),
                };
                if cert.verified {
                    replay(&g, &cert)?;
                }
                let value = serde_json::to_value(&cert)?;
                if cli.json {
                    print_json(&value)?;
                } else {
                    println!(
                        "{}: {} steps, {}",
                        cert.kind,
                        cert.steps.len(),
                        cert.conclusion
                    );
                    if let Some(reason) = &cert.counterexample {
                        println!("counterexample: {reason}");
                    }
                    println!("verified: {}", cert.verified);
                }
                if let Some(out) = out {
                    let inputs: Vec<&Path> = src.iter().map(PathBuf::as_path).collect();
                    write_output(
                        out,
                        &format!("{}\n", serde_json::to_string_pretty(&value)?),
                        serde_json::json!({"kind": cert.kind, "graph": graph}),
                        &inputs,
                    )?;
                }
                Ok(if cert.verified { 0 } else { 1 })
            }
        },

        Command::Search { n, forbid, method, seed, budget, no_prune, db, out } => {
            check_instance_size(*n, cli.max_vertices)?;
            let pats = parse_forbid(forbid)?;
            let record = match method {
                Method::Exhaustive => {
                    let opts = ExtremalOptions {
                        prune: !no_prune,
                        seed: *seed,
                        local_budget: 200,
                    };
                    exact_extremal(*n, &pats, &opts)?
                }
                Method::Local => {
                    let ls = local_search_lower_bound(*n, &pats, *budget, *seed)?;
                    ExtremalRecord {
                        n: ls.n,
                        forbidden: ls.forbidden,
                        max_triangles: ls.best_triangles,
                        witness: to_graph6(&ls.witness),
                        graphs_scanned: ls.rounds,
                        method: METHOD_LOCAL_SEARCH.into(),
                    }
                }
            };
            debug_assert!(match method {
                Method::Exhaustive => record.method == METHOD_EXHAUSTIVE,
                Method::Local => record.method == METHOD_LOCAL_SEARCH,
            });
            let db_outcome = match resolve_db(db) {
                Some(path) => Some(store_record(&path, &record)?.as_str()),
                None => None,
            };
            let value = serde_json::to_value(&record)?;
            if cli.json {
                print_json(&serde_json::json!({
                    "record": value,
                    "db": db_outcome,
                }))?;
            } else {
                let bound = match method {
                    Method::Exhaustive => "max triangles",
                    Method::Local => "at least",
                };
                println!(
                    "n = {}, avoiding {{{}}}: {bound} {} ({}, {} graphs scanned)",
                    record.n,
                    record.forbidden.join(", "),
                    record.max_triangles,
                    record.method,
                    record.graphs_scanned
                );
                println!("witness: {}", record.witness);
                if let Some(outcome) = db_outcome {
                    eprintln!("db: {outcome}");
                }
            }
            if let Some(out) = out {
                write_output(
                    out,
                    &format!("{}\n", serde_json::to_string_pretty(&value)?),
                    serde_json::json!({
                        "n": n,
                        "forbid": forbid,
                        "method": format!("{method:?}").to_lowercase(),
                        "seed": seed,
                        "budget": budget,
                        "no_prune": no_prune,
                    }),
                    &[],
                )?;
            }
            Ok(0)
        }

        Command::Report { db, out } => {
            let path = resolve_db(db).ok_or_else(|| {
                Error::InvalidArgument("no database: pass --db or set TURAN3_DB".into())
            })?;
            let loaded = load_records(&path)?;
            if loaded.skipped > 0 {
                eprintln!(
                    "warning: skipped {} unparseable database line{}",
                    loaded.skipped,
                    if loaded.skipped == 1 { "" } else { "s" }
                );
            }
            for warning in monotonicity_warnings(&loaded.records) {
                eprintln!("warning: {warning}");
            }
            let body = if cli.json {
                format!("{}\n", report_json(&loaded.records)?)
            } else {
                report_csv(&loaded.records)
            };
            print!("{body}");
            if let Some(out) = out {
                let inputs: Vec<&Path> =
                    if path.is_file() { vec![path.as_path()] } else { Vec::new() };
                write_output(
                    out,
                    &body,
                    serde_json::json!({"db": path.display().to_string()}),
                    &inputs,
                )?;
            }
            Ok(0)
        }
    }
}
