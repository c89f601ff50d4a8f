use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cospectral::graph::BipartiteGraph;
use cospectral::iso::{
    decide_pair_isomorphism_with, graph_isomorphic, pet_witness, respects_partite, IsoVerdict,
    Strategy,
};
use cospectral::report::{reproduce_example, verify_pair, GraphSummary, PairReport, VerifyOptions};
use cospectral::search::{parse_density, parse_dims, run_search, SearchConfig, SearchOutcome};
use cospectral::spectra::{certify, SpectralCertificate};
use cospectral::text::{format_matrix, parse_matrix};
use cospectral::{construct_pair, ZMatrix};

#[derive(Parser)]
#[command(name = "cospectral", version, about = "Cospectral bipartite pairs from V⊗B and V⊗Bᵀ")]
struct Cli {
    /// Output format (dot applies to `construct` only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graphs with biadjacency V⊗B and V⊗Bᵀ.
    Construct { v: PathBuf, b: PathBuf },
    /// Exact characteristic polynomials of one graph, or of the pair built
    /// from two matrices.
    Spectrum {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        /// Also print numeric eigenvalues.
        #[arg(long)]
        roots: bool,
    },
    /// Full report: cospectrality both ways and the isomorphism verdict.
    Verify {
        v: PathBuf,
        b: PathBuf,
        /// Bypass theorem shortcuts and filters.
        #[arg(long)]
        exhaustive: bool,
        /// Include per-stage wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Is the matrix permutationally equivalent to its transpose? Exit 0 if so.
    Pet { matrix: PathBuf },
    /// Are the two constructed graphs isomorphic? Exit 0 if so.
    Iso {
        v: PathBuf,
        b: PathBuf,
        /// Bypass theorem shortcuts and filters.
        #[arg(long)]
        exhaustive: bool,
        /// Treat the files as biadjacency matrices of two graphs and compare
        /// those directly.
        #[arg(long)]
        graphs: bool,
    },
    /// Random search for cospectral non-isomorphic pairs.
    Search {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// Ranges for m,n,p,q, e.g. `4,2,3,3` or `1-4,1-4,2,3`; a single
        /// range applies to all four.
        #[arg(long, default_value = "1-4")]
        dims: String,
        /// Fill density, `0.5` or a range `0.3-0.7`.
        #[arg(long, default_value = "0.5")]
        density: String,
        /// Draw V biregular.
        #[arg(long)]
        biregular: bool,
        /// Draw B symmetric (these pairs are never hits).
        #[arg(long)]
        symmetric_b: bool,
        /// Decide every sample by exhaustive search only.
        #[arg(long)]
        exhaustive: bool,
        /// Include per-stage wall-clock times in each hit.
        #[arg(long)]
        timings: bool,
    },
    /// Check the built-in 4×2 / 3×3 example; exit 0 iff every check passes.
    ReproduceExample {
        /// Include per-stage wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
}

/// Input or usage problem; exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(holds) => ExitCode::from(if holds { 0 } else { 1 }),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_matrix(path: &Path) -> Result<ZMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    BipartiteGraph::new(read_matrix(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn no_dot(format: Format) -> Result<Format, Failure> {
    if format == Format::Dot {
        return Err(Failure("--format dot is only available for construct".into()));
    }
    Ok(format)
}

fn strategy(exhaustive: bool) -> Strategy {
    if exhaustive {
        Strategy::Exhaustive
    } else {
        Strategy::Auto
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `Ok(true)` means success / the property holds.
fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Construct { v, b } => {
            let pair = construct_pair(&read_matrix(v)?, &read_matrix(b)?)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "schema": cospectral::report::SCHEMA,
                    "g1": pair.g1().to_json(),
                    "g2": pair.g2().to_json(),
                }))?,
                Format::Dot => {
                    print!("{}", pair.g1().to_dot("g1"));
                    print!("{}", pair.g2().to_dot("g2"));
                }
                Format::Text => {
                    for (name, g) in [("g1", pair.g1()), ("g2", pair.g2())] {
                        println!("{name}: {}", summary_line(&GraphSummary::of(g)));
                        print!("{}", format_matrix(g.biadj()));
                    }
                }
            }
            Ok(true)
        }
        Command::Spectrum { files, roots } => {
            let format = no_dot(cli.format)?;
            let graphs: Vec<(String, BipartiteGraph)> = if let [v, b] = files.as_slice() {
                let pair = construct_pair(&read_matrix(v)?, &read_matrix(b)?)?;
                vec![("g1".into(), pair.g1().clone()), ("g2".into(), pair.g2().clone())]
            } else {
                vec![("graph".into(), read_graph(&files[0])?)]
            };
            let mut entries = Vec::new();
            for (name, g) in &graphs {
                entries.push((name.clone(), certify(g)?));
            }
            spectrum_output(format, &entries, *roots)?;
            Ok(true)
        }
        Command::Verify {
            v,
            b,
            exhaustive,
            timings,
        } => {
            let format = no_dot(cli.format)?;
            let opts = VerifyOptions {
                strategy: strategy(*exhaustive),
                cross_check: false,
                timings: *timings,
            };
            let report = verify_pair(&read_matrix(v)?, &read_matrix(b)?, &opts)?;
            match format {
                Format::Text => print_report(&report),
                _ => print_json(&report)?,
            }
            Ok(true)
        }
        Command::Pet { matrix } => {
            let format = no_dot(cli.format)?;
            let a = read_matrix(matrix)?;
            let witness = pet_witness(&a)?;
            match format {
                Format::Text => match &witness {
                    Some(w) => {
                        println!("PET");
                        println!("rows: {:?}", w.row_perm);
                        println!("cols: {:?}", w.col_perm);
                    }
                    None => println!("not PET"),
                },
                _ => print_json(&json!({ "pet": witness.is_some(), "witness": witness }))?,
            }
            Ok(witness.is_some())
        }
        Command::Iso {
            v,
            b,
            exhaustive,
            graphs,
        } => {
            let format = no_dot(cli.format)?;
            let verdict = if *graphs {
                let (g1, g2) = (read_graph(v)?, read_graph(b)?);
                let mut verdict = graph_isomorphic(&g1.full_adjacency(), &g2.full_adjacency());
                verdict.respects_partite =
                    verdict.witness.as_ref().map(|f| respects_partite(&g1, &g2, f));
                verdict
            } else {
                let pair = construct_pair(&read_matrix(v)?, &read_matrix(b)?)?;
                decide_pair_isomorphism_with(&pair, strategy(*exhaustive))
            };
            match format {
                Format::Text => print_verdict(&verdict),
                _ => print_json(&verdict)?,
            }
            Ok(verdict.isomorphic)
        }
        Command::Search {
            seed,
            samples,
            dims,
            density,
            biregular,
            symmetric_b,
            exhaustive,
            timings,
        } => {
            let format = no_dot(cli.format)?;
            let [m, n, p, q] = parse_dims(dims)?;
            let cfg = SearchConfig {
                m,
                n,
                p,
                q,
                density: parse_density(density)?,
                biregular: *biregular,
                symmetric_b: *symmetric_b,
                samples: *samples,
                seed: *seed,
                strategy: strategy(*exhaustive),
            };
            let outcome = run_search(&cfg, *timings)?;
            match format {
                Format::Text => print_search(&outcome),
                _ => print_json(&outcome)?,
            }
            if outcome.disagreements > 0 {
                eprintln!(
                    "warning: {} hit(s) where the exhaustive search disagreed",
                    outcome.disagreements
                );
                return Ok(false);
            }
            Ok(true)
        }
        Command::ReproduceExample { timings } => {
            let format = no_dot(cli.format)?;
            let repro = reproduce_example(*timings)?;
            match format {
                Format::Text => {
                    for c in &repro.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        if c.detail.is_empty() {
                            println!("{mark} {}", c.name);
                        } else {
                            println!("{mark} {}: {}", c.name, c.detail);
                        }
                    }
                }
                _ => print_json(&repro)?,
            }
            Ok(repro.passed())
        }
    }
}

fn summary_line(s: &GraphSummary) -> String {
    format!(
        "{} vertices ({}+{}), {} edges",
        s.vertices, s.left, s.right, s.edges
    )
}

/// Rounded to 12 decimals; `-0` prints as `0`.
fn round12(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|x| (x * 1e12).round() / 1e12 + 0.0).collect()
}

fn digits12(xs: &[f64]) -> String {
    let parts: Vec<String> = round12(xs).iter().map(|x| format!("{x:.12}")).collect();
    parts.join(" ")
}

fn spectrum_output(
    format: Format,
    entries: &[(String, SpectralCertificate)],
    roots: bool,
) -> Result<(), Failure> {
    if format == Format::Text {
        for (name, c) in entries {
            println!("{name} adjacency:  {}", c.adjacency);
            println!("{name} D^-1 A:     {}", c.normalized);
            if roots {
                println!("{name} adjacency eigenvalues: {}", digits12(&c.adjacency_eigenvalues()));
                println!(
                    "{name} normalized laplacian eigenvalues: {}",
                    digits12(&c.normalized_laplacian_eigenvalues())
                );
            }
        }
        if let [(_, c1), (_, c2)] = entries {
            println!("cospectral (adjacency): {}", yes_no(c1.adjacency == c2.adjacency));
            println!("cospectral (normalized laplacian): {}", yes_no(c1.normalized == c2.normalized));
        }
        return Ok(());
    }
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), json!(cospectral::report::SCHEMA));
    for (name, c) in entries {
        let mut entry = serde_json::to_value(c)?;
        if roots {
            entry["adjacency_eigenvalues"] = json!(round12(&c.adjacency_eigenvalues()));
            entry["normalized_laplacian_eigenvalues"] =
                json!(round12(&c.normalized_laplacian_eigenvalues()));
        }
        out.insert(name.clone(), entry);
    }
    if let [(_, c1), (_, c2)] = entries {
        out.insert("cospectral_adjacency".into(), json!(c1.adjacency == c2.adjacency));
        out.insert("cospectral_normalized".into(), json!(c1.normalized == c2.normalized));
    }
    print_json(&out)
}

fn print_verdict(v: &IsoVerdict) {
    let word = if v.isomorphic { "isomorphic" } else { "not isomorphic" };
    println!("{word} (decided by {})", v.decided_by);
    if let Some(f) = &v.witness {
        println!("map: {f:?}");
    }
    if let Some(r) = v.respects_partite {
        println!("respects partite sets: {}", yes_no(r));
    }
}

fn print_report(r: &PairReport) {
    println!("g1: {}", summary_line(&r.g1));
    println!("g2: {}", summary_line(&r.g2));
    println!("cospectral (adjacency): {}", yes_no(r.cospectral_adjacency));
    println!("cospectral (normalized laplacian): {}", yes_no(r.cospectral_normalized));
    println!("eta certificate: {}", r.eta_certificate);
    print_verdict(&r.iso_verdict);
    if let Some(t) = &r.timing_ms {
        println!(
            "timing: construct {:.3} ms, spectra {:.3} ms, iso {:.3} ms",
            t.construct_ms, t.spectra_ms, t.iso_ms
        );
    }
}

fn print_search(o: &SearchOutcome) {
    println!(
        "{} samples, {} cospectral, {} hits, {} duplicates",
        o.samples,
        o.cospectral,
        o.hits.len(),
        o.duplicates
    );
    for h in &o.hits {
        println!(
            "sample {}: v={:?} b={:?} decided by {}{}",
            h.sample.unwrap_or_default(),
            h.v,
            h.b,
            h.iso_verdict.decided_by,
            match h.exhaustive_agrees {
                Some(true) => ", exhaustive agrees",
                Some(false) => ", EXHAUSTIVE DISAGREES",
                None => "",
            }
        );
    }
}
