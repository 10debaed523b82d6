//! Command-line interface.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::calculus::{verify_suite, Heights, Identity, Report};
use crate::cluster::{seed_from_triangulation, variable_along, Seed, SeedJson};
use crate::fixtures::{read_identity_file, Bundle};
use crate::laurent::VarTable;
use crate::orbifold::{graph_of, sort_labels, standard_triangulation, Curve, Triangulation};
use crate::snakegraph::Graph;

#[derive(Debug, Parser)]
#[command(name = "orbicluster", version, about = "Snake and band graph expansions for orbifold cluster algebras")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the expansion of a graph.
    Expand {
        graph: PathBuf,
        /// Use the variables of this triangulation.
        #[arg(long)]
        triangulation: Option<PathBuf>,
    },
    /// Print the number of perfect (or good) matchings and the matchings.
    Matchings { graph: PathBuf },
    /// Mutate a seed, or the initial seed of a triangulation, along the given indices.
    Mutate { seed: PathBuf, k: Vec<usize> },
    /// Print the cluster variable at position `k` after a flip sequence.
    Oracle {
        triangulation: PathBuf,
        /// Comma-separated indices, or `-` for none.
        flips: String,
        k: usize,
    },
    /// Print the standard triangulation of genus `g` with `c` orbifold points.
    Triangulate { g: usize, c: usize },
    /// Print the snake or band graph of a curve.
    CurveGraph { triangulation: PathBuf, curve: PathBuf },
    /// Verify one identity file, or a whole fixture bundle.
    Verify {
        /// Identity file.
        file: Option<PathBuf>,
        /// Fixture bundle directory.
        #[arg(long, conflicts_with = "file")]
        suite: Option<PathBuf>,
        /// Bundle resolving the references of `file`; defaults to the parent of its directory.
        #[arg(long)]
        bundle: Option<PathBuf>,
        /// Include per-identity timing.
        #[arg(long)]
        timing: bool,
    },
}

/// An error with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub message: String,
}

fn fail(message: impl Into<String>) -> Failure {
    Failure { status: 2, message: message.into() }
}

fn read<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| fail(format!("{}: {e}", path.display())))
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Variables for a stand-alone graph: every label is an x-variable, tile labels
/// are also y-variables.
pub fn graph_table(g: &Graph) -> Arc<VarTable> {
    let mut xs = g.labels();
    sort_labels(&mut xs);
    let mut ys = g.tile_labels();
    sort_labels(&mut ys);
    ys.dedup();
    VarTable::new(xs, ys).expect("distinct labels")
}

fn report_text(r: &Report, timing: bool) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let status = if e.passed { "ok  " } else { "FAIL" };
        out.push_str(&format!("{status} {}", e.name));
        if let Some(d) = &e.detail {
            out.push_str(&format!(": {d}"));
        }
        if timing {
            out.push_str(&format!(" ({:.3} s)", e.elapsed.as_secs_f64()));
        }
        out.push('\n');
    }
    let failed = r.failures().count();
    if failed == 0 {
        out.push_str(&format!("all {} identities verified\n", r.entries.len()));
    } else {
        out.push_str(&format!("{failed} of {} identities failed\n", r.entries.len()));
    }
    out
}

fn verify_bundle(bundle: &Bundle, names: &[String], json: bool, timing: bool) -> Result<(String, i32), Failure> {
    let mut groups: std::collections::BTreeMap<String, Vec<Identity>> = Default::default();
    for n in names {
        let f = &bundle.identities[n];
        let (_, id) = bundle.resolve(f).map_err(|e| fail(e.to_string()))?;
        groups.entry(f.triangulation.clone()).or_default().push(id);
    }
    let mut entries = Vec::new();
    for (t, ids) in &groups {
        let table = bundle.table(t).map_err(|e| fail(e.to_string()))?;
        entries.extend(verify_suite(&table, ids, Heights::Minimal).entries);
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let report = Report { entries };
    let status = if report.all_passed() { 0 } else { 1 };
    let text = if json {
        let v = json!({
            "passed": report.all_passed(),
            "entries": report.entries.iter().map(|e| {
                let mut o = json!({"name": e.name, "passed": e.passed, "detail": e.detail});
                if timing {
                    o["seconds"] = json!(e.elapsed.as_secs_f64());
                }
                o
            }).collect::<Vec<_>>(),
        });
        pretty(&v) + "\n"
    } else {
        report_text(&report, timing)
    };
    Ok((text, status))
}

fn parse_flips(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim() == "-" || s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|p| p.trim().parse().map_err(|_| fail(format!("bad flip index `{p}`")))).collect()
}

fn load_seed(path: &Path) -> Result<Seed, Failure> {
    let v: serde_json::Value = read(path)?;
    if v.get("triangles").is_some() {
        let t: Triangulation = serde_json::from_value(v).map_err(|e| fail(format!("{}: {e}", path.display())))?;
        seed_from_triangulation(&t).map_err(|e| fail(format!("{}: {e}", path.display())))
    } else {
        let j: SeedJson = serde_json::from_value(v).map_err(|e| fail(format!("{}: {e}", path.display())))?;
        Seed::from_json(&j).map_err(|e| fail(format!("{}: {e}", path.display())))
    }
}

fn load_triangulation(path: &Path) -> Result<Triangulation, Failure> {
    let t: Triangulation = read(path)?;
    t.validate().map_err(|e| fail(format!("{}: {e}", path.display())))?;
    Ok(t)
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read(path)
}

/// Runs a parsed command, returning its output and exit status.
pub fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Expand { graph, triangulation } => {
            let g = load_graph(graph)?;
            let table = match triangulation {
                Some(t) => load_triangulation(t)?.var_table(),
                None => graph_table(&g),
            };
            let p = g.expansion(&table).map_err(|e| fail(format!("{}: {e}", graph.display())))?;
            let text = if json { pretty(&json!({ "expansion": p.to_string() })) } else { p.to_string() };
            Ok((text + "\n", 0))
        }
        Command::Matchings { graph } => {
            let g = load_graph(graph)?;
            let ms = g.matchings();
            let label = |e: usize| -> String {
                match &g {
                    Graph::Edge(l) => l.clone(),
                    Graph::Snake(s) => s.edge_label(e).to_string(),
                    Graph::Band(b) => b.base().edge_label(e).to_string(),
                }
            };
            let text = if json {
                let list: Vec<_> = ms
                    .iter()
                    .map(|m| m.edges.iter().map(|&e| json!({"edge": e, "label": label(e)})).collect::<Vec<_>>())
                    .collect();
                pretty(&json!({"count": ms.len(), "matchings": list})) + "\n"
            } else {
                let mut out = format!("count {}\n", ms.len());
                for m in &ms {
                    let parts: Vec<String> = m.edges.iter().map(|&e| format!("{e}:{}", label(e))).collect();
                    out.push_str(&parts.join(" "));
                    out.push('\n');
                }
                out
            };
            Ok((text, 0))
        }
        Command::Mutate { seed, k } => {
            let s = load_seed(seed)?;
            let t = s.mutate_along(k).map_err(|e| fail(e.to_string()))?;
            Ok((pretty(&t.to_json()) + "\n", 0))
        }
        Command::Oracle { triangulation, flips, k } => {
            let t = load_triangulation(triangulation)?;
            let s = seed_from_triangulation(&t).map_err(|e| fail(e.to_string()))?;
            let p = variable_along(&s, &parse_flips(flips)?, *k).map_err(|e| fail(e.to_string()))?;
            let text = if json { pretty(&json!({ "variable": p.to_string() })) } else { p.to_string() };
            Ok((text + "\n", 0))
        }
        Command::Triangulate { g, c } => {
            let t = standard_triangulation(*g, *c).map_err(|e| fail(e.to_string()))?;
            Ok((pretty(&t) + "\n", 0))
        }
        Command::CurveGraph { triangulation, curve } => {
            let t = load_triangulation(triangulation)?;
            let c: Curve = read(curve)?;
            let g = graph_of(&t, &c).map_err(|e| fail(format!("{}: {e}", curve.display())))?;
            Ok((pretty(&g) + "\n", 0))
        }
        Command::Verify { file, suite, bundle, timing } => {
            if let Some(dir) = suite {
                let b = Bundle::load(dir).map_err(|e| fail(e.to_string()))?;
                let names: Vec<String> = b.identities.keys().cloned().collect();
                return verify_bundle(&b, &names, json, *timing);
            }
            let Some(file) = file else {
                return Err(fail("verify needs an identity file or --suite DIR"));
            };
            let f = read_identity_file(file).map_err(|e| fail(e.to_string()))?;
            let dir = match bundle {
                Some(d) => d.clone(),
                None => file
                    .parent()
                    .and_then(Path::parent)
                    .map(Path::to_path_buf)
                    .ok_or_else(|| fail(format!("{}: no bundle directory", file.display())))?,
            };
            let mut b = Bundle::load(&dir).map_err(|e| fail(e.to_string()))?;
            let name = f.identity.name.clone();
            b.identities.insert(name.clone(), f);
            verify_bundle(&b, &[name], json, *timing)
        }
    }
}

/// Parses `argv` (including the program name), runs, and writes the output.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let status = e.exit_code();
            let _ = if status == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return status;
        }
    };
    match execute(&cli) {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}
