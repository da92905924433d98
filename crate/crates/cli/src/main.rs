//! `planar`: planarity test, embedding, Kuratowski minors, decomposition
//! and drawing from the command line.
//!
//! Exit codes: 0 yes/valid, 1 no/invalid, 2 bad input, 3 guard exceeded.

mod draw;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use planar_core::conflict::conflict_graph;
use planar_core::decompose::{block_separation_trees, blocks};
use planar_core::embed3::embed_triconnected_with;
use planar_core::oracle::{
    brute_force_minor, enumerate_facelike_cycles, gen_gnm, gen_triangulation, tutte_planarity, verify_embedding,
    verify_minor, MinorModel,
};
use planar_core::{embed, find_kuratowski, Cycle, Graph, KuratowskiError, MinorKind, OracleError, PlanarEmbedding};
use serde_json::json;

use input::Format;

#[derive(Parser, Debug)]
#[command(name = "planar", version, about = "Planarity testing, embedding and Kuratowski minors")]
struct Cli {
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Require every face of a 3-connected piece to pass the induced,
    /// non-separating check.
    #[arg(long, global = true)]
    strict: bool,
    /// Run brute-force checks beyond their size guards (also
    /// PLANAR_GUARD_OVERRIDE=1).
    #[arg(long, global = true)]
    override_guards: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Planarity verdict plus a JSON summary of the evidence.
    Test { input: Option<PathBuf> },
    /// Embedding JSON, or evidence JSON with exit 1 when non-planar.
    Embed { input: Option<PathBuf> },
    /// K5 or K3,3 minor JSON.
    Kuratowski { input: Option<PathBuf> },
    /// Block-cut tree and separation trees as JSON.
    Decompose { input: Option<PathBuf> },
    /// Conflict graph of the given cycle as JSON.
    Conflict {
        input: Option<PathBuf>,
        /// Cycle as comma-separated vertices in cyclic order.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
    },
    /// Exit 0 if the embedding JSON is a valid planar embedding of the graph.
    VerifyEmbedding { graph: PathBuf, embedding: PathBuf },
    /// Exit 0 if the minor JSON is a valid model in the graph.
    VerifyMinor { graph: PathBuf, minor: PathBuf },
    /// Brute-force reference checks (size guarded).
    Oracle {
        #[arg(value_enum)]
        check: OracleCheck,
        input: Option<PathBuf>,
    },
    /// Emit a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// SVG straight-line drawing of a planar graph.
    Draw { input: Option<PathBuf> },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleCheck {
    /// Planar iff every cycle has a bipartite conflict graph.
    Tutte,
    /// Exhaustive search for a K5 or K3,3 minor.
    Minor,
    /// All induced non-separating cycles.
    Faces,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random stacked triangulation.
    Triangulation { n: usize },
    /// Uniform random graph with n vertices and m edges.
    Gnm { n: usize, m: usize },
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Reply {
    code: u8,
    body: String,
}

fn reply(code: u8, body: impl Into<String>) -> Result<Reply, Failure> {
    Ok(Reply { code, body: body.into() })
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = input::read_text(Some(path)).map_err(Failure::Input)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Reply, Failure> {
    let graph = |p: &Option<PathBuf>| input::read_graph(p.as_deref(), cli.format).map_err(Failure::Input);
    let guards_off = cli.override_guards || std::env::var("PLANAR_GUARD_OVERRIDE").is_ok_and(|v| v == "1");
    match &cli.command {
        Command::Test { input } => {
            let g = graph(input)?;
            match embed(&g) {
                Ok(pe) => reply(
                    0,
                    format!(
                        "planar\n{}",
                        pretty(&json!({"planar": true, "n": g.n(), "m": g.m(), "faces": pe.face_count()}))
                    ),
                ),
                Err(ev) => reply(
                    1,
                    format!(
                        "non-planar\n{}",
                        pretty(&json!({
                            "planar": false,
                            "n": g.n(),
                            "m": g.m(),
                            "reason": ev.reason,
                            "subject": {"n": ev.subject.n(), "m": ev.subject.m()},
                            "valid": ev.validate(),
                        }))
                    ),
                ),
            }
        }
        Command::Embed { input } => {
            let g = graph(input)?;
            let result = if cli.strict && planar_core::decompose::is_biconnected(&g) && g.n() >= 4 {
                embed_triconnected_with(&g, true).or_else(|_| embed(&g))
            } else {
                embed(&g)
            };
            match result {
                Ok(pe) => reply(0, pretty(&pe)),
                Err(ev) => reply(1, pretty(&ev)),
            }
        }
        Command::Kuratowski { input } => {
            let g = graph(input)?;
            match find_kuratowski(&g) {
                Ok(m) => reply(0, pretty(&m)),
                Err(KuratowskiError::Planar) => {
                    eprintln!("error: graph is planar, no Kuratowski minor exists");
                    reply(1, "")
                }
                Err(e) => Err(Failure::Input(e.to_string())),
            }
        }
        Command::Decompose { input } => {
            let g = graph(input)?;
            let trees: Vec<_> = block_separation_trees(&g)
                .into_iter()
                .map(|(block, tree)| json!({"block": block, "tree": tree}))
                .collect();
            reply(0, pretty(&json!({"block_cut_tree": blocks(&g), "separation_trees": trees})))
        }
        Command::Conflict { input, cycle } => {
            let g = graph(input)?;
            let c = Cycle::from_vertices(&g, cycle.clone()).map_err(|e| Failure::Input(e.to_string()))?;
            let h = conflict_graph(&g, &c).map_err(|e| Failure::Input(e.to_string()))?;
            reply(0, pretty(&h))
        }
        Command::VerifyEmbedding { graph: gp, embedding } => {
            let g = graph(&Some(gp.clone()))?;
            let pe: PlanarEmbedding = read_json(embedding)?;
            let ok = verify_embedding(&g, &pe).unwrap_or(false);
            reply(if ok { 0 } else { 1 }, if ok { "valid\n" } else { "invalid\n" })
        }
        Command::VerifyMinor { graph: gp, minor } => {
            let g = graph(&Some(gp.clone()))?;
            let m: MinorModel = read_json(minor)?;
            let ok = verify_minor(&g, &m);
            reply(if ok { 0 } else { 1 }, if ok { "valid\n" } else { "invalid\n" })
        }
        Command::Oracle { check, input } => {
            let g = graph(input)?;
            match check {
                OracleCheck::Tutte => {
                    let planar = tutte_planarity(&g, guards_off)?;
                    reply(if planar { 0 } else { 1 }, if planar { "planar\n" } else { "non-planar\n" })
                }
                OracleCheck::Minor => {
                    let found = match brute_force_minor(&g, MinorKind::K33, guards_off)? {
                        Some(m) => Some(m),
                        None => brute_force_minor(&g, MinorKind::K5, guards_off)?,
                    };
                    match found {
                        Some(m) => reply(0, pretty(&m)),
                        None => reply(1, "no K5 or K3,3 minor\n"),
                    }
                }
                OracleCheck::Faces => {
                    let faces: Vec<Vec<usize>> = enumerate_facelike_cycles(&g, guards_off)?
                        .into_iter()
                        .map(|c| c.vertices().to_vec())
                        .collect();
                    reply(0, pretty(&faces))
                }
            }
        }
        Command::Gen { kind } => {
            let g: Graph = match kind {
                GenKind::Triangulation { n } => gen_triangulation(*n, cli.seed)?.0,
                GenKind::Gnm { n, m } => gen_gnm(*n, *m, cli.seed)?,
            };
            reply(0, g.to_edge_list())
        }
        Command::Draw { input } => {
            let g = graph(input)?;
            match draw::svg(&g) {
                Ok(svg) => reply(0, svg),
                Err(ev) => {
                    eprintln!("error: cannot draw a non-planar graph ({:?})", ev.reason);
                    reply(1, "")
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Reply { code, body }) => {
            let written = match &cli.output {
                Some(path) if !body.is_empty() => std::fs::write(path, &body),
                _ => std::io::stdout().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
