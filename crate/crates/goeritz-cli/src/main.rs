//! `goeritz` — bracket, Jones, and Goeritz-matrix computations from matrix,
//! graph, and planar-diagram inputs.
//!
//! Every subcommand reads one input file and writes a JSON object to
//! standard output; failures exit 1 with `{"error": ..., "message": ...}`.

mod report;

use clap::{Parser, Subcommand};
use goeritz::diagram::{
    bracket_state_sum, checkerboard, default_base, goeritz_from_diagram, jones, medial, nu,
    Diagram, Embedding,
};
use goeritz::graph::{goeritz_from_graph, graph_from_matrix, tau, SignedMultigraph};
use goeritz::matrix::{mu, SymmetricIntMatrix};
use goeritz::Error;
use serde::Serialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "goeritz",
    about = "Kauffman bracket and Jones polynomial from Goeritz matrices, signed graphs, and PD codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the matrix polynomial mu[G] of a symmetric integer matrix.
    Mu { input: PathBuf },
    /// Evaluate Thistlethwaite's polynomial tau of a signed multigraph.
    Tau { input: PathBuf },
    /// Goeritz matrix of a graph (base vertex) or of a diagram shading
    /// (base white region).
    Goeritz {
        input: PathBuf,
        /// Shading index (diagram inputs only).
        #[arg(long, default_value_t = 0)]
        shading: usize,
        /// Base vertex (graph inputs) or base white region (diagram inputs).
        #[arg(long)]
        base: Option<usize>,
    },
    /// Kauffman bracket of a genus-0 diagram by brute-force state sum.
    Bracket {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
    },
    /// Jones polynomial of a genus-0 diagram.
    Jones {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
    },
    /// Both nu polynomials of a checkerboard-colorable diagram.
    Nu { input: PathBuf },
    /// Determinant set of the two shadings, with the nu(-1) cross-check.
    Det { input: PathBuf },
    /// Realize a symmetric matrix as a signed graph with that Goeritz matrix.
    Realize { input: PathBuf },
    /// Medial link diagram of an embedded signed graph.
    Medial { input: PathBuf },
    /// Full report: genus, shadings, Goeritz data, polynomials, and
    /// theorem cross-checks. Exits nonzero if any check fails.
    Analyze {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{}: {}", path.display(), e)))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("report serializes"));
}

fn run(cmd: &Command) -> Result<bool, Error> {
    match cmd {
        Command::Mu { input } => {
            let g = SymmetricIntMatrix::from_json(&read(input)?)?;
            if g.nonzero_off_diagonal().len() > 12 {
                eprintln!(
                    "warning: {} nonzero off-diagonal entries; mu is exponential in this count",
                    g.nonzero_off_diagonal().len()
                );
            }
            emit(&json!({ "mu": mu(&g).to_string() }));
        }
        Command::Tau { input } => {
            let g = SignedMultigraph::from_json(&read(input)?)?;
            if g.edge_count() > 12 {
                eprintln!(
                    "warning: {} edges; tau is exponential in the edge count",
                    g.edge_count()
                );
            }
            emit(&json!({ "tau": tau(&g).to_string() }));
        }
        Command::Goeritz { input, shading, base } => {
            let text = read(input)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::BadInput(e.to_string()))?;
            let matrix = if value.get("pd").is_some() {
                let d = Diagram::from_json(&text)?;
                let emb = Embedding::new(&d);
                let (s0, s1) = checkerboard(&d, &emb)?;
                let s = match shading {
                    0 => s0,
                    1 => s1,
                    other => return Err(Error::BadInput(format!("shading {} is not 0 or 1", other))),
                };
                let base = base.unwrap_or_else(|| default_base(&d, &emb, &s));
                goeritz_from_diagram(&d, &emb, &s, base)?
            } else {
                let g = SignedMultigraph::from_json(&text)?;
                goeritz_from_graph(&g, base.unwrap_or(0))?
            };
            emit(&matrix.to_json());
        }
        Command::Bracket { input, max_crossings } => {
            let d = Diagram::from_json(&read(input)?)?;
            guard_crossings(&d, *max_crossings)?;
            let emb = Embedding::new(&d);
            emit(&json!({ "bracket": bracket_state_sum(&d, &emb)?.to_string() }));
        }
        Command::Jones { input, max_crossings } => {
            let d = Diagram::from_json(&read(input)?)?;
            guard_crossings(&d, *max_crossings)?;
            let emb = Embedding::new(&d);
            emit(&json!({ "jones": jones(&d, &emb)?.to_string() }));
        }
        Command::Nu { input } => {
            let d = Diagram::from_json(&read(input)?)?;
            let emb = Embedding::new(&d);
            let (s0, s1) = checkerboard(&d, &emb)?;
            emit(&json!({
                "nu": [nu(&d, &emb, &s0)?.to_string(), nu(&d, &emb, &s1)?.to_string()]
            }));
        }
        Command::Det { input } => {
            let d = Diagram::from_json(&read(input)?)?;
            let emb = Embedding::new(&d);
            let ds = goeritz::diagram::determinant_set(&d, &emb)?;
            emit(&json!({
                "determinant_set": [ds.values[0].to_string(), ds.values[1].to_string()],
                "det_by_shading": [
                    ds.det_by_shading[0].to_string(),
                    ds.det_by_shading[1].to_string()
                ],
                "nu_at_minus_one": [
                    ds.nu_modulus_by_shading[0].to_string(),
                    ds.nu_modulus_by_shading[1].to_string()
                ],
                "pairing_ok": ds.pairing_ok
            }));
            return Ok(ds.pairing_ok);
        }
        Command::Realize { input } => {
            let g = SymmetricIntMatrix::from_json(&read(input)?)?;
            emit(&graph_from_matrix(&g).to_json());
        }
        Command::Medial { input } => {
            let g = SignedMultigraph::from_json(&read(input)?)?;
            let g = if g.rotation().is_some() { g } else { g.with_sorted_rotation() };
            let med = medial(&g)?;
            emit(&med.diagram.to_json());
        }
        Command::Analyze { input, max_crossings } => {
            let d = Diagram::from_json(&read(input)?)?;
            let rep = report::analyze(&d, *max_crossings)?;
            emit(&rep);
            return Ok(rep.ok);
        }
    }
    Ok(true)
}

fn guard_crossings(d: &Diagram, limit: usize) -> Result<(), Error> {
    if d.crossing_count() > limit {
        return Err(Error::MaxCrossingsExceeded { found: d.crossing_count(), limit });
    }
    Ok(())
}


fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            emit(&json!({ "error": e.code(), "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}
