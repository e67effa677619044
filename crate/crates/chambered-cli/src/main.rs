//! Command-line front end: classify a graph, print g-matrices, locate
//! covectors in the chamber fan, run the structural certificate, and export
//! fan slices. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 failed checks or internal limits, 2 malformed
//! input, 3 graphs without an affine fan (Dynkin or otherwise), 4 covectors
//! on the critical hyperplane.

use std::fs;
use std::path::PathBuf;
use std::process::exit;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chambered::certify::{certify, CertifyOptions};
use chambered::linalg::Rat;
use chambered::{
    chamber_locate, configure_threads, fan_slice_export, g_matrix, CoxeterSystem, Error, Family,
    InputGraph,
};

#[derive(Parser)]
#[command(name = "chambered", version, about = "Chamber fans of affine Coxeter systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    P,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the g-matrix of one chamber.
    Gmatrix {
        /// Graph description file (JSON: {"vertices": n, "edges": [[i, j], ...]}).
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated 1-based generator word; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, value_enum, ignore_case = true, default_value = "p")]
        family: FamilyArg,
    },
    /// Locate the chamber containing a covector.
    Locate {
        #[arg(long)]
        graph: PathBuf,
        /// Covector coordinates, one integer or fraction per component.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, required = true)]
        covector: Vec<String>,
    },
    /// Run the structural certificate and print its report.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        /// Word-length radius of the certified ball.
        #[arg(long, default_value_t = 4)]
        length: usize,
        /// Radius of the exhaustive pairwise disjointness scan.
        #[arg(long, default_value_t = 3)]
        exhaustive_length: usize,
        /// Extra random disjointness pairs over the full ball.
        #[arg(long, default_value_t = 500)]
        random_pairs: usize,
        /// Word-length radius of the oracle comparison.
        #[arg(long, default_value_t = 2)]
        oracle_length: usize,
        /// Oracle truncation degree.
        #[arg(long, default_value_t = 8)]
        trunc: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random covectors to locate.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Coordinate bound for random covectors.
        #[arg(long, default_value_t = 50)]
        bound: i64,
    },
    /// Export the level-slice geometry of all chambers up to a word length.
    FanExport {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        length: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooFewVertices(_)
        | Error::VertexOutOfRange { .. }
        | Error::LoopEdge(_)
        | Error::Disconnected
        | Error::Parse(_)
        | Error::GeneratorOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::NotReduced
        | Error::InvalidParameter(_) => 2,
        Error::DynkinGraph | Error::NotAffine => 3,
        Error::ZeroCovector | Error::CriticalHyperplane => 4,
        Error::ResourceCap { .. } => 1,
    }
}

fn fail(e: Error) -> ! {
    eprintln!("error: {e}");
    exit(exit_code(&e));
}

fn load_system(path: &PathBuf) -> CoxeterSystem {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            exit(2);
        }
    };
    let graph = InputGraph::from_json_str(&text).unwrap_or_else(|e| fail(e));
    CoxeterSystem::from_graph(graph).unwrap_or_else(|e| fail(e))
}

fn parse_word(text: &str) -> Vec<usize> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        match piece.parse::<usize>() {
            Ok(i) if i >= 1 => out.push(i - 1),
            _ => {
                eprintln!("error: word letters are 1-based integers, got {piece:?}");
                exit(2);
            }
        }
    }
    out
}

fn parse_covector(parts: &[String]) -> Vec<Rat> {
    parts
        .iter()
        .map(|p| {
            Rat::from_str(p).unwrap_or_else(|_| {
                eprintln!("error: covector entries are integers or fractions, got {p:?}");
                exit(2);
            })
        })
        .collect()
}

#[derive(Serialize)]
struct MatrixOut {
    family: Family,
    word: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct LocateOut {
    family: Family,
    word: Vec<usize>,
    certificate: Vec<usize>,
    transformed: Vec<String>,
}

#[derive(Serialize)]
struct FanOut {
    rank: usize,
    max_length: usize,
    cells: Vec<chambered::SliceCell>,
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serialization"));
}

fn main() {
    if let Ok(raw) = std::env::var("CHAMBERED_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) if n >= 1 => {
                configure_threads(n);
            }
            _ => eprintln!("warning: ignoring CHAMBERED_THREADS={raw:?} (want a positive integer)"),
        }
    }
    match Cli::parse().cmd {
        Cmd::Gmatrix { graph, word, family } => {
            let sys = load_system(&graph);
            let w = sys.element_from_word(&parse_word(&word)).unwrap_or_else(|e| fail(e));
            let family = match family {
                FamilyArg::P => Family::P,
                FamilyArg::R => Family::R,
            };
            let g = g_matrix(&sys, &w, family);
            let n = sys.rank();
            print_json(&MatrixOut {
                family,
                word: w.word().iter().map(|&i| i + 1).collect(),
                matrix: (0..n)
                    .map(|i| g.matrix.row(i).iter().map(|x| x.to_string()).collect())
                    .collect(),
            });
        }
        Cmd::Locate { graph, covector } => {
            let sys = load_system(&graph);
            let f = parse_covector(&covector);
            let result = chamber_locate(&sys, &f).unwrap_or_else(|e| fail(e));
            print_json(&LocateOut {
                family: result.family,
                word: result.element.word().iter().map(|&i| i + 1).collect(),
                certificate: result.certificate.iter().map(|&i| i + 1).collect(),
                transformed: result.transformed.iter().map(|x| x.to_string()).collect(),
            });
        }
        Cmd::Certify {
            graph,
            length,
            exhaustive_length,
            random_pairs,
            oracle_length,
            trunc,
            seed,
            count,
            bound,
        } => {
            let sys = load_system(&graph);
            let opts = CertifyOptions {
                ball_length: length,
                exhaustive_pair_length: exhaustive_length,
                random_pairs,
                oracle_length,
                trunc,
                coverage_seed: seed,
                coverage_count: count,
                coverage_bound: bound,
            };
            let report = certify(&sys, &opts).unwrap_or_else(|e| fail(e));
            print_json(&report);
            if !report.passed {
                exit(1);
            }
        }
        Cmd::FanExport { graph, length, out, format } => {
            let sys = load_system(&graph);
            let cells = fan_slice_export(&sys, length).unwrap_or_else(|e| fail(e));
            let text = match format {
                FormatArg::Json => {
                    let payload = FanOut { rank: sys.rank(), max_length: length, cells };
                    let mut t =
                        serde_json::to_string_pretty(&payload).expect("export serialization");
                    t.push('\n');
                    t
                }
                FormatArg::Csv => {
                    let mut t = String::from("family,word,kind,index,coords\n");
                    for cell in &cells {
                        let family = match cell.family {
                            Family::P => "P",
                            Family::R => "R",
                        };
                        let word = cell
                            .word
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(".");
                        for (k, v) in cell.vertices.iter().enumerate() {
                            t.push_str(&format!("{family},{word},vertex,{k},{}\n", v.join(";")));
                        }
                        for (k, wall) in cell.walls.iter().enumerate() {
                            t.push_str(&format!("{family},{word},wall,{k},{}\n", wall.join(";")));
                        }
                    }
                    t
                }
            };
            match out {
                None => print!("{text}"),
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        exit(1);
                    }
                }
            }
        }
    }
}
