//! `smd`: compute strong metric dimensions, build graph families and
//! products, and run theorem verification sweeps.
//!
//! Machine-readable results go to stdout as `key=value` lines; prose and
//! warnings go to stderr. Exit codes: 0 ok, 1 usage error, 2 input/parse
//! error, 3 solver limit exceeded, 4 verification failures present.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use smd_core::catalog::{self, Limits, Ranges, TheoremId};
use smd_core::combinatorics::{DEFAULT_HAMILTONIAN_LIMIT, DEFAULT_VERTEX_TRANSITIVE_LIMIT};
use smd_core::family::FamilySpec;
use smd_core::graph::{cartesian_product, direct_product, Graph};
use smd_core::io::{parse_edge_list, parse_graph6, write_edge_list};
use smd_core::metric::{boundary, mmd_pairs, simplicial_vertices};
use smd_core::sdim::{sdim_oracle, strong_metric_dimension, SdimError, DEFAULT_ORACLE_LIMIT};
use smd_core::srgraph::strong_resolving_graph;

#[derive(Parser)]
#[command(
    name = "smd",
    version,
    about = "Strong metric dimension of graphs via the strong-resolving-graph reduction",
    after_help = "Family spec grammar: P:n  C:n  K:n  Kb:r,s  CR:n,t  Q:k  S:n  T:p1,p2,...\n\
                  products: B(A,B) Cartesian, X(A,B) direct, nesting allowed.\n\
                  Reports from `verify` are written to $SMD_REPORT_DIR (default: current directory)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    Cartesian,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Compute dim_s of a connected graph; prints value, basis and method
    Sdim {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Write the strong resolving graph as an edge list with a label-mapping header
    Srgraph {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Print the boundary, the simplicial vertices and the MMD pair count
    Boundary {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Build the Cartesian or direct product of two family specs
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long, value_name = "SPEC")]
        a: String,
        #[arg(long, value_name = "SPEC")]
        b: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Materialize a family instance as an edge list
    Family {
        #[arg(long, value_name = "SPEC")]
        spec: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Run a verification sweep; writes JSON and CSV reports
    Verify {
        /// Theorem id (run with an unknown id to get the full list)
        #[arg(long)]
        theorem: String,
        /// Inclusive ranges, e.g. k=2..3,n=2..3 (defaults to the documented sweep)
        #[arg(long)]
        range: Option<String>,
        /// Worker threads for independent instances
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_HAMILTONIAN_LIMIT)]
        limit_hamiltonian: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_TRANSITIVE_LIMIT)]
        limit_transitive: usize,
    },
    /// Brute-force dim_s by subset enumeration, for cross-checking
    Oracle {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit_oracle: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn sdim_failure(e: SdimError) -> Failure {
    match e {
        SdimError::TooLarge { .. } => Failure::limit(e.to_string()),
        _ => Failure::input(e.to_string()),
    }
}

fn load_graph(path: &Path, format: Format) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    match format {
        Format::Edgelist => {
            let parsed = parse_edge_list(&text).map_err(|e| Failure::input(e.to_string()))?;
            if parsed.had_duplicates() {
                eprintln!(
                    "warning: {} duplicate edge(s) collapsed while reading {}",
                    parsed.duplicate_edges,
                    path.display()
                );
            }
            Ok(parsed.graph)
        }
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::input("empty graph6 input".to_string()))?;
            parse_graph6(line).map_err(|e| Failure::input(e.to_string()))
        }
    }
}

fn write_graph_file(path: &Path, g: &Graph) -> Result<(), Failure> {
    std::fs::write(path, write_edge_list(g))
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn label_list(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> String {
    let mut out = String::new();
    for (i, v) in vertices.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{}", g.label(v)).unwrap();
    }
    out
}

fn parse_family_spec(text: &str) -> Result<Graph, Failure> {
    let spec: FamilySpec = text
        .parse()
        .map_err(|e: smd_core::family::SpecParseError| Failure::usage(e.to_string()))?;
    smd_core::family::make_family(&spec).map_err(|e| Failure::input(e.to_string()))
}

fn parse_ranges(text: &str) -> Result<Ranges, Failure> {
    let mut ranges = Ranges::default();
    for part in text.split(',') {
        let (key, span) = part
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("range {part:?} is not KEY=LO..HI")))?;
        let (lo, hi) = match span.split_once("..") {
            Some((lo, hi)) => (lo, hi),
            None => (span, span),
        };
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad range bound {lo:?}")))?;
        let hi: u64 = hi
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad range bound {hi:?}")))?;
        if lo > hi {
            return Err(Failure::usage(format!("empty range {part:?}")));
        }
        ranges.0.insert(key.trim().to_string(), (lo, hi));
    }
    Ok(ranges)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sdim { input, format } => {
            let g = load_graph(&input, format)?;
            let result = strong_metric_dimension(&g).map_err(sdim_failure)?;
            println!("dim_s={}", result.value);
            println!("basis={}", label_list(&g, result.basis.iter().copied()));
            println!("method={}", result.method.as_str());
            Ok(())
        }
        Command::Oracle {
            input,
            format,
            limit_oracle,
        } => {
            let g = load_graph(&input, format)?;
            let result = sdim_oracle(&g, limit_oracle).map_err(sdim_failure)?;
            println!("dim_s={}", result.value);
            println!("basis={}", label_list(&g, result.basis.iter().copied()));
            println!("method={}", result.method.as_str());
            Ok(())
        }
        Command::Srgraph { input, out, format } => {
            let g = load_graph(&input, format)?;
            let sr = strong_resolving_graph(&g).map_err(|e| Failure::input(e.to_string()))?;
            std::fs::write(&out, smd_core::io::write_edge_list_with_header(&sr))
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", out.display())))?;
            println!("vertices={}", sr.order());
            println!("edges={}", sr.edge_count());
            println!("out={}", out.display());
            Ok(())
        }
        Command::Boundary { input, format } => {
            let g = load_graph(&input, format)?;
            let bnd = boundary(&g).map_err(|e| Failure::input(e.to_string()))?;
            let pairs = mmd_pairs(&g).map_err(|e| Failure::input(e.to_string()))?;
            println!("boundary={}", label_list(&g, bnd.iter().copied()));
            println!(
                "simplicial={}",
                label_list(&g, simplicial_vertices(&g).iter().copied())
            );
            println!("mmd_pair_count={}", pairs.len());
            Ok(())
        }
        Command::Product { kind, a, b, out } => {
            let ga = parse_family_spec(&a)?;
            let gb = parse_family_spec(&b)?;
            let prod = match kind {
                ProductKind::Cartesian => cartesian_product(&ga, &gb),
                ProductKind::Direct => direct_product(&ga, &gb),
            }
            .map_err(|e| Failure::input(e.to_string()))?;
            write_graph_file(&out, &prod)?;
            println!("vertices={}", prod.order());
            println!("edges={}", prod.edge_count());
            println!("out={}", out.display());
            Ok(())
        }
        Command::Family { spec, out } => {
            let g = parse_family_spec(&spec)?;
            write_graph_file(&out, &g)?;
            println!("vertices={}", g.order());
            println!("edges={}", g.edge_count());
            println!("out={}", out.display());
            Ok(())
        }
        Command::Verify {
            theorem,
            range,
            jobs,
            limit_hamiltonian,
            limit_transitive,
        } => {
            let id = TheoremId::parse(&theorem).map_err(|e| {
                let all: Vec<&str> = TheoremId::all().iter().map(|t| t.as_str()).collect();
                Failure::usage(format!("{e}; known theorems: {}", all.join(", ")))
            })?;
            let ranges = match range {
                Some(text) => parse_ranges(&text)?,
                None => catalog::default_ranges(id),
            };
            let limits = Limits {
                oracle: DEFAULT_ORACLE_LIMIT,
                hamiltonian: limit_hamiltonian,
                vertex_transitive: limit_transitive,
            };
            if jobs == 0 {
                return Err(Failure::usage("--jobs must be at least 1"));
            }
            let report = catalog::verify_with_jobs(id, &ranges, &limits, jobs)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let dir = std::env::var_os("SMD_REPORT_DIR")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&dir)
                .map_err(|e| Failure::input(format!("cannot create {}: {e}", dir.display())))?;
            let json_path = dir.join(format!("{}.json", report.theorem));
            let csv_path = dir.join(format!("{}.csv", report.theorem));
            std::fs::write(&json_path, report.to_json())
                .map_err(|e| Failure::input(format!("cannot write report: {e}")))?;
            std::fs::write(&csv_path, report.to_csv())
                .map_err(|e| Failure::input(format!("cannot write report: {e}")))?;
            let (pass, fail, skip, error) = report.counts();
            println!("theorem={}", report.theorem);
            println!("instances={}", report.instances.len());
            println!("pass={pass}");
            println!("fail={fail}");
            println!("skip={skip}");
            println!("error={error}");
            println!("all_pass={}", report.all_pass);
            println!("json={}", json_path.display());
            println!("csv={}", csv_path.display());
            if report.all_pass {
                Ok(())
            } else {
                Err(Failure::verification(format!(
                    "{} instance(s) failed or errored; see {}",
                    fail + error,
                    csv_path.display()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
