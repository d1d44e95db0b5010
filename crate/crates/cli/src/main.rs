use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nbhc_cli::dto::{
    parse_rational, ComplexDto, GraphDto, HomologyDto, HomologyGroupDto, MetricDto,
    PresentationDto,
};
use nbhc_cli::suites;
use nbhc_core::complex::{
    clique_complex, closed_neighborhood_complex, independence_complex, open_neighborhood_complex,
};
use nbhc_core::corpus;
use nbhc_core::digraph_ext::{left_closed_nbhd_complex, right_closed_nbhd_complex};
use nbhc_core::graph::{
    generate_complete, generate_cycle, generate_hypercube, generate_path, generate_x1,
    generate_x2, generate_x2_window,
};
use nbhc_core::grouppres::{abelianization_invariants, edge_path_presentation, tietze_simplify};
use nbhc_core::homology::{betti_over_field, reduced_homology_z, FieldSpec};
use nbhc_core::hypergraph::dominance_complex;
use nbhc_core::kpath::{bounded_equivalence_graph, Equivalence, GraphPath};
use nbhc_core::metric::{cech_complex, circle_metric, circle_sample};

#[derive(Parser)]
#[command(
    name = "nbhc",
    about = "Neighborhood-complex toolkit: graph-derived simplicial complexes, \
             exact homology, fundamental-group presentations, and theorem \
             verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph or digraph from a named family as JSON.
    Gen {
        /// Family: complete, cycle, path, hypercube, random, x1, x2, x2-window
        family: String,
        /// Family parameters (sizes; random takes N NUM DEN SEED)
        params: Vec<u64>,
    },
    /// Build a simplicial complex from a graph or digraph (JSON on stdin or -i).
    Complex {
        /// Kind: closed-nbhd, open-nbhd, independence, clique, dominance,
        /// right-closed-nbhd, left-closed-nbhd
        kind: String,
        /// Neighborhood depth for the *-nbhd kinds
        #[arg(short, default_value_t = 1)]
        k: u32,
        /// Read input from a file instead of stdin
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
    },
    /// Alexander dual of a complex (JSON on stdin or -i).
    Dual {
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
    },
    /// Reduced homology of a complex (JSON on stdin or -i); table on stderr.
    Homology {
        /// Field coefficients: q, 2, 3, ... (default: integer homology)
        #[arg(long)]
        field: Option<String>,
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
    },
    /// Edge-path group presentation of a complex (JSON on stdin or -i).
    Pi1 {
        /// Base vertex
        #[arg(long, default_value_t = 0)]
        base: u32,
        /// Run Tietze simplification before printing
        #[arg(long)]
        simplify: bool,
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
    },
    /// Bounded search for a move chain between two based loops.
    KpathEquiv {
        /// Graph JSON file
        #[arg(long)]
        graph: PathBuf,
        /// Window size k of the rewrite relation (k >= 2)
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// First loop, comma-separated vertices
        #[arg(long = "loop")]
        loop1: String,
        /// Second loop, comma-separated vertices
        #[arg(long = "loop2")]
        loop2: String,
        /// Longest intermediate path to explore
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// State budget for the search
        #[arg(long, default_value_t = 500_000)]
        max_states: usize,
    },
    /// Generate a finite metric space as JSON.
    Metric {
        #[command(subcommand)]
        which: MetricCommand,
    },
    /// Čech complex of a metric space at a rational radius.
    Cech {
        /// Closed balls instead of open balls
        #[arg(long)]
        closed: bool,
        /// Radius as P/Q
        #[arg(short)]
        r: String,
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
    },
    /// Run a verification suite and print its report as JSON.
    Verify {
        /// Suite id (see --help of this subcommand for the list)
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
    },
}

#[derive(Subcommand)]
enum MetricCommand {
    /// n evenly spaced points on the circle R/Z
    Circle {
        #[arg(short)]
        n: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("cannot read {p:?}: {e}")),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_json<'a, T: serde::Deserialize<'a>>(s: &'a str) -> Result<T, String> {
    serde_json::from_str(s).map_err(|e| format!("malformed JSON: {e}"))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serialization cannot fail"));
}

fn param(params: &[u64], idx: usize, what: &str) -> Result<u64, String> {
    params
        .get(idx)
        .copied()
        .ok_or_else(|| format!("missing parameter {idx}: {what}"))
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Gen { family, params } => {
            let dto = match family.as_str() {
                "complete" => GraphDto::from_graph(&generate_complete(
                    param(&params, 0, "vertex count")? as u32,
                )),
                "cycle" => GraphDto::from_graph(
                    &generate_cycle(param(&params, 0, "vertex count")? as u32)
                        .map_err(|e| e.to_string())?,
                ),
                "path" => GraphDto::from_graph(&generate_path(
                    param(&params, 0, "edge count")? as u32,
                )),
                "hypercube" => GraphDto::from_graph(
                    &generate_hypercube(param(&params, 0, "dimension")? as u32)
                        .map_err(|e| e.to_string())?,
                ),
                "random" => {
                    let n = param(&params, 0, "vertex count")? as u32;
                    let num = param(&params, 1, "edge probability numerator")?;
                    let den = param(&params, 2, "edge probability denominator")?;
                    let seed = param(&params, 3, "seed")?;
                    if num > den || den == 0 {
                        return Err("edge probability must be NUM/DEN with NUM <= DEN".into());
                    }
                    GraphDto::from_graph(&corpus::random_graph(n, num, den, seed))
                }
                "x1" => GraphDto::from_digraph(&generate_x1()),
                "x2" => GraphDto::from_digraph(&generate_x2()),
                "x2-window" => GraphDto::from_digraph(
                    &generate_x2_window(param(&params, 0, "window radius")? as u32)
                        .map_err(|e| e.to_string())?,
                ),
                other => return Err(format!("unknown family \"{other}\"")),
            };
            print_json(&dto);
            Ok(0)
        }
        Command::Complex { kind, k, input } => {
            let dto: GraphDto = parse_json(&read_input(&input)?)?;
            let complex = match kind.as_str() {
                "closed-nbhd" => closed_neighborhood_complex(&dto.to_graph()?, k),
                "open-nbhd" => open_neighborhood_complex(&dto.to_graph()?),
                "independence" => independence_complex(&dto.to_graph()?),
                "clique" => clique_complex(&dto.to_graph()?),
                "dominance" => dominance_complex(&dto.to_graph()?),
                "right-closed-nbhd" => right_closed_nbhd_complex(&dto.to_digraph()?, k),
                "left-closed-nbhd" => left_closed_nbhd_complex(&dto.to_digraph()?, k),
                other => return Err(format!("unknown complex kind \"{other}\"")),
            };
            print_json(&ComplexDto::from_complex(&complex));
            Ok(0)
        }
        Command::Dual { input } => {
            let dto: ComplexDto = parse_json(&read_input(&input)?)?;
            let dual = dto.to_complex()?.alexander_dual().map_err(|e| e.to_string())?;
            print_json(&ComplexDto::from_complex(&dual));
            Ok(0)
        }
        Command::Homology { field, input } => {
            let dto: ComplexDto = parse_json(&read_input(&input)?)?;
            let k = dto.to_complex()?;
            let out = match field.as_deref() {
                None => HomologyDto::from_result(&reduced_homology_z(&k)),
                Some(name) => {
                    let spec = match name {
                        "q" | "Q" | "rational" | "rationals" => FieldSpec::Rationals,
                        p => FieldSpec::Prime(
                            p.parse().map_err(|_| format!("unknown field \"{p}\""))?,
                        ),
                    };
                    HomologyDto {
                        dims: betti_over_field(&k, spec)
                            .into_iter()
                            .filter(|&(_, b)| b > 0)
                            .map(|(d, b)| {
                                (d.to_string(), HomologyGroupDto { betti: b, torsion: vec![] })
                            })
                            .collect(),
                    }
                }
            };
            print_json(&out);
            if out.dims.is_empty() {
                eprintln!("(all reduced homology trivial)");
            } else {
                eprintln!("dim  betti  torsion");
                for (d, g) in &out.dims {
                    eprintln!("{d:>3}  {:>5}  {:?}", g.betti, g.torsion);
                }
            }
            Ok(0)
        }
        Command::Pi1 { base, simplify, input } => {
            let dto: ComplexDto = parse_json(&read_input(&input)?)?;
            let k = dto.to_complex()?;
            let mut p = edge_path_presentation(&k, base).map_err(|e| e.to_string())?;
            if simplify {
                let (q, cert) = tietze_simplify(&p, 20_000);
                eprintln!("simplification: {cert:?}");
                p = q;
            }
            let (rank, torsion) = abelianization_invariants(&p);
            print_json(&PresentationDto::from_presentation(&p));
            eprintln!(
                "generators: {}, relators: {}, abelianization: rank {rank}, torsion {torsion:?}",
                p.generator_count(),
                p.relators().len()
            );
            Ok(0)
        }
        Command::KpathEquiv { graph, k, loop1, loop2, max_len, max_states } => {
            let dto: GraphDto = parse_json(&read_input(&Some(graph))?)?;
            let g = dto.to_graph()?;
            let parse_loop = |s: &str| -> Result<GraphPath, String> {
                let vs: Result<Vec<u32>, _> =
                    s.split(',').map(|t| t.trim().parse::<u32>()).collect();
                let vs = vs.map_err(|e| format!("cannot parse loop \"{s}\": {e}"))?;
                GraphPath::new(&g, vs).map_err(|e| format!("invalid loop \"{s}\": {e}"))
            };
            let a = parse_loop(&loop1)?;
            let b = parse_loop(&loop2)?;
            match bounded_equivalence_graph(&g, &a, &b, k, max_len, max_states) {
                Equivalence::Equivalent(chain) => {
                    let witness: Vec<Vec<u32>> =
                        chain.iter().map(|p| p.vertices().to_vec()).collect();
                    print_json(&witness);
                    Ok(0)
                }
                Equivalence::Inconclusive => {
                    eprintln!("inconclusive within budget");
                    Ok(2)
                }
            }
        }
        Command::Metric { which } => match which {
            MetricCommand::Circle { n } => {
                if n == 0 {
                    return Err("need at least one sample point".into());
                }
                print_json(&MetricDto::from_metric(&circle_metric(&circle_sample(n))));
                Ok(0)
            }
        },
        Command::Cech { closed, r, input } => {
            let dto: MetricDto = parse_json(&read_input(&input)?)?;
            let x = dto.to_metric()?;
            let radius = parse_rational(&r)?;
            print_json(&ComplexDto::from_complex(&cech_complex(&x, radius, closed)));
            Ok(0)
        }
        Command::Verify { suite, seed, cases } => {
            let report = suites::run_suite(&suite, seed, cases)?;
            print_json(&report);
            Ok(suites::exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Keep clap's own exit behavior for --help/--version.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(3);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
