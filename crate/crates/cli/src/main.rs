//! `hgq` — command-line front end for the hypergraphic polytope toolkit.
//!
//! Reads hypergraphs as JSON (`{"n": 3, "edges": [[1,2],[2,3]]}`, 1-based
//! vertices, singleton edges added automatically unless strict mode is on),
//! runs the algebraic or geometric pipeline, and emits deterministic JSON.
//! Exit codes: 0 success, 1 input or usage error, 2 verification failure,
//! 3 size guard exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{Value, json};

use hypergraphic::hopf::{DEFAULT_ANTIPODE_GUARD, DEFAULT_PSI_GUARD, HopfElement, psi_q_guarded};
use hypergraphic::polytope::{DEFAULT_ORACLE_GUARD, HypergraphicPolytope};
use hypergraphic::verify::{
    EXHAUSTIVE_GUARD, all_hypergraphs_on_guarded, check_antipode_convolutions,
    check_coassociativity, check_counit, check_rank_equality_guarded,
};
use hypergraphic::{Error, Hypergraph, QPoly, families};

#[derive(Parser)]
#[command(
    name = "hgq",
    version,
    about = "Quasisymmetric invariants and f-polynomials of hypergraphic polytopes",
    subcommand_precedence_over_arg = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Require all singleton edges to be listed explicitly in the input.
    #[arg(long, global = true)]
    strict: bool,

    /// Raise (or lower) the size guard of the invoked operation.
    #[arg(long, global = true, value_name = "N")]
    guard_n: Option<usize>,

    /// Worker threads for verification sweeps (0 = automatic). Output is
    /// byte-identical regardless of this setting.
    #[arg(long, global = true, default_value_t = 0, value_name = "T")]
    threads: usize,

    /// Evaluate every polynomial in the output at this integer instead of
    /// emitting coefficient arrays.
    #[arg(long, global = true, value_name = "Q")]
    q: Option<i64>,

    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 17, value_name = "SEED")]
    seed: u64,

    /// Write the output document to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Quasisymmetric invariant of the input hypergraph.
    Psi {
        /// JSON input file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// f-polynomial via the invariant (algebraic pipeline).
    Fpoly {
        #[arg(default_value = "-")]
        input: String,
    },
    /// f-polynomial via the polytope (geometric pipeline).
    FpolyOracle {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Vertices of the hypergraphic polytope.
    Vertices {
        #[arg(default_value = "-")]
        input: String,
    },
    /// All faces of the hypergraphic polytope, with dimensions.
    Faces {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Coproduct of the basis element of the input hypergraph.
    Coproduct {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Antipode of the basis element of the input hypergraph.
    Antipode {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check geometric rank against splitting rank on every flag of every
    /// hypergraph on [n] (or of --random seeded samples).
    VerifyTheorem {
        n: usize,
        /// Check this many seeded random hypergraphs instead of all of them.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
    },
    /// Check coassociativity, counit, and antipode identities on every
    /// hypergraph on [n] (or of --random seeded samples).
    VerifyHopf {
        n: usize,
        /// Check this many seeded random hypergraphs instead of all of them.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
    },
    /// Build a named hypergraph family and chain into another command.
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Complete hypergraph on [n]: every nonempty subset is an edge.
    Complete {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// All k-element subsets of [n], plus singletons.
    Uniform {
        n: usize,
        k: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Pitman-Stanley hypergraph of dimension n (on n + 1 vertices).
    PitmanStanley {
        n: usize,
        #[command(subcommand)]
        action: Action,
    },
    /// Simple graph on [n]; edges like "1,2;2,3" (empty string for none).
    Graph {
        n: usize,
        edges: String,
        #[command(subcommand)]
        action: Action,
    },
    /// Simplicial complex on [n] from generating faces like "1,2,3;3,4".
    Complex {
        n: usize,
        facets: String,
        #[command(subcommand)]
        action: Action,
    },
}

#[derive(Subcommand, Clone, Copy)]
enum Action {
    /// Quasisymmetric invariant.
    Psi,
    /// f-polynomial via the invariant.
    Fpoly,
    /// f-polynomial via the polytope.
    FpolyOracle,
    /// Polytope vertices.
    Vertices,
    /// Polytope faces with dimensions.
    Faces,
    /// Coproduct of the basis element.
    Coproduct,
    /// Antipode of the basis element.
    Antipode,
}

/// A failure carrying the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let (document, code) = match &cli.command {
        Command::Psi { input } => (run_action(Action::Psi, &load(input, cli)?, cli)?, 0),
        Command::Fpoly { input } => (run_action(Action::Fpoly, &load(input, cli)?, cli)?, 0),
        Command::FpolyOracle { input } => {
            (run_action(Action::FpolyOracle, &load(input, cli)?, cli)?, 0)
        }
        Command::Vertices { input } => (run_action(Action::Vertices, &load(input, cli)?, cli)?, 0),
        Command::Faces { input } => (run_action(Action::Faces, &load(input, cli)?, cli)?, 0),
        Command::Coproduct { input } => {
            (run_action(Action::Coproduct, &load(input, cli)?, cli)?, 0)
        }
        Command::Antipode { input } => (run_action(Action::Antipode, &load(input, cli)?, cli)?, 0),
        Command::VerifyTheorem { n, random } => verify_theorem(*n, *random, cli)?,
        Command::VerifyHopf { n, random } => verify_hopf(*n, *random, cli)?,
        Command::Family(family) => (run_family(family, cli)?, 0),
    };
    let mut text = serde_json::to_string(&document).expect("documents are plain JSON");
    text.push('\n');
    match &cli.output {
        None => print!("{text}"),
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?,
    }
    Ok(code)
}

/// The accepted input document. `strict` may also be set per document.
#[derive(Deserialize)]
struct InputDocument {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    strict: bool,
}

fn load(input: &str, cli: &Cli) -> CliResult<Hypergraph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::input(format!("cannot read {input}: {e}")))?
    };
    let doc: InputDocument = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("malformed input document: {e}")))?;
    let add_singletons = !(doc.strict || cli.strict);
    Ok(Hypergraph::new(doc.n, &doc.edges, add_singletons)?)
}

fn run_family(family: &FamilyCommand, cli: &Cli) -> CliResult<Value> {
    let (h, action) = match family {
        FamilyCommand::Complete { n, action } => (families::complete(*n)?, action),
        FamilyCommand::Uniform { n, k, action } => (families::uniform(*n, *k)?, action),
        FamilyCommand::PitmanStanley { n, action } => (families::pitman_stanley(n + 1)?, action),
        FamilyCommand::Graph { n, edges, action } => {
            (families::from_graph(*n, &parse_pairs(edges)?)?, action)
        }
        FamilyCommand::Complex { n, facets, action } => (
            families::simplicial_complex(*n, &parse_vertex_lists(facets, "face")?)?,
            action,
        ),
    };
    run_action(*action, &h, cli)
}

fn parse_vertex_lists(text: &str, what: &str) -> CliResult<Vec<Vec<usize>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|v| {
                    v.trim().parse::<usize>().map_err(|_| {
                        Failure::input(format!("malformed {what} list: {part:?} in {text:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

fn parse_pairs(text: &str) -> CliResult<Vec<(usize, usize)>> {
    parse_vertex_lists(text, "edge")?
        .into_iter()
        .map(|pair| match pair.as_slice() {
            &[a, b] => Ok((a, b)),
            other => Err(Failure::input(format!(
                "graph edge {other:?} must have exactly two vertices"
            ))),
        })
        .collect()
}

fn poly_json(p: &QPoly, cli: &Cli) -> Value {
    match cli.q {
        None => json!(p),
        Some(q) => json!(p.eval(q)),
    }
}

fn hypergraph_json(h: &Hypergraph) -> Value {
    json!({"n": h.n(), "edges": h.edge_sets()})
}

fn run_action(action: Action, h: &Hypergraph, cli: &Cli) -> CliResult<Value> {
    let guard = |default: usize| cli.guard_n.unwrap_or(default);
    let oracle = || HypergraphicPolytope::from_hypergraph_guarded(h, guard(DEFAULT_ORACLE_GUARD));
    Ok(match action {
        Action::Psi => {
            let psi = psi_q_guarded(h, guard(DEFAULT_PSI_GUARD))?;
            let terms: Vec<Value> = psi
                .terms()
                .map(|(alpha, poly)| json!({"composition": alpha, "poly": poly_json(poly, cli)}))
                .collect();
            json!({"degree": psi.degree(), "terms": terms})
        }
        Action::Fpoly => {
            let f = psi_q_guarded(h, guard(DEFAULT_PSI_GUARD))?.f_polynomial();
            json!({"f": poly_json(&f, cli)})
        }
        Action::FpolyOracle => {
            let f = oracle()?.f_polynomial()?;
            json!({"f": poly_json(&f, cli)})
        }
        Action::Vertices => json!({"vertices": oracle()?.vertices()}),
        Action::Faces => {
            let faces: Vec<Value> = oracle()?
                .faces()?
                .into_iter()
                .map(|face| json!({"dim": face.dim, "vertex_ids": face.vertex_ids}))
                .collect();
            json!({"faces": faces})
        }
        Action::Coproduct => {
            let terms: Vec<Value> = HopfElement::basis(h)?
                .coproduct()?
                .terms()
                .map(|((left, right), poly)| {
                    json!({
                        "left": hypergraph_json(left),
                        "right": hypergraph_json(right),
                        "poly": poly_json(poly, cli),
                    })
                })
                .collect();
            json!({"terms": terms})
        }
        Action::Antipode => {
            let terms: Vec<Value> = HopfElement::basis(h)?
                .antipode_guarded(guard(DEFAULT_ANTIPODE_GUARD))?
                .terms()
                .map(|(class, poly)| {
                    json!({"hypergraph": hypergraph_json(class), "poly": poly_json(poly, cli)})
                })
                .collect();
            json!({"terms": terms})
        }
    })
}

/// A seeded random hypergraph on `[n]`: every subset with at least two
/// elements is an edge independently with probability 1/2.
fn random_hypergraph(n: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() >= 2 && rng.random_bool(0.5) {
            edges.push((1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect());
        }
    }
    Hypergraph::new(n, &edges, true).expect("sampled edges are valid")
}

fn sweep_instances(n: usize, random: Option<usize>, cli: &Cli) -> CliResult<Vec<Hypergraph>> {
    match random {
        None => Ok(all_hypergraphs_on_guarded(
            n,
            cli.guard_n.unwrap_or(EXHAUSTIVE_GUARD),
        )?),
        Some(count) => {
            if n == 0 {
                return Err(Failure::input(
                    "random sampling needs at least one vertex".to_string(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            Ok((0..count).map(|_| random_hypergraph(n, &mut rng)).collect())
        }
    }
}

fn thread_pool(cli: &Cli) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| Failure::input(format!("cannot build thread pool: {e}")))
}

fn verify_theorem(n: usize, random: Option<usize>, cli: &Cli) -> CliResult<(Value, u8)> {
    let instances = sweep_instances(n, random, cli)?;
    let oracle_guard = cli.guard_n.unwrap_or(DEFAULT_ORACLE_GUARD);
    let reports: Vec<_> = thread_pool(cli)?.install(|| {
        instances
            .par_iter()
            .map(|h| check_rank_equality_guarded(h, oracle_guard))
            .collect()
    });
    let mut checked = 0usize;
    let mut details = Vec::new();
    for (h, report) in instances.iter().zip(reports) {
        let report = report?;
        checked += report.flags_checked;
        for m in report.mismatches {
            details.push(json!({
                "hypergraph": hypergraph_json(h),
                "flag": m.flag.blocks(),
                "geometric": m.geometric,
                "split": m.split,
            }));
        }
    }
    report_document(checked, details)
}

type AxiomCheck = fn(&Hypergraph) -> hypergraphic::Result<bool>;

fn verify_hopf(n: usize, random: Option<usize>, cli: &Cli) -> CliResult<(Value, u8)> {
    let instances = sweep_instances(n, random, cli)?;
    let axioms: [(&str, AxiomCheck); 3] = [
        ("coassociativity", check_coassociativity),
        ("counit", check_counit),
        ("antipode", check_antipode_convolutions),
    ];
    let outcomes: Vec<hypergraphic::Result<Vec<&str>>> = thread_pool(cli)?.install(|| {
        instances
            .par_iter()
            .map(|h| {
                let mut failed = Vec::new();
                for (name, check) in axioms {
                    if !check(h)? {
                        failed.push(name);
                    }
                }
                Ok(failed)
            })
            .collect()
    });
    let mut checked = 0usize;
    let mut details = Vec::new();
    for (h, outcome) in instances.iter().zip(outcomes) {
        checked += axioms.len();
        for axiom in outcome? {
            details.push(json!({"hypergraph": hypergraph_json(h), "axiom": axiom}));
        }
    }
    report_document(checked, details)
}

fn report_document(checked: usize, details: Vec<Value>) -> CliResult<(Value, u8)> {
    if details.is_empty() {
        Ok((json!({"checked": checked, "mismatches": 0}), 0))
    } else {
        Ok((
            json!({"checked": checked, "mismatches": details.len(), "details": details}),
            2,
        ))
    }
}
