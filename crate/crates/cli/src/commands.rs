//! Subcommands of the `clusterkit` binary.
//!
//! Each command returns its standard output as a string so the commands can
//! be driven from tests without spawning a process.

use clap::{Parser, Subcommand};
use clusterkit::clustercat::{cc_expand, chi_oracle, subvectors, CatError};
use clusterkit::polygon::{diagonals, fan, triangulations};
use clusterkit::qp::{mutate_qp, QpError, QP};
use clusterkit::quiver::{MutationClass, Quiver};
use clusterkit::repn::build_indecomposable;
use clusterkit::seed::{exchange_graph, random_path, verify_path, GraphResult, PathVerdict, Seed, SeedError};
use rand::SeedableRng;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "clusterkit", version, about = "Exact cluster algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a mutation sequence to the initial seed of a quiver.
    Mutate {
        #[arg(short, long)]
        quiver: PathBuf,
        /// Comma-separated 1-indexed vertices, applied left to right.
        #[arg(short, long)]
        sequence: String,
        /// Print the seed as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the exchange graph.
    ExchangeGraph {
        #[arg(short, long)]
        quiver: PathBuf,
        #[arg(long)]
        max: Option<usize>,
        /// Also write the graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the mutation class up to isomorphism.
    MutationClass {
        #[arg(short, long)]
        quiver: PathBuf,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Classify the underlying diagram and decide mutation-finiteness.
    Classify {
        #[arg(short, long)]
        quiver: PathBuf,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Check the Laurent property and positivity along random mutation sequences.
    Check {
        #[arg(short, long)]
        quiver: PathBuf,
        #[arg(long)]
        laurent: bool,
        #[arg(long)]
        positivity: bool,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest exchange polynomial (in terms) to build.
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
    },
    /// Caldero–Chapoton expansion of an indecomposable module.
    Cc {
        #[arg(short, long)]
        quiver: PathBuf,
        /// Dimension vector, comma-separated.
        #[arg(short, long)]
        module: String,
    },
    /// Mutate a quiver with potential.
    QpMutate {
        #[arg(short, long)]
        file: PathBuf,
        /// 1-indexed vertex.
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Diagonals and triangulations of a polygon.
    Polygon {
        #[arg(long)]
        ngon: usize,
        /// List every triangulation.
        #[arg(long)]
        enumerate: bool,
        /// Write the fan triangulation as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Snapshot file, loaded at startup and written on shutdown.
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
}

pub const DEFAULT_TERM_BUDGET: usize = 20_000;

/// Default BFS cap, overridable with `CF_MAX_NODES`.
pub fn default_max_nodes() -> usize {
    std::env::var("CF_MAX_NODES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000)
}

#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 1.
    Input(String),
    /// Exit code 2.
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Limit(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Limit(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn seed_error(e: SeedError) -> CliError {
    match e {
        SeedError::ScaleExceeded { .. } => CliError::Limit(e.to_string()),
        e => input(e),
    }
}

pub fn read_quiver(path: &Path) -> Result<Quiver, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Quiver::from_json_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn parse_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<i64>().map_err(|_| input(format!("bad number {p:?}"))))
        .collect()
}

/// Runs every command except `serve`.
pub fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Mutate { quiver, sequence, json } => {
            let q = read_quiver(quiver)?;
            let mut s = Seed::initial(&q);
            for k in parse_list(sequence)? {
                if k < 1 || k as usize > q.n() {
                    return Err(input(format!("vertex {k} is not a mutable vertex")));
                }
                s = s.mutate_bounded(k as usize - 1, 1_000_000).map_err(seed_error)?;
            }
            Ok(if *json {
                serde_json::to_string_pretty(&s.to_json()).expect("serialisable") + "\n"
            } else {
                format!("cluster: [{}]\nquiver: {}\n", s.cluster_strings().join(", "), s.quiver())
            })
        }
        Command::ExchangeGraph { quiver, max, dot, json } => {
            let q = read_quiver(quiver)?;
            let max = max.unwrap_or_else(default_max_nodes);
            match exchange_graph(&Seed::initial(&q), max).map_err(seed_error)? {
                GraphResult::Finite(g) => {
                    if let Some(path) = dot {
                        std::fs::write(path, g.to_dot()).map_err(input)?;
                    }
                    if *json {
                        Ok(serde_json::to_string_pretty(&g.to_json()).expect("serialisable") + "\n")
                    } else {
                        Ok(format!("{} seeds, {} cluster variables\n", g.len(), g.variables().len()))
                    }
                }
                GraphResult::ExceededLimit => Err(CliError::Limit(format!("more than {max} seeds"))),
            }
        }
        Command::MutationClass { quiver, max } => {
            let q = read_quiver(quiver)?;
            let max = max.unwrap_or_else(default_max_nodes);
            match q.mutation_class(max) {
                MutationClass::Finite(class) => {
                    let mut out = format!("{} quivers up to isomorphism\n", class.len());
                    for c in &class {
                        let _ = writeln!(out, "  {c}");
                    }
                    Ok(out)
                }
                MutationClass::ExceededLimit => Err(CliError::Limit(format!("more than {max} quivers"))),
            }
        }
        Command::Classify { quiver, max } => {
            let q = read_quiver(quiver)?;
            let max = max.unwrap_or_else(default_max_nodes);
            Ok(format!(
                "{}; mutation class: {}\n",
                q.principal_part().classify_diagram(),
                q.is_mutation_finite(max)
            ))
        }
        Command::Check {
            quiver,
            laurent,
            positivity,
            depth,
            trials,
            seed,
            budget,
        } => {
            let q = read_quiver(quiver)?;
            if q.n() == 0 {
                return Err(input("quiver has no mutable vertices"));
            }
            let mut rng = rand::rngs::StdRng::seed_from_u64(*seed);
            let (mut ok, mut exceeded, mut bad) = (0, 0, Vec::new());
            for t in 0..*trials {
                let path = random_path(q.n(), *depth, &mut rng);
                match verify_path(&q, &path, *budget, &mut rng).map_err(seed_error)? {
                    PathVerdict::Verified => ok += 1,
                    PathVerdict::ScaleExceeded { .. } => exceeded += 1,
                    PathVerdict::NotLaurent { step } if *laurent || !*positivity => {
                        bad.push(format!("trial {t}: not Laurent at step {}", step + 1))
                    }
                    PathVerdict::NotPositive { step } if *positivity || !*laurent => {
                        bad.push(format!("trial {t}: negative coefficient at step {}", step + 1))
                    }
                    _ => ok += 1,
                }
            }
            let summary = format!(
                "{ok}/{trials} sequences verified, {exceeded} exceeded the {budget}-term budget, {} counterexamples\n",
                bad.len()
            );
            if !bad.is_empty() {
                return Err(input(format!("{summary}{}", bad.join("\n"))));
            }
            if exceeded > 0 {
                return Err(CliError::Limit(summary.trim_end().to_string()));
            }
            Ok(summary)
        }
        Command::Cc { quiver, module } => {
            let q = read_quiver(quiver)?;
            let m = parse_list(module)?;
            let rep = build_indecomposable(&q, &m).map_err(input)?;
            let mut chi = BTreeMap::new();
            for e in subvectors(&m) {
                let c = chi_oracle(&rep, &e).map_err(|err| match err {
                    CatError::ScaleExceeded(_) => CliError::Limit(err.to_string()),
                    err => input(err),
                })?;
                if c != 0 {
                    chi.insert(e, c);
                }
            }
            Ok(format!("{}\n", cc_expand(&q, &m, &chi)))
        }
        Command::QpMutate { file, k, max_degree, json } => {
            let text = std::fs::read_to_string(file).map_err(|e| input(format!("{}: {e}", file.display())))?;
            let qp = QP::from_json_str(&text).map_err(input)?;
            if *k < 1 {
                return Err(input("vertices are 1-indexed"));
            }
            let out = mutate_qp(&qp, k - 1, *max_degree).map_err(|e| match e {
                QpError::ReductionIncomplete(_) => CliError::Limit(e.to_string()),
                e => input(e),
            })?;
            Ok(if *json {
                serde_json::to_string_pretty(&out.to_json()).expect("serialisable") + "\n"
            } else {
                format!("{out}\n")
            })
        }
        Command::Polygon { ngon, enumerate, svg } => {
            let ds = diagonals(*ngon).map_err(input)?;
            let ts = triangulations(*ngon).map_err(input)?;
            let mut out = format!("{} diagonals, {} triangulations\n", ds.len(), ts.len());
            if *enumerate {
                for t in &ts {
                    let _ = writeln!(out, "  {t}");
                }
            }
            if let Some(path) = svg {
                std::fs::write(path, fan(*ngon).map_err(input)?.to_svg(None)).map_err(input)?;
            }
            Ok(out)
        }
        Command::Serve { .. } => Err(input("serve is handled by the binary")),
    }
}
