//! Command-line front end: build graph products, report their exact sizes,
//! enumerate neighbors lazily, verify the Cayley-graph identity, and test
//! graph isomorphism.
//!
//! Exit codes: 0 success/verified, 1 negative result, 2 input error,
//! 3 size cap exceeded, 4 domain error, 5 verification failure.

mod config;

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use wreath::graph::Graph;
use wreath::gwp::verify_cayley_theorem_capped;
use wreath::iso::{isomorphism_with_cap, DEFAULT_ISO_CAP};
use wreath::products::{
    cartesian_product_capped, lexicographic_product_capped, wreath_product_capped, CayleyGwpSpec,
    GwpSpec, TableJson,
};
use wreath::Error;

use config::{resolve, ProductKind, Resolved};

#[derive(Parser)]
#[command(name = "wreath", version, about = "Graph products and generalized wreath products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize the configured product as edge-list JSON or DOT
    Build {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the materialization cap from the config
        #[arg(long)]
        max_vertices: Option<u64>,
    },
    /// Report exact vertex count and degree without materializing
    Stats { config: PathBuf },
    /// List the neighbors of one vertex of a generalized product
    Neighbors {
        config: PathBuf,
        /// Vertex as a JSON array of {"index","values"} tables
        #[arg(long)]
        vertex: String,
    },
    /// Check that the product of the Cayley graphs is the Cayley graph of
    /// the product group
    VerifyTheorem {
        config: PathBuf,
        #[arg(long)]
        max_vertices: Option<u64>,
    },
    /// Test two edge-list JSON graphs for isomorphism
    Iso {
        graph1: PathBuf,
        graph2: PathBuf,
        #[arg(long)]
        max_vertices: Option<u64>,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeCap { .. } => 3,
        Error::VertexNotInProduct(_)
        | Error::BadPoint(_)
        | Error::UnknownPoint(_)
        | Error::NotAncestral(_) => 4,
        _ => 2,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load_config(path: &PathBuf) -> Result<Resolved, Failure> {
    Ok(resolve(&read_file(path)?)?)
}

#[derive(Serialize)]
struct FactorStats {
    index: String,
    vertices: u64,
    degree: Option<u64>,
}

#[derive(Serialize)]
struct StatsOutput {
    product: &'static str,
    vertices: String,
    degree: Option<u64>,
    factors: Vec<FactorStats>,
}

// wreath-product vertex counts grow as towers; exponents past this are
// refused rather than allocated
const MAX_STATS_EXPONENT: u64 = 1 << 20;

fn fold_counts(
    kind: ProductKind,
    sizes: &[(BigUint, Option<u64>)],
) -> Result<(BigUint, Option<u64>), Error> {
    let mut it = sizes.iter().cloned();
    let (mut n, mut d) = it.next().expect("poset is nonempty");
    for (n2, d2) in it {
        d = match (d, d2, kind) {
            (Some(d1), Some(d2), ProductKind::Lexicographic) => {
                u64::try_from(&n2).ok().map(|n2| d1 * n2 + d2)
            }
            (Some(d1), Some(d2), _) => Some(d1 + d2),
            _ => None,
        };
        n = match kind {
            ProductKind::Wreath => {
                let exponent = u64::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_STATS_EXPONENT)
                    .ok_or_else(|| Error::SizeCap {
                        what: "wreath product exponent".into(),
                        requested: n.to_string(),
                        cap: MAX_STATS_EXPONENT,
                    })?;
                n2.pow(exponent as u32) * n
            }
            _ => n * n2,
        };
    }
    Ok((n, d))
}

fn stats(resolved: &Resolved) -> Result<StatsOutput, Error> {
    let (vertices, degree, factors) = match resolved.kind {
        ProductKind::Cartesian | ProductKind::Lexicographic | ProductKind::Wreath => {
            let sizes: Vec<(BigUint, Option<u64>)> = resolved
                .graphs()
                .iter()
                .map(|g| {
                    (
                        BigUint::from(g.vertex_count()),
                        g.regular_degree().map(|d| d as u64),
                    )
                })
                .collect();
            let (n, d) = fold_counts(resolved.kind, &sizes)?;
            (n, d, factor_stats_graphs(resolved))
        }
        ProductKind::GeneralizedWreath => {
            let spec = GwpSpec::new(resolved.poset.clone(), resolved.graphs().to_vec())?;
            let degree = resolved
                .graphs()
                .iter()
                .map(|g| g.regular_degree().map(|d| d as u64))
                .try_fold(0u64, |acc, d| d.map(|d| acc + d));
            (spec.vertex_count(), degree, factor_stats_graphs(resolved))
        }
        ProductKind::GeneralizedWreathCayley => {
            let spec = CayleyGwpSpec::new(resolved.poset.clone(), resolved.groups().to_vec())?;
            let degree = resolved
                .groups()
                .iter()
                .map(|(_, s)| s.len() as u64)
                .sum::<u64>();
            let factors = resolved
                .poset
                .elements()
                .iter()
                .zip(resolved.groups())
                .map(|(label, (g, s))| FactorStats {
                    index: label.clone(),
                    vertices: g.order() as u64,
                    degree: Some(s.len() as u64),
                })
                .collect();
            (spec.vertex_count(), Some(degree), factors)
        }
    };
    Ok(StatsOutput {
        product: resolved.kind.as_str(),
        vertices: vertices.to_string(),
        degree,
        factors,
    })
}

fn factor_stats_graphs(resolved: &Resolved) -> Vec<FactorStats> {
    resolved
        .poset
        .elements()
        .iter()
        .zip(resolved.graphs())
        .map(|(label, g)| FactorStats {
            index: label.clone(),
            vertices: g.vertex_count() as u64,
            degree: g.regular_degree().map(|d| d as u64),
        })
        .collect()
}

fn fold_graphs<F>(graphs: &[Graph], cap: u64, op: F) -> Result<Graph, Error>
where
    F: Fn(&Graph, &Graph, u64) -> Result<Graph, Error>,
{
    let mut it = graphs.iter();
    let mut acc = it.next().expect("poset is nonempty").clone();
    for g in it {
        acc = op(&acc, g, cap)?;
    }
    Ok(acc)
}

fn build_graph(resolved: &Resolved, cap: u64) -> Result<Graph, Error> {
    match resolved.kind {
        ProductKind::Cartesian => fold_graphs(resolved.graphs(), cap, cartesian_product_capped),
        ProductKind::Lexicographic => {
            fold_graphs(resolved.graphs(), cap, lexicographic_product_capped)
        }
        ProductKind::Wreath => fold_graphs(resolved.graphs(), cap, wreath_product_capped),
        ProductKind::GeneralizedWreath => {
            GwpSpec::new(resolved.poset.clone(), resolved.graphs().to_vec())?
                .materialize_capped(cap)
        }
        ProductKind::GeneralizedWreathCayley => {
            CayleyGwpSpec::new(resolved.poset.clone(), resolved.groups().to_vec())?
                .materialize_capped(cap)
        }
    }
}

fn neighbors(resolved: &Resolved, vertex: &str) -> Result<Vec<Vec<TableJson>>, Error> {
    match resolved.kind {
        ProductKind::GeneralizedWreath => {
            let spec = GwpSpec::new(resolved.poset.clone(), resolved.graphs().to_vec())?;
            let v = spec.vertex_from_json(vertex)?;
            Ok(spec
                .neighbors(&v)
                .iter()
                .map(|n| spec.vertex_tables(n))
                .collect())
        }
        ProductKind::GeneralizedWreathCayley => {
            let spec = CayleyGwpSpec::new(resolved.poset.clone(), resolved.groups().to_vec())?;
            let v = spec.vertex_from_json(vertex)?;
            Ok(spec
                .neighbors(&v)
                .iter()
                .map(|n| spec.vertex_tables(n))
                .collect())
        }
        _ => Err(Error::Schema(format!(
            "neighbors requires a generalized product kind, got `{}`",
            resolved.kind.as_str()
        ))),
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Build {
            config,
            format,
            out,
            max_vertices,
        } => {
            let resolved = load_config(&config)?;
            let cap = max_vertices.unwrap_or(resolved.max_vertices);
            let graph = build_graph(&resolved, cap)?;
            let text = match format {
                OutputFormat::Json => format!("{}\n", graph.to_json()),
                OutputFormat::Dot => graph.to_dot(),
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Failure {
                    code: 2,
                    message: format!("cannot write {}: {e}", path.display()),
                })?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Stats { config } => {
            let resolved = load_config(&config)?;
            let out = stats(&resolved)?;
            println!("{}", serde_json::to_string(&out).expect("stats serialize"));
            Ok(0)
        }
        Command::Neighbors { config, vertex } => {
            let resolved = load_config(&config)?;
            let list = neighbors(&resolved, &vertex)?;
            println!("{}", serde_json::to_string(&list).expect("tables serialize"));
            Ok(0)
        }
        Command::VerifyTheorem {
            config,
            max_vertices,
        } => {
            let resolved = load_config(&config)?;
            if resolved.kind != ProductKind::GeneralizedWreathCayley {
                return Err(Failure {
                    code: 2,
                    message: format!(
                        "verify-theorem requires product kind `generalized-wreath-cayley`, got `{}`",
                        resolved.kind.as_str()
                    ),
                });
            }
            let cap = max_vertices.unwrap_or(resolved.max_vertices);
            let report = verify_cayley_theorem_capped(&resolved.poset, resolved.groups(), cap)?;
            println!("{}", serde_json::to_string(&report).expect("report serialize"));
            if report.passed() {
                Ok(0)
            } else {
                Err(Failure {
                    code: 5,
                    message: match &report.witness {
                        Some((a, b)) => format!("verification failed, witness edge {a} -- {b}"),
                        None => "verification failed".into(),
                    },
                })
            }
        }
        Command::Iso {
            graph1,
            graph2,
            max_vertices,
        } => {
            let g1 = Graph::from_json(&read_file(&graph1)?)?;
            let g2 = Graph::from_json(&read_file(&graph2)?)?;
            let cap = max_vertices
                .map(|c| usize::try_from(c).unwrap_or(usize::MAX))
                .unwrap_or(DEFAULT_ISO_CAP);
            match isomorphism_with_cap(&g1, &g2, cap)? {
                Some(map) => {
                    let witness: Vec<(&str, &str)> = map
                        .iter()
                        .enumerate()
                        .map(|(u, &v)| (g1.label(u), g2.label(v)))
                        .collect();
                    let doc = serde_json::json!({ "isomorphic": true, "witness": witness });
                    println!("{doc}");
                    Ok(0)
                }
                None => {
                    println!("{}", serde_json::json!({ "isomorphic": false }));
                    Ok(1)
                }
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    std::process::exit(code);
}
