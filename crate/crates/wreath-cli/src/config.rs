//! JSON product configuration: one schema covers the five product kinds.

use std::collections::BTreeMap;

use serde::Deserialize;
use wreath::graph::Graph;
use wreath::group::{FiniteGroup, GeneratingSet};
use wreath::poset::Poset;
use wreath::products::DEFAULT_MAX_VERTICES;
use wreath::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Wreath,
    GeneralizedWreath,
    GeneralizedWreathCayley,
}

impl ProductKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Wreath => "wreath",
            ProductKind::GeneralizedWreath => "generalized-wreath",
            ProductKind::GeneralizedWreathCayley => "generalized-wreath-cayley",
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductConfig {
    pub product: ProductKind,
    pub poset: PosetConfig,
    pub factors: BTreeMap<String, FactorConfig>,
    #[serde(default)]
    pub max_vertices: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetConfig {
    pub elements: Vec<String>,
    /// cover pairs ordered [upper, lower], upper strictly above lower
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorConfig {
    Graph {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
    Group {
        group: GroupConfig,
        generators: Vec<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupConfig {
    Cyclic {
        order: u64,
    },
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
        identity: String,
    },
}

/// A parsed and validated configuration, factors resolved per kind.
pub struct Resolved {
    pub kind: ProductKind,
    pub poset: Poset,
    pub factors: ResolvedFactors,
    pub max_vertices: u64,
}

pub enum ResolvedFactors {
    Graphs(Vec<Graph>),
    Groups(Vec<(FiniteGroup, GeneratingSet)>),
}

impl Resolved {
    pub fn graphs(&self) -> &[Graph] {
        match &self.factors {
            ResolvedFactors::Graphs(g) => g,
            ResolvedFactors::Groups(_) => unreachable!("kind resolved to graph factors"),
        }
    }

    pub fn groups(&self) -> &[(FiniteGroup, GeneratingSet)] {
        match &self.factors {
            ResolvedFactors::Groups(g) => g,
            ResolvedFactors::Graphs(_) => unreachable!("kind resolved to group factors"),
        }
    }
}

fn build_group(config: &GroupConfig) -> Result<FiniteGroup, Error> {
    match config {
        GroupConfig::Cyclic { order } => {
            if *order < 1 || *order > 4096 {
                return Err(Error::Schema(format!(
                    "cyclic group order must be between 1 and 4096, got {order}"
                )));
            }
            Ok(FiniteGroup::cyclic(*order as usize))
        }
        GroupConfig::Table {
            elements,
            table,
            identity,
        } => FiniteGroup::from_table(elements.clone(), table, identity),
    }
}

pub fn resolve(text: &str) -> Result<Resolved, Error> {
    let config: ProductConfig =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    let poset = Poset::from_covers(&config.poset.elements, &config.poset.covers)?;

    if config.factors.len() != poset.len() {
        return Err(Error::Schema(format!(
            "expected {} factors, got {}",
            poset.len(),
            config.factors.len()
        )));
    }
    let wants_groups = config.product == ProductKind::GeneralizedWreathCayley;
    let mut graphs = Vec::new();
    let mut groups = Vec::new();
    for label in poset.elements() {
        let factor = config
            .factors
            .get(label)
            .ok_or_else(|| Error::Schema(format!("missing factor for index `{label}`")))?;
        match (factor, wants_groups) {
            (FactorConfig::Graph { vertices, edges }, false) => {
                graphs.push(Graph::new(vertices.clone(), edges)?);
            }
            (FactorConfig::Group { group, generators }, true) => {
                let g = build_group(group)?;
                let s = g.validate_generating_set(generators)?;
                groups.push((g, s));
            }
            (FactorConfig::Graph { .. }, true) => {
                return Err(Error::Schema(format!(
                    "product kind `{}` needs a group factor at index `{label}`",
                    config.product.as_str()
                )));
            }
            (FactorConfig::Group { .. }, false) => {
                return Err(Error::Schema(format!(
                    "product kind `{}` needs a graph factor at index `{label}`",
                    config.product.as_str()
                )));
            }
        }
    }

    Ok(Resolved {
        kind: config.product,
        poset,
        factors: if wants_groups {
            ResolvedFactors::Groups(groups)
        } else {
            ResolvedFactors::Graphs(graphs)
        },
        max_vertices: config.max_vertices.unwrap_or(DEFAULT_MAX_VERTICES),
    })
}
