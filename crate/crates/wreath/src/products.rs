//! Graph products: Cartesian, lexicographic, wreath, and the poset-indexed
//! generalized wreath product, in both the plain-graph convention and the
//! Cayley-graph convention (argument tuples inverted coordinatewise).
//!
//! Generalized-product vertices are tuples of function tables, one table per
//! poset element `i`, mapping the vertex tuples of the strict ancestors of
//! `i` to a vertex of factor `i`. Tables are stored flat over the
//! lexicographic enumeration of their argument tuples (first axis most
//! significant, axes in declared poset order).

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::enumerate::{offset, MixedRadix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{FiniteGroup, GeneratingSet};
use crate::poset::Poset;

/// Default cap on materialized product sizes.
pub const DEFAULT_MAX_VERTICES: u64 = 1_000_000;

fn check_cap(what: &str, count: &BigUint, cap: u64) -> Result<usize> {
    if *count > BigUint::from(cap) {
        return Err(Error::size_cap(what, count, cap));
    }
    Ok(count.try_into().expect("count fits after cap check"))
}

fn pair_label(a: &str, b: &str) -> String {
    serde_json::to_string(&(a, b)).expect("string pair serializes")
}

/// Cartesian product: `(v1,v2) ~ (w1,w2)` iff the vertices agree in one
/// coordinate and are adjacent in the other.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    cartesian_product_capped(g1, g2, DEFAULT_MAX_VERTICES)
}

pub fn cartesian_product_capped(g1: &Graph, g2: &Graph, cap: u64) -> Result<Graph> {
    let count = BigUint::from(g1.vertex_count()) * BigUint::from(g2.vertex_count());
    check_cap("cartesian product vertices", &count, cap)?;
    let mut vertices = Vec::new();
    for a in g1.vertices() {
        for b in g2.vertices() {
            vertices.push(pair_label(a, b));
        }
    }
    let mut edges = Vec::new();
    for (u, a) in g1.vertices().iter().enumerate() {
        for (v, b) in g2.vertices().iter().enumerate() {
            for &w in g2.neighbors_idx(v) {
                if v < w {
                    edges.push((pair_label(a, b), pair_label(a, g2.label(w))));
                }
            }
            for &w in g1.neighbors_idx(u) {
                if u < w {
                    edges.push((pair_label(a, b), pair_label(g1.label(w), b)));
                }
            }
        }
    }
    Graph::new(vertices, &edges)
}

/// Lexicographic product: `(v1,v2) ~ (w1,w2)` iff `v1 ~ w1`, or `v1 = w1`
/// and `v2 ~ w2`.
pub fn lexicographic_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    lexicographic_product_capped(g1, g2, DEFAULT_MAX_VERTICES)
}

pub fn lexicographic_product_capped(g1: &Graph, g2: &Graph, cap: u64) -> Result<Graph> {
    let count = BigUint::from(g1.vertex_count()) * BigUint::from(g2.vertex_count());
    check_cap("lexicographic product vertices", &count, cap)?;
    let mut vertices = Vec::new();
    for a in g1.vertices() {
        for b in g2.vertices() {
            vertices.push(pair_label(a, b));
        }
    }
    let mut edges = Vec::new();
    for (u, a) in g1.vertices().iter().enumerate() {
        for (v, b) in g2.vertices().iter().enumerate() {
            for &w in g1.neighbors_idx(u) {
                if u < w {
                    for c in g2.vertices() {
                        edges.push((pair_label(a, b), pair_label(g1.label(w), c)));
                    }
                }
            }
            for &w in g2.neighbors_idx(v) {
                if v < w {
                    edges.push((pair_label(a, b), pair_label(a, g2.label(w))));
                }
            }
        }
    }
    Graph::new(vertices, &edges)
}

/// Wreath product of graphs: vertices are pairs `(f, v)` with
/// `f : V1 -> V2` and `v` in `V1`. First-type edges move `f` at the single
/// argument `v` along an edge of `g2`; second-type edges move `v` along an
/// edge of `g1`.
pub fn wreath_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    wreath_product_capped(g1, g2, DEFAULT_MAX_VERTICES)
}

pub fn wreath_product_capped(g1: &Graph, g2: &Graph, cap: u64) -> Result<Graph> {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let exponent = u32::try_from(n1)
        .map_err(|_| Error::size_cap("wreath product exponent", n1, u32::MAX as u64))?;
    let count = BigUint::from(n2).pow(exponent) * BigUint::from(n1);
    check_cap("wreath product vertices", &count, cap)?;

    let label = |f: &[usize], v: usize| -> String {
        let fun: Vec<&str> = f.iter().map(|&i| g2.label(i)).collect();
        serde_json::to_string(&(fun, g1.label(v))).expect("labels serialize")
    };
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for f in MixedRadix::new(vec![n2; n1]) {
        for v in 0..n1 {
            vertices.push(label(&f, v));
            // first type: change f at v along an edge of g2
            for &w in g2.neighbors_idx(f[v]) {
                if f[v] < w {
                    let mut altered = f.clone();
                    altered[v] = w;
                    edges.push((label(&f, v), label(&altered, v)));
                }
            }
            // second type: move v along an edge of g1
            for &u in g1.neighbors_idx(v) {
                if v < u {
                    edges.push((label(&f, v), label(&f, u)));
                }
            }
        }
    }
    Graph::new(vertices, &edges)
}

/// JSON form of one function table of a generalized-product vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableJson {
    pub index: String,
    pub values: Vec<String>,
}

/// A vertex of a generalized wreath product: one flat function table per
/// poset element, entries indexing vertices of the corresponding factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GwpVertex {
    pub(crate) tables: Vec<Vec<usize>>,
}

impl GwpVertex {
    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }
}

/// A generalized wreath product of graphs over a poset.
#[derive(Debug, Clone)]
pub struct GwpSpec {
    poset: Poset,
    factors: Vec<Graph>,
    /// axes[i] = indices of the strict ancestors of i, ascending
    axes: Vec<Vec<usize>>,
    /// radices[i] = factor sizes along axes[i]
    radices: Vec<Vec<usize>>,
    table_len: Vec<usize>,
    eval_order: Vec<usize>,
}

impl GwpSpec {
    pub fn new(poset: Poset, factors: Vec<Graph>) -> Result<GwpSpec> {
        if factors.len() != poset.len() {
            return Err(Error::Schema(format!(
                "expected {} factors, got {}",
                poset.len(),
                factors.len()
            )));
        }
        for (i, f) in factors.iter().enumerate() {
            if f.vertex_count() == 0 {
                return Err(Error::Schema(format!(
                    "factor `{}` has no vertices",
                    poset.elements()[i]
                )));
            }
        }
        let n = poset.len();
        let axes: Vec<Vec<usize>> = (0..n).map(|i| poset.ancestors_idx(i)).collect();
        let radices: Vec<Vec<usize>> = axes
            .iter()
            .map(|axis| axis.iter().map(|&j| factors[j].vertex_count()).collect())
            .collect();
        let mut table_len = Vec::with_capacity(n);
        for (i, r) in radices.iter().enumerate() {
            let len = MixedRadix::count(r)
                .filter(|&l| l <= MAX_TABLE_LEN)
                .ok_or_else(|| {
                    Error::size_cap(
                        &format!("function table for `{}`", poset.elements()[i]),
                        "overflow",
                        MAX_TABLE_LEN as u64,
                    )
                })?;
            table_len.push(len);
        }
        let eval_order = poset.linear_extension_idx();
        Ok(GwpSpec {
            poset,
            factors,
            axes,
            radices,
            table_len,
            eval_order,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn table_len(&self, i: usize) -> usize {
        self.table_len[i]
    }

    /// Exact number of vertices, `prod_i |V_i| ^ |args_i|`.
    pub fn vertex_count(&self) -> BigUint {
        let mut count = BigUint::from(1u8);
        for i in 0..self.poset.len() {
            count *=
                BigUint::from(self.factors[i].vertex_count()).pow(self.table_len[i] as u32);
        }
        count
    }

    /// Recursive self-evaluation of every coordinate: coordinate `i` is its
    /// table applied to the evaluations of its strict ancestors.
    pub fn eval_all(&self, v: &GwpVertex) -> Vec<usize> {
        let mut evals = vec![usize::MAX; self.poset.len()];
        for &i in &self.eval_order {
            let digits: Vec<usize> = self.axes[i].iter().map(|&j| evals[j]).collect();
            evals[i] = v.tables[i][offset(&self.radices[i], &digits)];
        }
        evals
    }

    /// The evaluation of coordinate `label`, as a factor vertex label.
    pub fn eval(&self, v: &GwpVertex, label: &str) -> Result<String> {
        let i = self
            .poset
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let evals = self.eval_all(v);
        Ok(self.factors[i].label(evals[i]).to_string())
    }

    /// Lazy adjacency: each neighbor replaces one table entry, at the
    /// argument tuple given by the self-evaluation, with an adjacent factor
    /// vertex. Ordered by poset element, then factor neighbor order.
    pub fn neighbors(&self, v: &GwpVertex) -> Vec<GwpVertex> {
        let evals = self.eval_all(v);
        let mut out = Vec::new();
        for i in 0..self.poset.len() {
            let digits: Vec<usize> = self.axes[i].iter().map(|&j| evals[j]).collect();
            let off = offset(&self.radices[i], &digits);
            for &w in self.factors[i].neighbors_idx(v.tables[i][off]) {
                let mut nv = v.clone();
                nv.tables[i][off] = w;
                out.push(nv);
            }
        }
        out
    }

    fn flat_radices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.poset.len() {
            out.extend(std::iter::repeat_n(
                self.factors[i].vertex_count(),
                self.table_len[i],
            ));
        }
        out
    }

    fn vertex_from_flat(&self, digits: &[usize]) -> GwpVertex {
        let mut tables = Vec::with_capacity(self.poset.len());
        let mut pos = 0;
        for &len in &self.table_len {
            tables.push(digits[pos..pos + len].to_vec());
            pos += len;
        }
        GwpVertex { tables }
    }

    fn rank_of(&self, v: &GwpVertex) -> usize {
        let radices = self.flat_radices();
        let digits: Vec<usize> = v.tables.iter().flatten().copied().collect();
        offset(&radices, &digits)
    }

    /// All vertices in enumeration order: tables in poset order, each table
    /// lexicographic over arguments, entries in factor vertex order.
    pub fn enumerate(&self) -> Result<Vec<GwpVertex>> {
        self.enumerate_capped(DEFAULT_MAX_VERTICES)
    }

    pub fn enumerate_capped(&self, cap: u64) -> Result<Vec<GwpVertex>> {
        check_cap(
            "generalized wreath product vertices",
            &self.vertex_count(),
            cap,
        )?;
        Ok(MixedRadix::new(self.flat_radices())
            .map(|digits| self.vertex_from_flat(&digits))
            .collect())
    }

    /// Materializes the product graph; adjacency agrees with
    /// [`Self::neighbors`] on every vertex.
    pub fn materialize(&self) -> Result<Graph> {
        self.materialize_capped(DEFAULT_MAX_VERTICES)
    }

    pub fn materialize_capped(&self, cap: u64) -> Result<Graph> {
        self.materialize_with(|v| self.neighbors(v), cap)
    }

    fn materialize_with<F>(&self, neighbors: F, cap: u64) -> Result<Graph>
    where
        F: Fn(&GwpVertex) -> Vec<GwpVertex>,
    {
        check_cap(
            "generalized wreath product vertices",
            &self.vertex_count(),
            cap,
        )?;
        let labels: Vec<String> = MixedRadix::new(self.flat_radices())
            .map(|digits| self.vertex_label(&self.vertex_from_flat(&digits)))
            .collect();
        let mut edges = Vec::new();
        for (rank, digits) in MixedRadix::new(self.flat_radices()).enumerate() {
            let v = self.vertex_from_flat(&digits);
            for nb in neighbors(&v) {
                let other = self.rank_of(&nb);
                if rank < other {
                    edges.push((labels[rank].clone(), labels[other].clone()));
                }
            }
        }
        Graph::new(labels, &edges)
    }

    /// Builds a vertex from per-table value labels, in poset element order.
    pub fn vertex<S: AsRef<str>>(&self, tables: &[Vec<S>]) -> Result<GwpVertex> {
        if tables.len() != self.poset.len() {
            return Err(Error::VertexNotInProduct(format!(
                "expected {} tables, got {}",
                self.poset.len(),
                tables.len()
            )));
        }
        let mut out = Vec::with_capacity(tables.len());
        for (i, values) in tables.iter().enumerate() {
            if values.len() != self.table_len[i] {
                return Err(Error::VertexNotInProduct(format!(
                    "table `{}` expects {} values, got {}",
                    self.poset.elements()[i],
                    self.table_len[i],
                    values.len()
                )));
            }
            let mut row = Vec::with_capacity(values.len());
            for val in values {
                row.push(
                    self.factors[i]
                        .index_of(val.as_ref())
                        .ok_or_else(|| Error::UnknownLabel(val.as_ref().to_string()))?,
                );
            }
            out.push(row);
        }
        Ok(GwpVertex { tables: out })
    }

    /// Canonical vertex label: a JSON array with one entry per poset element,
    /// a bare value for coordinates without ancestors and an array of values
    /// otherwise.
    pub fn vertex_label(&self, v: &GwpVertex) -> String {
        let entries: Vec<serde_json::Value> = (0..self.poset.len())
            .map(|i| {
                if self.axes[i].is_empty() {
                    serde_json::Value::String(self.factors[i].label(v.tables[i][0]).to_string())
                } else {
                    serde_json::Value::Array(
                        v.tables[i]
                            .iter()
                            .map(|&x| {
                                serde_json::Value::String(self.factors[i].label(x).to_string())
                            })
                            .collect(),
                    )
                }
            })
            .collect();
        serde_json::to_string(&entries).expect("labels serialize")
    }

    /// The tables of a vertex with labels resolved, as used in the JSON
    /// command-line format.
    pub fn vertex_tables(&self, v: &GwpVertex) -> Vec<TableJson> {
        (0..self.poset.len())
            .map(|i| TableJson {
                index: self.poset.elements()[i].clone(),
                values: v.tables[i]
                    .iter()
                    .map(|&x| self.factors[i].label(x).to_string())
                    .collect(),
            })
            .collect()
    }

    /// The table-object JSON form used on the command line.
    pub fn vertex_to_json(&self, v: &GwpVertex) -> String {
        serde_json::to_string(&self.vertex_tables(v)).expect("tables serialize")
    }

    pub fn vertex_from_json(&self, text: &str) -> Result<GwpVertex> {
        let tables: Vec<TableJson> =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let mut by_index: Vec<Option<Vec<String>>> = vec![None; self.poset.len()];
        for t in tables {
            let i = self
                .poset
                .index_of(&t.index)
                .ok_or_else(|| Error::Schema(format!("unknown table index `{}`", t.index)))?;
            if by_index[i].replace(t.values).is_some() {
                return Err(Error::Schema(format!("duplicate table index `{}`", t.index)));
            }
        }
        let mut rows = Vec::with_capacity(self.poset.len());
        for (i, row) in by_index.into_iter().enumerate() {
            rows.push(row.ok_or_else(|| {
                Error::VertexNotInProduct(format!(
                    "missing table for index `{}`",
                    self.poset.elements()[i]
                ))
            })?);
        }
        self.vertex(&rows)
    }
}

/// A generalized wreath product of Cayley graphs in the group convention:
/// table arguments are the coordinatewise inverses of the recursive
/// evaluations.
#[derive(Debug, Clone)]
pub struct CayleyGwpSpec {
    groups: Vec<FiniteGroup>,
    gensets: Vec<GeneratingSet>,
    inner: GwpSpec,
}

impl CayleyGwpSpec {
    pub fn new(poset: Poset, factors: Vec<(FiniteGroup, GeneratingSet)>) -> Result<CayleyGwpSpec> {
        let mut groups = Vec::with_capacity(factors.len());
        let mut gensets = Vec::with_capacity(factors.len());
        let mut graphs = Vec::with_capacity(factors.len());
        for (g, s) in factors {
            graphs.push(g.cayley_graph(&s));
            groups.push(g);
            gensets.push(s);
        }
        Ok(CayleyGwpSpec {
            groups,
            gensets,
            inner: GwpSpec::new(poset, graphs)?,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.inner.poset
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn gensets(&self) -> &[GeneratingSet] {
        &self.gensets
    }

    /// The same vertex universe viewed as a plain generalized wreath product
    /// of the Cayley graphs.
    pub fn as_graph_spec(&self) -> &GwpSpec {
        &self.inner
    }

    pub fn vertex_count(&self) -> BigUint {
        self.inner.vertex_count()
    }

    /// Recursive evaluation with inverted arguments: coordinate `i` is its
    /// table applied to the inverses of the ancestor evaluations.
    pub fn eval_inv_all(&self, v: &GwpVertex) -> Vec<usize> {
        let mut evals = vec![usize::MAX; self.inner.poset.len()];
        for &i in &self.inner.eval_order {
            let digits: Vec<usize> = self.inner.axes[i]
                .iter()
                .map(|&j| self.groups[j].inv_idx(evals[j]))
                .collect();
            evals[i] = v.tables[i][offset(&self.inner.radices[i], &digits)];
        }
        evals
    }

    pub fn eval_inv(&self, v: &GwpVertex, label: &str) -> Result<String> {
        let i = self
            .inner
            .poset
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let evals = self.eval_inv_all(v);
        Ok(self.groups[i].element(evals[i]).to_string())
    }

    /// Lazy adjacency in the group convention: one table entry changes, at
    /// the inverted-evaluation argument, along an edge of the Cayley factor.
    pub fn neighbors(&self, v: &GwpVertex) -> Vec<GwpVertex> {
        let evals = self.eval_inv_all(v);
        let mut out = Vec::new();
        for i in 0..self.inner.poset.len() {
            let digits: Vec<usize> = self.inner.axes[i]
                .iter()
                .map(|&j| self.groups[j].inv_idx(evals[j]))
                .collect();
            let off = offset(&self.inner.radices[i], &digits);
            for &w in self.inner.factors[i].neighbors_idx(v.tables[i][off]) {
                let mut nv = v.clone();
                nv.tables[i][off] = w;
                out.push(nv);
            }
        }
        out
    }

    pub fn materialize(&self) -> Result<Graph> {
        self.materialize_capped(DEFAULT_MAX_VERTICES)
    }

    pub fn materialize_capped(&self, cap: u64) -> Result<Graph> {
        self.inner.materialize_with(|v| self.neighbors(v), cap)
    }

    pub fn enumerate_capped(&self, cap: u64) -> Result<Vec<GwpVertex>> {
        self.inner.enumerate_capped(cap)
    }

    pub fn vertex_label(&self, v: &GwpVertex) -> String {
        self.inner.vertex_label(v)
    }

    pub fn vertex_tables(&self, v: &GwpVertex) -> Vec<TableJson> {
        self.inner.vertex_tables(v)
    }

    pub fn vertex_to_json(&self, v: &GwpVertex) -> String {
        self.inner.vertex_to_json(v)
    }

    pub fn vertex_from_json(&self, text: &str) -> Result<GwpVertex> {
        self.inner.vertex_from_json(text)
    }
}
