//! Finite simple undirected graphs with deterministic vertex ordering,
//! plus DOT and edge-list JSON serialization.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices keep their declared order; neighbor
/// lists are stored as sorted vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeListJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    /// Builds a graph from vertex labels and edge pairs. Loops are rejected,
    /// parallel edges are deduplicated.
    pub fn new<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S)]) -> Result<Graph> {
        let mut index = HashMap::new();
        for v in &vertices {
            if index.insert(v.clone(), index.len()).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (a, b) in edges {
            let u = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let v = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            if u == v {
                return Err(Error::LoopEdge(a.as_ref().to_string()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            vertices,
            index,
            adj,
        })
    }

    pub fn complete(labels: &[&str]) -> Graph {
        let vertices: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                edges.push((labels[i], labels[j]));
            }
        }
        Graph::new(vertices, &edges).expect("distinct labels")
    }

    pub fn cycle(labels: &[&str]) -> Graph {
        let vertices: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let n = labels.len();
        let edges: Vec<(&str, &str)> = (0..n).map(|i| (labels[i], labels[(i + 1) % n])).collect();
        Graph::new(vertices, &edges).expect("distinct labels")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbors_idx(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Neighbor labels of `v`, sorted by vertex index.
    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>> {
        let i = self
            .index_of(v)
            .ok_or_else(|| Error::UnknownLabel(v.to_string()))?;
        Ok(self.adj[i].iter().map(|&j| self.vertices[j].as_str()).collect())
    }

    pub fn has_edge_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(u), Some(v)) => self.has_edge_idx(u, v),
            _ => false,
        }
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges_idx(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Partition of the vertices into connected components. Components appear
    /// in order of their smallest vertex index; members are sorted.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = queue.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp.into_iter().map(|i| self.vertices[i].clone()).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// DOT text in undirected `graph { "a" -- "b"; }` form, vertices and
    /// edges in deterministic order.
    pub fn to_dot(&self) -> String {
        fn quoted(label: &str) -> String {
            let mut s = String::with_capacity(label.len() + 2);
            s.push('"');
            for c in label.chars() {
                if c == '"' || c == '\\' {
                    s.push('\\');
                }
                s.push(c);
            }
            s.push('"');
            s
        }
        let mut out = String::from("graph {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {};", quoted(v));
        }
        for (u, v) in self.edges_idx() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                quoted(&self.vertices[u]),
                quoted(&self.vertices[v])
            );
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list JSON `{"vertices":[...],"edges":[[a,b],...]}` with edges
    /// listed as `(u, v)`, `u` before `v` in vertex order.
    pub fn to_json(&self) -> String {
        let doc = EdgeListJson {
            vertices: self.vertices.clone(),
            edges: self
                .edges_idx()
                .into_iter()
                .map(|(u, v)| (self.vertices[u].clone(), self.vertices[v].clone()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: EdgeListJson =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Graph::new(doc.vertices, &doc.edges)
    }
}
