//! Canonical JSON and DOT serializations.
//!
//! JSON is `{"adj":[[...]],"kind":"...","n":N}` with keys in sorted order,
//! ascending adjacency lists and a single trailing LF. For `dpower` the lists
//! hold out-neighbours.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{DiGraph, Graph, GraphKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub adj: Vec<Vec<usize>>,
    pub kind: GraphKind,
    pub n: usize,
}

impl GraphJson {
    pub fn from_graph(kind: GraphKind, g: &Graph) -> Self {
        Self {
            adj: (0..g.vertex_count())
                .map(|v| g.neighbors(v).collect())
                .collect(),
            kind,
            n: g.vertex_count(),
        }
    }

    pub fn from_digraph(d: &DiGraph) -> Self {
        Self {
            adj: (0..d.vertex_count())
                .map(|v| d.out_neighbors(v).collect())
                .collect(),
            kind: GraphKind::DirectedPower,
            n: d.vertex_count(),
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph json serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if json.adj.len() != json.n {
            return Err(Error::Format(format!(
                "n = {} but {} adjacency lists",
                json.n,
                json.adj.len()
            )));
        }
        for (u, row) in json.adj.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Format(format!(
                    "adjacency list {u} is not strictly ascending"
                )));
            }
            if row.iter().any(|&v| v >= json.n || v == u) {
                return Err(Error::Format(format!(
                    "adjacency list {u} has an invalid entry"
                )));
            }
        }
        Ok(json)
    }

    /// Undirected graph; rejects asymmetric adjacency unless the kind is `dpower`,
    /// in which case the arcs are symmetrized.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.n);
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                if self.kind != GraphKind::DirectedPower && !self.adj[v].contains(&u) {
                    return Err(Error::Format(format!("edge {u}-{v} is not symmetric")));
                }
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn to_digraph(&self) -> DiGraph {
        let mut d = DiGraph::empty(self.n);
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                d.add_arc(u, v);
            }
        }
        d
    }
}

pub fn graph_to_json(kind: GraphKind, g: &Graph) -> String {
    GraphJson::from_graph(kind, g).to_canonical_string()
}

pub fn graph_from_json(text: &str) -> Result<(GraphKind, Graph)> {
    let json = GraphJson::parse(text)?;
    Ok((json.kind, json.to_graph()?))
}

/// DOT text. Vertices are labelled with their element index; the graph name
/// records the kind and the group it came from.
pub fn graph_to_dot(kind: GraphKind, source: &str, g: &Graph) -> String {
    dot(
        kind,
        source,
        g.vertex_count(),
        |v| g.label(v),
        false,
        g.edges().collect(),
    )
}

pub fn digraph_to_dot(source: &str, d: &DiGraph) -> String {
    let arcs = (0..d.vertex_count())
        .flat_map(|u| d.out_neighbors(u).map(move |v| (u, v)))
        .collect();
    dot(
        GraphKind::DirectedPower,
        source,
        d.vertex_count(),
        |v| v,
        true,
        arcs,
    )
}

fn dot(
    kind: GraphKind,
    source: &str,
    n: usize,
    label: impl Fn(usize) -> usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
) -> String {
    let (keyword, arrow) = if directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let name = format!("{kind} graph of {source}").replace('"', "'");
    let mut out = format!("{keyword} \"{name}\" {{\n");
    for v in 0..n {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", label(v));
    }
    for (u, v) in edges {
        let _ = writeln!(out, "  {u} {arrow} {v};");
    }
    out.push_str("}\n");
    out
}
