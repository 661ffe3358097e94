//! JSON and DOT serialization for [`Graph`].
//!
//! The JSON form is `{"n":<int>,"edges":[[a,b],...]}` with `a < b` and the
//! edge list sorted. [`Graph::to_json`] always emits that canonical form, so
//! a canonical file survives a parse/emit round trip byte for byte.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Error)]
pub enum GraphParseError {
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Invalid(#[from] GraphError),
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = GraphError;

    /// Accepts edges in either orientation and any order; rejects
    /// self-loops, duplicates and out-of-range endpoints.
    fn try_from(file: GraphFile) -> Result<Self, GraphError> {
        Graph::from_edges(file.n, file.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphParseError> {
        let file: GraphFile = serde_json::from_str(text)?;
        Ok(Graph::try_from(file)?)
    }

    /// Undirected DOT with every vertex declared and edges in sorted order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            writeln!(out, "  {v};").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
