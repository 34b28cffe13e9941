//! Text edge lists and sequence JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planner::SwitchSequence;
use crate::structure::Family;
use crate::switch::{MatrixJson, SwitchMatrix};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and everything
/// after a `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let [n, m] = numbers(hl, header)?[..] else {
        return Err(parse_err(hl, "header must be \"n m\""));
    };
    let mut pairs = Vec::with_capacity(m as usize);
    let mut last = hl;
    for (ln, l) in lines {
        let [u, v] = numbers(ln, l)?[..] else {
            return Err(parse_err(ln, "edge line must be \"u v\""));
        };
        let to_vertex =
            |x: u64| Vertex::try_from(x).map_err(|_| parse_err(ln, "vertex label too large"));
        pairs.push((to_vertex(u)?, to_vertex(v)?));
        last = ln;
    }
    if pairs.len() as u64 != m {
        return Err(parse_err(
            last,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n as usize, &pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().iter().map(|e| [e.lo(), e.hi()]).collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let pairs: Vec<(Vertex, Vertex)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(j.n, &pairs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub family: Family,
    pub start: GraphJson,
    pub steps: Vec<MatrixJson>,
    /// Graph the sequence is meant to reach, if known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GraphJson>,
}

impl SequenceJson {
    pub fn new(seq: &SwitchSequence, target: Option<&Graph>) -> Self {
        SequenceJson {
            family: seq.family,
            start: (&seq.start).into(),
            steps: seq.steps.iter().map(|&m| m.into()).collect(),
            target: target.map(GraphJson::from),
        }
    }

    pub fn sequence(&self) -> Result<SwitchSequence> {
        let start = Graph::try_from(&self.start)?;
        let steps = self
            .steps
            .iter()
            .map(|&m| SwitchMatrix::try_from(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(SwitchSequence::new(self.family, start, steps))
    }

    pub fn target_graph(&self) -> Result<Option<Graph>> {
        self.target.as_ref().map(Graph::try_from).transpose()
    }
}

pub fn sequence_to_json(seq: &SwitchSequence, target: Option<&Graph>) -> String {
    serde_json::to_string_pretty(&SequenceJson::new(seq, target)).expect("sequence serializes")
}

pub fn parse_sequence_json(text: &str) -> Result<SequenceJson> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}
