//! The plain-text hypergraph format.
//!
//! ```text
//! # comment
//! vertices 6
//! edge 1 2 3
//! edge 1 5 6
//! weight 2 3
//! ```
//!
//! `weight <ordinal> <w>` refers to the `<ordinal>`-th `edge` line (1-based).
//! Edges without a weight line get weight 1. After parsing, edges are reduced
//! to a clutter; dropped edges are reported as warnings.

use thiserror::Error;
use vca_core::hypergraph::Normalized;
use vca_core::{Hypergraph, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `vertices` line")]
    MissingVertices,
    #[error("{0}")]
    Invalid(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub hypergraph: Hypergraph,
    pub weights: WeightFunction,
    /// Whether any `weight` line was present.
    pub explicit_weights: bool,
    /// Edges as written, in input order.
    pub raw_edges: Vec<Vec<usize>>,
    /// Canonical index of each input edge, `None` when it was dropped.
    pub origin: Vec<Option<usize>>,
    pub warnings: Vec<String>,
}

impl ParsedInput {
    /// Re-weights the hypergraph from one weight per input edge line.
    pub fn with_input_weights(&self, per_input_edge: &[u64]) -> Result<WeightFunction, ParseError> {
        if per_input_edge.len() != self.raw_edges.len() {
            return Err(ParseError::Invalid(format!(
                "expected {} weights (one per edge line), got {}",
                self.raw_edges.len(),
                per_input_edge.len()
            )));
        }
        if let Some(i) = per_input_edge.iter().position(|&w| w == 0) {
            return Err(ParseError::Invalid(format!("weight #{} must be positive", i + 1)));
        }
        aligned_weights(&self.hypergraph, &self.origin, per_input_edge)
    }
}

fn aligned_weights(
    h: &Hypergraph,
    origin: &[Option<usize>],
    per_input_edge: &[u64],
) -> Result<WeightFunction, ParseError> {
    let mut weights = vec![1u64; h.edge_count()];
    for (slot, &w) in origin.iter().zip(per_input_edge) {
        if let Some(idx) = slot {
            weights[*idx] = w;
        }
    }
    WeightFunction::new(h, weights).map_err(|e| ParseError::Invalid(e.to_string()))
}

fn number(token: &str, line: usize, what: &str) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .map_err(|_| at(line, format!("{what} `{token}` is not a nonnegative integer")))
}

pub fn parse_hypergraph(text: &str) -> Result<ParsedInput, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut weight_lines: Vec<(usize, usize, u64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        let args: Vec<&str> = tokens.collect();
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(at(line, "duplicate `vertices` line"));
                }
                let [count] = args[..] else {
                    return Err(at(line, "`vertices` takes exactly one count"));
                };
                let count = number(count, line, "vertex count")? as usize;
                if count < 1 {
                    return Err(at(line, "vertex count must be at least 1"));
                }
                n = Some(count);
            }
            "edge" => {
                let Some(count) = n else {
                    return Err(at(line, "`edge` before `vertices`"));
                };
                if args.is_empty() {
                    return Err(at(line, "empty edge"));
                }
                let mut edge = Vec::with_capacity(args.len());
                for token in args {
                    let v = number(token, line, "vertex")? as usize;
                    if v < 1 || v > count {
                        return Err(at(line, format!("vertex {v} out of range 1..={count}")));
                    }
                    edge.push(v);
                }
                edges.push((line, edge));
            }
            "weight" => {
                let [ordinal, value] = args[..] else {
                    return Err(at(line, "`weight` takes an edge ordinal and a value"));
                };
                let ordinal = number(ordinal, line, "edge ordinal")? as usize;
                let value = number(value, line, "weight")?;
                if value == 0 {
                    return Err(at(line, "weight must be positive"));
                }
                weight_lines.push((line, ordinal, value));
            }
            other => return Err(at(line, format!("unknown keyword `{other}`"))),
        }
    }

    let n = n.ok_or(ParseError::MissingVertices)?;
    let mut per_input_edge = vec![1u64; edges.len()];
    let mut seen = vec![false; edges.len()];
    for &(line, ordinal, value) in &weight_lines {
        if ordinal < 1 || ordinal > edges.len() {
            return Err(at(line, format!("no edge #{ordinal} to weight")));
        }
        if seen[ordinal - 1] {
            return Err(at(line, format!("edge #{ordinal} weighted twice")));
        }
        seen[ordinal - 1] = true;
        per_input_edge[ordinal - 1] = value;
    }

    let raw_edges: Vec<Vec<usize>> = edges.iter().map(|(_, e)| e.clone()).collect();
    let Normalized { hypergraph, origin } =
        Hypergraph::normalize_tracked(raw_edges.clone(), n).map_err(|e| match e {
            vca_core::Error::EmptyEdge(i) => at(edges[i - 1].0, "empty edge"),
            other => ParseError::Invalid(other.to_string()),
        })?;

    let mut warnings = Vec::new();
    for (i, slot) in origin.iter().enumerate() {
        if slot.is_none() {
            let verts: Vec<String> = raw_edges[i].iter().map(ToString::to_string).collect();
            warnings.push(format!(
                "line {}: edge #{} {{{}}} removed (duplicate or superset of another edge)",
                edges[i].0,
                i + 1,
                verts.join(",")
            ));
        }
    }
    let weights = aligned_weights(&hypergraph, &origin, &per_input_edge)?;
    Ok(ParsedInput {
        hypergraph,
        weights,
        explicit_weights: !weight_lines.is_empty(),
        raw_edges,
        origin,
        warnings,
    })
}

/// Canonical text for a weighted clutter; weight lines only for weights other than 1.
pub fn serialize_hypergraph(h: &Hypergraph, w: &WeightFunction) -> String {
    let mut out = format!("vertices {}\n", h.n());
    for edge in h.edges() {
        let verts: Vec<String> = edge.iter().map(ToString::to_string).collect();
        out.push_str(&format!("edge {}\n", verts.join(" ")));
    }
    for (i, &wf) in w.weights().iter().enumerate() {
        if wf != 1 {
            out.push_str(&format!("weight {} {}\n", i + 1, wf));
        }
    }
    out
}
