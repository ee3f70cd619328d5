//! Text formats: the edge-list graph format, solution files, vertex label
//! sidecars, and flat key-value result records.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-indexed, directed u -> v)
//! ```
//!
//! Solution file: a header `B k [value]` (edges used, guessed isolated-path
//! length or -1, optional claimed objective value) followed by `B` lines
//! `u v`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Dag, Digraph, Edge, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("cycle detected through vertex {vertex}")]
    Cycle { vertex: usize },
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[i64; K], ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(malformed(
            line,
            format!("expected {K} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0i64; K];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| malformed(line, format!("not an integer: {field:?}")))?;
    }
    Ok(out)
}

fn non_negative(line: usize, value: i64, what: &str) -> Result<usize, ParseError> {
    usize::try_from(value).map_err(|_| malformed(line, format!("{what} must be non-negative")))
}

/// Edges of an edge-list document, each tagged with its line number.
fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, Edge)>), ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| malformed(0, "missing header"))?;
    let [n, m] = parse_fields::<2>(hline, header)?;
    let n = non_negative(hline, n, "vertex count")?;
    let m = non_negative(hline, m, "edge count")?;
    if n == 0 {
        return Err(malformed(hline, "graph must have at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = parse_fields::<2>(line, body)?;
        let u = non_negative(line, u, "vertex id")?;
        let v = non_negative(line, v, "vertex id")?;
        if u >= n || v >= n {
            return Err(malformed(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        edges.push((line, (u, v)));
    }
    if edges.len() != m {
        return Err(malformed(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let mut sorted: Vec<_> = edges.iter().map(|&(line, e)| (e, line)).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        let (u, v) = w[1].0;
        return Err(ParseError::DuplicateEdge {
            line: w[1].1.max(w[0].1),
            u,
            v,
        });
    }
    Ok((n, edges))
}

/// Parses and validates an edge-list document into a DAG.
pub fn parse_graph(text: &str) -> Result<Dag, ParseError> {
    let (n, edges) = parse_edge_list(text)?;
    let g = Digraph::new(n, edges.into_iter().map(|(_, e)| e))
        .expect("edges were validated while parsing");
    Dag::new(g).map_err(|e| match e {
        GraphError::Cycle(vertex) => ParseError::Cycle { vertex },
        other => unreachable!("unexpected validation error {other}"),
    })
}

pub fn write_graph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Contents of a solution file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFile {
    pub edges: Vec<Edge>,
    pub guessed_k: Option<usize>,
    pub value: Option<u64>,
}

impl SolutionFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or_else(|| malformed(0, "missing header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(malformed(hline, "header must be `B k [value]`"));
        }
        let int = |s: &str| -> Result<i64, ParseError> {
            s.parse()
                .map_err(|_| malformed(hline, format!("not an integer: {s:?}")))
        };
        let count = non_negative(hline, int(fields[0])?, "edge count")?;
        let guessed_k = match int(fields[1])? {
            -1 => None,
            k => Some(non_negative(hline, k, "path length")?),
        };
        let value = fields
            .get(2)
            .map(|s| int(s).and_then(|v| non_negative(hline, v, "value")))
            .transpose()?
            .map(|v| v as u64);
        let mut edges = Vec::with_capacity(count);
        for (line, body) in lines {
            let [u, v] = parse_fields::<2>(line, body)?;
            edges.push((
                non_negative(line, u, "vertex id")?,
                non_negative(line, v, "vertex id")?,
            ));
        }
        if edges.len() != count {
            return Err(malformed(
                hline,
                format!("header declares {count} edges, found {}", edges.len()),
            ));
        }
        Ok(SolutionFile {
            edges,
            guessed_k,
            value,
        })
    }
}

impl fmt::Display for SolutionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.guessed_k.map_or(-1, |k| k as i64);
        write!(f, "{} {k}", self.edges.len())?;
        if let Some(v) = self.value {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// One flat `key=value` record. Keys keep insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record(Vec<(String, String)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn field(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn parse(line: &str) -> Option<Record> {
        line.split_whitespace()
            .map(|kv| {
                kv.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
            })
            .collect::<Option<Vec<_>>>()
            .map(Record)
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            // Values never contain whitespace; keep records one token per field.
            write!(f, "{k}={}", v.replace(char::is_whitespace, "_"))?;
        }
        Ok(())
    }
}
