use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::combinatorics::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: endpoint {vertex} outside [1, {n}]")]
    Range { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {i} {j}")]
    DuplicateEdge { line: usize, i: usize, j: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
}

/// A graph together with the file it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub path: PathBuf,
    pub parsed: Graph,
}

impl GraphFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, GraphFileError> {
        let path = path.as_ref().to_path_buf();
        let parsed = parse_graph_file(&path)?;
        Ok(GraphFile { path, parsed })
    }
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<Graph, GraphFileError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| GraphFileError::Io { path: path.to_path_buf(), message: e.to_string() })?;
    parse_graph_str(&text)
}

/// Parses `n <N>` followed by `e <i> <j>` lines with `1 ≤ i < j ≤ N`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_graph_str(text: &str) -> Result<Graph, GraphFileError> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let parse_err = |message: &str| GraphFileError::Parse { line, message: message.to_string() };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| parse_err(&format!("expected a non-negative integer, got {s:?}")));
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(parse_err("repeated vertex count"));
                }
                let count = number(count)?;
                if count == 0 {
                    return Err(parse_err("vertex count must be positive"));
                }
                n = Some(count);
            }
            ["e", a, b] => {
                let n = n.ok_or_else(|| parse_err("edge before the `n` line"))?;
                let (i, j) = (number(a)?, number(b)?);
                if let Some(&vertex) = [i, j].iter().find(|&&x| x == 0 || x > n) {
                    return Err(GraphFileError::Range { line, vertex, n });
                }
                if i >= j {
                    return Err(parse_err(&format!("edge {i} {j} must have i < j")));
                }
                if !edges.insert((i, j)) {
                    return Err(GraphFileError::DuplicateEdge { line, i, j });
                }
            }
            _ => return Err(parse_err(&format!("unrecognized line {content:?}"))),
        }
    }
    let n = n.ok_or(GraphFileError::Parse { line: last_line, message: "missing `n` line".to_string() })?;
    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

/// Canonical text form: the `n` line, then edges in lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(i, j) in g.edges() {
        writeln!(out, "e {i} {j}").expect("writing to a String");
    }
    out
}
