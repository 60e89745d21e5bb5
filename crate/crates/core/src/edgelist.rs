//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n e
//! u v
//! ...
//! ```
//!
//! Indices are 0-based and whitespace separated. Lines whose first
//! non-blank character is `#` are comments; blank lines are ignored.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Writes `g` with edges in lexicographic `(u, v)`, `u < v` order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

fn line_err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| line_err(line, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| line_err(line, format!("`{field}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(line_err(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses an edge list, reporting the 1-based line of the first problem.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let pair = parse_pair(lineno, text)?;
        let Some((n, _)) = header else {
            header = Some(pair);
            continue;
        };
        let (u, v) = pair;
        if u >= n || v >= n {
            let vertex = u.max(v);
            return Err(line_err(lineno, Error::InvalidVertex { vertex, n }.to_string()));
        }
        if u == v {
            return Err(line_err(lineno, Error::SelfLoopRejected(u).to_string()));
        }
        edges.push((u, v));
    }

    let (n, e) = header.ok_or_else(|| line_err(last_line.max(1), "missing `n e` header"))?;
    if edges.len() != e {
        return Err(line_err(
            last_line.max(1),
            format!("header declares {e} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list_file(path: impl AsRef<std::path::Path>) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(file))
}

pub fn write_edge_list_file(g: &Graph, path: impl AsRef<std::path::Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut out = std::io::BufWriter::new(file);
    write_edge_list(g, &mut out)?;
    out.flush()?;
    Ok(())
}
