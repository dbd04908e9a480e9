use std::io::Read;

use anyhow::{bail, Context, Result};
use certdom::graph::{parse_edge_list, parse_graph6};
use certdom::{Graph, VertexSet};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Detect from the first line: `n <count>` starts an edge list,
    /// anything else is graph6.
    Auto,
    Graph6,
    Edgelist,
}

/// Reads a graph from `path`, or from standard input when `path` is absent or `-`.
pub fn read_graph(path: Option<&str>, format: Format) -> Result<Graph> {
    let text = match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("cannot read standard input")?;
            s
        }
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {p}"))?,
    };
    parse_graph(&text, format)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let format = match format {
        Format::Auto => detect(text)?,
        f => f,
    };
    let g = match format {
        Format::Edgelist => parse_edge_list(text)?,
        _ => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let line = lines.next().context("empty input")?;
            if lines.next().is_some() {
                bail!("expected a single graph6 line; use `suite --graph6-file` for batches");
            }
            parse_graph6(line)?
        }
    };
    Ok(g)
}

fn detect(text: &str) -> Result<Format> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .context("empty input")?;
    if first == "n" || first.starts_with("n ") {
        Ok(Format::Edgelist)
    } else if first.bytes().all(|b| (63..=126).contains(&b)) {
        Ok(Format::Graph6)
    } else {
        bail!("cannot detect the input format of `{first}`; pass --format")
    }
}

/// Parses `0,3,5` (spaces allowed, empty for the empty set).
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("invalid vertex `{t}`")))
        .collect()
}

pub fn vertex_set(g: &Graph, vertices: &[usize]) -> Result<VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.order()) {
        bail!("vertex {v} out of range for graph of order {}", g.order());
    }
    Ok(vertices.iter().copied().collect())
}

pub fn parse_edge(s: &str) -> Result<(usize, usize)> {
    match parse_vertex_list(s)?[..] {
        [u, v] => Ok((u, v)),
        _ => bail!("expected an edge `u,v`, found `{s}`"),
    }
}
