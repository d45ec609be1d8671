//! Edge-list and DIMACS graph files.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines with
//! 1-based ids. Blank lines are ignored in both; `#` starts a comment in the
//! edge-list format. Repeated edges collapse to one.

use std::fmt::Write as _;
use std::str::FromStr;

use cathedral::{Graph, GraphBuilder};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

pub fn parse(text: &str, format: Format) -> Result<Graph, CliError> {
    match format {
        Format::Edgelist => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T, CliError> {
    tok.parse()
        .map_err(|_| err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

fn pair<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize, what: &str) -> Result<(usize, usize), CliError> {
    let a = toks.next().ok_or_else(|| err(line, format!("expected {what}")))?;
    let b = toks.next().ok_or_else(|| err(line, format!("expected {what}")))?;
    if let Some(extra) = toks.next() {
        return Err(err(line, format!("unexpected token `{extra}`")));
    }
    Ok((number(a, line, "value")?, number(b, line, "value")?))
}

fn add(b: &mut GraphBuilder, n: usize, u: usize, v: usize, line: usize) -> Result<(), CliError> {
    if u >= n || v >= n {
        return Err(err(line, format!("vertex id out of range for n = {n}")));
    }
    if u == v {
        return Err(err(line, format!("self-loop at vertex {u}")));
    }
    b.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = pair(header.split_whitespace(), hline, "header `n m`")?;
    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        seen += 1;
        if seen > m {
            return Err(err(
                line,
                format!("more than the {m} edge lines declared in the header"),
            ));
        }
        let (u, v) = pair(l.split_whitespace(), line, "edge `u v`")?;
        add(&mut b, n, u, v, line)?;
    }
    if seen < m {
        return Err(err(
            text.lines().count().max(1),
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(b.build())
}

pub fn parse_dimacs(text: &str) -> Result<Graph, CliError> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = l.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if builder.is_some() {
                    return Err(err(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(err(line, format!("expected `p edge n m`, found {other:?}"))),
                }
                let (n, _m) = pair(toks, line, "`n m`")?;
                builder = Some((GraphBuilder::new(n), n));
            }
            Some("e") => {
                let (b, n) = builder
                    .as_mut()
                    .ok_or_else(|| err(line, "edge line before `p edge n m`"))?;
                let (u, v) = pair(toks, line, "edge `u v`")?;
                if u == 0 || v == 0 {
                    return Err(err(line, "DIMACS vertex ids start at 1"));
                }
                add(b, *n, u - 1, v - 1, line)?;
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    builder
        .map(|(b, _)| b.build())
        .ok_or_else(|| err(1, "missing `p edge n m` line"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a comma-separated vertex list such as `1,3,5`.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("barrier vertex `{tok}` is not an integer")))?;
        if v >= n {
            return Err(CliError::Usage(format!("barrier vertex {v} out of range for n = {n}")));
        }
        out.push(v);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
