//! Graph files: plain edge lists and sparse6.
//!
//! Edge lists are a header line `n m` followed by `m` lines `u v` with
//! 0-based vertices. Emission sorts the pairs and writes `u <= v`, so the
//! output is byte-for-byte reproducible. sparse6 follows the nauty
//! definition and carries parallel edges; on input the `>>sparse6<<` header
//! is optional, on output it is never written.

use brickforge_core::{Error as GraphError, MultiGraph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    /// 1-based line and column of the offending token.
    #[error("line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("{0}")]
    Graph(GraphError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl From<GraphError> for InputError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::LoopEdge { index, vertex } => InputError::LoopEdge { index, vertex },
            other => InputError::Graph(other),
        }
    }
}

const SPARSE6_HEADER: &str = ">>sparse6<<";

/// Parses either format, chosen by the first non-blank character.
pub fn parse_graph(text: &str) -> Result<MultiGraph, InputError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(':') || trimmed.starts_with(SPARSE6_HEADER) {
        parse_sparse6(text)
    } else {
        parse_edge_list(text)
    }
}

/// Reads a path, or standard input for `-`.
pub fn read_graph(path: &str) -> Result<MultiGraph, InputError> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| InputError::Io { path: path.to_string(), message: e.to_string() })?;
    parse_graph(&text)
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], col: s + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(tok: &Token<'_>, line: usize) -> Result<usize, InputError> {
    tok.text.parse().map_err(|_| InputError::Parse {
        line,
        col: tok.col,
        message: format!("expected a non-negative integer, found {:?}", tok.text),
    })
}

pub fn parse_edge_list(text: &str) -> Result<MultiGraph, InputError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(InputError::Parse { line: 1, col: 1, message: "empty input".into() });
    };
    let head = tokens(header);
    if head.len() != 2 {
        let col = head.get(2).map_or(header.len() + 1, |t| t.col);
        return Err(InputError::Parse { line: hline, col, message: "header must be \"n m\"".into() });
    }
    let n = number(&head[0], hline)?;
    let m = number(&head[1], hline)?;
    if n == 0 {
        return Err(InputError::Parse { line: hline, col: head[0].col, message: "graph has no vertices".into() });
    }
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks = tokens(line);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(line.len() + 1, |t| t.col);
            return Err(InputError::Parse { line: lineno, col, message: "edge line must be \"u v\"".into() });
        }
        let (u, v) = (number(&toks[0], lineno)?, number(&toks[1], lineno)?);
        for (w, tok) in [(u, &toks[0]), (v, &toks[1])] {
            if w >= n {
                return Err(InputError::Parse {
                    line: lineno,
                    col: tok.col,
                    message: format!("vertex {w} out of range for {n} vertices"),
                });
            }
        }
        if pairs.len() == m {
            return Err(InputError::Parse { line: lineno, col: 1, message: format!("more than {m} edges") });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(InputError::Parse {
            line: last_line + 1,
            col: 1,
            message: format!("expected {m} edges, found {}", pairs.len()),
        });
    }
    Ok(MultiGraph::new(n, pairs)?)
}

pub fn emit_edge_list(g: &MultiGraph) -> String {
    let mut pairs = g.live_pairs();
    pairs.sort_unstable();
    let mut out = format!("{} {}\n", g.order(), pairs.len());
    for (u, v) in pairs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Bits needed to write `n - 1`, at least one.
fn sparse6_width(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn emit_sparse6(g: &MultiGraph) -> String {
    let n = g.order();
    let k = sparse6_width(n);
    let mut out = String::from(":");
    out.push_str(&encode_size(n));

    let mut edges: Vec<(usize, usize)> = g.live_pairs().into_iter().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();
    let mut bits: Vec<bool> = Vec::new();
    let push = |bits: &mut Vec<bool>, b: bool, x: usize| {
        bits.push(b);
        bits.extend((0..k).rev().map(|i| x >> i & 1 == 1));
    };
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            push(&mut bits, false, u);
        } else if v == cur + 1 {
            cur = v;
            push(&mut bits, true, u);
        } else {
            cur = v;
            push(&mut bits, true, v);
            push(&mut bits, false, u);
        }
    }
    // A run of 1s as padding would read as an edge into n - 1 in this case.
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == 1 << k && pad >= k && cur < n - 1 {
        bits.push(false);
    }
    while bits.len() % 6 != 0 {
        bits.push(true);
    }
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((value + 63) as char);
    }
    out
}

fn encode_size(n: usize) -> String {
    let sextets: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else if n <= 258_047 {
        let mut v = vec![63];
        v.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
        v
    } else {
        let mut v = vec![63, 63];
        v.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
        v
    };
    sextets.into_iter().map(|s| (s + 63) as char).collect()
}

pub fn parse_sparse6(text: &str) -> Result<MultiGraph, InputError> {
    let (line, raw) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .ok_or(InputError::Parse { line: 1, col: 1, message: "empty input".into() })?;
    let lead = raw.len() - raw.trim_start().len();
    let mut body = raw.trim();
    let mut offset = lead;
    if let Some(rest) = body.strip_prefix(SPARSE6_HEADER) {
        body = rest;
        offset += SPARSE6_HEADER.len();
    }
    let err = |pos: usize, message: &str| InputError::Parse { line, col: offset + pos + 1, message: message.into() };
    let Some(data) = body.strip_prefix(':') else {
        return Err(err(0, "sparse6 must start with ':'"));
    };
    let mut sextets = Vec::with_capacity(data.len());
    for (i, c) in data.bytes().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(i + 1, "character outside the sparse6 range"));
        }
        sextets.push((c - 63) as usize);
    }
    let (n, used) = match sextets.as_slice() {
        [63, 63, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |a, &s| a << 6 | s), 8),
        [63, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |a, &s| a << 6 | s), 4),
        [s, ..] if *s < 63 => (*s, 1),
        _ => return Err(err(1, "truncated size field")),
    };
    if n == 0 {
        return Err(err(1, "graph has no vertices"));
    }
    let k = sparse6_width(n);
    let bits: Vec<bool> = sextets[used..]
        .iter()
        .flat_map(|&s| (0..6).rev().map(move |i| s >> i & 1 == 1))
        .collect();
    let mut pairs = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k].iter().fold(0usize, |a, &bit| a << 1 | bit as usize);
        pos += 1 + k;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            pairs.push((x, v));
        }
    }
    Ok(MultiGraph::new(n, pairs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_k4() {
        let g = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cubic());
        assert_eq!(emit_edge_list(&g), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_graph("2 1\n0 0").unwrap_err(), InputError::LoopEdge { index: 0, vertex: 0 });
        assert!(matches!(parse_graph("2 1\n0 x"), Err(InputError::Parse { line: 2, col: 3, .. })));
        assert!(matches!(parse_graph("2 1\n0 2"), Err(InputError::Parse { line: 2, col: 3, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(InputError::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 1\n0 1\n1 2"), Err(InputError::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3"), Err(InputError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(InputError::Parse { line: 1, col: 1, .. })));
    }

    #[test]
    fn emission_sorts_and_orients() {
        let g = MultiGraph::new(3, [(2, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(emit_edge_list(&g), "3 3\n0 1\n0 1\n1 2\n");
    }

    #[test]
    fn sparse6_reference_string() {
        // Example from the format description: 7 vertices, edges 01 02 12 56.
        let g = parse_graph(":Fa@x^").unwrap();
        assert_eq!(g.order(), 7);
        let mut pairs = g.live_pairs();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
        assert_eq!(emit_sparse6(&g), ":Fa@x^");
        assert_eq!(parse_graph(">>sparse6<<:Fa@x^\n").unwrap(), g);
    }

    #[test]
    fn sparse6_round_trips() {
        let c6 = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let theta = MultiGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        // n a power of two with the last edge ending at n - 2.
        let tricky = MultiGraph::new(4, [(0, 1), (1, 2)]).unwrap();
        let big = MultiGraph::new(64, (0..64).map(|i| (i, (i + 1) % 64))).unwrap();
        for g in [c6, theta, tricky, big, MultiGraph::new(1, []).unwrap()] {
            let back = parse_graph(&emit_sparse6(&g)).unwrap();
            let (mut a, mut b) = (g.live_pairs(), back.live_pairs());
            a.sort();
            b.sort();
            assert_eq!((g.order(), a), (back.order(), b));
        }
    }

    #[test]
    fn sparse6_errors() {
        assert!(matches!(parse_sparse6(":"), Err(InputError::Parse { .. })));
        assert!(matches!(parse_sparse6(":F a"), Err(InputError::Parse { col: 3, .. })));
    }
}
