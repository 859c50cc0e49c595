//! Text encodings for graphs: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, each offset by
//! 63, after a size prefix `N(n)`. The edge list is `n` on the first line
//! followed by one `u v` pair per line, 0-based; `#` starts a comment.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ParseError;
use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order graph6 can describe (`2^36 - 1`).
const GRAPH6_MAX_N: u64 = (1 << 36) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::Edgelist),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

/// Guesses the encoding from the first meaningful line: a lone integer means
/// an edge list, anything else is treated as graph6.
pub fn detect(input: &str) -> Format {
    let first = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn parse(input: &str, format: Option<Format>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| detect(input)) {
        Format::Graph6 => parse_graph6(input),
        Format::Edgelist => parse_edge_list(input),
    }
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        Format::Edgelist => to_edge_list(g),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn push_size(out: &mut String, n: u64) {
    assert!(n <= GRAPH6_MAX_N, "graph6 cannot encode n = {n}");
    let groups = match n {
        0..=62 => {
            out.push((n as u8 + 63) as char);
            return;
        }
        63..=258_047 => {
            out.push('~');
            3
        }
        _ => {
            out.push_str("~~");
            6
        }
    };
    for k in (0..groups).rev() {
        out.push((((n >> (6 * k)) & 63) as u8 + 63) as char);
    }
}

/// Parses the first graph6 record in `input`. An optional `>>graph6<<`
/// header is accepted; trailing padding bits must be zero.
pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let (line_no, start, line) = input
        .split_inclusive('\n')
        .scan(0usize, |offset, raw| {
            let at = *offset;
            *offset += raw.len();
            Some((at, raw))
        })
        .enumerate()
        .map(|(i, (at, raw))| (i + 1, at, raw.trim_end_matches(['\n', '\r'])))
        .find(|(_, _, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::new(1, 0, "empty input"))?;
    let (skip, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    let err = |i: usize, msg: String| ParseError::new(line_no, start + skip + i, msg);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} is not a graph6 character")));
        }
    }
    let take = |from: usize, count: usize| -> Result<u64, ParseError> {
        if bytes.len() < from + count {
            return Err(err(bytes.len(), "truncated size prefix".into()));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "missing size prefix".into())),
        Some(&b) if b < 126 => ((b - 63) as u64, 1),
        Some(_) if bytes.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(_) => (take(1, 3)?, 4),
    };
    if n > u32::MAX as u64 {
        return Err(err(0, format!("order {n} is too large")));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(err(
            bytes.len().min(pos + needed),
            format!(
                "expected {needed} adjacency bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == bits {
                break 'outer;
            }
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    pos += needed;
    if !bits.is_multiple_of(6) {
        let last = bytes[pos - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "non-zero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for (idx, raw) in input.split_inclusive('\n').enumerate() {
        let line_no = idx + 1;
        let at = offset;
        offset += raw.len();
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let mut fields = Vec::new();
        let mut col = 0;
        for tok in content.split_whitespace() {
            let rel = content[col..].find(tok).unwrap() + col;
            col = rel + tok.len();
            fields.push((at + rel, tok));
        }
        let parse_num = |(pos, tok): (usize, &str)| {
            tok.parse::<usize>()
                .map_err(|_| ParseError::new(line_no, pos, format!("'{tok}' is not a vertex index")))
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(ParseError::new(line_no, at + lead, "first line must be the vertex count"));
                }
                n = Some(parse_num(fields[0])?);
            }
            Some(order) => {
                if fields.len() != 2 {
                    return Err(ParseError::new(line_no, at + lead, "expected 'u v'"));
                }
                let u = parse_num(fields[0])?;
                let v = parse_num(fields[1])?;
                for (x, f) in [(u, fields[0]), (v, fields[1])] {
                    if x >= order {
                        return Err(ParseError::new(
                            line_no,
                            f.0,
                            format!("vertex {x} out of range for n = {order}"),
                        ));
                    }
                }
                if u == v {
                    return Err(ParseError::new(line_no, fields[0].0, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::new(1, 0, "empty input"))?;
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        g.link(u, v);
    }
    Ok(g)
}
