//! Edge-list text and graph6 encodings.

use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// Parses whitespace-separated `u v` pairs, one edge per line.
///
/// Blank lines and lines starting with `#` are skipped. An optional header
/// line `n=<count>` fixes the vertex count; without it the count is one more
/// than the largest index seen. Edges keep file order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_index: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("n=") {
            if declared_n.is_some() || !edges.is_empty() {
                return Err(Error::MalformedLine { line });
            }
            let count = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                line,
                token: rest.trim().to_string(),
            })?;
            declared_n = Some(count);
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedLine { line });
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse { line, token: tok.to_string() })
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        if let Some(n) = declared_n {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { line, vertex, n });
                }
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
        max_index = Some(max_index.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }

    let n = declared_n.unwrap_or_else(|| max_index.map_or(0, |m| m + 1));
    Ok(Graph { n, edges })
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
/// A header is written so isolated vertices survive the round trip.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string. Edges come out in lexicographic order of
/// `(min, max)` endpoint pairs.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside printable range 63..=126")));
    }

    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::MalformedGraph6(format!(
            "truncated: {} data bytes for n={n}, need {needed}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::MalformedGraph6(format!(
            "{} trailing bytes after the adjacency data",
            body.len() - needed
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph { n, edges })
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::MalformedGraph6("truncated 36-bit size header".into()));
        }
        return Ok((value(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Error::MalformedGraph6("truncated 18-bit size header".into()));
    }
    Ok((value(&bytes[1..4]), &bytes[4..]))
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_bits = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for shift in (0..groups).rev() {
            out.push(((value >> (6 * shift)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(&mut out, n, 3);
    } else {
        out.push(126);
        out.push(126);
        push_bits(&mut out, n, 6);
    }

    let present: HashSet<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | present.contains(&(i, j)) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
