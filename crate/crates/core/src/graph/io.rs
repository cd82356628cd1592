use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(b: u8) -> Result<usize> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")))
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, rest) = if bytes[0] != b'~' {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte size field".into()));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte size field".into()));
        }
        let mut n = 0;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "n={n} needs {expected} data bytes, found {}",
            rest.len()
        )));
    }
    let mut b = GraphBuilder::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(rest[idx / 6])?;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                b.add_edge(i, j);
            }
            idx += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(rest[expected - 1])?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(b.build())
}

/// One line per vertex: `v: n1 n2 ...` with neighbours ascending.
pub fn to_adjacency_dump(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        out.push_str(&v.to_string());
        out.push(':');
        for w in g.neighbors(v).iter() {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn from_adjacency_dump(s: &str) -> Result<Graph> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::InvalidParameter(format!("adjacency line {}: {msg}", lineno + 1));
        let (head, tail) = line.split_once(':').ok_or_else(|| bad("missing ':'".into()))?;
        let v: usize = head.trim().parse().map_err(|_| bad(format!("bad vertex {head:?}")))?;
        let nbrs = tail
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad neighbour {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push((v, nbrs));
    }
    let n = rows.len();
    let mut seen = vec![false; n];
    let mut b = GraphBuilder::new(n);
    for (v, nbrs) in &rows {
        if *v >= n || seen[*v] {
            return Err(Error::InvalidParameter(format!("vertex {v} repeated or out of range")));
        }
        seen[*v] = true;
        for &w in nbrs {
            if w >= n || w == *v {
                return Err(Error::InvalidParameter(format!("bad neighbour {w} of {v}")));
            }
            b.add_edge(*v, w);
        }
    }
    let g = b.build();
    for (v, nbrs) in &rows {
        if g.degree(*v) != nbrs.iter().collect::<std::collections::BTreeSet<_>>().len() {
            return Err(Error::InvalidParameter(format!("adjacency of {v} is not symmetric")));
        }
    }
    Ok(g)
}
