//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column, packed into 6-bit groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let sextet = |b: u8| -> Result<u8> {
        if (63..=126).contains(&b) {
            Ok(b - 63)
        } else {
            Err(Error::Graph6(format!("byte {b:#04x} outside the printable range")))
        }
    };
    let (n, body) = match bytes.first() {
        None => return Err(Error::Graph6("empty string".into())),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(Error::Graph6("orders above 258047 are not supported".into()));
            }
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = n << 6 | sextet(b)? as usize;
            }
            (n, &bytes[4..])
        }
        Some(&b) => (sextet(b)? as usize, &bytes[1..]),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = sextet(body[k / 6])?;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(b.build())
}
