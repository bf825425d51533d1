//! graph6 encoding.
//!
//! Layout: an order header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by 63,
//! with zero padding in the final byte. `N(n)` is the single byte `n + 63` for
//! `n <= 62` and `126` followed by three 6-bit bytes for `63 <= n <= 258047`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(parse_err(
            offset,
            format!("byte 0x{b:02x} outside the range 63..=126"),
        )),
        None => Err(parse_err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 line. Leading `>>graph6<<` headers and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();

    let (n, body_start) = match bytes.first() {
        None => return Err(parse_err(0, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(
                    1,
                    format!("order exceeds {MAX_VERTICES} vertices"),
                ));
            }
            let n = (sixbits(bytes, 1)? << 12) | (sixbits(bytes, 2)? << 6) | sixbits(bytes, 3)?;
            (n as usize, 4)
        }
        Some(_) => (sixbits(bytes, 0)? as usize, 1),
    };
    if n == 0 {
        return Err(parse_err(0, "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(parse_err(
            0,
            format!("order {n} exceeds {MAX_VERTICES} vertices"),
        ));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < body_start + nbytes {
        return Err(parse_err(
            bytes.len(),
            format!("expected {nbytes} adjacency bytes"),
        ));
    }
    if bytes.len() > body_start + nbytes {
        return Err(parse_err(
            body_start + nbytes,
            "trailing bytes after adjacency data",
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let word = sixbits(bytes, body_start + k / 6)?;
            if (word >> (5 - k % 6)) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body_start + nbytes - 1;
        let pad = 6 - nbits % 6;
        if sixbits(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(parse_err(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
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
        // every byte is in 63..=126
        String::from_utf8(out).expect("graph6 output is ASCII")
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        parse_graph6(s)
    }
}
