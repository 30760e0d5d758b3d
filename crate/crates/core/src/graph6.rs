//! graph6 codec.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed into 6-bit
//! groups, each group written as a byte offset by 63. The final group is
//! zero-padded.

use thiserror::Error;

use crate::graph::Graph;

const MAX_ORDER: usize = 1 << 36;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 data has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("graph of order {0} is too large for graph6")]
    TooLarge(usize),
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n >= MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
}

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();

    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }
    let (n, body) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("fresh pair");
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let truncated = |expected| Graph6Error::Truncated {
        expected,
        found: bytes.len(),
    };
    let word = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    match bytes {
        [] => Err(truncated(1)),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(truncated(8));
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(truncated(4));
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok((usize::from(b - 63), rest)),
    }
}
