//! graph6 encoding and decoding, bit-exact per the published format.
//!
//! The byte string is `N(n) R(x)`: the vertex count in one byte (`n + 63`
//! for `n <= 62`), or `~` plus 18 bits, or `~~` plus 36 bits; then the
//! upper triangle of the adjacency matrix column by column --
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...` -- packed six bits per byte, most
//! significant bit first, zero-padded, each byte offset by 63 into the
//! printable range `63..=126`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {index} outside the printable range 63..=126")]
    InvalidByte { index: usize, byte: u8 },
    #[error("truncated bit field: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the bit field")]
    TrailingBytes { extra: usize },
    #[error("padding bits must be zero")]
    NonZeroPadding,
    #[error("vertex count {0} too large to materialize")]
    TooLarge(u64),
}

/// Decode one graph6 value (a single line, no trailing newline).
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { index, byte });
        }
    }
    let (n, mut pos) = decode_size(bytes)?;
    if n > (1 << 31) {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let found = bytes.len() - pos;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingBytes {
            extra: found - expected,
        });
    }
    let mut edges = Vec::new();
    let mut buf: u32 = 0;
    let mut have = 0usize;
    let mut next_bit = move |bytes: &[u8], pos: &mut usize| -> u8 {
        if have == 0 {
            buf = u32::from(bytes[*pos] - 63);
            *pos += 1;
            have = 6;
        }
        have -= 1;
        ((buf >> have) & 1) as u8
    };
    for col in 1..n {
        for row in 0..col {
            if next_bit(bytes, &mut pos) == 1 {
                edges.push((row, col));
            }
        }
    }
    // remaining pad bits of the final byte must be zero
    let used = bit_count % 6;
    if used != 0 {
        let last = u32::from(bytes[bytes.len() - 1] - 63);
        let mask = (1u32 << (6 - used)) - 1;
        if last & mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::new(n, edges).expect("decoded upper triangle is simple"))
}

/// Encode a graph as a graph6 byte string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    encode_size(n as u64, &mut out);
    let mut buf: u8 = 0;
    let mut have = 0usize;
    for col in 1..n {
        for row in 0..col {
            buf = (buf << 1) | u8::from(g.has_edge(row, col));
            have += 1;
            if have == 6 {
                out.push(buf + 63);
                buf = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        out.push((buf << (6 - have)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok((u64::from(bytes[0] - 63), 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Graph6Error::Truncated {
            expected: 8,
            found: bytes.len(),
        });
    }
    let n = bytes[2..8]
        .iter()
        .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    Ok((n, 8))
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}
