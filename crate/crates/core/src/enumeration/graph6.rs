//! graph6 and sparse6 text formats (short form, `n <= 62`).
//!
//! graph6 stores the upper triangle column by column: bit `(i, j)` for
//! `i < j` is emitted in order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per
//! printable byte with 63 added. sparse6 lines start with `:` and are only
//! decoded, never written.

use std::io::BufRead;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Largest order the short form can express.
pub const MAX_SHORT_ORDER: usize = 62;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const SPARSE6_HEADER: &str = ">>sparse6<<";

fn body_byte(byte: u8, offset: usize) -> Result<u8, ParseError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(ParseError::ByteOutOfRange { byte, offset })
    }
}

/// Decodes the size prefix, returning `(n, bytes consumed)`.
fn decode_order(bytes: &[u8], offset: usize) -> Result<(usize, usize), ParseError> {
    match bytes.get(offset) {
        None => Err(ParseError::Empty),
        Some(126) => Err(ParseError::LongForm),
        Some(&b) => Ok((body_byte(b, offset)? as usize, 1)),
    }
}

/// Parses one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim().as_bytes();
    if bytes.first() == Some(&b'&') {
        return Err(ParseError::Directed);
    }
    let (n, header) = decode_order(bytes, 0)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() != expected {
        return Err(ParseError::BadLength { n, expected, got: body.len() });
    }
    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0, 1);
    for (idx, &raw) in body.iter().enumerate() {
        let chunk = body_byte(raw, header + idx)?;
        for shift in (0..6).rev() {
            let pos = idx * 6 + (5 - shift);
            let bit = chunk >> shift & 1 == 1;
            if pos >= nbits {
                if bit {
                    return Err(ParseError::NonzeroPadding);
                }
                continue;
            }
            if bit {
                g.set_edge(i, j, true);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line without header or newline. The encoding
/// depends on the vertex labeling.
pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::TooManyVertices { n, max: MAX_SHORT_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one sparse6 line (leading `:`). Repeated edges collapse;
/// self-loops are rejected.
pub fn parse_sparse6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim().as_bytes();
    let Some(rest) = bytes.strip_prefix(b":") else {
        return Err(ParseError::Empty);
    };
    let (n, header) = decode_order(rest, 0)?;
    let body = rest[header..]
        .iter()
        .enumerate()
        .map(|(i, &b)| body_byte(b, 1 + header + i))
        .collect::<Result<Vec<u8>, _>>()?;

    // bits per vertex index: enough for n - 1, at least 1
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    let total_bits = body.len() * 6;
    let bit_at = |pos: usize| body[pos / 6] >> (5 - pos % 6) & 1;

    let mut g = Graph::empty(n);
    let mut pos = 0;
    let mut v = 0usize;
    while pos + 1 + k <= total_bits {
        let b = bit_at(pos);
        let mut x = 0usize;
        for t in 0..k {
            x = x << 1 | bit_at(pos + 1 + t) as usize;
        }
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        // padding may decode as an out-of-range vertex
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(ParseError::Sparse6Loop(x));
        } else {
            g.set_edge(x, v, true);
        }
    }
    Ok(g)
}

/// Parses a graph6 or sparse6 line, after stripping an optional header.
/// Returns `Ok(None)` for blank and header-only lines.
pub fn parse_line(line: &str) -> Result<Option<Graph>, ParseError> {
    let mut s = line.trim();
    for header in [GRAPH6_HEADER, SPARSE6_HEADER] {
        if let Some(rest) = s.strip_prefix(header) {
            s = rest;
        }
    }
    if s.is_empty() {
        return Ok(None);
    }
    if s.starts_with(':') {
        parse_sparse6(s).map(Some)
    } else {
        parse_graph6(s).map(Some)
    }
}

/// One decoded input line.
#[derive(Debug)]
pub struct InputLine {
    /// 1-based line number.
    pub line_no: usize,
    pub text: String,
    pub graph: Result<Graph, ParseError>,
}

/// Iterates over the graphs in a graph6/sparse6 stream, skipping blank and
/// header-only lines. I/O errors end the stream with an error item.
pub fn read_graphs<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<InputLine>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(text) => match parse_line(&text) {
            Ok(None) => None,
            Ok(Some(g)) => Some(Ok(InputLine { line_no: i + 1, text: text.trim().to_owned(), graph: Ok(g) })),
            Err(e) => Some(Ok(InputLine { line_no: i + 1, text: text.trim().to_owned(), graph: Err(e) })),
        },
    })
}
