//! graph6 and digraph6 text encodings for graphs of at most 12 vertices.

use pushlab_core::{Graph, Orientation, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order 0 is not supported")]
    ZeroOrder,
    #[error("expected {expected} data bytes for order {order}, found {found}")]
    Length { order: usize, expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("digraph6 line must start with '&'")]
    MissingDigraphPrefix,
    #[error("loop at vertex {v}")]
    Loop { v: usize },
    #[error("opposite arcs between {u} and {v}")]
    TwoCycle { u: usize, v: usize },
}

fn push_bits(out: &mut String, bits: impl IntoIterator<Item = bool>) {
    let mut acc = 0u8;
    let mut k = 0;
    for b in bits {
        acc = acc << 1 | b as u8;
        k += 1;
        if k == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
}

/// Unpacks `count` bits from 6-bit groups, rejecting nonzero padding.
fn read_bits(data: &[u8], count: usize, order: usize, offset: usize) -> Result<Vec<bool>, FormatError> {
    let expected = count.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::Length { order, expected, found: data.len() });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &byte) in data.iter().enumerate() {
        let v = check_byte(byte, offset + i)?;
        bits.extend((0..6).rev().map(|s| v >> s & 1 == 1));
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(FormatError::NonzeroPadding);
    }
    bits.truncate(count);
    Ok(bits)
}

fn check_byte(byte: u8, offset: usize) -> Result<u8, FormatError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(FormatError::ByteOutOfRange { offset, byte })
    }
}

fn read_order(byte: Option<&u8>, offset: usize) -> Result<usize, FormatError> {
    let order = check_byte(*byte.ok_or(FormatError::Empty)?, offset)? as usize;
    if order == 0 {
        return Err(FormatError::ZeroOrder);
    }
    if order > MAX_ORDER {
        return Err(FormatError::OrderTooLarge { order, max: MAX_ORDER });
    }
    Ok(order)
}

fn strip_newline(line: &str) -> &str {
    line.strip_suffix('\n').map_or(line, |l| l.strip_suffix('\r').unwrap_or(l))
}

/// graph6 encoding without the trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    push_bits(&mut out, (1..n).flat_map(|j| (0..j).map(move |i| g.has_edge(i, j))));
    out
}

/// Parses one graph6 line; a single trailing newline is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let bytes = strip_newline(line).as_bytes();
    let n = read_order(bytes.first(), 0)?;
    let bits = read_bits(&bytes[1..], n * n.saturating_sub(1) / 2, n, 1)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::build(n, &edges).expect("in-range simple edge list"))
}

/// digraph6 encoding without the trailing newline.
pub fn write_digraph6(d: &Orientation) -> String {
    let n = d.order();
    let mut out = String::from("&");
    out.push((n as u8 + 63) as char);
    push_bits(&mut out, (0..n).flat_map(|i| (0..n).map(move |j| d.has_arc(i, j))));
    out
}

/// Parses one digraph6 line into an orientation, rejecting loops and
/// opposite arc pairs.
pub fn parse_digraph6(line: &str) -> Result<Orientation, FormatError> {
    let bytes = strip_newline(line).as_bytes();
    let rest = bytes.strip_prefix(b"&").ok_or(if bytes.is_empty() {
        FormatError::Empty
    } else {
        FormatError::MissingDigraphPrefix
    })?;
    let n = read_order(rest.first(), 1)?;
    let bits = read_bits(&rest[1..], n * n, n, 2)?;
    let mut rows = vec![0u16; n];
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(FormatError::Loop { v: i });
                }
                if bits[j * n + i] {
                    return Err(FormatError::TwoCycle { u: i.min(j), v: i.max(j) });
                }
                rows[i] |= 1 << j;
            }
        }
    }
    Ok(Orientation::from_out_rows(n, &rows).expect("checked above"))
}
