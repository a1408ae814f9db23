//! graph6 records, short form only (n <= 62).
//!
//! Header byte `n + 63`, then the upper triangle in column order
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
//! zero padded, each group offset by 63.

use std::io::BufRead;

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is not a graph6 character")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("header at offset 0 declares zero vertices")]
    ZeroVertices,
    #[error("header at offset 0 declares more than {MAX_VERTICES} vertices")]
    TooManyVertices,
    #[error("record truncated at offset {offset}: expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("non-zero padding bits in the byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("read error at line {line}: {message}")]
    Io { line: usize, message: String },
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: header });
    }
    if header == 126 {
        return Err(Graph6Error::TooManyVertices);
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let expected = 1 + payload_len(n);
    for (offset, &byte) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { offset: bytes.len(), expected });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::Trailing { offset: expected });
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: expected - 1 });
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Line-oriented graph6 reader that tolerates the optional `>>graph6<<`
/// prefix, CRLF endings and blank lines. Yields `(line_number, record)`;
/// errors carry the 1-based line number.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader { inner, line: 0, buf: String::new() }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = (usize, Result<Graph, Graph6Error>);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line += 1;
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    let err = Graph6Error::Io { line: self.line, message: e.to_string() };
                    return Some((self.line, Err(err)));
                }
            }
            let mut text = self.buf.trim_end_matches(['\n', '\r']);
            if let Some(rest) = text.strip_prefix(">>graph6<<") {
                text = rest;
            }
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            let parsed = parse_graph6(text).map_err(|e| Graph6Error::Line { line, source: Box::new(e) });
            return Some((line, parsed));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_small_records() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let two_k1 = parse_graph6("A?").unwrap();
        assert_eq!((two_k1.n(), two_k1.edge_count()), (2, 0));
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&k3), "Bw");
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn column_order_matches_convention() {
        // single edge {0,2}: bit index 1 in x(0,1), x(0,2), x(1,2)
        let g = Graph::from_edges(3, &[(0, 2)]).unwrap();
        assert_eq!(write_graph6(&g), format!("B{}", (0b010000u8 + 63) as char));
        // single edge {1,2}: bit index 2
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(write_graph6(&g), format!("B{}", (0b001000u8 + 63) as char));
        // petgraph's test vector: a-c, a-e, b-d, d-e on 5 vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn malformed_records_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::TooManyVertices));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroVertices));
        assert_eq!(parse_graph6("A"), Err(Graph6Error::Truncated { offset: 1, expected: 2 }));
        assert_eq!(parse_graph6("A__"), Err(Graph6Error::Trailing { offset: 2 }));
        assert_eq!(parse_graph6("A "), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert_eq!(parse_graph6("\x7f"), Err(Graph6Error::InvalidByte { offset: 0, byte: 0x7f }));
    }

    #[test]
    fn reader_skips_headers_and_blank_lines() {
        let input = ">>graph6<<A_\r\n\nBw\nA\n@\n";
        let records: Vec<_> = Graph6Reader::new(input.as_bytes()).collect();
        assert_eq!(records.len(), 4);
        assert_eq!(records[0].0, 1);
        assert_eq!(records[1].0, 3);
        assert!(matches!(records[2], (4, Err(Graph6Error::Line { line: 4, .. }))));
        assert_eq!(records[3].1.as_ref().unwrap().n(), 1);
    }
}
