//! graph6: `N(n)` size header followed by the upper triangle of the adjacency
//! matrix, column by column, packed six bits per byte with offset 63.

use super::ParseError;
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

pub fn decode(bytes: &[u8]) -> Result<Graph, ParseError> {
    let mut body = bytes;
    while let Some((last, rest)) = body.split_last() {
        if last.is_ascii_whitespace() {
            body = rest;
        } else {
            break;
        }
    }
    let mut pos = 0;
    if body.starts_with(b">>") {
        if !body.starts_with(HEADER) {
            return Err(ParseError::Header);
        }
        pos = HEADER.len();
    }
    let digit = |i: usize| -> Result<usize, ParseError> {
        match body.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(ParseError::at(i, format!("byte {b:#04x} outside graph6 range 63..=126"))),
            None => Err(ParseError::at(i, "unexpected end of input")),
        }
    };
    let n = if body.get(pos) != Some(&126) {
        let n = digit(pos)?;
        pos += 1;
        n
    } else if body.get(pos + 1) != Some(&126) {
        let mut n = 0;
        for k in 1..=3 {
            n = (n << 6) | digit(pos + k)?;
        }
        pos += 4;
        n
    } else {
        let mut n = 0;
        for k in 2..=7 {
            n = (n << 6) | digit(pos + k)?;
        }
        pos += 8;
        n
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(ParseError::at(
            pos,
            format!("expected {need} adjacency bytes for n={n}, found {}", body.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = digit(pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = digit(pos + need - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(ParseError::at(pos + need - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_strings() {
        assert_eq!(encode(&Graph::cycle(3)), "Bw");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn header_is_optional_but_checked() {
        let g = decode(b">>graph6<<Bw\n").unwrap();
        assert!(g.same_structure(&Graph::cycle(3)));
        assert!(matches!(decode(b">>graph7<<Bw"), Err(ParseError::Header)));
    }

    #[test]
    fn long_size_header() {
        let g = Graph::path(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert!(decode(s.as_bytes()).unwrap().same_structure(&g));
    }

    #[test]
    fn truncated_input_reports_offset() {
        match decode(b"D") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode(b"B\x01"), Err(ParseError::Syntax { offset: 1, .. })));
    }
}
