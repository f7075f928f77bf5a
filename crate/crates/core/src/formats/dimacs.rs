//! DIMACS `col` format. Vertices are 1-indexed on the wire. Labels travel in
//! `c label <v> <name>` comment lines, which other readers ignore.

use super::ParseError;
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (v, name) in g.labels() {
        out.push_str(&format!("c label {} {}\n", v + 1, name));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::at(e.valid_up_to(), "invalid UTF-8"))?;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some(&tag) = words.first() else { continue };
        let number = |i: usize, what: &str| -> Result<usize, ParseError> {
            words
                .get(i)
                .ok_or_else(|| ParseError::at(start, format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|_| ParseError::at(start, format!("{what} is not a non-negative integer")))
        };
        match tag {
            "c" => {
                if words.len() == 4 && words[1] == "label" {
                    let v = number(2, "label vertex")?;
                    if v == 0 {
                        return Err(ParseError::at(start, "vertices are 1-indexed"));
                    }
                    labels.push((v - 1, words[3].to_owned()));
                }
            }
            "p" => {
                if header.is_some() {
                    return Err(ParseError::at(start, "second problem line"));
                }
                if !matches!(words.get(1), Some(&"edge") | Some(&"col")) {
                    return Err(ParseError::at(start, "expected `p edge <n> <m>`"));
                }
                header = Some((number(2, "vertex count")?, number(3, "edge count")?));
            }
            "e" => {
                if header.is_none() {
                    return Err(ParseError::at(start, "edge line before problem line"));
                }
                let (u, v) = (number(1, "endpoint")?, number(2, "endpoint")?);
                if u == 0 || v == 0 {
                    return Err(ParseError::at(start, "vertices are 1-indexed"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(ParseError::at(start, format!("unknown line type `{tag}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::at(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(ParseError::at(
            offset,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, &edges)?.with_labels(labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_no_edge_lines() {
        assert_eq!(encode(&Graph::empty(1)), "p edge 1 0\n");
    }

    #[test]
    fn one_indexed_on_the_wire() {
        let s = encode(&Graph::path(2));
        assert_eq!(s, "p edge 2 1\ne 1 2\n");
        let g = decode(b"c hello\np edge 3 2\ne 1 3\ne 3 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn labels_survive() {
        let g = Graph::path(3).with_labels([(1, "m")]).unwrap();
        let back = decode(encode(&g).as_bytes()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn errors_carry_line_offset() {
        let bad = b"p edge 2 1\ne 1 x\n";
        match decode(bad) {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(decode(b"p edge 2 2\ne 1 2\n").is_err());
        assert!(matches!(decode(b"p edge 2 1\ne 1 3\n"), Err(ParseError::Graph(_))));
    }
}
