//! The hypergraph text format.
//!
//! ```text
//! # comment
//! 5 2
//! 1 2
//! 2 3
//! 1 3
//! ```
//!
//! The first content line is `n k`; every further content line is one edge
//! written as increasing vertex labels. Blank lines and lines starting with
//! `#` are ignored. Edges are canonicalized to lex order on load.

use crate::combinatorics::{KSubset, UniformHypergraph};
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_error(line, format!("`{tok}` is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, KSubset)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = numbers(line_no, line)?;
        let Some((n, k)) = header else {
            let [n, k] = nums[..] else {
                return Err(parse_error(line_no, "expected header `n k`"));
            };
            if k > n {
                return Err(parse_error(line_no, format!("uniformity {k} exceeds {n} vertices")));
            }
            if n > crate::combinatorics::MAX_VERTEX {
                return Err(parse_error(line_no, format!("at most 64 vertices supported, got {n}")));
            }
            header = Some((n, k));
            continue;
        };
        if nums.len() != k {
            return Err(parse_error(
                line_no,
                format!("edge has {} vertices, expected {k}", nums.len()),
            ));
        }
        if let Some(&v) = nums.iter().find(|&&v| v == 0 || v > n) {
            return Err(parse_error(line_no, format!("vertex {v} outside 1..={n}")));
        }
        if nums.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_error(line_no, "edge vertices must be strictly increasing"));
        }
        let e = KSubset::new(&nums).map_err(|err| parse_error(line_no, err.to_string()))?;
        if let Some((first, _)) = edges.iter().find(|(_, f)| *f == e) {
            return Err(parse_error(
                line_no,
                format!("edge {e} repeats the edge on line {first}"),
            ));
        }
        edges.push((line_no, e));
    }
    let (n, k) = header.ok_or_else(|| parse_error(0, "missing header `n k`"))?;
    UniformHypergraph::new(n, k, edges.into_iter().map(|(_, e)| e).collect())
}

/// Canonical text: header, then edges in lex order.
pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    h.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_any_order() {
        let text = "# triangle\n5 2\n\n2 3\n1 3\n# tail\n1 2\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h, UniformHypergraph::from_digits(5, 2, "12 13 23").unwrap());
        assert_eq!(write_hypergraph(&h), "5 2\n1 2\n1 3\n2 3\n");
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("5\n", 1),
            ("5 2\n1 2\n2 1\n", 3),
            ("5 2\n1 6\n", 2),
            ("5 2\n1 2 3\n", 2),
            ("5 2\n1 2\n# c\n1 2\n", 4),
            ("5 2\n1 x\n", 2),
            ("2 3\n", 1),
        ];
        for (text, line) in cases {
            match parse_hypergraph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_hypergraph("# nothing\n"), Err(Error::Parse { line: 0, .. })));
    }

    #[test]
    fn empty_edge_set() {
        let h = parse_hypergraph("4 2\n").unwrap();
        assert!(h.is_empty());
        assert_eq!(h.n(), 4);
    }
}
