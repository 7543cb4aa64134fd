//! Plain-text matroid format.
//!
//! ```text
//! # optional comments
//! matroid 4 2
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! The header gives the ground-set size and the rank; each following line is
//! one basis as strictly increasing 0-based indices. The single empty basis
//! of a rank-0 matroid is written as `-`. A blank line ends a record, so
//! several matroids can share one stream. Output lists bases in
//! lexicographic order, which makes files byte-reproducible.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

fn lex_key(b: &Subset) -> Vec<usize> {
    b.to_vec()
}

/// Serialize one matroid, terminated by a newline (no trailing blank line).
pub fn to_text(m: &Matroid) -> String {
    let mut out = String::new();
    writeln!(out, "matroid {} {}", m.n(), m.rank()).unwrap();
    let mut bases = m.bases().to_vec();
    bases.sort_by_key(lex_key);
    for b in bases {
        if b.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let line: Vec<String> = b.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Serialize several matroids as blank-line separated records.
pub fn to_text_stream<'a, I: IntoIterator<Item = &'a Matroid>>(ms: I) -> String {
    ms.into_iter().map(to_text).collect::<Vec<_>>().join("\n")
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parse every record in `text`.
pub fn parse_stream(text: &str) -> Result<Vec<Matroid>> {
    let mut out = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bases: Vec<Subset> = Vec::new();

    let finish = |header: (usize, usize, usize), bases: &mut Vec<Subset>| -> Result<Matroid> {
        let (line, n, rank) = header;
        let taken = std::mem::take(bases);
        if taken.is_empty() {
            return Err(parse_err(line, "matroid has no bases"));
        }
        let m = Matroid::from_bases(n, taken).map_err(|e| parse_err(line, e.to_string()))?;
        if m.rank() != rank {
            return Err(parse_err(
                line,
                format!("header says rank {rank} but bases have size {}", m.rank()),
            ));
        }
        Ok(m)
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        let is_comment = raw.trim_start().starts_with('#');
        if content.is_empty() {
            if is_comment {
                continue;
            }
            if let Some(h) = header.take() {
                out.push(finish(h, &mut bases)?);
            }
            continue;
        }
        match header {
            None => {
                let fields: Vec<&str> = content.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "matroid" {
                    return Err(parse_err(lineno, "expected header `matroid <n> <rank>`"));
                }
                let n: usize = fields[1].parse().map_err(|_| {
                    parse_err(lineno, format!("bad ground-set size `{}`", fields[1]))
                })?;
                let rank: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad rank `{}`", fields[2])))?;
                if n > crate::subset::MAX_GROUND {
                    return Err(parse_err(
                        lineno,
                        format!("ground set of size {n} is too large"),
                    ));
                }
                if rank > n {
                    return Err(parse_err(lineno, "rank exceeds ground-set size"));
                }
                header = Some((lineno, n, rank));
            }
            Some((_, n, rank)) => {
                let mut b = Subset::EMPTY;
                if content != "-" {
                    let mut prev: Option<usize> = None;
                    for tok in content.split_whitespace() {
                        let e: usize = tok
                            .parse()
                            .map_err(|_| parse_err(lineno, format!("bad element `{tok}`")))?;
                        if e >= n {
                            return Err(parse_err(lineno, format!("element {e} out of range")));
                        }
                        if prev.is_some_and(|p| p >= e) {
                            return Err(parse_err(
                                lineno,
                                "basis elements must be strictly increasing",
                            ));
                        }
                        prev = Some(e);
                        b = b.with(e);
                    }
                }
                if b.len() != rank {
                    return Err(parse_err(
                        lineno,
                        format!("basis has {} elements, expected {rank}", b.len()),
                    ));
                }
                bases.push(b);
            }
        }
    }
    if let Some(h) = header.take() {
        out.push(finish(h, &mut bases)?);
    }
    Ok(out)
}

/// Parse exactly one matroid.
pub fn parse_one(text: &str) -> Result<Matroid> {
    let mut all = parse_stream(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(parse_err(1, "no matroid found")),
        k => Err(parse_err(1, format!("expected one matroid, found {k}"))),
    }
}

pub fn read_file(path: &std::path::Path) -> Result<Matroid> {
    parse_one(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, uniform, CatalogId};

    #[test]
    fn emits_sorted_bases() {
        let text = to_text(&uniform(2, 3).unwrap());
        assert_eq!(text, "matroid 3 2\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn lexicographic_not_bitmask_order() {
        // in bit-mask order {1,2,3} would come before {0,1,4}
        let text = to_text(&uniform(3, 5).unwrap());
        let lines: Vec<&str> = text.lines().skip(1).collect();
        let mut sorted = lines.clone();
        sorted.sort_by_key(|l| {
            l.split(' ')
                .map(|t| t.parse::<usize>().unwrap())
                .collect::<Vec<_>>()
        });
        assert_eq!(lines, sorted);
        assert_eq!(lines[3], "0 2 3");
    }

    #[test]
    fn stream_with_comments() {
        let text = "# two matroids\nmatroid 2 1\n0\n1 # trailing comment\n\nmatroid 1 0\n-\n";
        let ms = parse_stream(text).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0], uniform(1, 2).unwrap());
        assert_eq!(ms[1].rank(), 0);
        assert_eq!(parse_stream(&to_text_stream(&ms)).unwrap(), ms);
    }

    #[test]
    fn catalog_file_is_byte_reproducible() {
        let m = catalog(CatalogId::M6);
        let a = to_text(&m);
        let b = to_text(&parse_one(&a).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_one("matroid 3 2\n0 1\n1 0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_one("matroid 3 2\n0 1\n0 7\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_one("matroid three 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_one("matroid 4 2\n0 1\n2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
