//! Plain-text algebra, code and function files.
//!
//! Algebra file: the order `n` on the first data line, then `n` rows of `n`
//! whitespace-separated entries, row `x` listing `x∗0 .. x∗(n-1)`. Code file:
//! one 0/1 string per line. Function file: one `label value` pair per line,
//! in domain order. In all three, blank lines and lines starting with `#` are
//! skipped; an algebra file may carry `# names: ...` with one label per
//! element.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::CayleyAlgebra;
use crate::code::{BlockCode, Codeword};
use crate::error::{Error, Result};

const NAMES_PREFIX: &str = "# names:";

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Data lines as `(1-based line number, text)`.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

pub fn parse_algebra(text: &str) -> Result<CayleyAlgebra> {
    let mut lines = data_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing order line"))?;
    let mut header_tokens = tokens(header);
    let (col, tok) = header_tokens.next().expect("data line is non-blank");
    let order: usize = tok.parse().map_err(|_| {
        parse_err(
            header_no,
            col,
            format!("order {tok:?} is not a positive integer"),
        )
    })?;
    if order == 0 {
        return Err(parse_err(header_no, col, "order must be at least 1"));
    }
    if let Some((col, tok)) = header_tokens.next() {
        return Err(parse_err(
            header_no,
            col,
            format!("unexpected {tok:?} after the order"),
        ));
    }

    let mut rows = Vec::with_capacity(order);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == order {
            return Err(parse_err(
                line_no,
                1,
                format!("more than {order} table rows"),
            ));
        }
        let mut row = Vec::with_capacity(order);
        for (col, tok) in tokens(line) {
            if row.len() == order {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("row has more than {order} entries"),
                ));
            }
            let value: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, col, format!("{tok:?} is not an element index")))?;
            if value >= order {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("entry {value} is outside 0..{order}"),
                ));
            }
            row.push(value);
        }
        if row.len() != order {
            let end = line.chars().count() + 1;
            return Err(parse_err(
                line_no,
                end,
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(parse_err(
            last_line + 1,
            1,
            format!("expected {order} table rows, found {}", rows.len()),
        ));
    }
    let alg = CayleyAlgebra::new(rows)?;
    match parse_names(text) {
        Some((line_no, names)) => alg
            .with_names(names)
            .map_err(|e| parse_err(line_no, 1, e.to_string())),
        None => Ok(alg),
    }
}

fn parse_names(text: &str) -> Option<(usize, Vec<String>)> {
    text.lines().enumerate().find_map(|(i, l)| {
        l.trim()
            .strip_prefix(NAMES_PREFIX)
            .map(|rest| (i + 1, rest.split_whitespace().map(String::from).collect()))
    })
}

pub fn write_algebra(alg: &CayleyAlgebra) -> String {
    let mut out = String::new();
    if let Some(names) = alg.names() {
        if names
            .iter()
            .all(|n| !n.is_empty() && !n.contains(char::is_whitespace))
        {
            let _ = writeln!(out, "{NAMES_PREFIX} {}", names.join(" "));
        }
    }
    let _ = writeln!(out, "{}", alg.order());
    for row in alg.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Parses a code file, keeping line order. Duplicates are rejected.
pub fn parse_code(text: &str) -> Result<BlockCode> {
    let mut words: Vec<Codeword> = Vec::new();
    let mut seen: HashMap<Codeword, usize> = HashMap::new();
    for (line_no, line) in data_lines(text) {
        let trimmed = line.trim();
        let column = line.find(trimmed).unwrap_or(0) + 1;
        if let Some(pos) = trimmed.find(|c| c != '0' && c != '1') {
            return Err(parse_err(
                line_no,
                column + pos,
                format!("{trimmed:?} is not a 0/1 string"),
            ));
        }
        let word: Codeword = trimmed
            .parse()
            .map_err(|e: Error| parse_err(line_no, column, e.to_string()))?;
        if let Some(first) = words.first() {
            if first.len() != word.len() {
                return Err(parse_err(
                    line_no,
                    column,
                    format!(
                        "codeword has length {}, expected {}",
                        word.len(),
                        first.len()
                    ),
                ));
            }
        }
        if let Some(prev) = seen.insert(word.clone(), line_no) {
            return Err(parse_err(
                line_no,
                column,
                format!("duplicate of the codeword on line {prev}"),
            ));
        }
        words.push(word);
    }
    if words.is_empty() {
        return Err(parse_err(1, 1, "code file has no codewords"));
    }
    BlockCode::new(words)
}

pub fn write_code(code: &BlockCode) -> String {
    code.words().iter().map(|w| format!("{w}\n")).collect()
}

/// Parses `label value` lines; values are element indices.
pub fn parse_function(text: &str) -> Result<Vec<(String, usize)>> {
    let mut pairs = Vec::new();
    for (line_no, line) in data_lines(text) {
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        if toks.len() != 2 {
            return Err(parse_err(line_no, 1, "expected `label value`"));
        }
        let (col, tok) = toks[1];
        let value = tok
            .parse()
            .map_err(|_| parse_err(line_no, col, format!("{tok:?} is not an element index")))?;
        pairs.push((toks[0].1.to_string(), value));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "# example\n4\n0 0 0 0\n1 0 0 1\n2 1 0 2\n3 3 3 0\n";

    #[test]
    fn algebra_file() {
        let alg = parse_algebra(EXAMPLE).unwrap();
        assert_eq!(alg.order(), 4);
        assert_eq!(alg.op(2, 1), 1);
        assert_eq!(parse_algebra(&write_algebra(&alg)).unwrap(), alg);
        let named = alg
            .with_names(vec!["t".into(), "a".into(), "b".into(), "c".into()])
            .unwrap();
        let text = write_algebra(&named);
        assert!(text.starts_with("# names: t a b c\n"));
        assert_eq!(parse_algebra(&text).unwrap(), named);
    }

    #[test]
    fn algebra_file_errors_name_positions() {
        let err = parse_algebra("2\n0 0\n1\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 2,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_algebra("2\n0 0\n1 0 1\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 5,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_algebra("2\n0 0\n1 x\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_algebra("2\n0 0\n1 2\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_algebra("2\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(parse_algebra("").is_err());
        assert!(parse_algebra("0\n").is_err());
        assert!(parse_algebra("1 1\n0\n").is_err());
        assert!(parse_algebra("1\n0\n0\n").is_err());
    }

    #[test]
    fn code_file() {
        let code = parse_code("# V\n0110\n0010\n\n1111\n0001\n").unwrap();
        assert_eq!(code.to_strings(), ["0110", "0010", "1111", "0001"]);
        assert_eq!(parse_code(&write_code(&code)).unwrap(), code);
        let dup = parse_code("01\n11\n01\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }), "{dup}");
        let ragged = parse_code("01\n111\n").unwrap_err();
        assert!(matches!(ragged, Error::Parse { line: 2, .. }), "{ragged}");
        let bad = parse_code("0120\n").unwrap_err();
        assert!(
            matches!(
                bad,
                Error::Parse {
                    line: 1,
                    column: 3,
                    ..
                }
            ),
            "{bad}"
        );
        assert!(parse_code("# nothing\n").is_err());
    }

    #[test]
    fn function_file() {
        let pairs = parse_function("# f\np 3\nq 1\n").unwrap();
        assert_eq!(pairs, vec![("p".to_string(), 3), ("q".to_string(), 1)]);
        assert!(parse_function("p\n").is_err());
        assert!(parse_function("p x\n").is_err());
    }
}
