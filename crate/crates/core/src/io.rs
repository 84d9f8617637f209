//! Text formats: rank matrices, distance CSV and comparison lists.
//!
//! `#` starts a comment anywhere on a line; blank lines are ignored. Errors
//! carry 1-based line and column positions.

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Q};
use crate::space::{Comparison, ComparisonList, DistanceMatrix, OrdinalSpace, Relation};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, each split into tokens by
/// `is_sep`.
fn tokenized_lines(text: &str, is_sep: fn(char) -> bool) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            if is_sep(ch) {
                if let Some(s) = start.take() {
                    let text = content[s..pos].trim();
                    if !text.is_empty() {
                        let lead = content[s..pos].len() - content[s..pos].trim_start().len();
                        tokens.push(Token {
                            text,
                            line: idx + 1,
                            column: s + lead + 1,
                        });
                    }
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if !tokens.is_empty() {
            out.push((idx + 1, tokens));
        }
    }
    out
}

fn whitespace(c: char) -> bool {
    c.is_whitespace()
}

fn parse_usize(t: &Token<'_>, what: &str) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| parse_error(t.line, t.column, format!("expected {what}, found {:?}", t.text)))
}

/// `n k` on the first line, then `n` rows of `n` integers.
pub fn parse_rank_matrix(text: &str) -> Result<OrdinalSpace> {
    let lines = tokenized_lines(text, whitespace);
    let Some((header_line, header)) = lines.first() else {
        return Err(parse_error(1, 1, "empty input, expected header `n k`"));
    };
    if header.len() != 2 {
        return Err(parse_error(*header_line, 1, "header must be `n k`"));
    }
    let n = parse_usize(&header[0], "point count")?;
    let k = parse_usize(&header[1], "level count")?;
    if n == 0 {
        return Err(parse_error(header[0].line, header[0].column, "point count must be positive"));
    }
    let rows = &lines[1..];
    if rows.len() != n {
        let line = rows.last().map_or(*header_line, |r| r.0);
        return Err(parse_error(line, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut ranks = Vec::with_capacity(n * n);
    for (line, tokens) in rows {
        if tokens.len() != n {
            return Err(parse_error(*line, 1, format!("expected {n} entries, found {}", tokens.len())));
        }
        for t in tokens {
            let r = parse_usize(t, "nonnegative integer rank")?;
            ranks.push(u32::try_from(r).map_err(|_| parse_error(t.line, t.column, "rank too large"))?);
        }
    }
    let s = OrdinalSpace::from_ranks(n, ranks)?;
    if s.k() as usize != k {
        return Err(parse_error(
            header[1].line,
            header[1].column,
            format!("header declares k = {k} but the matrix uses {} levels", s.k()),
        ));
    }
    Ok(s)
}

/// Rows of comma- or whitespace-separated rationals (`3`, `1.25`, `7/2`).
pub fn parse_distance_csv(text: &str) -> Result<DistanceMatrix> {
    let lines = tokenized_lines(text, |c| c == ',' || c.is_whitespace());
    if lines.is_empty() {
        return Err(parse_error(1, 1, "empty distance matrix"));
    }
    let n = lines.len();
    let mut rows = Vec::with_capacity(n);
    for (line, tokens) in &lines {
        if tokens.len() != n {
            return Err(parse_error(*line, 1, format!("expected {n} entries, found {}", tokens.len())));
        }
        let row = tokens
            .iter()
            .map(|t| {
                parse_rational(t.text).ok_or_else(|| {
                    parse_error(t.line, t.column, format!("not a rational number: {:?}", t.text))
                })
            })
            .collect::<Result<Vec<Q>>>()?;
        rows.push(row);
    }
    DistanceMatrix::new(rows)
}

/// Lines `x y z w REL` with 1-based points and `REL ∈ {LT, EQ, GT}`. An
/// optional first line `n N` fixes the point count; otherwise it is the
/// largest index mentioned.
pub fn parse_comparisons(text: &str) -> Result<ComparisonList> {
    let lines = tokenized_lines(text, whitespace);
    let mut declared = None;
    let mut entries = Vec::new();
    for (i, (line, tokens)) in lines.iter().enumerate() {
        if i == 0 && tokens.len() == 2 && tokens[0].text == "n" {
            declared = Some(parse_usize(&tokens[1], "point count")?);
            continue;
        }
        if tokens.len() != 5 {
            return Err(parse_error(*line, 1, "expected `x y z w REL`"));
        }
        let mut quad = [0usize; 4];
        for (slot, t) in quad.iter_mut().zip(&tokens[..4]) {
            let v = parse_usize(t, "1-based point index")?;
            if v == 0 {
                return Err(parse_error(t.line, t.column, "point indices are 1-based"));
            }
            if declared.is_some_and(|n| v > n) {
                return Err(parse_error(t.line, t.column, format!("point {v} exceeds n")));
            }
            *slot = v - 1;
        }
        let t = &tokens[4];
        let rel = match t.text.to_ascii_uppercase().as_str() {
            "LT" | "<" => Relation::Lt,
            "EQ" | "=" => Relation::Eq,
            "GT" | ">" => Relation::Gt,
            other => {
                return Err(parse_error(t.line, t.column, format!("unknown relation {other:?}")))
            }
        };
        entries.push(Comparison {
            x: quad[0],
            y: quad[1],
            z: quad[2],
            w: quad[3],
            rel,
        });
    }
    let n = declared.unwrap_or_else(|| {
        entries
            .iter()
            .flat_map(|e| e.quad())
            .max()
            .map_or(1, |m| m + 1)
    });
    ComparisonList::new(n, entries)
}

pub fn format_distance_csv(d: &DistanceMatrix) -> String {
    let mut out = String::new();
    for row in d.rows() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn format_comparisons(c: &ComparisonList) -> String {
    let mut out = format!("n {}\n", c.n());
    for e in c.entries() {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            e.x + 1,
            e.y + 1,
            e.z + 1,
            e.w + 1,
            e.rel
        ));
    }
    out
}
