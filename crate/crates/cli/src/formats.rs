//! Text formats.
//!
//! Quandle file: the first line holds the order `k`, followed by `k` rows
//! of `k` space-separated integers (row `x` lists `x ▷ 0 … x ▷ k−1`).
//!
//! Linkoid file, line oriented, `#` starts a comment:
//!
//! ```text
//! arcs 5
//! open 0 4
//! xing + 1 4 3
//! ```
//!
//! `arcs M` comes first; each `open LEG HEAD` adds the next open
//! component; `xing SIGN UNDER_IN OVER UNDER_OUT` adds a crossing with
//! `SIGN` one of `+`, `-` or `−`.
//!
//! Endomorphism file: one image array per line, space separated.

use std::fmt::Write as _;

use linkoid_quiver::{Crossing, LinkoidDiagram, OpenComponent, Quandle, QuandleMap, Sign};

use crate::{Error, ParseError, Result};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_number(line: usize, token: &str, what: &str) -> std::result::Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::new(line, format!("expected {what}, found `{token}`")))
}

fn parse_row(line: usize, text: &str) -> std::result::Result<Vec<usize>, ParseError> {
    text.split_whitespace().map(|t| parse_number(line, t, "an integer")).collect()
}

/// Reads a quandle file into a raw table without checking the axioms.
pub fn parse_quandle_table(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty quandle file"))?;
    let k = parse_number(first, header, "the quandle order")?;
    if k == 0 {
        return Err(ParseError::new(first, "quandle order must be at least 1").into());
    }
    let mut rows = Vec::with_capacity(k);
    for (line, text) in lines.by_ref().take(k) {
        let row = parse_row(line, text)?;
        if row.len() != k {
            return Err(ParseError::new(line, format!("expected {k} entries, found {}", row.len())).into());
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= k) {
            return Err(ParseError::new(line, format!("entry {bad} out of range 0..{k}")).into());
        }
        rows.push(row);
    }
    if rows.len() < k {
        return Err(ParseError::new(first, format!("expected {k} rows, found {}", rows.len())).into());
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::new(line, "unexpected content after the last row").into());
    }
    Ok(rows)
}

/// Reads and validates a quandle file.
pub fn parse_quandle(text: &str) -> Result<Quandle> {
    Ok(Quandle::from_table(parse_quandle_table(text)?)?)
}

pub fn serialize_quandle(q: &Quandle) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_linkoid(text: &str) -> Result<LinkoidDiagram> {
    let mut arc_count: Option<usize> = None;
    let mut crossings = Vec::new();
    let mut opens: Vec<OpenComponent> = Vec::new();

    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let arc = |token: &str, m: usize| -> std::result::Result<usize, ParseError> {
            let a = parse_number(line, token, "an arc index")?;
            if a >= m {
                return Err(ParseError::new(line, format!("arc {a} out of range for {m} arcs")));
            }
            Ok(a)
        };
        match (tokens[0], arc_count) {
            ("arcs", None) => {
                if tokens.len() != 2 {
                    return Err(ParseError::new(line, "expected `arcs M`").into());
                }
                arc_count = Some(parse_number(line, tokens[1], "an arc count")?);
            }
            ("arcs", Some(_)) => {
                return Err(ParseError::new(line, "duplicate `arcs` declaration").into());
            }
            (_, None) => {
                return Err(ParseError::new(line, "expected `arcs M` before any other line").into());
            }
            ("open", Some(m)) => {
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "expected `open LEG HEAD`").into());
                }
                let (leg, head) = (arc(tokens[1], m)?, arc(tokens[2], m)?);
                if let Some(prev) = opens.iter().position(|o| [o.leg, o.head].iter().any(|&a| a == leg || a == head)) {
                    return Err(ParseError::new(
                        line,
                        format!("duplicate open-component declaration: endpoint already used by open component {prev}"),
                    )
                    .into());
                }
                opens.push(OpenComponent { leg, head });
            }
            ("xing", Some(m)) => {
                if tokens.len() != 5 {
                    return Err(ParseError::new(line, "expected `xing SIGN UNDER_IN OVER UNDER_OUT`").into());
                }
                let sign = match tokens[1] {
                    "+" => Sign::Positive,
                    "-" | "−" => Sign::Negative,
                    other => return Err(ParseError::new(line, format!("unknown crossing sign `{other}`")).into()),
                };
                crossings.push(Crossing {
                    under_in: arc(tokens[2], m)?,
                    over: arc(tokens[3], m)?,
                    under_out: arc(tokens[4], m)?,
                    sign,
                });
            }
            (other, Some(_)) => {
                return Err(ParseError::new(line, format!("unknown directive `{other}`")).into());
            }
        }
    }
    let arc_count = arc_count.ok_or_else(|| ParseError::new(1, "missing `arcs` declaration"))?;
    Ok(LinkoidDiagram::new(arc_count, crossings, opens)?)
}

pub fn serialize_linkoid(d: &LinkoidDiagram) -> String {
    let mut out = format!("arcs {}\n", d.arc_count());
    for o in d.open_components() {
        let _ = writeln!(out, "open {} {}", o.leg, o.head);
    }
    for c in d.crossings() {
        let _ = writeln!(out, "xing {} {} {} {}", c.sign, c.under_in, c.over, c.under_out);
    }
    out
}

/// Reads an endomorphism subset for a quandle of order `k`. Whether the
/// maps are pointed endomorphisms is checked later against the pointed
/// quandle.
pub fn parse_endos(text: &str, k: usize) -> Result<Vec<QuandleMap>> {
    content_lines(text)
        .map(|(line, content)| {
            let row = parse_row(line, content)?;
            if row.len() != k {
                return Err(ParseError::new(line, format!("expected {k} images, found {}", row.len())).into());
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= k) {
                return Err(ParseError::new(line, format!("image {bad} out of range 0..{k}")).into());
            }
            Ok(QuandleMap::new(k, row))
        })
        .collect::<Result<Vec<_>>>()
}

/// Parses a comma-separated basepoint list such as `0,3`.
pub fn parse_basepoints(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Usage(format!("invalid basepoint `{}`", t.trim())))
        })
        .collect()
}
