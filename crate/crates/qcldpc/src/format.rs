//! Plain-text matrix formats.
//!
//! Exponent matrices: a header line `r J L`, then `J` lines of `L`
//! whitespace-separated entries, each `inf`, `e` or `e1,e2`.
//!
//! Dense matrices: a header line `rows cols`, then `rows` lines of `0`/`1`
//! characters (whitespace between them is ignored).
//!
//! Lines starting with `#` and blank lines are skipped. The writers emit a
//! `# <kind> format-version N` comment before the header. Several documents may
//! follow each other in one text; a CSS pair is exported that way.

use std::fmt::Write as _;

use qcldpc_core::{BitMatrix, ExpEntry, ExponentMatrix};

use crate::error::{Error, Result};

pub const EXPONENT_FORMAT_VERSION: u32 = 1;
pub const DENSE_FORMAT_VERSION: u32 = 1;

/// A whitespace-delimited token with its 1-based position.
#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn tokens(line: usize, text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(token(text, line, s, i));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(token(text, line, s, text.len()));
    }
    out
}

fn token(text: &str, line: usize, start: usize, end: usize) -> Token<'_> {
    Token {
        text: &text[start..end],
        line,
        column: text[..start].chars().count() + 1,
    }
}

fn parse_usize(t: &Token<'_>, what: &str) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| Error::parse(t.line, t.column, format!("expected {what}, found `{}`", t.text)))
}

fn header<'a, I>(lines: &mut I, fields: &[&str]) -> Result<Option<(usize, Vec<usize>)>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let Some((line, text)) = lines.next() else {
        return Ok(None);
    };
    let toks = tokens(line, text);
    if toks.len() != fields.len() {
        let column = toks.get(fields.len()).map_or(text.len() + 1, |t| t.column);
        return Err(Error::parse(
            line,
            column,
            format!("header must be `{}`", fields.join(" ")),
        ));
    }
    let values = toks
        .iter()
        .zip(fields)
        .map(|(t, f)| parse_usize(t, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some((line, values)))
}

fn parse_entry(t: &Token<'_>, r: usize) -> Result<ExpEntry> {
    if t.text == "inf" {
        return Ok(ExpEntry::Zero);
    }
    let mut exps = Vec::with_capacity(2);
    let mut offset = 0;
    for part in t.text.split(',') {
        let at = Token {
            text: part,
            line: t.line,
            column: t.column + offset,
        };
        offset += part.chars().count() + 1;
        let e = parse_usize(&at, "an exponent or `inf`")?;
        if e >= r {
            return Err(Error::parse(at.line, at.column, format!("exponent {e} is not below r = {r}")));
        }
        exps.push(e);
    }
    match exps[..] {
        [e] => Ok(ExpEntry::Monomial(e)),
        [a, b] if a != b => Ok(ExpEntry::Binomial(a, b)),
        [_, _] => Err(Error::parse(t.line, t.column, "binomial exponents must differ")),
        _ => Err(Error::parse(t.line, t.column, "an entry has at most two exponents")),
    }
}

/// Every exponent matrix in `text`, in order.
pub fn parse_exponent_documents(text: &str) -> Result<Vec<ExponentMatrix>> {
    let mut lines = content_lines(text);
    let mut docs = Vec::new();
    while let Some((hline, dims)) = header(&mut lines, &["r", "J", "L"])? {
        let (r, j, l) = (dims[0], dims[1], dims[2]);
        if r < 2 || j == 0 || l == 0 {
            return Err(Error::parse(hline, 1, "need r >= 2 and J, L >= 1"));
        }
        let mut rows = Vec::with_capacity(j);
        for _ in 0..j {
            let (line, raw) = lines
                .next()
                .ok_or_else(|| Error::parse(text.lines().count() + 1, 1, format!("expected {j} rows of entries")))?;
            let toks = tokens(line, raw);
            if toks.len() != l {
                let column = toks.get(l).map_or(raw.len() + 1, |t| t.column);
                return Err(Error::parse(line, column, format!("expected {l} entries, found {}", toks.len())));
            }
            rows.push(toks.iter().map(|t| parse_entry(t, r)).collect::<Result<Vec<_>>>()?);
        }
        docs.push(ExponentMatrix::new(r, rows)?);
    }
    if docs.is_empty() {
        return Err(Error::parse(1, 1, "missing `r J L` header"));
    }
    Ok(docs)
}

/// Exactly one exponent matrix.
pub fn parse_exponent(text: &str) -> Result<ExponentMatrix> {
    let mut docs = parse_exponent_documents(text)?;
    if docs.len() != 1 {
        return Err(Error::parse(1, 1, format!("expected one matrix, found {}", docs.len())));
    }
    Ok(docs.remove(0))
}

/// Body of an exponent document without the version comment.
fn exponent_body(e: &ExponentMatrix) -> String {
    let mut out = format!("{} {} {}\n", e.circulant_size(), e.layers(), e.block_cols());
    for row in e.rows() {
        let cells: Vec<String> = row
            .iter()
            .map(|entry| match *entry {
                ExpEntry::Zero => "inf".to_string(),
                ExpEntry::Monomial(a) => a.to_string(),
                ExpEntry::Binomial(a, b) => format!("{a},{b}"),
            })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_exponent(e: &ExponentMatrix) -> String {
    format!(
        "# qcldpc-exponent format-version {EXPONENT_FORMAT_VERSION}\n{}",
        exponent_body(e)
    )
}

/// Every dense matrix in `text`, in order.
pub fn parse_dense_documents(text: &str) -> Result<Vec<BitMatrix>> {
    let mut lines = content_lines(text);
    let mut docs = Vec::new();
    while let Some((_, dims)) = header(&mut lines, &["rows", "cols"])? {
        let (rows, cols) = (dims[0], dims[1]);
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            let (line, raw) = lines
                .next()
                .ok_or_else(|| Error::parse(text.lines().count() + 1, 1, format!("expected {rows} rows")))?;
            let mut j = 0;
            for (column, ch) in raw.chars().enumerate() {
                let bit = match ch {
                    '0' => false,
                    '1' => true,
                    c if c.is_whitespace() => continue,
                    c => return Err(Error::parse(line, column + 1, format!("expected 0 or 1, found `{c}`"))),
                };
                if j == cols {
                    return Err(Error::parse(line, column + 1, format!("row has more than {cols} entries")));
                }
                m.set(i, j, bit);
                j += 1;
            }
            if j != cols {
                return Err(Error::parse(line, raw.chars().count() + 1, format!("row has {j} entries, expected {cols}")));
            }
        }
        docs.push(m);
    }
    if docs.is_empty() {
        return Err(Error::parse(1, 1, "missing `rows cols` header"));
    }
    Ok(docs)
}

pub fn parse_dense(text: &str) -> Result<BitMatrix> {
    let mut docs = parse_dense_documents(text)?;
    if docs.len() != 1 {
        return Err(Error::parse(1, 1, format!("expected one matrix, found {}", docs.len())));
    }
    Ok(docs.remove(0))
}

pub fn write_dense(m: &BitMatrix) -> String {
    let mut out = String::with_capacity((m.cols() + 1) * m.rows() + 64);
    let _ = writeln!(out, "# qcldpc-dense format-version {DENSE_FORMAT_VERSION}");
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for i in 0..m.rows() {
        out.extend((0..m.cols()).map(|j| if m.get(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Matrices read from a file in either format, told apart by the header.
#[derive(Clone, Debug)]
pub enum MatrixFile {
    Exponent(Vec<ExponentMatrix>),
    Dense(Vec<BitMatrix>),
}

pub fn parse_any(text: &str) -> Result<MatrixFile> {
    let fields = content_lines(text)
        .next()
        .map_or(0, |(line, t)| tokens(line, t).len());
    match fields {
        2 => parse_dense_documents(text).map(MatrixFile::Dense),
        _ => parse_exponent_documents(text).map(MatrixFile::Exponent),
    }
}
