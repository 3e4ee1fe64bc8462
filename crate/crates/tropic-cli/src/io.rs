//! Problem files and their token grammar.
//!
//! A problem file carries a semifield tag, a matrix, and (usually) a
//! right-hand side vector:
//!
//! ```text
//! maxplus-rational; A: [0 2; 1 0]; d: [3 2]
//! ```
//!
//! Sections are separated by `;` or newlines; the matrix and vector live in
//! brackets, rows split by `;` or newlines, entries by whitespace. Tokens
//! are decimal numbers, exact rationals `p/q`, and the kind's zero literal
//! (`-inf` for max-plus, `+inf` for min-plus, `0` for max-times).
//! [`print_problem`] emits the canonical one-line form, which parses back
//! token-identically.

use std::fmt;

use tropic::semifield::{Scalar, Semifield, SemifieldKind};
use tropic::{Matrix, Vector};

/// Parse failure with a 1-based position in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(text: &str, offset: usize, message: String) -> Self {
        let mut line = 1;
        let mut col = 1;
        for (i, c) in text.char_indices() {
            if i >= offset {
                break;
            }
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        ParseError { line, col, message }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A problem file split into its sections, before kind-specific token
/// parsing. Offsets point into the original text for error reporting.
#[derive(Debug, Clone)]
pub struct ProblemSource {
    pub kind: SemifieldKind,
    pub matrix_src: String,
    pub matrix_offset: usize,
    pub vector_src: Option<String>,
    pub vector_offset: usize,
}

/// Splits a problem file into the semifield tag and the bracketed sections.
pub fn parse_problem_source(text: &str) -> Result<ProblemSource, ParseError> {
    let mut kind: Option<SemifieldKind> = None;
    let mut matrix: Option<(String, usize)> = None;
    let mut vector: Option<(String, usize)> = None;

    let bytes = text.as_bytes();
    let mut pos = 0usize;
    while pos < bytes.len() {
        // skip separators and blanks
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b';') {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let start = pos;
        // a section runs to the next top-level ';' or newline or '['
        while pos < bytes.len() && bytes[pos] != b';' && bytes[pos] != b'\n' && bytes[pos] != b'[' {
            pos += 1;
        }
        let head = text[start..pos].trim();
        if pos < bytes.len() && bytes[pos] == b'[' {
            let open = pos;
            let close = text[open..].find(']').map(|i| open + i).ok_or_else(|| {
                ParseError::at(text, open, "unclosed '['".into())
            })?;
            let body = &text[open + 1..close];
            pos = close + 1;
            let label = head.trim_end_matches(':').trim();
            match label {
                "A" => {
                    if matrix.is_some() {
                        return Err(ParseError::at(text, start, "duplicate section A".into()));
                    }
                    matrix = Some((body.to_string(), open + 1));
                }
                "d" => {
                    if vector.is_some() {
                        return Err(ParseError::at(text, start, "duplicate section d".into()));
                    }
                    vector = Some((body.to_string(), open + 1));
                }
                other => {
                    return Err(ParseError::at(
                        text,
                        start,
                        format!("unknown section {other:?}; expected \"A:\" or \"d:\""),
                    ))
                }
            }
        } else if !head.is_empty() {
            let tag = head.strip_prefix("semifield:").map(str::trim).unwrap_or(head);
            match SemifieldKind::from_tag(tag) {
                Some(k) => {
                    if kind.is_some() {
                        return Err(ParseError::at(text, start, "duplicate semifield tag".into()));
                    }
                    kind = Some(k);
                }
                None => {
                    return Err(ParseError::at(
                        text,
                        start,
                        format!("unknown semifield: {tag:?}"),
                    ))
                }
            }
        }
    }

    let kind = kind.ok_or_else(|| ParseError::at(text, 0, "missing semifield tag".into()))?;
    let (matrix_src, matrix_offset) =
        matrix.ok_or_else(|| ParseError::at(text, 0, "missing section \"A:\"".into()))?;
    let (vector_src, vector_offset) = match vector {
        Some((src, off)) => (Some(src), off),
        None => (None, 0),
    };
    Ok(ProblemSource {
        kind,
        matrix_src,
        matrix_offset,
        vector_src,
        vector_offset,
    })
}

/// Tokens of a bracketed section with their offsets; rows split by `;` or
/// newlines.
fn tokenize(src: &str, base: usize) -> Vec<Vec<(usize, &str)>> {
    let mut rows = Vec::new();
    for (row_offset, row_src) in split_keep_offsets(src, |c| c == ';' || c == '\n') {
        let mut row = Vec::new();
        for (tok_offset, token) in split_keep_offsets(row_src, |c: char| c.is_whitespace()) {
            if !token.is_empty() {
                row.push((base + row_offset + tok_offset, token));
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    rows
}

fn split_keep_offsets(src: &str, sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0usize;
    for (i, c) in src.char_indices() {
        if sep(c) {
            out.push((start, &src[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &src[start..]));
    out
}

/// Parses the bracketed matrix body for a concrete kind, with positions.
pub fn parse_matrix_body<S: Semifield>(
    text: &str,
    body: &str,
    base: usize,
) -> Result<Matrix<S>, ParseError> {
    let rows = tokenize(body, base);
    if rows.is_empty() {
        return Err(ParseError::at(text, base, "empty matrix".into()));
    }
    let width = rows[0].len();
    let mut parsed: Vec<Vec<Scalar<S>>> = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(ParseError::at(
                text,
                row[0].0,
                format!(
                    "ragged matrix rows: row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    width
                ),
            ));
        }
        let mut out = Vec::with_capacity(width);
        for &(offset, token) in row {
            let scalar = token
                .parse::<Scalar<S>>()
                .map_err(|e| ParseError::at(text, offset, e.to_string()))?;
            out.push(scalar);
        }
        parsed.push(out);
    }
    Ok(Matrix::from_rows(parsed))
}

/// Parses the bracketed vector body for a concrete kind, with positions.
pub fn parse_vector_body<S: Semifield>(
    text: &str,
    body: &str,
    base: usize,
) -> Result<Vector<S>, ParseError> {
    let rows = tokenize(body, base);
    let mut components = Vec::new();
    for row in &rows {
        for &(offset, token) in row {
            let scalar = token
                .parse::<Scalar<S>>()
                .map_err(|e| ParseError::at(text, offset, e.to_string()))?;
            components.push(scalar);
        }
    }
    if components.is_empty() {
        return Err(ParseError::at(text, base, "empty vector".into()));
    }
    Ok(Vector::new(components))
}

/// Parses a complete problem file for a concrete kind.
///
/// The kind tag in the file must match `S`; the vector section is required
/// here (commands that need no right-hand side read the sections directly).
pub fn parse_problem<S: Semifield>(text: &str) -> Result<(Matrix<S>, Vector<S>), ParseError> {
    let source = parse_problem_source(text)?;
    if source.kind != S::KIND {
        return Err(ParseError::at(
            text,
            0,
            format!("expected semifield {}, file says {}", S::KIND, source.kind),
        ));
    }
    let matrix = parse_matrix_body::<S>(text, &source.matrix_src, source.matrix_offset)?;
    let vector_src = source
        .vector_src
        .as_ref()
        .ok_or_else(|| ParseError::at(text, 0, "missing section \"d:\"".into()))?;
    let vector = parse_vector_body::<S>(text, vector_src, source.vector_offset)?;
    if matrix.rows() != vector.len() {
        return Err(ParseError::at(
            text,
            source.vector_offset,
            format!(
                "dimension mismatch: matrix has {} rows, vector has {} components",
                matrix.rows(),
                vector.len()
            ),
        ));
    }
    Ok((matrix, vector))
}

/// Canonical one-line problem file; parses back token-identically.
pub fn print_problem<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> String {
    format!("{}; A: {}; d: {}\n", S::KIND, a, d)
}
