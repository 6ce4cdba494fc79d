//! Line-oriented exact text format for linkings and move lists.
//!
//! Coordinates are exact rational literals (`p/q` or an integer), never
//! decimals, so a file is a faithful test vector: parsing a serialized
//! linking reproduces it bit-exactly.
//!
//! Grammar (whitespace-tolerant):
//!
//! ```text
//! file     := [version] triangle (blank+ triangle)*
//! version  := "format" INT
//! triangle := point point point        # three consecutive lines
//! point    := RATIONAL RATIONAL RATIONAL
//! RATIONAL := ["+"|"-"] DIGITS ["/" DIGITS]
//! ```
//!
//! `#` starts a comment anywhere in a line; blank lines (after comment
//! stripping) separate triangles. The `format` line is optional on input
//! and always written on output.

use std::fmt;
use std::num::ParseIntError;
use std::str::FromStr;

use trilink::invariants::{Linking, LinkingError};
use trilink::kernel::point::{Point3, Triangle};
use trilink::kernel::scalar::Scalar;
use trilink::moves::MoveSpec;

pub const FORMAT_VERSION: u32 = 1;

/// Lexical/syntactic failure, with the 1-based offending line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedNumber(String),
    ZeroDenominator(String),
    WrongCoordinateCount(usize),
    IncompleteTriangle(usize),
    UnsupportedVersion(String),
    NoTriangles,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MalformedNumber(tok) => write!(f, "malformed rational literal `{tok}`"),
            ParseErrorKind::ZeroDenominator(tok) => write!(f, "zero denominator in `{tok}`"),
            ParseErrorKind::WrongCoordinateCount(n) => {
                write!(f, "expected 3 coordinates per point, got {n}")
            }
            ParseErrorKind::IncompleteTriangle(n) => {
                write!(f, "triangle needs 3 point lines, got {n}")
            }
            ParseErrorKind::UnsupportedVersion(v) => write!(f, "unsupported format version `{v}`"),
            ParseErrorKind::NoTriangles => write!(f, "no triangles in input"),
        }
    }
}

impl std::error::Error for ParseError {}

/// The text parsed, but the geometry violates a linking invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    /// Line where the offending triangle starts (0 for whole-linking errors).
    pub line: usize,
    pub kind: ValidationErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationErrorKind {
    DegenerateTriangle,
    Linking(LinkingError),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ValidationErrorKind::DegenerateTriangle => {
                write!(f, "line {}: triangle vertices are collinear", self.line)
            }
            ValidationErrorKind::Linking(e) => write!(f, "line {}: {e}", self.line),
        }
    }
}

impl std::error::Error for ValidationError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentError {
    Parse(ParseError),
    Validation(ValidationError),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse(e) => write!(f, "{e}"),
            DocumentError::Validation(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<ParseError> for DocumentError {
    fn from(e: ParseError) -> Self {
        DocumentError::Parse(e)
    }
}

impl From<ValidationError> for DocumentError {
    fn from(e: ValidationError) -> Self {
        DocumentError::Validation(e)
    }
}

/// Parse one rational literal.
pub fn parse_scalar(token: &str, line: usize) -> Result<Scalar, ParseError> {
    let malformed = || ParseError {
        line,
        kind: ParseErrorKind::MalformedNumber(token.to_string()),
    };
    let parse_int = |s: &str| -> Result<num_bigint::BigInt, ParseError> {
        if s.is_empty() {
            return Err(malformed());
        }
        num_bigint::BigInt::from_str(s).map_err(|_| malformed())
    };
    match token.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(token)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den == 0.into() {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::ZeroDenominator(token.to_string()),
                });
            }
            Ok(Scalar::new(num, den))
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_point(line_no: usize, text: &str) -> Result<Point3, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(ParseError {
            line: line_no,
            kind: ParseErrorKind::WrongCoordinateCount(tokens.len()),
        });
    }
    Ok(Point3::new(
        parse_scalar(tokens[0], line_no)?,
        parse_scalar(tokens[1], line_no)?,
        parse_scalar(tokens[2], line_no)?,
    ))
}

/// Parse a linking document; errors carry the offending line number.
pub fn parse_linking(text: &str) -> Result<Linking, DocumentError> {
    // (line_no, content) for non-blank lines after comment stripping.
    let mut rows: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = strip_comment(raw).trim();
        rows.push((idx + 1, content));
    }

    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    let mut version_seen = false;
    for (line_no, content) in rows {
        if content.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        // Optional leading `format N` directive.
        if !version_seen && blocks.is_empty() && current.is_empty() {
            let mut tokens = content.split_whitespace();
            if tokens.next() == Some("format") {
                let rest = tokens.collect::<Vec<_>>().join(" ");
                if rest.parse::<u32>() != Ok(FORMAT_VERSION) {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::UnsupportedVersion(rest),
                    }
                    .into());
                }
                version_seen = true;
                continue;
            }
        }
        current.push((line_no, content));
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    if blocks.is_empty() {
        return Err(ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::NoTriangles,
        }
        .into());
    }

    let mut triangles = Vec::with_capacity(blocks.len());
    let mut block_starts = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let start_line = block[0].0;
        if block.len() != 3 {
            return Err(ParseError {
                line: start_line,
                kind: ParseErrorKind::IncompleteTriangle(block.len()),
            }
            .into());
        }
        let a = parse_point(block[0].0, block[0].1)?;
        let b = parse_point(block[1].0, block[1].1)?;
        let c = parse_point(block[2].0, block[2].1)?;
        let triangle = Triangle::new(a, b, c).map_err(|_| ValidationError {
            line: start_line,
            kind: ValidationErrorKind::DegenerateTriangle,
        })?;
        triangles.push(triangle);
        block_starts.push(start_line);
    }

    Linking::new(triangles).map_err(|e| {
        let line = match &e {
            LinkingError::OutlinesIntersect(i, _) => block_starts[*i],
            LinkingError::WrongCount(_) => block_starts[0],
        };
        ValidationError {
            line,
            kind: ValidationErrorKind::Linking(e),
        }
        .into()
    })
}

/// Serialize a linking in canonical form; `parse_linking` round-trips it
/// bit-exactly.
pub fn serialize_linking(l: &Linking) -> String {
    let mut out = String::new();
    out.push_str(&format!("format {FORMAT_VERSION}\n"));
    for t in l.triangles() {
        out.push('\n');
        for v in t.vertices() {
            out.push_str(&format!("{} {} {}\n", v.x, v.y, v.z));
        }
    }
    out
}

/// Serialize a move list, one `target pivot x y z` line per move.
pub fn serialize_moves(moves: &[MoveSpec]) -> String {
    let mut out = String::new();
    for m in moves {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            m.target, m.pivot, m.new_apex.x, m.new_apex.y, m.new_apex.z
        ));
    }
    out
}

/// Parse a move list in the format written by [`serialize_moves`].
pub fn parse_moves(text: &str) -> Result<Vec<MoveSpec>, ParseError> {
    let mut moves = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 5 {
            return Err(ParseError {
                line: line_no,
                kind: ParseErrorKind::WrongCoordinateCount(tokens.len()),
            });
        }
        let index = |s: &str| -> Result<usize, ParseError> {
            s.parse::<usize>().map_err(|_: ParseIntError| ParseError {
                line: line_no,
                kind: ParseErrorKind::MalformedNumber(s.to_string()),
            })
        };
        moves.push(MoveSpec {
            target: index(tokens[0])?,
            pivot: index(tokens[1])?,
            new_apex: Point3::new(
                parse_scalar(tokens[2], line_no)?,
                parse_scalar(tokens[3], line_no)?,
                parse_scalar(tokens[4], line_no)?,
            ),
        });
    }
    Ok(moves)
}
