//! Input file formats.
//!
//! Term-set files hold an optional `vars: n` header and one term per line.
//! Points files hold an optional `vars: n` header and one point per line as
//! comma-separated integers or `p/q` fractions. In both, `#` starts a comment
//! and blank lines are skipped. Without a header, term-set files use the
//! largest variable index mentioned and points files use the first point's
//! length.

use crate::error::{Error, Result};
use crate::points::{parse_rational, PointSet};
use crate::term::{parse_raw, RawTerm, TermSet};

/// Non-empty lines with comments removed, as `(line number, text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

/// Splits off a leading `vars: n` header.
fn header<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
) -> Result<Option<usize>> {
    let Some(&(line, text)) = lines.peek() else {
        return Ok(None);
    };
    let Some(rest) = text.strip_prefix("vars") else {
        return Ok(None);
    };
    let rest = rest.trim_start();
    let Some(value) = rest.strip_prefix(':') else {
        return Err(Error::parse(line, 5, "expected 'vars: n'"));
    };
    lines.next();
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, 6, "expected a variable count"))?;
    if n == 0 {
        return Err(Error::NoVariables);
    }
    Ok(Some(n))
}

pub fn parse_term_set(text: &str) -> Result<TermSet> {
    let mut lines = content_lines(text).peekable();
    let declared = header(&mut lines)?;
    let raw: Vec<(usize, RawTerm)> = lines
        .map(|(line, body)| parse_raw(body, line).map(|r| (line, r)))
        .collect::<Result<_>>()?;
    let nvars = match declared {
        Some(n) => n,
        None => raw.iter().map(|(_, r)| r.min_vars()).max().unwrap_or(1),
    };
    let terms = raw
        .iter()
        .map(|(line, r)| {
            r.resolve(nvars, *line).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(*line, 1, message),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TermSet::new(nvars, terms)
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut lines = content_lines(text).peekable();
    let declared = header(&mut lines)?;
    let mut points = Vec::new();
    for (line, body) in lines {
        let mut column = 1;
        let mut coords = Vec::new();
        for field in body.split(',') {
            coords.push(parse_rational(field, line, column)?);
            column += field.len() + 1;
        }
        points.push(coords);
    }
    let nvars = match declared.or_else(|| points.first().map(Vec::len)) {
        Some(n) => n,
        None => return Err(Error::EmptyInput("the points file has no points")),
    };
    PointSet::new(nvars, points)
}
