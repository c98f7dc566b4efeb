//! Shared helpers for the line-oriented text formats.
//!
//! Every format is whitespace separated, one record per line. Blank lines
//! and lines starting with `#` are skipped by readers.

use std::str::FromStr;

use crate::error::FormatError;

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Lines starting with `#`, with the marker and surrounding space removed.
pub(crate) fn comment_lines(s: &str) -> impl Iterator<Item = &str> {
    s.lines()
        .map(str::trim)
        .filter_map(|l| l.strip_prefix('#'))
        .map(str::trim)
}

pub(crate) fn parse_fields<T: FromStr>(line: &str, line_no: usize) -> Result<Vec<T>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| FormatError::BadToken {
                line: line_no,
                token: tok.to_string(),
            })
        })
        .collect()
}

pub(crate) fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), FormatError> {
    let fields = parse_fields::<usize>(line, line_no)?;
    match fields[..] {
        [a, b] => Ok((a, b)),
        _ => Err(FormatError::FieldCount {
            line: line_no,
            expected: 2,
            found: fields.len(),
        }),
    }
}
