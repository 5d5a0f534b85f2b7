//! Text formats: matrices, minor vectors, polynomial files and JSON lines.
//!
//! [`parse_and_print`] normalizes a file; printing its own output again is
//! byte-identical.

use std::fmt::Write;

use num_rational::BigRational;
use thiserror::Error;

use crate::exactpoly::{parse_int, IntPoly, PolyError};
use crate::minor_maps::MinorVector;
use crate::nanson::GeneratorRecord;

#[derive(Debug, Error, PartialEq)]
#[error("line {line}, column {col}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn at(line: usize, col: usize, msg: impl Into<String>) -> FormatError {
    FormatError { line, col, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// One matrix row per line, entries separated by whitespace.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<BigRational>>, FormatError> {
    let mut rows = Vec::new();
    for (ln, line) in content_lines(text) {
        let mut row = Vec::new();
        let mut col = 1;
        for tok in line.split(char::is_whitespace) {
            if !tok.is_empty() {
                row.push(tok.parse::<BigRational>().map_err(|_| at(ln, col, format!("bad entry {tok}")))?);
            }
            col += tok.chars().count() + 1;
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(at(1, 1, "empty matrix"));
    }
    if let Some(k) = rows.iter().position(|r| r.len() != n) {
        return Err(at(k + 1, 1, format!("expected {n} entries per row")));
    }
    Ok(rows)
}

/// One polynomial per line.
pub fn parse_poly_lines(text: &str) -> Result<Vec<IntPoly>, FormatError> {
    content_lines(text)
        .map(|(ln, line)| {
            parse_int(line).map_err(|e| match e {
                PolyError::Parse { col, msg } => at(ln, col, msg),
                e => at(ln, 1, e.to_string()),
            })
        })
        .collect()
}

/// A file holding exactly one polynomial.
pub fn parse_single_poly(text: &str) -> Result<IntPoly, FormatError> {
    let mut v = parse_poly_lines(text)?;
    match v.len() {
        1 => Ok(v.pop().unwrap()),
        n => Err(at(1, 1, format!("expected one polynomial, found {n}"))),
    }
}

fn check_vector_lines(text: &str) -> Result<(), FormatError> {
    for (ln, line) in content_lines(text) {
        let Some((k, v)) = line.split_once('\t') else {
            return Err(at(ln, 1, "expected I<tab>value"));
        };
        let k = k.trim();
        if k != "{}" && !k.chars().all(|c| c.is_ascii_digit()) {
            return Err(at(ln, 1, format!("bad subset {k}")));
        }
        let col = k.chars().count() + 2;
        if v.trim().is_empty() {
            return Err(at(ln, col, "missing value"));
        }
        if v.trim().parse::<BigRational>().is_err() {
            parse_int(v.trim()).map_err(|e| match e {
                PolyError::Parse { col: c, msg } => at(ln, col + c - 1, msg),
                e => at(ln, col, e.to_string()),
            })?;
        }
    }
    Ok(())
}

fn json_line(ln: usize, line: &str) -> Result<String, FormatError> {
    let col_err = |e: serde_json::Error| at(ln, e.column().max(1), e.to_string());
    let value: serde_json::Value = serde_json::from_str(line).map_err(col_err)?;
    if value.get("poly_C").is_some() {
        let rec = GeneratorRecord::from_json(line).map_err(|e| at(ln, 1, e.to_string()))?;
        return Ok(rec.to_json());
    }
    Ok(value.to_string())
}

/// Reads a matrix-free text file (JSON lines, a minor vector, or
/// polynomial lines) and prints it canonically.
pub fn parse_and_print(text: &str) -> Result<String, FormatError> {
    let mut lines = content_lines(text).peekable();
    let Some(&(_, first)) = lines.peek() else {
        return Err(at(1, 1, "empty input"));
    };
    let mut out = String::new();
    if first.trim_start().starts_with('{') && !first.contains('\t') {
        for (ln, line) in lines {
            out.push_str(&json_line(ln, line)?);
            out.push('\n');
        }
        return Ok(out);
    }
    if first.contains('\t') {
        check_vector_lines(text)?;
        let bad = |e: crate::minor_maps::MinorError| at(1, 1, e.to_string());
        return match MinorVector::<BigRational>::parse_text(text) {
            Ok(v) => Ok(v.to_text()),
            Err(_) => Ok(MinorVector::<IntPoly>::parse_text(text).map_err(bad)?.to_text()),
        };
    }
    for f in parse_poly_lines(text)? {
        writeln!(out, "{f}").unwrap();
    }
    Ok(out)
}

/// Compact term list: a header naming the variables, then one line per
/// term with the coefficient and one base-36 exponent digit per variable.
pub fn compressed(f: &IntPoly) -> String {
    let vars: Vec<_> = f.variables().into_iter().collect();
    let mut out = String::from("# vars");
    for v in &vars {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    for (m, c) in f.terms() {
        let digits: String = vars.iter().map(|&v| char::from_digit(m.exponent(v) as u32, 36).unwrap_or('?')).collect();
        writeln!(out, "{c} {digits}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_file_is_canonicalized() {
        let shuffled = "A_{2}*A_{1} - A_{12}\n3 + C_{12}\n";
        let once = parse_and_print(shuffled).unwrap();
        assert_eq!(parse_and_print(&once).unwrap(), once);
        assert_ne!(once, shuffled);
    }

    #[test]
    fn truncated_polynomial_has_position() {
        let e = parse_and_print("A_{1}\nA_{12} + \n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.col > 1);
    }

    #[test]
    fn vector_file_round_trip() {
        let text = "{}\t1\n1\t2\n2\t-3\n12\t1/2\n";
        let once = parse_and_print(text).unwrap();
        assert_eq!(parse_and_print(&once).unwrap(), once);
        let e = parse_and_print("{}\t1\n1\t2/\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
    }

    #[test]
    fn json_lines_are_canonical() {
        let text = "{\"b\": 1, \"a\": [1, 2]}\n";
        let once = parse_and_print(text).unwrap();
        assert_eq!(once, "{\"a\":[1,2],\"b\":1}\n");
        let e = parse_and_print("{\"a\": \n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn matrix_errors() {
        assert_eq!(parse_matrix("1 2\n3 4\n").unwrap().len(), 2);
        let e = parse_matrix("1 2\n3 x\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        assert!(parse_matrix("1 2\n3\n").is_err());
    }
}
