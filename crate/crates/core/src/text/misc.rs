use num_bigint::BigInt;

use super::TextError;
use crate::algebra::Point;
use crate::freeword::{FWord, SgWord};
use crate::term::{Sort, Var};
use crate::zlattice::{IntMatrix, IntVector};

/// `x1=1 x2=3` or, for the sort `x1 … xn`, just `1 3`.
pub fn parse_point(text: &str) -> Result<Point, TextError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let col = |t: &str| t.as_ptr() as usize - text.as_ptr() as usize + 1;
    let value = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| TextError::syntax(1, col(t), format!("expected an element, found `{t}`")))
    };
    if tokens.iter().any(|t| t.contains('=')) {
        let mut vars = Vec::new();
        let mut values = Vec::new();
        for t in tokens {
            let (v, x) = t
                .split_once('=')
                .ok_or_else(|| TextError::syntax(1, col(t), format!("expected `<var>=<value>`, found `{t}`")))?;
            if v.is_empty() {
                return Err(TextError::syntax(1, col(t), "missing variable name"));
            }
            vars.push(Var::new(v));
            values.push(value(x).map_err(|_| {
                TextError::syntax(1, col(t) + v.len() + 1, format!("expected an element, found `{x}`"))
            })?);
        }
        let sort = Sort::new(vars).map_err(|e| TextError::validation(None, e))?;
        Point::new(sort, values).map_err(|e| TextError::validation(None, e))
    } else {
        let values = tokens.into_iter().map(value).collect::<Result<Vec<_>, _>>()?;
        Ok(Point::tuple(&values))
    }
}

fn rows(text: &str) -> Result<Vec<(usize, IntVector)>, TextError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>().map_err(|_| {
                    let col = t.as_ptr() as usize - raw.as_ptr() as usize + 1;
                    TextError::syntax(i + 1, col, format!("expected an integer, found `{t}`"))
                })
            })
            .collect::<Result<IntVector, _>>()?;
        if !row.is_empty() {
            out.push((i + 1, row));
        }
    }
    Ok(out)
}

/// A list of vectors, one per line, all of the same length. May be empty.
pub fn parse_vectors(text: &str) -> Result<Vec<IntVector>, TextError> {
    let rows = rows(text)?;
    if let Some((_, first)) = rows.first() {
        if let Some((ln, r)) = rows.iter().find(|(_, r)| r.len() != first.len()) {
            return Err(TextError::validation(
                Some(*ln),
                format!("row has {} entries, expected {}", r.len(), first.len()),
            ));
        }
    }
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

pub fn print_vectors(vs: &[IntVector]) -> String {
    vs.iter()
        .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

/// A non-empty rectangular matrix, one row per line.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, TextError> {
    let rows = parse_vectors(text)?;
    let cols = rows
        .first()
        .map(Vec::len)
        .ok_or_else(|| TextError::validation(None, "empty matrix"))?;
    IntMatrix::from_rows(cols, &rows).map_err(|e| TextError::validation(None, e))
}

fn words<W>(
    text: &str,
    parse: impl Fn(&str) -> Result<W, crate::freeword::FreeWordError>,
) -> Result<Vec<W>, TextError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, w)| parse(w).map_err(|e| TextError::validation(None, format!("word {}: {e}", i + 1))))
        .collect()
}

/// Comma-separated semigroup words: `x1 x2, x2 x3`.
pub fn parse_sgwords(text: &str) -> Result<Vec<SgWord>, TextError> {
    words(text, str::parse)
}

/// Comma-separated free-group words: `x1 x1 x2 X1 x2, x1 x2`.
pub fn parse_fwords(text: &str) -> Result<Vec<FWord>, TextError> {
    words(text, str::parse)
}
