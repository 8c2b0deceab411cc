use std::collections::HashMap;
use std::fmt::Write;

use super::TextError;
use crate::algebra::{FiniteAlgebra, Signature};
use crate::error::AlgebraError;

/// Column (1-based) of the first character of `token` inside `line`.
fn col_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, TextError> {
    let mut name = None;
    let mut size = None;
    let mut ops: Vec<(String, usize, usize)> = Vec::new();
    let mut tables: HashMap<String, (usize, Vec<usize>)> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut words = line.split_whitespace();
        let Some(key) = words.next() else { continue };
        let number = |tok: Option<&str>, what: &str| -> Result<usize, TextError> {
            let tok =
                tok.ok_or_else(|| TextError::syntax(ln, line.trim_end().len() + 1, format!("expected {what}")))?;
            tok.parse()
                .map_err(|_| TextError::syntax(ln, col_of(raw, tok), format!("expected {what}, found `{tok}`")))
        };
        match key {
            "algebra" => {
                let rest = line.trim_start()["algebra".len()..].trim();
                if rest.is_empty() {
                    return Err(TextError::syntax(ln, col_of(raw, key) + key.len(), "expected a name"));
                }
                name = Some(rest.to_string());
                continue;
            }
            "size" => size = Some(number(words.next(), "the carrier size")?),
            "op" => {
                let op = words
                    .next()
                    .ok_or_else(|| TextError::syntax(ln, line.trim_end().len() + 1, "expected an operation name"))?;
                let arity = number(words.next(), "an arity")?;
                ops.push((op.to_string(), arity, ln));
            }
            "table" => {
                let rest = &line[col_of(line, key) - 1 + key.len()..];
                let Some((op, values)) = rest.split_once(':') else {
                    return Err(TextError::syntax(
                        ln,
                        col_of(raw, key),
                        "expected `table <name>: values`",
                    ));
                };
                let op = op.trim();
                if op.is_empty() {
                    return Err(TextError::syntax(
                        ln,
                        col_of(raw, key) + key.len(),
                        "expected an operation name",
                    ));
                }
                let values = values
                    .split_whitespace()
                    .map(|v| {
                        v.parse().map_err(|_| {
                            TextError::syntax(ln, col_of(raw, v), format!("expected a table value, found `{v}`"))
                        })
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                if tables.insert(op.to_string(), (ln, values)).is_some() {
                    return Err(TextError::validation(Some(ln), format!("second table for `{op}`")));
                }
                continue;
            }
            other => {
                return Err(TextError::syntax(
                    ln,
                    col_of(raw, other),
                    format!("unknown directive `{other}`"),
                ))
            }
        }
        if let Some(extra) = words.next() {
            return Err(TextError::syntax(
                ln,
                col_of(raw, extra),
                format!("unexpected `{extra}`"),
            ));
        }
    }

    let name = name.ok_or_else(|| TextError::validation(None, "missing `algebra <name>` line"))?;
    let size = size.ok_or_else(|| TextError::validation(None, "missing `size <m>` line"))?;
    let signature =
        Signature::new(ops.iter().map(|(n, a, _)| (n.as_str(), *a))).map_err(|e| TextError::validation(None, e))?;
    let mut ordered = Vec::new();
    let mut table_lines = Vec::new();
    for (op, _, ln) in &ops {
        let (table_ln, values) = tables
            .remove(op)
            .ok_or_else(|| TextError::validation(Some(*ln), format!("no table for operation `{op}`")))?;
        ordered.push(values);
        table_lines.push((op.clone(), table_ln));
    }
    if let Some((op, (ln, _))) = tables.into_iter().min_by_key(|(_, (ln, _))| *ln) {
        return Err(TextError::validation(
            Some(ln),
            format!("table for undeclared operation `{op}`"),
        ));
    }
    FiniteAlgebra::new(name, signature, size, ordered).map_err(|e| {
        let line = match &e {
            AlgebraError::TableSize { op, .. } | AlgebraError::ValueOutOfRange { op, .. } => {
                table_lines.iter().find(|(name, _)| name == op).map(|(_, ln)| *ln)
            }
            _ => None,
        };
        TextError::validation(line, e)
    })
}

pub fn print_algebra(h: &FiniteAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "algebra {}", h.name()).unwrap();
    writeln!(out, "size {}", h.size()).unwrap();
    for op in h.signature().ops() {
        writeln!(out, "op {} {}", op.name, op.arity).unwrap();
    }
    for (i, op) in h.signature().ops().iter().enumerate() {
        let values: Vec<String> = h.table(i).iter().map(ToString::to_string).collect();
        writeln!(out, "table {}: {}", op.name, values.join(" ")).unwrap();
    }
    out
}
