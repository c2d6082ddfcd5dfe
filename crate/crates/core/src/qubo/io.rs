//! QUBO text format: header `n start end` (`-` for absent terminals), then
//! one `i j value` line per coefficient with `i ≤ j`.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::QuboProblem;
use crate::error::{Error, Result};

pub fn store_qubo(p: &QuboProblem) -> String {
    let mut out = String::new();
    match p.endpoints() {
        Some((s, e)) => {
            let _ = writeln!(out, "{} {s} {e}", p.n());
        }
        None => {
            let _ = writeln!(out, "{} - -", p.n());
        }
    }
    for (&(i, j), &q) in p.coeffs() {
        let _ = writeln!(out, "{i} {j} {q}");
    }
    out
}

pub fn load_qubo(text: &str) -> Result<QuboProblem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (hl, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header `n start end`".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(err(hl, format!("expected `n start end`, found `{header}`")));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| err(hl, format!("invalid variable count `{}`", fields[0])))?;
    let endpoints = match (fields[1], fields[2]) {
        ("-", "-") => None,
        (s, e) => {
            let s: usize = s
                .parse()
                .map_err(|_| err(hl, format!("invalid start `{s}`")))?;
            let e: usize = e
                .parse()
                .map_err(|_| err(hl, format!("invalid end `{e}`")))?;
            Some((s, e))
        }
    };

    let mut coeffs = BTreeMap::new();
    for (line, content) in lines {
        let f: Vec<&str> = content.split_whitespace().collect();
        if f.len() != 3 {
            return Err(err(
                line,
                format!("expected `i j value`, found `{content}`"),
            ));
        }
        let i: usize = f[0]
            .parse()
            .map_err(|_| err(line, format!("invalid index `{}`", f[0])))?;
        let j: usize = f[1]
            .parse()
            .map_err(|_| err(line, format!("invalid index `{}`", f[1])))?;
        let q: f64 = f[2]
            .parse()
            .map_err(|_| err(line, format!("invalid value `{}`", f[2])))?;
        if i > j || j >= n {
            return Err(err(
                line,
                format!("index pair ({i}, {j}) not in upper triangle of {n}"),
            ));
        }
        if coeffs.insert((i, j), q).is_some() {
            return Err(err(line, format!("duplicate entry ({i}, {j})")));
        }
    }
    let p = QuboProblem::new(n, coeffs)?;
    match endpoints {
        Some((s, e)) => p.with_endpoints(s, e),
        None => Ok(p),
    }
}
