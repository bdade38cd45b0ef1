//! Text formats for set families.
//!
//! One set per line as whitespace-separated positive integers. A line
//! `n = <int>` fixes the ground set size (otherwise the largest label is
//! used), `#` starts a comment, blank lines are skipped, and a line holding
//! only `{}` denotes the empty set.

use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::matroid::{Matroid, Validation};

/// A parsed set family with its declared or inferred ground set size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

pub fn parse_set_family(text: &str) -> Result<SetFamily> {
    let mut declared: Option<(usize, usize)> = None;
    let mut sets: Vec<(usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('n') {
            let value = rest.trim_start().strip_prefix('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected `n = <int>`, found {line:?}"),
            })?;
            let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid ground set size {:?}", value.trim()),
            })?;
            if declared.is_some() {
                return Err(Error::Parse { line: line_no, msg: "duplicate `n =` header".into() });
            }
            if n == 0 {
                return Err(Error::Parse { line: line_no, msg: "ground set size must be positive".into() });
            }
            declared = Some((n, line_no));
            continue;
        }
        if line == "{}" {
            sets.push((line_no, Vec::new()));
            continue;
        }
        let set = line
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(0) | Err(_) => Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected a positive integer, found {tok:?}"),
                }),
                Ok(v) => Ok(v),
            })
            .collect::<Result<Vec<_>>>()?;
        sets.push((line_no, set));
    }
    if sets.is_empty() {
        return Err(Error::Parse { line: 0, msg: "no sets found".into() });
    }
    let max_label = sets.iter().flat_map(|(_, s)| s.iter().copied()).max().unwrap_or(0);
    let n = match declared {
        Some((n, _)) => {
            if let Some((line, s)) = sets.iter().find(|(_, s)| s.iter().any(|&v| v > n)) {
                let label = s.iter().copied().find(|&v| v > n).unwrap();
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("label {label} exceeds n = {n}"),
                });
            }
            n
        }
        None if max_label == 0 => {
            return Err(Error::Parse { line: 0, msg: "only empty sets and no `n =` header".into() })
        }
        None => max_label,
    };
    Ok(SetFamily { n, sets: sets.into_iter().map(|(_, s)| s).collect() })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let family = parse_set_family(text)?;
    SimplicialComplex::new(family.n, &family.sets)
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse_matroid_with(text, Validation::Auto)
}

pub fn parse_matroid_with(text: &str, validation: Validation) -> Result<Matroid> {
    let family = parse_set_family(text)?;
    Matroid::from_bases_with(family.n, &family.sets, validation)
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&read_to_string(path)?)
}

pub fn read_matroid(path: &Path, validation: Validation) -> Result<Matroid> {
    parse_matroid_with(&read_to_string(path)?, validation)
}

/// Writes one set per line in the same format, with an `n =` header.
pub fn format_set_family(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> String {
    let mut out = format!("n = {n}\n");
    for set in sets {
        if set.is_empty() {
            out.push_str("{}\n");
        } else {
            let parts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
    }
    out
}
