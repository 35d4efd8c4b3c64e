//! Plain-text group files.
//!
//! A file describes one permutation group:
//!
//! ```text
//! # symmetric group on four points
//! name S4
//! degree 4
//! gen (1 2)
//! gen (1 2 3 4)
//! ```
//!
//! `name` takes one token of `[A-Za-z0-9_-]`, `degree` the number of points,
//! and each `gen` line one permutation in 1-indexed disjoint cycle notation.
//! `gen ()` is the identity. Blank lines and lines starting with `#` are
//! skipped. At least one `gen` line is required.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use pinilot_core::{build_group, BuildLimits, FiniteGroup, Perm};

use crate::error::HarnessError;

/// Highest degree a group file may declare.
pub const MAX_DEGREE: usize = 1024;

/// A parsed group file.
#[derive(Debug, Clone)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> HarnessError {
    HarnessError::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

/// Parse one permutation written as whitespace-separated cycles, 1-indexed.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty permutation".to_string());
    }
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let Some(tail) = rest.strip_prefix('(') else {
            return Err(format!("expected '(' at \"{rest}\""));
        };
        let Some(close) = tail.find(')') else {
            return Err("unbalanced '('".to_string());
        };
        let body = &tail[..close];
        rest = &tail[close + 1..];
        let mut cycle = Vec::new();
        for tok in body.split_whitespace() {
            let point: usize = tok
                .parse()
                .map_err(|_| format!("bad point \"{tok}\""))?;
            if point == 0 || point > degree {
                return Err(format!("point {point} outside 1..={degree}"));
            }
            cycle.push((point - 1) as u16);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| e.to_string())
}

/// Parse group-file text. `path` only labels errors.
pub fn parse_group_text(path: &Path, text: &str) -> Result<GroupFile, HarnessError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut generators: Vec<Perm> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = match line.split_once(char::is_whitespace) {
            Some((k, v)) => (k, v.trim()),
            None => (line, ""),
        };
        match key {
            "name" => {
                if name.is_some() {
                    return Err(parse_err(path, lineno, "duplicate name line"));
                }
                if !valid_name(value) {
                    return Err(parse_err(
                        path,
                        lineno,
                        format!("invalid name \"{value}\": use [A-Za-z0-9_-]"),
                    ));
                }
                name = Some(value.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(path, lineno, "duplicate degree line"));
                }
                let d: usize = value
                    .parse()
                    .map_err(|_| parse_err(path, lineno, format!("bad degree \"{value}\"")))?;
                if d == 0 || d > MAX_DEGREE {
                    return Err(parse_err(
                        path,
                        lineno,
                        format!("degree {d} outside 1..={MAX_DEGREE}"),
                    ));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree
                    .ok_or_else(|| parse_err(path, lineno, "gen before degree"))?;
                let perm = parse_cycles(d, value)
                    .map_err(|msg| parse_err(path, lineno, msg))?;
                generators.push(perm);
            }
            _ => {
                return Err(parse_err(
                    path,
                    lineno,
                    format!("unknown directive \"{key}\""),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| parse_err(path, text.lines().count() + 1, "missing name"))?;
    let degree =
        degree.ok_or_else(|| parse_err(path, text.lines().count() + 1, "missing degree"))?;
    if generators.is_empty() {
        return Err(parse_err(
            path,
            text.lines().count() + 1,
            "missing gen lines",
        ));
    }
    Ok(GroupFile {
        name,
        degree,
        generators,
    })
}

/// Read and parse a group file from disk.
pub fn read_group_file(path: &Path) -> Result<GroupFile, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    parse_group_text(path, &text)
}

impl GroupFile {
    /// Enumerate the group the file describes.
    pub fn build(&self, limits: BuildLimits) -> Result<Arc<FiniteGroup>, HarnessError> {
        Ok(build_group(self.degree, &self.generators, limits)?)
    }

    /// Canonical text form; parses back to the same group. A trivial group
    /// gets an explicit `gen ()` line, since a file needs at least one.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name {}\n", self.name));
        out.push_str(&format!("degree {}\n", self.degree));
        if self.generators.is_empty() {
            out.push_str("gen ()\n");
        }
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        out
    }
}

/// Describe a built group as a file, using its defining generators.
pub fn describe_group(name: &str, group: &Arc<FiniteGroup>) -> GroupFile {
    let generators = group
        .gen_indices()
        .iter()
        .map(|&gi| group.elem(gi).clone())
        .collect();
    GroupFile {
        name: name.to_string(),
        degree: group.degree(),
        generators,
    }
}

fn path_of(p: &str) -> PathBuf {
    PathBuf::from(p)
}

/// Parse group-file text with a synthetic path label.
pub fn parse_group_str(label: &str, text: &str) -> Result<GroupFile, HarnessError> {
    parse_group_text(&path_of(label), text)
}
