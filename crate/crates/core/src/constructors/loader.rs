//! Ingestion of generator files.
//!
//! The format is line-oriented:
//!
//! ```text
//! # optional comments
//! name S3
//! degree 3
//! generator 1 2 0
//! generator 1 0 2
//! ```
//!
//! `generator` lines give 0-indexed image arrays; the group is the closure
//! of the listed permutations, validated like any other construction.

use crate::group::{Caps, Group, GroupError};
use std::fmt;
use std::path::Path;

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    /// Malformed file contents, with the 1-based offending line.
    Format {
        line: usize,
        message: String,
    },
    Group(GroupError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "io error: {e}"),
            LoadError::Format { line, message } => write!(f, "line {line}: {message}"),
            LoadError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LoadError {}

impl From<GroupError> for LoadError {
    fn from(e: GroupError) -> Self {
        LoadError::Group(e)
    }
}

/// Parse file contents into `(name, degree, generators)`.
pub fn parse_group_file(contents: &str) -> Result<(String, usize, Vec<Vec<usize>>), LoadError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut generators: Vec<Vec<usize>> = Vec::new();

    for (i, raw) in contents.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => {
                if rest.is_empty() {
                    return Err(LoadError::Format {
                        line: lineno,
                        message: "name requires a value".into(),
                    });
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                let d: usize = rest.parse().map_err(|_| LoadError::Format {
                    line: lineno,
                    message: format!("bad degree '{rest}'"),
                })?;
                degree = Some(d);
            }
            "generator" => {
                let images: Result<Vec<usize>, _> = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect();
                let images = images.map_err(|_| LoadError::Format {
                    line: lineno,
                    message: format!("bad generator images '{rest}'"),
                })?;
                generators.push(images);
            }
            other => {
                return Err(LoadError::Format {
                    line: lineno,
                    message: format!("unknown field '{other}'"),
                });
            }
        }
    }

    let degree = degree.ok_or(LoadError::Format {
        line: 0,
        message: "missing 'degree' field".into(),
    })?;
    let name = name.ok_or(LoadError::Format {
        line: 0,
        message: "missing 'name' field".into(),
    })?;
    Ok((name, degree, generators))
}

/// Load, close, and validate a group from a generator file.
pub fn load_group_file(path: &Path, caps: &Caps) -> Result<Group, LoadError> {
    let contents = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    let (name, degree, generators) = parse_group_file(&contents)?;
    Ok(Group::from_generators(
        degree,
        &generators,
        name,
        caps.order,
    )?)
}
