//! Cone specification files and command-line vector syntax.

use std::io::Read;
use std::path::Path;

use ordercone::{fixtures, parse_rat, OrderedSpace, RatVec};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("invalid vector '{text}': {message}")]
    Vector { text: String, message: String },
}

/// `{"dim": 3, "generators": [["1","0","1"], ...], "name": "..."}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpecFile {
    pub dim: usize,
    pub generators: Vec<Vec<Value>>,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
}

/// A parsed and validated cone specification.
#[derive(Debug, Clone)]
pub struct LoadedSpec {
    pub name: Option<String>,
    pub generators: Vec<RatVec>,
    pub dim: usize,
}

impl LoadedSpec {
    pub fn space(&self) -> ordercone::Result<OrderedSpace> {
        OrderedSpace::validate(&self.generators, self.dim)
    }
}

fn entry(value: &Value, field: String) -> Result<ordercone::Rat, InputError> {
    let text = match value {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        other => {
            return Err(InputError::Field {
                field,
                message: format!("expected a rational string such as \"3/4\", found {other}"),
            })
        }
    };
    parse_rat(&text).map_err(|e| InputError::Field { field, message: e.to_string() })
}

pub fn parse_spec(text: &str) -> Result<LoadedSpec, InputError> {
    let file: ConeSpecFile = serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.dim == 0 {
        return Err(InputError::Field { field: "dim".into(), message: "must be positive".into() });
    }
    if file.generators.is_empty() {
        return Err(InputError::Field { field: "generators".into(), message: "must be non-empty".into() });
    }
    let mut generators = Vec::with_capacity(file.generators.len());
    for (i, g) in file.generators.iter().enumerate() {
        if g.len() != file.dim {
            return Err(InputError::Field {
                field: format!("generators[{i}]"),
                message: format!("has {} entries, expected {}", g.len(), file.dim),
            });
        }
        let entries = g
            .iter()
            .enumerate()
            .map(|(j, v)| entry(v, format!("generators[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        generators.push(RatVec::new(entries));
    }
    Ok(LoadedSpec { name: file.name, generators, dim: file.dim })
}

fn builtin(name: &str) -> Option<LoadedSpec> {
    let stem = Path::new(name).file_stem()?.to_str()?;
    let space = fixtures::by_name(stem)?;
    Some(LoadedSpec { name: Some(stem.to_string()), generators: space.cone().generators().to_vec(), dim: space.dim() })
}

/// Reads a spec from `path`, falling back to the built-in fixture of the same
/// name, or from `stdin` when no path is given.
pub fn load_spec(path: Option<&str>, stdin: &mut dyn Read) -> Result<LoadedSpec, InputError> {
    match path {
        Some("-") | None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| InputError::Io { path: "<stdin>".into(), message: e.to_string() })?;
            parse_spec(&text)
        }
        Some(p) => match std::fs::read_to_string(p) {
            Ok(text) => parse_spec(&text).map(|mut s| {
                if s.name.is_none() {
                    s.name = Path::new(p).file_stem().and_then(|n| n.to_str()).map(str::to_string);
                }
                s
            }),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                builtin(p).ok_or_else(|| InputError::Io { path: p.into(), message: e.to_string() })
            }
            Err(e) => Err(InputError::Io { path: p.into(), message: e.to_string() }),
        },
    }
}

/// `1,-1/2,0`.
pub fn parse_vector(text: &str, dim: usize) -> Result<RatVec, InputError> {
    let err = |message: String| InputError::Vector { text: text.to_string(), message };
    let entries =
        text.split(',').map(|t| parse_rat(t.trim()).map_err(|e| err(e.to_string()))).collect::<Result<Vec<_>, _>>()?;
    if entries.len() != dim {
        return Err(err(format!("has {} entries, expected {dim}", entries.len())));
    }
    Ok(RatVec::new(entries))
}

/// `1,0,1;0,1,1`; the empty string is the empty set.
pub fn parse_set(text: &str, dim: usize) -> Result<Vec<RatVec>, InputError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(|v| parse_vector(v, dim)).collect()
}

/// `1,0,1:0,1,1;1,1,2:-1,-1,2`.
pub fn parse_pairs(text: &str, dim: usize) -> Result<Vec<(RatVec, RatVec)>, InputError> {
    text.split(';')
        .map(|pair| {
            let (x, y) = pair
                .split_once(':')
                .ok_or_else(|| InputError::Vector { text: pair.to_string(), message: "expected x:y".into() })?;
            Ok((parse_vector(x, dim)?, parse_vector(y, dim)?))
        })
        .collect()
}
