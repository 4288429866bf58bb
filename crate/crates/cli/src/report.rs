//! The report printed by every command.

use std::fmt::Write as _;

use ordercone::OrderedSpace;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    DomainError,
    TheoremViolation,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::TheoremViolation => 2,
            Status::ParseError => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSummary {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub dim: usize,
    pub facet_count: usize,
    pub facets: Vec<String>,
    pub extreme_rays: Vec<String>,
}

impl SpaceSummary {
    pub fn new(name: Option<String>, space: &OrderedSpace) -> Self {
        Self {
            name,
            dim: space.dim(),
            facet_count: space.facets().len(),
            facets: space.facets().iter().map(ToString::to_string).collect(),
            extreme_rays: space.atoms().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorPayload {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub space: Option<SpaceSummary>,
    pub result: Value,
    pub checks: Vec<Check>,
    pub status: Status,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorPayload>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(sp) = &self.space {
            let name = sp.name.as_deref().unwrap_or("space");
            let _ = writeln!(
                out,
                "space: {name} (dim {}, {} facets, {} extreme rays)",
                sp.dim,
                sp.facet_count,
                sp.extreme_rays.len()
            );
        }
        let _ = writeln!(out, "status: {}", serde_json::to_value(self.status).expect("status").as_str().unwrap_or(""));
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {}: {}", e.kind, e.message);
        }
        if !self.result.is_null() {
            out.push_str("result:\n");
            render(&self.result, 1, &mut out);
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let _ = writeln!(out, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join("; ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
