//! Machine-readable reports.
//!
//! A report is an ordered list of fields rendered either as diff-friendly
//! `key: value` text (the default) or as a JSON object. All indices in
//! reports are 1-based and zero elements appear as their kind's literal.

use std::fmt::Write as _;

use serde_json::{json, Value as Json};

/// One box of a general solution, ready for rendering (1-based indices).
#[derive(Debug, Clone)]
pub struct BoxRepr {
    pub index_set: Vec<usize>,
    /// `(index, token)` fixed components, ascending.
    pub fixed: Vec<(usize, String)>,
    /// `(index, Some(token))` for finite bounds, `(index, None)` for
    /// unbounded components, ascending.
    pub bounds: Vec<(usize, Option<String>)>,
}

/// A single report field.
#[derive(Debug, Clone)]
pub enum Field {
    Text(String),
    Bool(bool),
    UInt(usize),
    /// Rendered as `[t1 t2 …]`.
    TokenList(Vec<String>),
    /// Rendered as `{1,3}`; 1-based.
    IndexSet(Vec<usize>),
    /// Rendered as `[{2} {1,3}]`; 1-based.
    SetList(Vec<Vec<usize>>),
    /// Rendered as one `box k: …` line per box.
    Boxes(Vec<BoxRepr>),
    /// Rendered as `none`.
    None,
}

/// An ordered sequence of named fields.
#[derive(Debug, Clone, Default)]
pub struct Report {
    fields: Vec<(&'static str, Field)>,
}

fn index_set(indices: &[usize]) -> String {
    let mut out = String::from("{");
    for (k, i) in indices.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{i}");
    }
    out.push('}');
    out
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: &'static str, field: Field) -> &mut Self {
        self.fields.push((key, field));
        self
    }

    pub fn text(&mut self, key: &'static str, value: impl Into<String>) -> &mut Self {
        self.push(key, Field::Text(value.into()))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (key, field) in &self.fields {
            match field {
                Field::Text(s) => {
                    let _ = writeln!(out, "{key}: {s}");
                }
                Field::Bool(b) => {
                    let _ = writeln!(out, "{key}: {b}");
                }
                Field::UInt(v) => {
                    let _ = writeln!(out, "{key}: {v}");
                }
                Field::TokenList(tokens) => {
                    let _ = writeln!(out, "{key}: [{}]", tokens.join(" "));
                }
                Field::IndexSet(indices) => {
                    let _ = writeln!(out, "{key}: {}", index_set(indices));
                }
                Field::SetList(sets) => {
                    let rendered: Vec<String> = sets.iter().map(|s| index_set(s)).collect();
                    let _ = writeln!(out, "{key}: [{}]", rendered.join(" "));
                }
                Field::Boxes(boxes) => {
                    for (k, b) in boxes.iter().enumerate() {
                        let mut parts = vec![format!("I={}", index_set(&b.index_set))];
                        for (i, token) in &b.fixed {
                            parts.push(format!("x{i}={token}"));
                        }
                        for (i, bound) in &b.bounds {
                            match bound {
                                Some(token) => parts.push(format!("x{i}<={token}")),
                                None => parts.push(format!("x{i} unbounded")),
                            }
                        }
                        let _ = writeln!(out, "box {}: {}", k + 1, parts.join("; "));
                    }
                }
                Field::None => {
                    let _ = writeln!(out, "{key}: none");
                }
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut object = serde_json::Map::new();
        for (key, field) in &self.fields {
            let value = match field {
                Field::Text(s) => json!(s),
                Field::Bool(b) => json!(b),
                Field::UInt(v) => json!(v),
                Field::TokenList(tokens) => json!(tokens),
                Field::IndexSet(indices) => json!(indices),
                Field::SetList(sets) => json!(sets),
                Field::Boxes(boxes) => {
                    let rendered: Vec<Json> = boxes
                        .iter()
                        .map(|b| {
                            json!({
                                "index_set": b.index_set,
                                "fixed": b.fixed.iter()
                                    .map(|(i, t)| json!({"i": i, "value": t}))
                                    .collect::<Vec<_>>(),
                                "upper_bounds": b.bounds.iter()
                                    .map(|(i, bound)| match bound {
                                        Some(t) => json!({"i": i, "bound": t}),
                                        None => json!({"i": i, "bound": "unbounded"}),
                                    })
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    Json::Array(rendered)
                }
                Field::None => Json::Null,
            };
            object.insert((*key).to_string(), value);
        }
        let mut out = serde_json::to_string_pretty(&Json::Object(object))
            .expect("report serializes");
        out.push('\n');
        out
    }
}
