//! Line-delimited JSON and rule-file formats.

mod annotations;
mod corpus;
mod patterns;
mod rules;

pub use annotations::{load_annotations, load_scheme, write_annotations};
pub use corpus::{load_corpus, read_corpus, write_corpus};
pub use patterns::{load_patterns, read_patterns, write_patterns};
pub use rules::{load_segmenter_rules, SegmenterRules};

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Non-blank lines with 1-based line numbers, each parsed as a JSON object.
fn json_objects(path: &Path, text: &str) -> Result<Vec<(usize, Map<String, Value>)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(line).map_err(|e| Error::parse(path, i + 1, e))?;
        match value {
            Value::Object(map) => out.push((i + 1, map)),
            _ => return Err(Error::parse(path, i + 1, "expected a JSON object")),
        }
    }
    Ok(out)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}
