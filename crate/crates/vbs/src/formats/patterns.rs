use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use vbs_core::patterns::{compile_pattern, PatternSet, PatternSpec, Viewpoint};

use super::{json_objects, read_text};
use crate::error::{Error, Result};

/// Version recorded for pattern files without a version header.
pub const UNVERSIONED: &str = "unversioned";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    version: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    id: String,
    viewpoint: String,
    expr: String,
}

pub fn load_patterns(path: &Path) -> Result<PatternSet> {
    read_patterns(path, &read_text(path)?)
}

/// Parses pattern JSONL: an optional `{"version": ...}` first record, then
/// one `{"id", "viewpoint", "expr"}` record per line.
pub fn read_patterns(path: &Path, text: &str) -> Result<PatternSet> {
    let mut version = None;
    let mut specs = Vec::new();
    let mut ids = BTreeSet::new();
    for (n, (line, map)) in json_objects(path, text)?.into_iter().enumerate() {
        let value = serde_json::Value::Object(map);
        if value.get("version").is_some() {
            if n != 0 {
                return Err(Error::parse(path, line, "version header must come first"));
            }
            let h: Header =
                serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?;
            version = Some(h.version);
            continue;
        }
        let r: Record = serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?;
        let viewpoint: Viewpoint = r
            .viewpoint
            .parse()
            .map_err(|e: vbs_core::Error| Error::parse(path, line, e))?;
        let spec = PatternSpec {
            id: r.id,
            viewpoint,
            expr: r.expr,
        };
        if !ids.insert(spec.id.clone()) {
            return Err(Error::parse(
                path,
                line,
                vbs_core::Error::DuplicatePatternId(spec.id),
            ));
        }
        compile_pattern(spec.clone()).map_err(|e| Error::parse(path, line, e))?;
        specs.push(spec);
    }
    let version = version.unwrap_or_else(|| UNVERSIONED.into());
    PatternSet::new(version, specs).map_err(|source| Error::Invalid {
        path: path.into(),
        source,
    })
}

pub fn write_patterns(set: &PatternSet, mut out: impl Write) -> std::io::Result<()> {
    let header = Header {
        version: set.version().into(),
    };
    writeln!(out, "{}", serde_json::to_string(&header)?)?;
    for p in set.patterns() {
        let spec = p.spec();
        let r = Record {
            id: spec.id.clone(),
            viewpoint: spec.viewpoint.as_str().into(),
            expr: spec.expr.clone(),
        };
        writeln!(out, "{}", serde_json::to_string(&r)?)?;
    }
    Ok(())
}
