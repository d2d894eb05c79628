use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use vbs_core::evaluation::{Annotation, AnnotationSet, LabelScheme};

use super::{json_objects, read_text};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    annotator: String,
    term: String,
    #[serde(default)]
    segmentation_hash: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    sentence_id: String,
    labels: BTreeSet<String>,
}

pub fn load_annotations(path: &Path, scheme: &LabelScheme) -> Result<AnnotationSet> {
    let text = read_text(path)?;
    let mut header: Option<Header> = None;
    let mut anns = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, map) in json_objects(path, &text)? {
        let value = serde_json::Value::Object(map);
        if value.get("annotator").is_some() {
            if header.is_some() || !anns.is_empty() {
                return Err(Error::parse(
                    path,
                    line,
                    "header must be the first and only header record",
                ));
            }
            header = Some(serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?);
            continue;
        }
        if header.is_none() {
            return Err(Error::parse(path, line, "missing annotator header"));
        }
        let r: Record = serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?;
        if !seen.insert(r.sentence_id.clone()) {
            return Err(Error::parse(
                path,
                line,
                format!("sentence {:?} annotated twice", r.sentence_id),
            ));
        }
        anns.push(
            Annotation::new(r.sentence_id, r.labels, scheme)
                .map_err(|e| Error::parse(path, line, e))?,
        );
    }
    let h = header.ok_or_else(|| Error::data(path, "missing annotator header"))?;
    AnnotationSet::new(h.annotator, h.term, h.segmentation_hash, anns).map_err(|source| {
        Error::Invalid {
            path: path.into(),
            source,
        }
    })
}

pub fn write_annotations(set: &AnnotationSet, mut out: impl Write) -> std::io::Result<()> {
    let header = Header {
        annotator: set.annotator_id.clone(),
        term: set.term.clone(),
        segmentation_hash: set.segmentation_hash.clone(),
    };
    writeln!(out, "{}", serde_json::to_string(&header)?)?;
    for a in set.annotations.values() {
        let r = Record {
            sentence_id: a.sentence_id.clone(),
            labels: a.labels.clone(),
        };
        writeln!(out, "{}", serde_json::to_string(&r)?)?;
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeFile {
    targeted: Vec<String>,
    extra: Vec<String>,
}

/// Reads a label scheme: `{"targeted": [...], "extra": [...]}`.
pub fn load_scheme(path: &Path) -> Result<LabelScheme> {
    let text = read_text(path)?;
    let f: SchemeFile = serde_json::from_str(&text).map_err(|e| Error::parse(path, e.line(), e))?;
    LabelScheme::new(f.targeted, f.extra).map_err(|source| Error::Invalid {
        path: path.into(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<AnnotationSet> {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.jsonl");
        std::fs::write(&path, text).unwrap();
        load_annotations(&path, &LabelScheme::default())
    }

    #[test]
    fn round_trip() {
        let text = concat!(
            "{\"annotator\":\"A\",\"term\":\"XML\",\"segmentation_hash\":\"abc\"}\n",
            "{\"sentence_id\":\"p1#0\",\"labels\":[\"definition\",\"history\"]}\n",
            "{\"sentence_id\":\"p1#1\",\"labels\":[\"non_description\"]}\n",
        );
        let set = load(text).unwrap();
        assert_eq!(set.annotator_id, "A");
        assert_eq!(set.segmentation_hash.as_deref(), Some("abc"));
        let mut buf = Vec::new();
        write_annotations(&set, &mut buf).unwrap();
        assert_eq!(std::str::from_utf8(&buf).unwrap(), text);
    }

    #[test]
    fn rejects_bad_records() {
        let head = "{\"annotator\":\"A\",\"term\":\"XML\"}\n";
        let err = load(&format!(
            "{head}{{\"sentence_id\":\"s\",\"labels\":[\"flavour\"]}}\n"
        ))
        .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = load(&format!("{head}{{\"sentence_id\":\"s\",\"labels\":[]}}\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = load(&format!(
            "{head}{{\"sentence_id\":\"s\",\"labels\":[\"definition\",\"other_sense\"]}}\n"
        ))
        .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = load("{\"sentence_id\":\"s\",\"labels\":[\"definition\"]}\n").unwrap_err();
        assert!(
            err.to_string().contains("missing annotator header"),
            "{err}"
        );
    }

    #[test]
    fn scheme_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        std::fs::write(&path, r#"{"targeted": ["definition"], "extra": ["cost"]}"#).unwrap();
        let s = load_scheme(&path).unwrap();
        assert_eq!(s.extra, ["cost"]);
        std::fs::write(
            &path,
            r#"{"targeted": ["definition"], "extra": ["definition"]}"#,
        )
        .unwrap();
        assert!(load_scheme(&path).is_err());
    }
}
