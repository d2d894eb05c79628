use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use vbs_core::corpus::{Paragraph, Term, TermCorpus};

use super::{json_objects, read_text};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    term: String,
    #[serde(default)]
    aliases: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    id: String,
    rank: u32,
    text: String,
    #[serde(default)]
    source_title: String,
    #[serde(default)]
    source_url: String,
}

pub fn load_corpus(path: &Path) -> Result<TermCorpus> {
    read_corpus(path, &read_text(path)?)
}

/// Parses corpus JSONL; `path` is only used in error messages.
pub fn read_corpus(path: &Path, text: &str) -> Result<TermCorpus> {
    let mut header: Option<Header> = None;
    let mut paragraphs = Vec::new();
    for (line, map) in json_objects(path, text)? {
        let value = Value::Object(map);
        if value.get("term").is_some() {
            if header.is_some() {
                return Err(Error::parse(path, line, "second term record"));
            }
            if !paragraphs.is_empty() {
                return Err(Error::parse(path, line, "term record must come first"));
            }
            header = Some(serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?);
            continue;
        }
        if header.is_none() {
            return Err(Error::parse(path, line, "missing term record"));
        }
        let r: Record = serde_json::from_value(value).map_err(|e| Error::parse(path, line, e))?;
        if r.rank == 0 {
            return Err(Error::parse(path, line, "rank must be a positive integer"));
        }
        paragraphs.push(Paragraph {
            id: r.id,
            rank: r.rank,
            text: r.text,
            source_title: r.source_title,
            source_url: r.source_url,
        });
    }
    let header = header.ok_or_else(|| Error::data(path, "missing term record"))?;
    let invalid = |source| Error::Invalid {
        path: path.into(),
        source,
    };
    let term = Term::new(header.term, header.aliases).map_err(invalid)?;
    TermCorpus::new(term, paragraphs).map_err(invalid)
}

pub fn write_corpus(corpus: &TermCorpus, mut out: impl Write) -> std::io::Result<()> {
    let header = Header {
        term: corpus.term().surface().into(),
        aliases: corpus.term().aliases().to_vec(),
    };
    writeln!(out, "{}", serde_json::to_string(&header)?)?;
    for p in corpus.paragraphs() {
        let r = Record {
            id: p.id.clone(),
            rank: p.rank,
            text: p.text.clone(),
            source_title: p.source_title.clone(),
            source_url: p.source_url.clone(),
        };
        writeln!(out, "{}", serde_json::to_string(&r)?)?;
    }
    Ok(())
}
