//! Directories of term corpora and gold annotations.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use vbs_core::corpus::TermCorpus;
use vbs_core::evaluation::LabelScheme;
use vbs_core::evaluation::TermGold;
use vbs_core::segmenter::{segment, SegmenterConfig, SimpleSentence};

use crate::error::{Error, Result};
use crate::formats::{load_annotations, load_corpus, write_annotations, write_corpus};

/// Simple sentences of the top `top_k` paragraphs, in corpus order.
pub fn segment_top(
    corpus: &TermCorpus,
    segmenter: &SegmenterConfig,
    top_k: usize,
) -> Vec<SimpleSentence> {
    let top = corpus.take_top(top_k);
    top.paragraphs()
        .iter()
        .flat_map(|p| segment(p, segmenter, top.term()))
        .collect()
}

/// Hex SHA-256 over `id \t text \n` for each sentence, in order.
pub fn segmentation_hash(sentences: &[SimpleSentence]) -> String {
    let mut h = Sha256::new();
    for s in sentences {
        h.update(s.id.as_bytes());
        h.update(b"\t");
        h.update(s.text.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

fn jsonl_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "jsonl") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Loads every `*.jsonl` corpus in `corpus_dir` and every annotation file
/// in `gold_dir`, matching annotations to corpora by term. Annotations
/// whose header carries a segmentation hash must match the segmentation
/// produced by `segmenter` over the top `top_k` paragraphs.
pub fn load_benchmark(
    corpus_dir: &Path,
    gold_dir: &Path,
    scheme: &LabelScheme,
    segmenter: &SegmenterConfig,
    top_k: usize,
) -> Result<Vec<TermGold>> {
    let mut terms: BTreeMap<String, TermGold> = BTreeMap::new();
    for path in jsonl_files(corpus_dir)? {
        let corpus = load_corpus(&path)?;
        let surface = corpus.term().surface().to_string();
        if terms.contains_key(&surface) {
            return Err(Error::data(
                &path,
                format!("term {surface:?} appears in more than one corpus file"),
            ));
        }
        terms.insert(
            surface,
            TermGold {
                corpus,
                gold: vec![],
            },
        );
    }
    let mut hashes: BTreeMap<String, String> = BTreeMap::new();
    for path in jsonl_files(gold_dir)? {
        let set = load_annotations(&path, scheme)?;
        let Some(entry) = terms.get_mut(&set.term) else {
            return Err(Error::data(
                &path,
                format!("no corpus for term {:?}", set.term),
            ));
        };
        if let Some(expected) = &set.segmentation_hash {
            let actual = hashes.entry(set.term.clone()).or_insert_with(|| {
                segmentation_hash(&segment_top(&entry.corpus, segmenter, top_k))
            });
            if expected != actual {
                return Err(Error::data(
                    &path,
                    format!(
                        "segmentation hash mismatch: file has {expected}, segmenter gives {actual}"
                    ),
                ));
            }
        }
        if entry
            .gold
            .iter()
            .any(|g| g.annotator_id == set.annotator_id)
        {
            return Err(Error::data(
                &path,
                format!(
                    "annotator {:?} repeated for {:?}",
                    set.annotator_id, set.term
                ),
            ));
        }
        entry.gold.push(set);
    }
    Ok(terms.into_values().collect())
}

/// File-name stem for a term: lowercase alphanumerics joined by `-`.
pub fn slug(term: &str) -> String {
    let mut out = String::new();
    for c in term.chars().flat_map(char::to_lowercase) {
        if c.is_alphanumeric() {
            out.push(c);
        } else if !out.is_empty() && !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}

/// Writes `dir/corpus/<slug>.jsonl` and `dir/gold/<slug>.<annotator>.jsonl`.
pub fn write_benchmark(dir: &Path, terms: &[TermGold]) -> Result<()> {
    let corpus_dir = dir.join("corpus");
    let gold_dir = dir.join("gold");
    for d in [&corpus_dir, &gold_dir] {
        std::fs::create_dir_all(d).map_err(|e| Error::io(d, e))?;
    }
    for t in terms {
        let stem = slug(t.corpus.term().surface());
        let mut buf = Vec::new();
        write_corpus(&t.corpus, &mut buf).expect("in-memory write");
        crate::write_atomic(&corpus_dir.join(format!("{stem}.jsonl")), &buf)?;
        for g in &t.gold {
            let mut buf = Vec::new();
            write_annotations(g, &mut buf).expect("in-memory write");
            crate::write_atomic(
                &gold_dir.join(format!("{stem}.{}.jsonl", g.annotator_id)),
                &buf,
            )?;
        }
    }
    Ok(())
}
