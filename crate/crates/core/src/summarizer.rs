//! End-to-end pipeline, summary assembly and the lead baseline.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, Stage, ViewpointGroups};
use crate::corpus::{char_count, CharStream, Paragraph, Term, TermCorpus};
use crate::error::{Error, Result};
use crate::patterns::{PatternSet, Viewpoint};
use crate::segmenter::{segment, tokenize, SegmenterConfig, SimpleSentence, StopWords};
use crate::selector::{
    score_group, select_miscellaneous, select_representatives, ScoreFactors, ScoredSentence,
    SelectionConfig,
};

pub const DEFAULT_TOP_K: usize = 50;

/// Everything that controls a summarization run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// Paragraphs considered, by rank.
    pub top_k: usize,
    pub segmenter: SegmenterConfig,
    pub selection: SelectionConfig,
    /// Recorded only; the pipeline is deterministic.
    #[serde(default)]
    pub seed: Option<u64>,
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.top_k == 0 {
            return Err(Error::InvalidConfig("top_k must be at least 1".into()));
        }
        self.segmenter.validate()?;
        self.selection.validate()
    }
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            top_k: DEFAULT_TOP_K,
            segmenter: SegmenterConfig::english(),
            selection: SelectionConfig::default(),
            seed: None,
        }
    }
}

/// Settings recorded in every summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub pipeline: PipelineConfig,
    pub pattern_set_version: String,
    pub pattern_count: usize,
    /// Free-form run settings added by callers (paths, flags).
    #[serde(default)]
    pub settings: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Vbs,
    Lead,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceRef {
    pub paragraph_id: String,
    pub source_title: String,
    pub source_url: String,
}

impl SourceRef {
    fn of(p: &Paragraph) -> Self {
        Self {
            paragraph_id: p.id.clone(),
            source_title: p.source_title.clone(),
            source_url: p.source_url.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryEntry {
    pub viewpoint: Viewpoint,
    pub sentence: SimpleSentence,
    pub score: f64,
    /// How the sentence entered its group; `None` for the lead pseudo-entry.
    pub stage: Option<Stage>,
    pub factors: Option<ScoreFactors>,
    pub source: SourceRef,
    /// Index of an earlier entry with identical text.
    #[serde(default)]
    pub duplicate_of: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub term: Term,
    pub method: Method,
    /// Descending score; ties by canonical viewpoint order.
    pub entries: Vec<SummaryEntry>,
    pub config_echo: Option<ConfigEcho>,
    pub total_chars: usize,
    /// Lead only: the extracted `[start, end)` range of the rank-ordered
    /// character stream.
    #[serde(default)]
    pub lead_span: Option<(usize, usize)>,
}

impl Summary {
    /// Ids of the summary's sentences, in entry order, without repeats.
    pub fn sentence_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !ids.contains(&e.sentence.id.as_str()) {
                ids.push(&e.sentence.id);
            }
        }
        ids
    }
}

/// Intermediate results of every pipeline step.
#[derive(Debug, Clone)]
pub struct PipelineTrace {
    pub corpus: TermCorpus,
    pub sentences: Vec<SimpleSentence>,
    pub groups: ViewpointGroups,
    pub scored: BTreeMap<Viewpoint, Vec<ScoredSentence>>,
    pub summary: Summary,
}

pub fn summarize(
    corpus: &TermCorpus,
    patterns: &PatternSet,
    config: &PipelineConfig,
) -> Result<Summary> {
    summarize_traced(corpus, patterns, config).map(|t| t.summary)
}

fn entry_order(a: &SummaryEntry, b: &SummaryEntry) -> Ordering {
    b.score
        .total_cmp(&a.score)
        .then_with(|| a.viewpoint.cmp(&b.viewpoint))
        .then_with(|| a.sentence.order_key().cmp(&b.sentence.order_key()))
}

pub fn summarize_traced(
    corpus: &TermCorpus,
    patterns: &PatternSet,
    config: &PipelineConfig,
) -> Result<PipelineTrace> {
    config.validate()?;
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let top = corpus.take_top(config.top_k);
    let term = top.term();
    let sentences: Vec<SimpleSentence> = top
        .paragraphs()
        .iter()
        .flat_map(|p| segment(p, &config.segmenter, term))
        .collect();
    let groups = classify(&sentences, patterns, term);

    let weights = &config.selection.weights;
    let mut scored = BTreeMap::new();
    let mut entries = Vec::new();
    for (viewpoint, members) in groups.regular() {
        let group_scores = score_group(members, weights);
        for rep in select_representatives(&group_scores, config.selection.reps_per_group) {
            entries.push((viewpoint, rep));
        }
        scored.insert(viewpoint, group_scores);
    }

    let misc = groups.group(Viewpoint::Miscellaneous);
    if !misc.is_empty() {
        let misc_scores = score_group(misc, weights);
        let already: Vec<&SimpleSentence> = entries.iter().map(|(_, s)| &s.sentence).collect();
        let picked: Vec<String> = select_miscellaneous(misc, &already, config.selection.misc_count)
            .into_iter()
            .map(|s| s.id.clone())
            .collect();
        for id in picked {
            let s = misc_scores
                .iter()
                .find(|s| s.sentence.id == id)
                .expect("picked from misc");
            entries.push((Viewpoint::Miscellaneous, s.clone()));
        }
        scored.insert(Viewpoint::Miscellaneous, misc_scores);
    }

    let mut entries: Vec<SummaryEntry> = entries
        .into_iter()
        .map(|(viewpoint, s)| {
            let paragraph = top
                .paragraph(&s.sentence.paragraph_id)
                .expect("sentence from corpus");
            SummaryEntry {
                viewpoint,
                stage: groups.stage_of.get(&s.sentence.id).copied(),
                factors: Some(s.factors),
                source: SourceRef::of(paragraph),
                score: s.score,
                sentence: s.sentence,
                duplicate_of: None,
            }
        })
        .collect();
    entries.sort_by(entry_order);
    for j in 0..entries.len() {
        entries[j].duplicate_of =
            (0..j).find(|&i| entries[i].sentence.text == entries[j].sentence.text);
    }
    let total_chars = entries.iter().map(|e| char_count(&e.sentence.text)).sum();

    let summary = Summary {
        term: term.clone(),
        method: Method::Vbs,
        entries,
        config_echo: Some(ConfigEcho {
            pipeline: config.clone(),
            pattern_set_version: patterns.version().into(),
            pattern_count: patterns.len(),
            settings: BTreeMap::new(),
        }),
        total_chars,
        lead_span: None,
    };
    Ok(PipelineTrace {
        corpus: top,
        sentences,
        groups,
        scored,
        summary,
    })
}

/// The first `n_chars` counted characters of the rank-ordered paragraphs,
/// as one pseudo-entry. Cuts may fall mid-sentence.
///
/// `total_chars` is the number of characters cut. It differs from
/// [`char_count`] of the entry text only when the cut ends inside a run of
/// whitespace, which line trimming would drop.
pub fn lead_baseline(corpus: &TermCorpus, n_chars: usize) -> Result<Summary> {
    let first = corpus.paragraphs().first().ok_or(Error::EmptyCorpus)?;
    let stream = CharStream::new(corpus);
    let taken = n_chars.min(stream.total());
    let text = stream.prefix(taken);
    let entries = if taken == 0 {
        Vec::new()
    } else {
        Vec::from([SummaryEntry {
            viewpoint: Viewpoint::Miscellaneous,
            sentence: SimpleSentence {
                id: "lead".into(),
                tokens: tokenize(&text, &StopWords::default()),
                text,
                paragraph_id: first.id.clone(),
                paragraph_rank: first.rank,
                position: 0,
                subject_complemented: false,
                complement_subject: String::new(),
                span: (0, taken),
            },
            score: 1.0,
            stage: None,
            factors: None,
            source: SourceRef::of(first),
            duplicate_of: None,
        }])
    };
    Ok(Summary {
        term: corpus.term().clone(),
        method: Method::Lead,
        entries,
        config_echo: None,
        total_chars: taken,
        lead_span: Some((0, taken)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn corpus(texts: &[&str]) -> TermCorpus {
        let paragraphs = texts
            .iter()
            .enumerate()
            .map(|(i, t)| Paragraph {
                id: format!("p{}", i + 1),
                rank: i as u32 + 1,
                text: (*t).into(),
                source_title: format!("Page {}", i + 1),
                source_url: String::new(),
            })
            .collect();
        TermCorpus::new(Term::new("XML", vec![]).unwrap(), paragraphs).unwrap()
    }

    fn config(reps: usize, misc: usize) -> PipelineConfig {
        PipelineConfig {
            selection: SelectionConfig {
                reps_per_group: reps,
                misc_count: misc,
                ..Default::default()
            },
            ..Default::default()
        }
    }

    #[test]
    fn single_group_summary() {
        let c = corpus(&[
            "XML is a markup language.",
            "XML is a data format.",
            "XML is a document standard.",
        ]);
        let s = summarize(&c, &PatternSet::default_english(), &config(1, 0)).unwrap();
        assert_eq!(s.entries.len(), 1);
        assert_eq!(s.entries[0].viewpoint, Viewpoint::Definition);
        assert_eq!(s.total_chars, char_count(&s.entries[0].sentence.text));
        assert_eq!(s.entries[0].source.source_title, "Page 1");
    }

    #[test]
    fn empty_corpus_errors() {
        let empty = TermCorpus::new(Term::new("XML", vec![]).unwrap(), vec![]).unwrap();
        assert_eq!(
            summarize(&empty, &PatternSet::default_english(), &config(1, 0)).unwrap_err(),
            Error::EmptyCorpus
        );
        assert_eq!(lead_baseline(&empty, 5).unwrap_err(), Error::EmptyCorpus);
    }

    #[test]
    fn invalid_config_propagates() {
        let c = corpus(&["XML is a markup language."]);
        assert!(summarize(&c, &PatternSet::default_english(), &config(0, 0)).is_err());
    }

    #[test]
    fn entries_sorted_and_duplicates_flagged() {
        let c = corpus(&[
            "XML is a markup language, an abbreviation for Extensible Markup Language.",
            "Tags are enclosed in angle brackets.",
        ]);
        let s = summarize(&c, &PatternSet::default_english(), &config(1, 1)).unwrap();
        assert!(s.entries.windows(2).all(|w| w[0].score >= w[1].score));
        let dups: Vec<Option<usize>> = s.entries.iter().map(|e| e.duplicate_of).collect();
        assert_eq!(dups.iter().filter(|d| d.is_some()).count(), 1);
        assert_eq!(s.sentence_ids().len(), 2);
    }

    #[test]
    fn lead_examples() {
        let c = corpus(&["Alpha beta.", "Gamma."]);
        let full = lead_baseline(&c, 1000).unwrap();
        assert_eq!(full.total_chars, 17);
        assert_eq!(full.entries[0].sentence.text, "Alpha beta.\nGamma.");
        let one = lead_baseline(&c, 1).unwrap();
        assert_eq!(one.entries[0].sentence.text, "A");
        assert_eq!(one.total_chars, 1);
        let cut = lead_baseline(&c, 13).unwrap();
        assert_eq!(cut.entries[0].sentence.text, "Alpha beta.\nGa");
        assert_eq!(cut.lead_span, Some((0, 13)));
        assert!(lead_baseline(&c, 0).unwrap().entries.is_empty());
    }
}
