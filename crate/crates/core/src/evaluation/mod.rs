//! Intrinsic evaluation: compression ratio and viewpoint coverage against
//! gold sentence annotations, for both the viewpoint summarizer and the
//! lead baseline.

mod experiment;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corpus::{CharStream, TermCorpus};
use crate::error::{Error, Result};
use crate::patterns::Viewpoint;
use crate::segmenter::SimpleSentence;

pub use experiment::{
    per_viewpoint_coverage, run_experiment, CoverageCells, EvalReport, ExperimentConfig, ReportRow,
    TermGold, TermResult,
};

/// Labels that mark a sentence as not describing any viewpoint.
pub const NON_VIEWPOINT_LABELS: [&str; 3] = ["non_description", "other_sense", "misc_category"];

/// Default lead inclusion threshold: a sentence counts when at least this
/// fraction of its span lies inside the lead cut.
pub const DEFAULT_LEAD_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// The pattern-targeted viewpoints only.
    Twelve,
    /// The full annotation taxonomy.
    TwentyEight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Targeted,
    Extra,
    NonViewpoint,
}

/// The annotation taxonomy: targeted viewpoints, further annotated
/// viewpoints, and the non-viewpoint categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelScheme {
    pub targeted: Vec<String>,
    pub extra: Vec<String>,
}

impl LabelScheme {
    pub fn new(targeted: Vec<String>, extra: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for label in targeted
            .iter()
            .chain(&extra)
            .map(String::as_str)
            .chain(NON_VIEWPOINT_LABELS)
        {
            if label.is_empty() || !seen.insert(label) {
                return Err(Error::InvalidConfig(format!(
                    "label {label:?} is empty or repeated"
                )));
            }
        }
        Ok(Self { targeted, extra })
    }

    /// The twelve targeted viewpoints plus sixteen placeholder labels
    /// `aux_01`..`aux_16`.
    pub fn default_28() -> Self {
        Self {
            targeted: Viewpoint::TARGETED
                .iter()
                .map(|v| v.as_str().to_string())
                .collect(),
            extra: (1..=16).map(|i| format!("aux_{i:02}")).collect(),
        }
    }

    pub fn kind(&self, label: &str) -> Option<LabelKind> {
        if self.targeted.iter().any(|l| l == label) {
            Some(LabelKind::Targeted)
        } else if self.extra.iter().any(|l| l == label) {
            Some(LabelKind::Extra)
        } else if NON_VIEWPOINT_LABELS.contains(&label) {
            Some(LabelKind::NonViewpoint)
        } else {
            None
        }
    }

    pub fn in_scope(&self, label: &str, scope: Scope) -> bool {
        matches!(
            (self.kind(label), scope),
            (Some(LabelKind::Targeted), _) | (Some(LabelKind::Extra), Scope::TwentyEight)
        )
    }
}

impl Default for LabelScheme {
    fn default() -> Self {
        Self::default_28()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub sentence_id: String,
    pub labels: BTreeSet<String>,
}

impl Annotation {
    pub fn new(
        sentence_id: impl Into<String>,
        labels: BTreeSet<String>,
        scheme: &LabelScheme,
    ) -> Result<Self> {
        let sentence_id = sentence_id.into();
        if labels.is_empty() {
            return Err(Error::EmptyAnnotation(sentence_id));
        }
        let mut non_viewpoint = false;
        let mut viewpoint = false;
        for label in &labels {
            match scheme.kind(label) {
                None => return Err(Error::UnknownLabel(label.clone())),
                Some(LabelKind::NonViewpoint) => non_viewpoint = true,
                Some(_) => viewpoint = true,
            }
        }
        if non_viewpoint && viewpoint {
            return Err(Error::MixedAnnotation(sentence_id));
        }
        Ok(Self {
            sentence_id,
            labels,
        })
    }
}

/// One annotator's gold labels for one term's segmented source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotationSet {
    pub annotator_id: String,
    pub term: String,
    /// Pins the annotations to one segmenter output.
    #[serde(default)]
    pub segmentation_hash: Option<String>,
    pub annotations: BTreeMap<String, Annotation>,
}

impl AnnotationSet {
    pub fn new(
        annotator_id: impl Into<String>,
        term: impl Into<String>,
        segmentation_hash: Option<String>,
        annotations: Vec<Annotation>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for a in annotations {
            if map.contains_key(&a.sentence_id) {
                return Err(Error::InvalidConfig(format!(
                    "sentence {:?} annotated twice",
                    a.sentence_id
                )));
            }
            map.insert(a.sentence_id.clone(), a);
        }
        Ok(Self {
            annotator_id: annotator_id.into(),
            term: term.into(),
            segmentation_hash,
            annotations: map,
        })
    }

    /// Distinct in-scope labels over the given sentences.
    pub fn labels_of<'a, I>(
        &self,
        ids: I,
        scheme: &LabelScheme,
        scope: Scope,
    ) -> Result<BTreeSet<String>>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut out = BTreeSet::new();
        for id in ids {
            let a = self
                .annotations
                .get(id)
                .ok_or_else(|| Error::UnknownSentence(id.to_string()))?;
            out.extend(
                a.labels
                    .iter()
                    .filter(|l| scheme.in_scope(l, scope))
                    .cloned(),
            );
        }
        Ok(out)
    }

    /// Distinct in-scope labels over every annotated sentence.
    pub fn source_labels(&self, scheme: &LabelScheme, scope: Scope) -> BTreeSet<String> {
        self.annotations
            .values()
            .flat_map(|a| a.labels.iter())
            .filter(|l| scheme.in_scope(l, scope))
            .cloned()
            .collect()
    }
}

/// `summary_chars / source_chars`.
pub fn compression_ratio(summary_chars: usize, source_chars: usize) -> Result<f64> {
    if source_chars == 0 {
        return Err(Error::ZeroSource);
    }
    Ok(summary_chars as f64 / source_chars as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageCounts {
    /// Distinct viewpoint types in the summary.
    pub numerator: usize,
    /// Distinct viewpoint types in the source.
    pub denominator: usize,
}

impl CoverageCounts {
    pub fn ratio(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

pub fn coverage_counts<'a, I>(
    summary_ids: I,
    gold: &AnnotationSet,
    scheme: &LabelScheme,
    scope: Scope,
) -> Result<CoverageCounts>
where
    I: IntoIterator<Item = &'a str>,
{
    let numerator = gold.labels_of(summary_ids, scheme, scope)?.len();
    let denominator = gold.source_labels(scheme, scope).len();
    if denominator == 0 {
        return Err(Error::EmptyCoverageDenominator);
    }
    Ok(CoverageCounts {
        numerator,
        denominator,
    })
}

/// Fraction of the source's viewpoint types present in the summary. Each
/// type counts once however many summary sentences carry it.
pub fn coverage<'a, I>(
    summary_ids: I,
    gold: &AnnotationSet,
    scheme: &LabelScheme,
    scope: Scope,
) -> Result<f64>
where
    I: IntoIterator<Item = &'a str>,
{
    coverage_counts(summary_ids, gold, scheme, scope).map(CoverageCounts::ratio)
}

/// Stream spans of every sentence, in the coordinates of the lead cut.
pub fn sentence_spans(
    corpus: &TermCorpus,
    sentences: &[SimpleSentence],
) -> Result<BTreeMap<String, (usize, usize)>> {
    let stream = CharStream::new(corpus);
    sentences
        .iter()
        .map(|s| {
            stream
                .map_span(&s.paragraph_id, s.span.0, s.span.1)
                .map(|span| (s.id.clone(), span))
                .ok_or_else(|| {
                    Error::SpanMismatch(format!("sentence {:?} does not map into the corpus", s.id))
                })
        })
        .collect()
}

/// Sentences with at least `threshold` of their span inside `lead_span`.
pub fn lead_sentence_ids(
    lead_span: (usize, usize),
    sentence_spans: &BTreeMap<String, (usize, usize)>,
    threshold: f64,
) -> Result<Vec<String>> {
    let (ls, le) = lead_span;
    if ls > le {
        return Err(Error::SpanMismatch(format!(
            "lead span {ls}..{le} is reversed"
        )));
    }
    let mut out = Vec::new();
    for (id, &(s, e)) in sentence_spans {
        if s > e {
            return Err(Error::SpanMismatch(format!(
                "sentence {id:?} span {s}..{e} is reversed"
            )));
        }
        let len = e - s;
        let overlap = e.min(le).saturating_sub(s.max(ls));
        if len > 0 && overlap as f64 >= threshold * len as f64 {
            out.push(id.clone());
        }
    }
    Ok(out)
}

/// Coverage of a character-prefix summary against sentence-level gold.
pub fn coverage_for_lead(
    lead_span: (usize, usize),
    gold: &AnnotationSet,
    sentence_spans: &BTreeMap<String, (usize, usize)>,
    scheme: &LabelScheme,
    scope: Scope,
    threshold: f64,
) -> Result<f64> {
    if let Some(id) = sentence_spans
        .keys()
        .find(|id| !gold.annotations.contains_key(*id))
    {
        return Err(Error::SpanMismatch(format!(
            "sentence {id:?} has a span but no annotation"
        )));
    }
    let ids = lead_sentence_ids(lead_span, sentence_spans, threshold)?;
    coverage(ids.iter().map(String::as_str), gold, scheme, scope)
}

/// Smallest number of top-ranked paragraphs whose sentences already show
/// every in-scope viewpoint type of the annotated source. `None` when the
/// source has no in-scope labels.
pub fn viewpoint_saturation(
    sentences: &[SimpleSentence],
    gold: &AnnotationSet,
    scheme: &LabelScheme,
    scope: Scope,
) -> Option<u32> {
    let all = gold.source_labels(scheme, scope);
    if all.is_empty() {
        return None;
    }
    let mut by_rank: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
    for s in sentences {
        by_rank.entry(s.paragraph_rank).or_default().push(&s.id);
    }
    let mut seen = BTreeSet::new();
    for (rank, ids) in by_rank {
        for id in ids {
            if let Some(a) = gold.annotations.get(id) {
                seen.extend(
                    a.labels
                        .iter()
                        .filter(|l| scheme.in_scope(l, scope))
                        .cloned(),
                );
            }
        }
        if seen.len() == all.len() {
            return Some(rank);
        }
    }
    None
}
