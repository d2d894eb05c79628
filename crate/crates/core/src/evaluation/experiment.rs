use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{
    compression_ratio, lead_sentence_ids, sentence_spans, AnnotationSet, LabelScheme, Scope,
};
use crate::corpus::TermCorpus;
use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::summarizer::{lead_baseline, summarize_traced, PipelineConfig};

/// A term's corpus and every annotator's gold labels for it.
#[derive(Debug, Clone)]
pub struct TermGold {
    pub corpus: TermCorpus,
    pub gold: Vec<AnnotationSet>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub pipeline: PipelineConfig,
    /// One report row per value.
    pub reps: Vec<usize>,
    pub lead_threshold: f64,
    pub scheme: LabelScheme,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            pipeline: PipelineConfig::default(),
            reps: Vec::from([1, 2, 3]),
            lead_threshold: super::DEFAULT_LEAD_THRESHOLD,
            scheme: LabelScheme::default(),
        }
    }
}

/// Coverage percentages for one annotator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct CoverageCells {
    pub vbs_12: f64,
    pub lead_12: f64,
    pub vbs_28: f64,
    pub lead_28: f64,
}

impl CoverageCells {
    fn add(&mut self, other: &CoverageCells) {
        self.vbs_12 += other.vbs_12;
        self.lead_12 += other.lead_12;
        self.vbs_28 += other.vbs_28;
        self.lead_28 += other.lead_28;
    }

    fn scale(&mut self, k: f64) {
        self.vbs_12 *= k;
        self.lead_12 *= k;
        self.vbs_28 *= k;
        self.lead_28 *= k;
    }
}

/// Per term, per reps value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermResult {
    pub term: String,
    pub reps: usize,
    pub vbs_chars: usize,
    pub lead_chars: usize,
    pub source_chars: usize,
    pub compression_pct: f64,
    pub coverage: BTreeMap<String, CoverageCells>,
    /// Per annotator, 28-scope label sets: source, VBS summary, lead.
    pub labels: BTreeMap<String, [BTreeSet<String>; 3]>,
}

/// Averages over terms for one reps value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub reps: usize,
    pub chars: f64,
    pub compression_pct: f64,
    pub coverage: BTreeMap<String, CoverageCells>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub annotators: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub per_term: Vec<TermResult>,
}

fn pct(x: f64) -> f64 {
    100.0 * x
}

/// Runs VBS and the equal-length lead baseline for every term and reps
/// value, scoring both against each annotator's gold.
pub fn run_experiment(
    terms: &[TermGold],
    patterns: &PatternSet,
    config: &ExperimentConfig,
) -> Result<EvalReport> {
    config.pipeline.validate()?;
    let mut ordered: Vec<&TermGold> = terms.iter().collect();
    ordered.sort_by(|a, b| a.corpus.term().surface().cmp(b.corpus.term().surface()));
    for t in &ordered {
        if t.gold.is_empty() {
            return Err(Error::MissingGold(t.corpus.term().surface().into()));
        }
    }
    let annotators: Vec<String> = ordered
        .iter()
        .flat_map(|t| t.gold.iter().map(|g| g.annotator_id.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let scheme = &config.scheme;

    let mut per_term = Vec::new();
    let mut rows = Vec::new();
    for &reps in &config.reps {
        let mut pipeline = config.pipeline.clone();
        pipeline.selection.reps_per_group = reps;
        let mut row_results = Vec::new();
        for t in &ordered {
            let trace = summarize_traced(&t.corpus, patterns, &pipeline)?;
            let top = &trace.corpus;
            let source_chars = top.char_count();
            let vbs = &trace.summary;
            let lead = lead_baseline(top, vbs.total_chars)?;
            let spans = sentence_spans(top, &trace.sentences)?;
            let lead_span = lead.lead_span.unwrap_or((0, 0));
            let lead_ids = lead_sentence_ids(lead_span, &spans, config.lead_threshold)?;
            let vbs_ids = vbs.sentence_ids();

            let mut coverage = BTreeMap::new();
            let mut labels = BTreeMap::new();
            for g in &t.gold {
                let cov =
                    |ids: &[&str], scope| super::coverage(ids.iter().copied(), g, scheme, scope);
                let lead_refs: Vec<&str> = lead_ids.iter().map(String::as_str).collect();
                let cells = CoverageCells {
                    vbs_12: pct(cov(&vbs_ids, Scope::Twelve)?),
                    lead_12: pct(cov(&lead_refs, Scope::Twelve)?),
                    vbs_28: pct(cov(&vbs_ids, Scope::TwentyEight)?),
                    lead_28: pct(cov(&lead_refs, Scope::TwentyEight)?),
                };
                coverage.insert(g.annotator_id.clone(), cells);
                labels.insert(
                    g.annotator_id.clone(),
                    [
                        g.source_labels(scheme, Scope::TwentyEight),
                        g.labels_of(vbs_ids.iter().copied(), scheme, Scope::TwentyEight)?,
                        g.labels_of(lead_refs.iter().copied(), scheme, Scope::TwentyEight)?,
                    ],
                );
            }
            row_results.push(TermResult {
                term: t.corpus.term().surface().into(),
                reps,
                vbs_chars: vbs.total_chars,
                lead_chars: lead.total_chars,
                source_chars,
                compression_pct: pct(compression_ratio(vbs.total_chars, source_chars)?),
                coverage,
                labels,
            });
        }
        rows.push(average_row(reps, &row_results, &annotators));
        per_term.extend(row_results);
    }
    Ok(EvalReport {
        annotators,
        rows,
        per_term,
    })
}

fn average_row(reps: usize, results: &[TermResult], annotators: &[String]) -> ReportRow {
    let n = results.len().max(1) as f64;
    let chars = results.iter().map(|r| r.vbs_chars as f64).sum::<f64>() / n;
    let compression_pct = results.iter().map(|r| r.compression_pct).sum::<f64>() / n;
    let mut coverage = BTreeMap::new();
    for a in annotators {
        let mut cells = CoverageCells::default();
        let mut count = 0usize;
        for r in results {
            if let Some(c) = r.coverage.get(a) {
                cells.add(c);
                count += 1;
            }
        }
        if count > 0 {
            cells.scale(1.0 / count as f64);
        }
        coverage.insert(a.clone(), cells);
    }
    ReportRow {
        reps,
        chars,
        compression_pct,
        coverage,
    }
}

/// Per annotator and label: the percentage of terms whose source shows the
/// label that also show it in the VBS summary, for one reps value.
pub fn per_viewpoint_coverage(
    report: &EvalReport,
    reps: usize,
) -> BTreeMap<String, BTreeMap<String, f64>> {
    let mut hits: BTreeMap<String, BTreeMap<String, (usize, usize)>> = BTreeMap::new();
    for r in report.per_term.iter().filter(|r| r.reps == reps) {
        for (annotator, [source, vbs, _]) in &r.labels {
            let entry = hits.entry(annotator.clone()).or_default();
            for label in source {
                let slot = entry.entry(label.clone()).or_default();
                slot.1 += 1;
                if vbs.contains(label) {
                    slot.0 += 1;
                }
            }
        }
    }
    hits.into_iter()
        .map(|(a, labels)| {
            let pcts = labels
                .into_iter()
                .map(|(l, (hit, total))| (l, 100.0 * hit as f64 / total as f64))
                .collect();
            (a, pcts)
        })
        .collect()
}
