//! Selection step: per-group scoring and representative choice.
//!
//! Every sentence in a group gets three raw factors. W is the mean group
//! frequency of its content words, R its paragraph rank and C its length in
//! characters. Each factor is min-max normalized inside the group (W
//! ascending, R and C descending). The score is their weighted average.
//! Miscellaneous sentences are picked greedily by dissimilarity to what
//! has already been selected.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::classifier::dice;
use crate::corpus::char_count;
use crate::error::{Error, Result};
use crate::segmenter::{content_words, SimpleSentence};

const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreWeights {
    pub alpha_w: f64,
    pub alpha_r: f64,
    pub alpha_c: f64,
}

impl ScoreWeights {
    /// Weights with the required strict ordering `W > R > C`.
    pub fn new(alpha_w: f64, alpha_r: f64, alpha_c: f64) -> Result<Self> {
        let w = Self::any_order(alpha_w, alpha_r, alpha_c)?;
        if !(alpha_w > alpha_r && alpha_r > alpha_c) {
            return Err(Error::InvalidConfig(format!(
                "weights must satisfy W > R > C, got {alpha_w}, {alpha_r}, {alpha_c}"
            )));
        }
        Ok(w)
    }

    /// Non-negative weights summing to 1, in any order.
    pub fn any_order(alpha_w: f64, alpha_r: f64, alpha_c: f64) -> Result<Self> {
        let all = [alpha_w, alpha_r, alpha_c];
        if all.iter().any(|a| !a.is_finite() || *a < 0.0) {
            return Err(Error::InvalidConfig(
                "weights must be finite and non-negative".into(),
            ));
        }
        let sum: f64 = all.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidConfig(format!(
                "weights must sum to 1, got {sum}"
            )));
        }
        Ok(Self {
            alpha_w,
            alpha_r,
            alpha_c,
        })
    }
}

impl Default for ScoreWeights {
    fn default() -> Self {
        Self {
            alpha_w: 0.5,
            alpha_r: 0.3,
            alpha_c: 0.2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelectionConfig {
    /// Representatives per regular group.
    pub reps_per_group: usize,
    /// Sentences taken from the miscellaneous group.
    pub misc_count: usize,
    pub weights: ScoreWeights,
}

impl SelectionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.reps_per_group == 0 {
            return Err(Error::InvalidConfig(
                "reps_per_group must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

impl Default for SelectionConfig {
    fn default() -> Self {
        Self {
            reps_per_group: 1,
            misc_count: 5,
            weights: ScoreWeights::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawFactors {
    pub w: f64,
    pub r: f64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreFactors {
    pub w: f64,
    pub r: f64,
    pub c: f64,
    pub w_norm: f64,
    pub r_norm: f64,
    pub c_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredSentence {
    pub sentence: SimpleSentence,
    pub factors: ScoreFactors,
    pub score: f64,
}

/// Content-word token counts over a whole group.
pub fn group_word_frequencies(group: &[SimpleSentence]) -> BTreeMap<String, usize> {
    let mut freqs = BTreeMap::new();
    for s in group {
        for (word, n) in content_words(s).counts {
            *freqs.entry(word).or_default() += n;
        }
    }
    freqs
}

pub fn raw_factors(sentence: &SimpleSentence, freqs: &BTreeMap<String, usize>) -> RawFactors {
    let words = content_words(sentence);
    let tokens = words.total();
    let w = if tokens == 0 {
        0.0
    } else {
        let weighted: usize = words
            .counts
            .iter()
            .map(|(word, n)| n * freqs.get(word).copied().unwrap_or(0))
            .sum();
        weighted as f64 / tokens as f64
    };
    RawFactors {
        w,
        r: f64::from(sentence.paragraph_rank),
        c: char_count(&sentence.text) as f64,
    }
}

/// Min-max normalization; `ascending = false` maps the minimum to 1.
/// A constant factor normalizes to 0.5 for every member.
fn normalize(values: &[f64], ascending: bool) -> Vec<f64> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max <= min {
        return values.iter().map(|_| 0.5).collect();
    }
    let span = max - min;
    values
        .iter()
        .map(|v| {
            if ascending {
                (v - min) / span
            } else {
                (max - v) / span
            }
        })
        .collect()
}

pub fn normalize_and_score(
    group: &[(&SimpleSentence, RawFactors)],
    weights: &ScoreWeights,
) -> Vec<ScoredSentence> {
    let ws: Vec<f64> = group.iter().map(|(_, f)| f.w).collect();
    let rs: Vec<f64> = group.iter().map(|(_, f)| f.r).collect();
    let cs: Vec<f64> = group.iter().map(|(_, f)| f.c).collect();
    let (wn, rn, cn) = (
        normalize(&ws, true),
        normalize(&rs, false),
        normalize(&cs, false),
    );
    group
        .iter()
        .enumerate()
        .map(|(i, (s, raw))| {
            let score = weights.alpha_w * wn[i] + weights.alpha_r * rn[i] + weights.alpha_c * cn[i];
            let score = score.clamp(0.0, 1.0);
            ScoredSentence {
                sentence: (*s).clone(),
                factors: ScoreFactors {
                    w: raw.w,
                    r: raw.r,
                    c: raw.c,
                    w_norm: wn[i],
                    r_norm: rn[i],
                    c_norm: cn[i],
                },
                score,
            }
        })
        .collect()
}

/// Frequencies, raw factors and scores for one group, in input order.
pub fn score_group(group: &[SimpleSentence], weights: &ScoreWeights) -> Vec<ScoredSentence> {
    let freqs = group_word_frequencies(group);
    let raw: Vec<(&SimpleSentence, RawFactors)> =
        group.iter().map(|s| (s, raw_factors(s, &freqs))).collect();
    normalize_and_score(&raw, weights)
}

fn by_score_desc(a: &ScoredSentence, b: &ScoredSentence) -> Ordering {
    b.score
        .total_cmp(&a.score)
        .then_with(|| a.sentence.order_key().cmp(&b.sentence.order_key()))
}

/// Top `n` by descending score; ties by rank, position, id.
pub fn select_representatives(group: &[ScoredSentence], n: usize) -> Vec<ScoredSentence> {
    let mut sorted = group.to_vec();
    sorted.sort_by(by_score_desc);
    sorted.truncate(n);
    sorted
}

/// Greedy max-linkage dissimilarity: each pick minimizes its maximum Dice
/// similarity to everything selected so far.
pub fn select_miscellaneous<'a>(
    misc: &'a [SimpleSentence],
    already_selected: &[&SimpleSentence],
    n: usize,
) -> Vec<&'a SimpleSentence> {
    let mut anchors: Vec<BTreeSet<String>> = already_selected
        .iter()
        .map(|s| content_words(s).set)
        .collect();
    let mut candidates: Vec<(&SimpleSentence, BTreeSet<String>)> =
        misc.iter().map(|s| (s, content_words(s).set)).collect();
    let mut picked = Vec::new();
    while picked.len() < n && !candidates.is_empty() {
        let (best, _) = candidates
            .iter()
            .enumerate()
            .map(|(i, (s, words))| {
                let worst = anchors
                    .iter()
                    .map(|a| dice(words, a).value())
                    .fold(0.0, f64::max);
                (i, (worst, s.order_key()))
            })
            .min_by(|(_, a), (_, b)| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
            .expect("candidates non-empty");
        let (s, words) = candidates.remove(best);
        anchors.push(words);
        picked.push(s);
    }
    picked
}
