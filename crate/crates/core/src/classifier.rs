//! Two-stage grouping of simple sentences by viewpoint.
//!
//! Stage 1 puts every pattern-matching sentence into each matched group.
//! Stage 2 gives each remaining sentence the group of its most
//! Dice-similar stage-1 sentence. Whatever is left (maximum similarity 0)
//! goes to miscellaneous. Stage-2 sentences are never comparison targets
//! for each other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corpus::Term;
use crate::patterns::{PatternSet, TermForms, Viewpoint};
use crate::segmenter::{content_words, SimpleSentence};

/// Dice coefficient in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiceScore(f64);

impl DiceScore {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// `2|a ∩ b| / (|a| + |b|)`, or 0 when both sets are empty.
pub fn dice(a: &BTreeSet<String>, b: &BTreeSet<String>) -> DiceScore {
    let total = a.len() + b.len();
    if total == 0 {
        return DiceScore(0.0);
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let common = small.iter().filter(|w| large.contains(*w)).count();
    DiceScore((2 * common) as f64 / total as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Pattern,
    Similarity,
    Fallback,
}

/// Outcome of stage 2 for one sentence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    pub sentence_id: String,
    /// `None` sends the sentence to miscellaneous.
    pub viewpoint: Option<Viewpoint>,
    /// The most similar stage-1 sentence, when similarity was positive.
    pub peer: Option<String>,
    pub dice: f64,
}

/// For each unclassified sentence, the group of its most similar
/// classified sentence. Ties go to the peer with the lower paragraph rank,
/// then lower position, then smaller id, then the earlier viewpoint in
/// canonical order.
pub fn similarity_assign(
    unclassified: &[&SimpleSentence],
    classified: &[(&SimpleSentence, Viewpoint)],
) -> Vec<Assignment> {
    let peers: Vec<(BTreeSet<String>, &SimpleSentence, Viewpoint)> = classified
        .iter()
        .map(|(s, v)| (content_words(s).set, *s, *v))
        .collect();
    unclassified
        .iter()
        .map(|s| {
            let words = content_words(s).set;
            let mut best: Option<(f64, &SimpleSentence, Viewpoint)> = None;
            for (peer_words, peer, viewpoint) in &peers {
                let score = dice(&words, peer_words).value();
                if score <= 0.0 {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((b, bp, bv)) => {
                        score > *b
                            || (score == *b
                                && (peer.order_key(), *viewpoint) < (bp.order_key(), *bv))
                    }
                };
                if better {
                    best = Some((score, peer, *viewpoint));
                }
            }
            match best {
                Some((score, peer, viewpoint)) => Assignment {
                    sentence_id: s.id.clone(),
                    viewpoint: Some(viewpoint),
                    peer: Some(peer.id.clone()),
                    dice: score,
                },
                None => Assignment {
                    sentence_id: s.id.clone(),
                    viewpoint: None,
                    peer: None,
                    dice: 0.0,
                },
            }
        })
        .collect()
}

/// Sentences grouped by viewpoint, with the stage that placed each one.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ViewpointGroups {
    /// Non-empty groups only; sentences keep input order.
    pub groups: BTreeMap<Viewpoint, Vec<SimpleSentence>>,
    pub stage_of: BTreeMap<String, Stage>,
    /// Stage-2 links: sentence id to the stage-1 peer it followed.
    pub similar_to: BTreeMap<String, Assignment>,
}

impl ViewpointGroups {
    pub fn group(&self, viewpoint: Viewpoint) -> &[SimpleSentence] {
        self.groups
            .get(&viewpoint)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Viewpoints a sentence was placed in.
    pub fn viewpoints_of(&self, sentence_id: &str) -> Vec<Viewpoint> {
        self.groups
            .iter()
            .filter(|(_, members)| members.iter().any(|s| s.id == sentence_id))
            .map(|(v, _)| *v)
            .collect()
    }

    /// Regular (non-miscellaneous) groups that are non-empty.
    pub fn regular(&self) -> impl Iterator<Item = (Viewpoint, &[SimpleSentence])> {
        self.groups
            .iter()
            .filter(|(v, members)| v.is_targeted() && !members.is_empty())
            .map(|(v, members)| (*v, members.as_slice()))
    }
}

pub fn classify(sentences: &[SimpleSentence], set: &PatternSet, term: &Term) -> ViewpointGroups {
    let forms = TermForms::new(term);
    let mut out = ViewpointGroups::default();
    let mut classified: Vec<(&SimpleSentence, Viewpoint)> = Vec::new();
    let mut unclassified: Vec<&SimpleSentence> = Vec::new();

    for s in sentences {
        let matched = set.match_tokens(&s.tokens, &forms);
        if matched.is_empty() {
            unclassified.push(s);
        } else {
            out.stage_of.insert(s.id.clone(), Stage::Pattern);
            classified.extend(matched.into_iter().map(|v| (s, v)));
        }
    }

    let assignments = similarity_assign(&unclassified, &classified);
    let mut second: BTreeMap<&str, Viewpoint> = BTreeMap::new();
    for (s, a) in unclassified.iter().zip(assignments) {
        match a.viewpoint {
            Some(v) => {
                out.stage_of.insert(s.id.clone(), Stage::Similarity);
                second.insert(s.id.as_str(), v);
                out.similar_to.insert(s.id.clone(), a);
            }
            None => {
                out.stage_of.insert(s.id.clone(), Stage::Fallback);
                second.insert(s.id.as_str(), Viewpoint::Miscellaneous);
            }
        }
    }

    // rebuild in input order so group membership order is stable
    let first: BTreeMap<&str, Vec<Viewpoint>> =
        classified.iter().fold(BTreeMap::new(), |mut acc, (s, v)| {
            acc.entry(s.id.as_str()).or_insert_with(Vec::new).push(*v);
            acc
        });
    for s in sentences {
        let targets: Vec<Viewpoint> = match first.get(s.id.as_str()) {
            Some(vs) => vs.clone(),
            None => Vec::from([second[s.id.as_str()]]),
        };
        for v in targets {
            out.groups.entry(v).or_default().push(s.clone());
        }
    }
    out
}
