//! Identification step: paragraphs are cut into simple sentences (roughly
//! one clause each) and clauses that lost their subject get it back in
//! parentheses.
//!
//! Splitting is rule-based. Sentences end at configured delimiters;
//! compound sentences are cut at connective markers such as `", and"`.
//! The [`Segment`] trait lets a parser-backed implementation replace it.

mod rules;
mod tokenize;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corpus::{Paragraph, Term};
use crate::error::{Error, Result};

pub use rules::{
    english_stopwords, ENGLISH_DELIMITERS, ENGLISH_REMNANTS, ENGLISH_SPLITTERS, ENGLISH_STOPWORDS,
    ENGLISH_VERB_LIKE,
};
pub use tokenize::{tokenize, StopWords, Token, TokenKind};

/// Rule set driving [`RuleSegmenter`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmenterConfig {
    /// Rule list identifier, echoed in outputs.
    pub name: String,
    pub sentence_delimiters: Vec<String>,
    pub clause_splitters: Vec<String>,
    /// A clause whose first word is in this list has no subject of its own.
    pub verb_like: Vec<String>,
    /// Connectives that mark a clause as a continuation when they open it.
    pub remnants: Vec<String>,
    pub stopwords: StopWords,
    /// When false, only sentence delimiters split.
    pub enabled: bool,
}

impl SegmenterConfig {
    pub fn english() -> Self {
        let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        Self {
            name: "english-default".into(),
            sentence_delimiters: owned(ENGLISH_DELIMITERS),
            clause_splitters: owned(ENGLISH_SPLITTERS),
            verb_like: owned(ENGLISH_VERB_LIKE),
            remnants: owned(ENGLISH_REMNANTS),
            stopwords: english_stopwords(),
            enabled: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sentence_delimiters.is_empty() {
            return Err(Error::InvalidConfig("sentence_delimiters is empty".into()));
        }
        let lists = [
            ("sentence_delimiters", &self.sentence_delimiters),
            ("clause_splitters", &self.clause_splitters),
            ("verb_like", &self.verb_like),
            ("remnants", &self.remnants),
        ];
        for (name, list) in lists {
            if list.iter().any(|s| s.is_empty()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} contains an empty entry"
                )));
            }
        }
        Ok(())
    }
}

impl Default for SegmenterConfig {
    fn default() -> Self {
        Self::english()
    }
}

/// The unit of classification and selection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSentence {
    /// `"{paragraph_id}#{position}"`.
    pub id: String,
    pub text: String,
    pub tokens: Vec<Token>,
    pub paragraph_id: String,
    pub paragraph_rank: u32,
    /// Order within the paragraph, from 0.
    pub position: usize,
    pub subject_complemented: bool,
    /// Empty unless `subject_complemented`.
    pub complement_subject: String,
    /// Char span `[start, end)` of the extracted text in the paragraph,
    /// excluding any prepended subject or appended terminator.
    pub span: (usize, usize),
}

impl SimpleSentence {
    /// Deterministic tie-break key: rank, then position, then id.
    pub fn order_key(&self) -> (u32, usize, &str) {
        (self.paragraph_rank, self.position, self.id.as_str())
    }
}

/// A clause cut from one source sentence, before subject complementation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub text: String,
    /// Char span in the paragraph.
    pub span: (usize, usize),
    /// Whether a connective remnant was stripped from the clause start.
    pub continuation: bool,
}

impl Clause {
    pub fn new(text: impl Into<String>) -> Self {
        let text = text.into();
        let len = text.chars().count();
        Self {
            text,
            span: (0, len),
            continuation: false,
        }
    }
}

/// A clause together with the subject it was complemented with, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementedClause {
    pub clause: Clause,
    pub subject: Option<String>,
}

impl ComplementedClause {
    /// Clause text with the complemented subject in parentheses.
    pub fn rendered(&self) -> String {
        match &self.subject {
            Some(subject) => format!("({subject}) {}", self.clause.text),
            None => self.clause.text.clone(),
        }
    }
}

/// Anything that can turn a paragraph into simple sentences.
pub trait Segment {
    fn segment(&self, paragraph: &Paragraph, term: &Term) -> Vec<SimpleSentence>;
}

/// The delimiter/connective rule segmenter.
#[derive(Debug, Clone)]
pub struct RuleSegmenter {
    config: SegmenterConfig,
}

impl RuleSegmenter {
    pub fn new(config: SegmenterConfig) -> Result<Self> {
        config.validate()?;
        Ok(Self { config })
    }

    pub fn config(&self) -> &SegmenterConfig {
        &self.config
    }
}

impl Segment for RuleSegmenter {
    fn segment(&self, paragraph: &Paragraph, term: &Term) -> Vec<SimpleSentence> {
        segment(paragraph, &self.config, term)
    }
}

fn matches_at(chars: &[char], at: usize, needle: &[char]) -> bool {
    at + needle.len() <= chars.len()
        && chars[at..at + needle.len()]
            .iter()
            .zip(needle)
            .all(|(a, b)| a.to_lowercase().eq(b.to_lowercase()))
}

fn is_closer(c: char) -> bool {
    matches!(
        c,
        '"' | '\'' | ')' | ']' | '\u{2019}' | '\u{201D}' | '\u{300D}' | '\u{FF09}'
    )
}

fn trim_span(chars: &[char], mut start: usize, mut end: usize) -> (usize, usize) {
    while start < end && chars[start].is_whitespace() {
        start += 1;
    }
    while end > start && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    (start, end)
}

/// Sentence spans: (start, end, terminator length in chars).
fn sentence_spans(chars: &[char], delimiters: &[Vec<char>]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < chars.len() {
        let hit = delimiters
            .iter()
            .filter(|d| matches_at(chars, i, d))
            .max_by_key(|d| d.len());
        if let Some(delim) = hit {
            let mut end = i + delim.len();
            while end < chars.len() && is_closer(chars[end]) {
                end += 1;
            }
            let boundary = end == chars.len()
                || chars[end].is_whitespace()
                || !delim.iter().all(char::is_ascii);
            if boundary {
                out.push((start, end, end - i));
                start = end;
                i = end;
                continue;
            }
        }
        i += 1;
    }
    if start < chars.len() {
        out.push((start, chars.len(), 0));
    }
    out.into_iter()
        .filter_map(|(s, e, term_len)| {
            let (ts, te) = trim_span(chars, s, e);
            (ts < te).then(|| {
                let term_len = if te == e { term_len } else { 0 };
                (ts, te, term_len)
            })
        })
        .collect()
}

/// Splitter hits inside `[start, end)`, left to right, non-overlapping.
fn splitter_hits(
    chars: &[char],
    start: usize,
    end: usize,
    splitters: &[Vec<char>],
) -> Vec<(usize, usize)> {
    let mut hits = Vec::new();
    let mut i = start;
    while i < end {
        let hit = splitters
            .iter()
            .filter(|s| i + s.len() <= end && matches_at(chars, i, s))
            .filter(|s| {
                let first_ok = !s[0].is_alphanumeric() || i == 0 || !chars[i - 1].is_alphanumeric();
                let after = i + s.len();
                let last_ok = !s[s.len() - 1].is_alphanumeric()
                    || after >= chars.len()
                    || !chars[after].is_alphanumeric();
                first_ok && last_ok
            })
            .max_by_key(|s| s.len());
        match hit {
            Some(s) => {
                hits.push((i, i + s.len()));
                i += s.len();
            }
            None => i += 1,
        }
    }
    hits
}

fn has_word(text: &str) -> bool {
    tokenize(text, &StopWords::default())
        .iter()
        .any(|t| t.kind == TokenKind::Word)
}

/// Cuts one sentence span into clauses. Non-final clauses receive the
/// sentence terminator.
fn clauses_of(
    chars: &[char],
    sentence: (usize, usize, usize),
    config: &SegmenterConfig,
) -> Vec<Clause> {
    let (start, end, term_len) = sentence;
    let body_end = end - term_len;
    let terminator: String = chars[body_end..end].iter().collect();
    let splitters: Vec<Vec<char>> = config
        .clause_splitters
        .iter()
        .map(|s| s.chars().collect())
        .collect();
    let hits = if config.enabled {
        splitter_hits(chars, start, body_end, &splitters)
    } else {
        Vec::new()
    };
    if hits.is_empty() {
        let text: String = chars[start..end].iter().collect();
        if !has_word(&text) {
            return Vec::new();
        }
        return Vec::from([Clause {
            text,
            span: (start, end),
            continuation: false,
        }]);
    }
    let mut pieces = Vec::new();
    let mut cursor = start;
    for (hs, he) in &hits {
        pieces.push((cursor, *hs));
        cursor = *he;
    }
    pieces.push((cursor, end));

    let last = pieces.len() - 1;
    let mut clauses = Vec::new();
    for (idx, (ps, pe)) in pieces.into_iter().enumerate() {
        let (mut ps, pe) = trim_span(chars, ps, pe);
        let mut continuation = false;
        if config.enabled && idx > 0 {
            for remnant in &config.remnants {
                let r: Vec<char> = remnant.chars().collect();
                let after = ps + r.len();
                if matches_at(chars, ps, &r) && after < pe && chars[after].is_whitespace() {
                    ps = trim_span(chars, after, pe).0;
                    continuation = true;
                    break;
                }
            }
        }
        if ps >= pe {
            continue;
        }
        let mut text: String = chars[ps..pe].iter().collect();
        if idx != last && !terminator.is_empty() {
            text.push_str(&terminator);
        }
        if !has_word(&text) {
            continue;
        }
        clauses.push(Clause {
            text,
            span: (ps, pe),
            continuation,
        });
    }
    clauses
}

fn is_verb_like(word: &str, config: &SegmenterConfig) -> bool {
    config
        .verb_like
        .iter()
        .any(|v| v.to_lowercase() == word.to_lowercase())
}

/// Text before the first verb-like word, when the clause opens with a
/// non-verb word and contains a verb-like word.
fn detect_subject(clause: &Clause, config: &SegmenterConfig) -> Option<String> {
    let tokens = tokenize(&clause.text, &StopWords::default());
    let mut words = tokens.iter().filter(|t| t.kind == TokenKind::Word);
    let first = words.next()?;
    if is_verb_like(&first.surface, config) {
        return None;
    }
    let verb = tokens
        .iter()
        .find(|t| t.kind == TokenKind::Word && is_verb_like(&t.surface, config))?;
    let subject: String = clause.text.chars().take(verb.start).collect();
    let subject = subject
        .trim()
        .trim_matches(|c: char| c.is_whitespace() || (!c.is_alphanumeric() && c != ')' && c != '('))
        .to_string();
    (!subject.is_empty() && has_word(&subject)).then_some(subject)
}

/// Whether a clause lacks its own subject: it opens with a connective
/// remnant or with a verb-like word.
pub fn is_subjectless(clause: &Clause, config: &SegmenterConfig) -> bool {
    if clause.continuation {
        return true;
    }
    tokenize(&clause.text, &StopWords::default())
        .iter()
        .find(|t| t.kind == TokenKind::Word)
        .is_some_and(|t| is_verb_like(&t.surface, config))
}

/// Complements subjectless clauses after the first with the nearest
/// preceding detected subject, or the term surface when none was found.
pub fn complement_subject(
    clauses: &[Clause],
    term: &Term,
    config: &SegmenterConfig,
) -> Vec<ComplementedClause> {
    let mut last_subject: Option<String> = None;
    let mut out = Vec::with_capacity(clauses.len());
    for (i, clause) in clauses.iter().enumerate() {
        let subject = if i > 0 && is_subjectless(clause, config) {
            Some(
                last_subject
                    .clone()
                    .unwrap_or_else(|| term.surface().to_string()),
            )
        } else {
            None
        };
        if subject.is_none() {
            if let Some(found) = detect_subject(clause, config) {
                last_subject = Some(found);
            }
        }
        out.push(ComplementedClause {
            clause: clause.clone(),
            subject,
        });
    }
    out
}

/// Segments a paragraph into simple sentences.
pub fn segment(
    paragraph: &Paragraph,
    config: &SegmenterConfig,
    term: &Term,
) -> Vec<SimpleSentence> {
    let chars: Vec<char> = paragraph.text.chars().collect();
    let delimiters: Vec<Vec<char>> = config
        .sentence_delimiters
        .iter()
        .map(|d| d.chars().collect())
        .collect();
    let mut out = Vec::new();
    for sentence in sentence_spans(&chars, &delimiters) {
        let clauses = clauses_of(&chars, sentence, config);
        for c in complement_subject(&clauses, term, config) {
            let text = c.rendered();
            let tokens = tokenize(&text, &config.stopwords);
            let position = out.len();
            out.push(SimpleSentence {
                id: format!("{}#{}", paragraph.id, position),
                text,
                tokens,
                paragraph_id: paragraph.id.clone(),
                paragraph_rank: paragraph.rank,
                position,
                subject_complemented: c.subject.is_some(),
                complement_subject: c.subject.unwrap_or_default(),
                span: c.clause.span,
            });
        }
    }
    out
}

/// Segments every paragraph of a corpus, in rank order.
pub fn segment_all(
    paragraphs: &[Paragraph],
    segmenter: &dyn Segment,
    term: &Term,
) -> Vec<SimpleSentence> {
    paragraphs
        .iter()
        .flat_map(|p| segmenter.segment(p, term))
        .collect()
}

/// Case-folded non-stopword word tokens of a sentence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContentWords {
    pub counts: BTreeMap<String, usize>,
    pub set: BTreeSet<String>,
}

impl ContentWords {
    /// Total token count (multiset size).
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

pub fn content_words(sentence: &SimpleSentence) -> ContentWords {
    let mut words = ContentWords::default();
    for token in &sentence.tokens {
        if token.kind == TokenKind::Word && !token.is_stopword {
            let folded = token.folded();
            *words.counts.entry(folded.clone()).or_default() += 1;
            words.set.insert(folded);
        }
    }
    words
}
