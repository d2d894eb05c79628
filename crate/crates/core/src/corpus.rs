//! Ranked paragraph sets for a single term and the character-counting
//! convention shared by every length metric.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The headword being summarized, plus alternate surfaces that `{TERM}`
/// pattern atoms also accept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    surface: String,
    #[serde(default)]
    aliases: Vec<String>,
}

impl Term {
    pub fn new(surface: impl Into<String>, aliases: Vec<String>) -> Result<Self> {
        let surface: String = surface.into().trim().into();
        if surface.is_empty() {
            return Err(Error::EmptyTerm);
        }
        let mut seen = BTreeSet::new();
        seen.insert(surface.clone());
        for alias in &aliases {
            if !seen.insert(alias.clone()) {
                return Err(Error::DuplicateAlias(alias.clone()));
            }
        }
        Ok(Self { surface, aliases })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn aliases(&self) -> &[String] {
        &self.aliases
    }

    /// Surface first, then aliases in declaration order.
    pub fn forms(&self) -> impl Iterator<Item = &str> {
        core::iter::once(self.surface.as_str()).chain(self.aliases.iter().map(String::as_str))
    }
}

/// One ranked description of the term, extracted from a source page.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Paragraph {
    pub id: String,
    /// 1 is best.
    pub rank: u32,
    pub text: String,
    #[serde(default)]
    pub source_title: String,
    #[serde(default)]
    pub source_url: String,
}

/// A validated paragraph set, sorted by ascending rank with ranks `1..=K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCorpus {
    term: Term,
    paragraphs: Vec<Paragraph>,
}

impl TermCorpus {
    /// Sorts by rank and checks rank contiguity, id uniqueness and non-empty
    /// text.
    pub fn new(term: Term, mut paragraphs: Vec<Paragraph>) -> Result<Self> {
        paragraphs.sort_by_key(|p| p.rank);
        let mut ids = BTreeSet::new();
        for (i, p) in paragraphs.iter().enumerate() {
            if p.text.trim().is_empty() {
                return Err(Error::EmptyParagraph { id: p.id.clone() });
            }
            if !ids.insert(p.id.as_str()) {
                return Err(Error::DuplicateParagraphId(p.id.clone()));
            }
            let expected = i as u32 + 1;
            if p.rank != expected {
                if i > 0 && paragraphs[i - 1].rank == p.rank {
                    return Err(Error::DuplicateRank(p.rank));
                }
                return Err(Error::NonContiguousRank {
                    expected,
                    found: p.rank,
                });
            }
        }
        Ok(Self { term, paragraphs })
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn paragraphs(&self) -> &[Paragraph] {
        &self.paragraphs
    }

    pub fn is_empty(&self) -> bool {
        self.paragraphs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.paragraphs.len()
    }

    /// Restricts to ranks `1..=min(k, K)`. `k = 0` is treated as 1.
    pub fn take_top(&self, k: usize) -> TermCorpus {
        let k = k.max(1).min(self.paragraphs.len());
        TermCorpus {
            term: self.term.clone(),
            paragraphs: self.paragraphs[..k].to_vec(),
        }
    }

    pub fn paragraph(&self, id: &str) -> Option<&Paragraph> {
        self.paragraphs.iter().find(|p| p.id == id)
    }

    /// Total [`char_count`] over all paragraphs.
    pub fn char_count(&self) -> usize {
        self.paragraphs.iter().map(|p| char_count(&p.text)).sum()
    }
}

/// Number of Unicode scalar values in `text`, with each line's leading and
/// trailing whitespace stripped and line breaks not counted.
pub fn char_count(text: &str) -> usize {
    text.lines().map(|line| line.trim().chars().count()).sum()
}

/// Per-character "counted" flags for `text` under the [`char_count`]
/// convention, indexed by char offset.
fn counted_mask(text: &str) -> Vec<bool> {
    let mut mask = Vec::with_capacity(text.len());
    for line in text.split('\n') {
        let chars: Vec<char> = line.chars().collect();
        let first = chars.iter().position(|c| !c.is_whitespace());
        let last = chars.iter().rposition(|c| !c.is_whitespace());
        for i in 0..chars.len() {
            let inside = matches!((first, last), (Some(f), Some(l)) if f <= i && i <= l);
            mask.push(inside);
        }
        mask.push(false);
    }
    // the final split piece has no trailing newline
    mask.pop();
    mask
}

/// The rank-ordered concatenation of a corpus, in counted-character
/// coordinates. Paragraph char offsets map into a single stream where only
/// characters that [`char_count`] counts advance the position.
#[derive(Debug, Clone)]
pub struct CharStream {
    /// Counted characters, paragraph by paragraph; `'\n'` at line and
    /// paragraph breaks (not counted).
    text: String,
    total: usize,
    paragraph_starts: Vec<usize>,
    /// Per paragraph, the stream position before each raw char offset
    /// (length = char count + 1).
    offsets: Vec<Vec<usize>>,
    ids: Vec<String>,
}

impl CharStream {
    pub fn new(corpus: &TermCorpus) -> Self {
        let mut text = String::new();
        let mut total = 0;
        let mut paragraph_starts = Vec::new();
        let mut offsets = Vec::new();
        let mut ids = Vec::new();
        for p in corpus.paragraphs() {
            paragraph_starts.push(total);
            ids.push(p.id.clone());
            let mask = counted_mask(&p.text);
            let mut local = Vec::with_capacity(mask.len() + 1);
            let mut pending_break = !text.is_empty();
            for (c, counted) in p.text.chars().zip(mask.iter().copied()) {
                local.push(total);
                if counted {
                    if pending_break {
                        text.push('\n');
                        pending_break = false;
                    }
                    text.push(c);
                    total += 1;
                } else if c == '\n' && !text.is_empty() {
                    pending_break = true;
                }
            }
            local.push(total);
            offsets.push(local);
        }
        Self {
            text,
            total,
            paragraph_starts,
            offsets,
            ids,
        }
    }

    /// Counted characters in the whole stream.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Stream position of the first counted character of each paragraph.
    pub fn paragraph_starts(&self) -> &[usize] {
        &self.paragraph_starts
    }

    /// Maps a `[start, end)` char span of the paragraph `paragraph_id` to
    /// stream coordinates.
    pub fn map_span(&self, paragraph_id: &str, start: usize, end: usize) -> Option<(usize, usize)> {
        let idx = self.ids.iter().position(|id| id == paragraph_id)?;
        let local = &self.offsets[idx];
        if start > end || end >= local.len() {
            return None;
        }
        Some((local[start], local[end]))
    }

    /// The first `n` counted characters, with line breaks rendered as `'\n'`.
    pub fn prefix(&self, n: usize) -> String {
        let mut out = String::new();
        let mut taken = 0;
        for c in self.text.chars() {
            if taken == n {
                break;
            }
            if c != '\n' {
                taken += 1;
            }
            out.push(c);
        }
        out
    }
}
