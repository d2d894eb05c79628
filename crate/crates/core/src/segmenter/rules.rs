//! Default English rule lists.

use super::tokenize::StopWords;

pub const ENGLISH_DELIMITERS: &[&str] = &[".", "!", "?"];

pub const ENGLISH_SPLITTERS: &[&str] = &[", and", ", but", "; ", ", which"];

/// Words that may not start a clause with its own subject.
pub const ENGLISH_VERB_LIKE: &[&str] = &[
    "is",
    "are",
    "was",
    "were",
    "be",
    "been",
    "being",
    "am",
    "has",
    "have",
    "had",
    "does",
    "do",
    "did",
    "can",
    "could",
    "will",
    "would",
    "shall",
    "should",
    "may",
    "might",
    "must",
    "cannot",
    "allows",
    "became",
    "becomes",
    "consists",
    "contains",
    "converts",
    "defines",
    "denotes",
    "describes",
    "detects",
    "enables",
    "executes",
    "gives",
    "holds",
    "includes",
    "infects",
    "lets",
    "makes",
    "means",
    "needs",
    "offers",
    "performs",
    "permits",
    "provides",
    "refers",
    "represents",
    "requires",
    "runs",
    "searches",
    "sends",
    "serves",
    "stands",
    "stores",
    "supports",
    "transmits",
    "uses",
    "works",
    "also",
    "often",
    "usually",
    "then",
];

/// Connectives left at the start of a clause when a split marker was not
/// consumed in full.
pub const ENGLISH_REMNANTS: &[&str] = &["and", "but", "which", "or", "while", "whereas"];

pub const ENGLISH_STOPWORDS: &[&str] = &[
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "also",
    "am",
    "an",
    "and",
    "any",
    "are",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "could",
    "did",
    "do",
    "does",
    "doing",
    "down",
    "during",
    "each",
    "few",
    "for",
    "from",
    "further",
    "had",
    "has",
    "have",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "i",
    "if",
    "in",
    "into",
    "is",
    "it",
    "its",
    "itself",
    "just",
    "may",
    "me",
    "might",
    "more",
    "most",
    "must",
    "my",
    "myself",
    "no",
    "nor",
    "not",
    "now",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "same",
    "shall",
    "she",
    "should",
    "so",
    "some",
    "such",
    "than",
    "that",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "this",
    "those",
    "through",
    "to",
    "too",
    "under",
    "until",
    "up",
    "very",
    "was",
    "we",
    "were",
    "what",
    "when",
    "where",
    "which",
    "while",
    "who",
    "whom",
    "why",
    "will",
    "with",
    "would",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
];

pub fn english_stopwords() -> StopWords {
    StopWords::new(ENGLISH_STOPWORDS.iter())
}
