use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    pub is_stopword: bool,
    /// Char offsets `[start, end)` into the tokenized text.
    pub start: usize,
    pub end: usize,
}

impl Token {
    /// Case-folded surface.
    pub fn folded(&self) -> String {
        self.surface.to_lowercase()
    }
}

/// Case-folded stopword list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StopWords(BTreeSet<String>);

impl StopWords {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self(
            words
                .into_iter()
                .map(|w| w.as_ref().trim().to_lowercase())
                .filter(|w| !w.is_empty())
                .collect(),
        )
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

const PUNCTUATION: &[char] = &[
    '.', ',', ';', ':', '!', '?', '"', '\'', '(', ')', '[', ']', '{', '}', '-', '\u{2010}',
    '\u{2013}', '\u{2014}', '\u{2018}', '\u{2019}', '\u{201C}', '\u{201D}', '\u{2026}', '\u{3001}',
    '\u{3002}', '\u{300C}', '\u{300D}', '\u{FF08}', '\u{FF09}', '\u{FF0C}', '\u{FF0E}',
];

fn is_punctuation(c: char) -> bool {
    PUNCTUATION.contains(&c)
}

/// Characters that may join two alphanumeric runs into one token
/// (`10BASE-T`, `don't`, `snake_case`, `3.14`).
fn is_joiner(c: char) -> bool {
    matches!(c, '-' | '\'' | '\u{2019}' | '_' | '.' | ',')
}

/// Splits `text` into word, number, punctuation and symbol tokens.
///
/// A word or number is a maximal alphanumeric run, possibly joined by a
/// single inner `-`, `'`, `_` (any run) or `.`/`,` (digits on both sides
/// only). Every other non-whitespace character becomes a one-character
/// punctuation or symbol token.
pub fn tokenize(text: &str, stopwords: &StopWords) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_alphanumeric() {
            let start = i;
            i += 1;
            loop {
                if i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                } else if i + 1 < chars.len()
                    && is_joiner(chars[i])
                    && chars[i + 1].is_alphanumeric()
                    && joins(chars[i - 1], chars[i], chars[i + 1])
                {
                    i += 2;
                } else {
                    break;
                }
            }
            let surface: String = chars[start..i].iter().collect();
            let kind = if surface.chars().any(char::is_alphabetic) {
                TokenKind::Word
            } else {
                TokenKind::Number
            };
            let is_stopword = kind == TokenKind::Word && stopwords.contains(&surface);
            tokens.push(Token {
                surface,
                kind,
                is_stopword,
                start,
                end: i,
            });
            continue;
        }
        let kind = if is_punctuation(c) {
            TokenKind::Punctuation
        } else {
            TokenKind::Symbol
        };
        tokens.push(Token {
            surface: c.into(),
            kind,
            is_stopword: false,
            start: i,
            end: i + 1,
        });
        i += 1;
    }
    tokens
}

fn joins(prev: char, joiner: char, next: char) -> bool {
    match joiner {
        '.' | ',' => prev.is_ascii_digit() && next.is_ascii_digit(),
        _ => true,
    }
}
