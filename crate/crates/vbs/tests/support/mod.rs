//! Shared by the oracle, invariant and acceptance test targets.
#![allow(dead_code)]

pub mod invariants;
pub mod oracles;

use vbs::vbs_core::corpus::{Paragraph, Term, TermCorpus};

pub const VOCAB: [&str; 10] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "café", "naïve",
];

/// Phrases that trigger one default pattern each, plus neutral filler.
pub const FRAGMENTS: [&str; 9] = [
    "XML is a markup language",
    "in 1998",
    "such as",
    "is used to",
    "also called",
    "advantage of",
    "consists of",
    "",
    "",
];

pub fn paragraph(id: &str, rank: u32, text: &str) -> Paragraph {
    Paragraph {
        id: id.into(),
        rank,
        text: text.into(),
        source_title: format!("title {rank}"),
        source_url: String::new(),
    }
}

pub fn corpus(texts: &[String]) -> TermCorpus {
    let paragraphs = texts
        .iter()
        .enumerate()
        .map(|(i, t)| paragraph(&format!("p{i}"), i as u32 + 1, t))
        .collect();
    TermCorpus::new(Term::new("XML", vec![]).unwrap(), paragraphs).unwrap()
}
