//! Synthetic benchmark with planted viewpoint sentences.
//!
//! Each term gets a ranked set of paragraphs mixing three kinds of
//! sentence: planted viewpoint sentences built from templates that the
//! default English patterns recognise, sentences about sixteen further
//! viewpoints that no pattern recognises, and page furniture ("All rights
//! reserved.") labelled `non_description`. Planted sentences are scattered
//! over all ranks, so a fixed-length prefix sees only some of them.
//!
//! Annotator `A` labels every sentence with the label it was planted with.
//! Annotator `B` disagrees on a small random share.

use std::collections::BTreeSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use vbs_core::corpus::{Paragraph, Term, TermCorpus};
use vbs_core::evaluation::TermGold;
use vbs_core::evaluation::{Annotation, AnnotationSet, LabelScheme};
use vbs_core::patterns::{match_viewpoints, PatternSet, Viewpoint};
use vbs_core::segmenter::{segment, SegmenterConfig};

use crate::dataset::{segmentation_hash, slug};
use crate::error::{Error, Result};

pub const TERMS: [&str; 15] = [
    "10BASE-T",
    "ASCII",
    "SQL",
    "XML",
    "accumulator",
    "assembler",
    "binary number",
    "crossing cable",
    "data warehouse",
    "macro virus",
    "main memory unit",
    "parallel processing",
    "resolution",
    "search time",
    "thesaurus",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub terms: usize,
    pub paragraphs: usize,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            terms: TERMS.len(),
            paragraphs: 50,
            seed: 7,
        }
    }
}

fn templates(v: Viewpoint) -> &'static [&'static str] {
    use Viewpoint::*;
    match v {
        Definition => &[
            "{T} is a {ADJ} {GENUS} for {NOUN}.",
            "{T} is a kind of {GENUS} for handling {NOUN}.",
            "{T} refers to a {ADJ} {GENUS} that organizes {NOUN}.",
            "{T} is defined as a {ADJ} {GENUS}.",
            "{T} is the {ADJ} {GENUS} behind modern {NOUN}.",
        ],
        Abbreviation => &[
            "{T} is an abbreviation for {EXP}.",
            "{T} stands for {EXP}.",
            "The name {T} is short for {EXP}.",
            "{T} is an acronym for {EXP}.",
        ],
        Exemplification => &[
            "For example, {PNAME} relies on {T} for {NOUN}.",
            "Typical examples of {T} include {PNAME} and {PNAME2}.",
            "Well-known systems such as {PNAME} rely on {T}.",
            "{PNAME} is one example of {T} in practice.",
        ],
        Purpose => &[
            "{T} is used to {VERB} {NOUN}.",
            "The main purpose of {T} is to {VERB} {NOUN}.",
            "Engineers adopt {T} in order to {VERB} {NOUN}.",
            "{T} was designed to {VERB} {NOUN} efficiently.",
        ],
        Synonym => &[
            "{T} is also called {SYN}.",
            "Another name for {T} is {SYN}.",
            "{T} is sometimes termed {SYN}.",
            "Some authors treat {SYN} as a synonym for {T}.",
        ],
        Reference => &[
            "This book explains {T} in detail.",
            "A good introduction to {T} is the {ORG} handbook.",
            "See the {ORG} manual for details on {T}.",
            "{T} is described in the {ORG} reference manual.",
        ],
        Product => &[
            "{ORG} released a {T} product named {PNAME}.",
            "Several packages based on {T} are sold commercially.",
            "{T} is supported by {PNAME} and {PNAME2}.",
            "{ORG} sells a {T} package for small offices.",
        ],
        Advantage => &[
            "The main advantage of {T} is its {ADJ} design.",
            "{T} makes it easy to {VERB} {NOUN}.",
            "{T} is better than older approaches for {NOUN}.",
            "A key benefit of {T} is low overhead.",
        ],
        Drawback => &[
            "A drawback of {T} is its high cost.",
            "{T} is expensive to maintain for small teams.",
            "{T} does not scale well beyond {N} {NOUN}.",
            "One problem with {T} is poor error reporting.",
        ],
        History => &[
            "{T} was developed by {ORG} in {YEAR}.",
            "{T} first appeared in {YEAR}.",
            "{T} has been in use since {YEAR}.",
            "{ORG} introduced {T} in {YEAR}.",
        ],
        Component => &[
            "{T} consists of a {PART} and a {PART2}.",
            "{T} contains several modules for {NOUN}.",
            "The main parts of {T} are the {PART} and the {PART2}.",
            "Each {T} is made up of a {PART} and a {PART2}.",
        ],
        Function => &[
            "{T} allows users to {VERB} {NOUN}.",
            "The primary role of {T} is to {VERB} {NOUN}.",
            "{T} stores {NOUN} in a compact form.",
            "{T} is able to {VERB} {NOUN} automatically.",
        ],
        Miscellaneous => &[],
    }
}

const AUX: [[&str; 2]; 16] = [
    [
        "Its license fee is about {N} dollars per seat.",
        "Annual maintenance fees run roughly {N} dollars.",
    ],
    [
        "Its specification is maintained by a working group.",
        "Committee drafts are circulated twice a year.",
    ],
    [
        "Its popularity grew rapidly among hobbyists.",
        "Surveys rank it among the top choices of practitioners.",
    ],
    [
        "Beginners can learn the basics within a week.",
        "Training courses usually last three days.",
    ],
    [
        "Security patches appear every month.",
        "Attackers sometimes exploit weak configurations.",
    ],
    [
        "The logo shows a blue triangle.",
        "Its mascot is a small owl.",
    ],
    [
        "Benchmarks show throughput near {N} megabytes per second.",
        "Latency stays below {N} milliseconds under load.",
    ],
    [
        "The reference implementation carries an open license.",
        "Source code is freely available for download.",
    ],
    [
        "It runs on modest hardware with {N} megabytes of memory.",
        "A dedicated power supply is recommended.",
    ],
    [
        "Future revisions will add streaming features.",
        "Draft proposals discuss improved tooling.",
    ],
    [
        "Mailing lists host lively discussions.",
        "User groups meet monthly in several cities.",
    ],
    [
        "Adoption is strongest in Europe and Japan.",
        "Government agencies mandate it for procurement.",
    ],
    [
        "A close relative is the older ARPA design.",
        "Its sibling technology focuses on telemetry.",
    ],
    [
        "The name is pronounced letter by letter.",
        "Some speakers pronounce it as a single word.",
    ],
    [
        "Conformance test suites verify each implementation.",
        "Certification requires passing {N} test cases.",
    ],
    [
        "Market analysts expect steady growth.",
        "Shipments reached {N} thousand units last year.",
    ],
];

const FILLERS: [&str; 11] = [
    "Click here to return to the top page.",
    "All rights reserved.",
    "Please send comments to the webmaster.",
    "Last updated on May {D}.",
    "Related links are listed below.",
    "Back to the contents.",
    "Copyright {YEAR} Northwind Press.",
    "Bookmark this site for future visits.",
    "Contact the editor for corrections.",
    "Thank you for visiting.",
    "Page {D} of {N}.",
];

const ADJ: [&str; 10] = [
    "compact",
    "portable",
    "reliable",
    "flexible",
    "structured",
    "simple",
    "robust",
    "general",
    "modular",
    "lightweight",
];
const GENUS: [&str; 10] = [
    "language",
    "format",
    "standard",
    "method",
    "system",
    "technique",
    "tool",
    "device",
    "scheme",
    "notation",
];
const NOUN: [&str; 10] = [
    "data",
    "records",
    "signals",
    "documents",
    "queries",
    "messages",
    "tables",
    "images",
    "packets",
    "transactions",
];
const VERB: [&str; 10] = [
    "store", "exchange", "describe", "transmit", "organize", "compress", "catalog", "validate",
    "encode", "share",
];
const ORG: [&str; 10] = [
    "IBM", "ISO", "ANSI", "IEEE", "Xerox", "Sun", "Intel", "NEC", "Fujitsu", "DEC",
];
const PNAME: [&str; 10] = [
    "Orion", "Vega", "Lynx", "Atlas", "Nimbus", "Quasar", "Kestrel", "Juniper", "Marlin", "Zephyr",
];
const PART: [&str; 8] = [
    "parser",
    "controller",
    "buffer",
    "header",
    "payload",
    "scheduler",
    "register file",
    "decoder",
];
const EXP_1: [&str; 7] = [
    "Extended",
    "Structured",
    "Binary",
    "Universal",
    "Distributed",
    "General",
    "Open",
];
const EXP_2: [&str; 8] = [
    "Query", "Record", "Data", "Signal", "Document", "Access", "Transfer", "Markup",
];
const EXP_3: [&str; 8] = [
    "Language",
    "Format",
    "Protocol",
    "Interface",
    "Unit",
    "Notation",
    "System",
    "Code",
];
const SYN_1: [&str; 5] = ["meta", "hyper", "micro", "proto", "poly"];
const SYN_2: [&str; 3] = ["code", "notation", "standard"];

/// Per-term fixed slot values.
struct TermSlots {
    surface: String,
    expansion: String,
    synonym: String,
}

fn pick<'a>(rng: &mut ChaCha8Rng, xs: &[&'a str]) -> &'a str {
    xs.choose(rng).expect("non-empty list")
}

/// Replaces `{NAME}` placeholders; each occurrence draws afresh, and the
/// `2` variants never repeat the first draw.
fn fill(template: &str, slots: &TermSlots, rng: &mut ChaCha8Rng) -> String {
    let mut out = String::new();
    let mut rest = template;
    let mut firsts: Vec<(&str, String)> = Vec::new();
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = open + rest[open..].find('}').expect("closed placeholder");
        let name = &rest[open + 1..close];
        let base = name.trim_end_matches('2');
        let list: Option<&[&str]> = match base {
            "ADJ" => Some(&ADJ),
            "GENUS" => Some(&GENUS),
            "NOUN" => Some(&NOUN),
            "VERB" => Some(&VERB),
            "ORG" => Some(&ORG),
            "PNAME" => Some(&PNAME),
            "PART" => Some(&PART),
            _ => None,
        };
        let value = match (base, list) {
            (_, Some(list)) => loop {
                let v = pick(rng, list).to_string();
                if name == base || firsts.iter().all(|(n, f)| *n != base || *f != v) {
                    break v;
                }
            },
            ("T", None) => slots.surface.clone(),
            ("EXP", None) => slots.expansion.clone(),
            ("SYN", None) => slots.synonym.clone(),
            ("YEAR", None) => rng.random_range(1960..=2003).to_string(),
            ("N", None) => rng.random_range(10..=999).to_string(),
            ("D", None) => rng.random_range(1..=28).to_string(),
            _ => panic!("unknown placeholder {name}"),
        };
        if name == base {
            firsts.push((base, value.clone()));
        }
        out.push_str(&value);
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    let mut chars = out.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => out,
    }
}

#[derive(Debug, Clone)]
struct Planted {
    text: String,
    label: String,
    viewpoint: Option<Viewpoint>,
}

fn term_surface(i: usize) -> String {
    let base = TERMS[i % TERMS.len()];
    match i / TERMS.len() {
        0 => base.to_string(),
        k => format!("{base} {}", k + 1),
    }
}

/// Builds one term's corpus and the two annotators' gold.
pub fn generate_term(index: usize, paragraphs: usize, seed: u64) -> Result<TermGold> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index as u64);
    let surface = term_surface(index);
    let slots = TermSlots {
        expansion: format!(
            "{} {} {}",
            pick(&mut rng, &EXP_1),
            pick(&mut rng, &EXP_2),
            pick(&mut rng, &EXP_3)
        ),
        synonym: format!("{} {}", pick(&mut rng, &SYN_1), pick(&mut rng, &SYN_2)),
        surface: surface.clone(),
    };
    let n = paragraphs.max(1);
    let mut slots_by_par: Vec<Vec<Planted>> = vec![Vec::new(); n];
    let mut leads: Vec<Option<Planted>> = vec![None; n];
    let planted = |v: Viewpoint, rng: &mut ChaCha8Rng| Planted {
        text: fill(pick(rng, templates(v)), &slots, rng),
        label: v.as_str().into(),
        viewpoint: Some(v),
    };

    for lead in leads.iter_mut() {
        if rng.random_bool(0.5) {
            *lead = Some(planted(Viewpoint::Definition, &mut rng));
        }
    }
    if leads.iter().all(Option::is_none) {
        leads[rng.random_range(0..n)] = Some(planted(Viewpoint::Definition, &mut rng));
    }
    for &v in &Viewpoint::TARGETED[1..] {
        if !rng.random_bool(0.75) {
            continue;
        }
        for _ in 0..rng.random_range(2..=4) {
            let p = planted(v, &mut rng);
            slots_by_par[rng.random_range(0..n)].push(p);
        }
    }
    let mut aux: Vec<usize> = (0..AUX.len()).collect();
    aux.shuffle(&mut rng);
    aux.truncate(rng.random_range(8..=12));
    aux.sort_unstable();
    for a in aux {
        for _ in 0..rng.random_range(1..=3) {
            let p = Planted {
                text: fill(pick(&mut rng, &AUX[a]), &slots, &mut rng),
                label: format!("aux_{:02}", a + 1),
                viewpoint: None,
            };
            slots_by_par[rng.random_range(0..n)].push(p);
        }
    }

    let mut paragraphs_out = Vec::with_capacity(n);
    let mut sentences: Vec<Vec<Planted>> = Vec::with_capacity(n);
    let term_slug = slug(&surface);
    for (i, (lead, mut body)) in leads.into_iter().zip(slots_by_par).enumerate() {
        let target = rng.random_range(6..=7);
        let have = body.len() + usize::from(lead.is_some());
        for _ in have..target {
            body.push(Planted {
                text: fill(pick(&mut rng, &FILLERS), &slots, &mut rng),
                label: "non_description".into(),
                viewpoint: None,
            });
        }
        body.shuffle(&mut rng);
        let all: Vec<Planted> = lead.into_iter().chain(body).collect();
        let rank = i as u32 + 1;
        paragraphs_out.push(Paragraph {
            id: format!("{term_slug}-{rank:02}"),
            rank,
            text: all
                .iter()
                .map(|p| p.text.as_str())
                .collect::<Vec<_>>()
                .join(" "),
            source_title: format!("{surface} page {rank}"),
            source_url: format!("https://example.org/{term_slug}/{rank}"),
        });
        sentences.push(all);
    }
    let term = Term::new(surface.clone(), vec![])?;
    let corpus = TermCorpus::new(term, paragraphs_out)?;

    let segmenter = SegmenterConfig::english();
    let patterns = PatternSet::default_english();
    let scheme = LabelScheme::default();
    let mut exact = Vec::new();
    let mut noisy = Vec::new();
    let mut noise = ChaCha8Rng::seed_from_u64(rng.random());
    let mut all_sentences = Vec::new();
    for (p, planted) in corpus.paragraphs().iter().zip(&sentences) {
        let segmented = segment(p, &segmenter, corpus.term());
        if segmented.len() != planted.len() {
            return Err(Error::Synth(format!(
                "{}: {} planted sentences segmented into {}",
                p.id,
                planted.len(),
                segmented.len()
            )));
        }
        for (s, want) in segmented.iter().zip(planted) {
            if s.text != want.text {
                return Err(Error::Synth(format!(
                    "{}: {:?} segmented as {:?}",
                    s.id, want.text, s.text
                )));
            }
            let got = match_viewpoints(s, &patterns, corpus.term());
            let expected: BTreeSet<Viewpoint> = want.viewpoint.into_iter().collect();
            if got != expected {
                return Err(Error::Synth(format!(
                    "{:?} matches {got:?}, planted as {expected:?}",
                    s.text
                )));
            }
            let labels: BTreeSet<String> = [want.label.clone()].into();
            exact.push(Annotation::new(s.id.clone(), labels, &scheme)?);
            noisy.push(Annotation::new(
                s.id.clone(),
                disagree(&want.label, &mut noise),
                &scheme,
            )?);
        }
        all_sentences.extend(segmented);
    }
    let hash = segmentation_hash(&all_sentences);
    let gold = vec![
        AnnotationSet::new("A", surface.clone(), Some(hash.clone()), exact)?,
        AnnotationSet::new("B", surface, Some(hash), noisy)?,
    ];
    Ok(TermGold { corpus, gold })
}

/// Annotator B: occasionally adds or swaps a label.
fn disagree(label: &str, rng: &mut ChaCha8Rng) -> BTreeSet<String> {
    let random_aux = |rng: &mut ChaCha8Rng| format!("aux_{:02}", rng.random_range(1..=16));
    let mut out = BTreeSet::from([label.to_string()]);
    if label == "non_description" {
        if rng.random_bool(0.3) {
            out = BTreeSet::from(["misc_category".to_string()]);
        }
    } else if label.starts_with("aux_") {
        if rng.random_bool(0.2) {
            out = BTreeSet::from([random_aux(rng)]);
        }
    } else {
        let roll: f64 = rng.random();
        if roll < 0.05 {
            let other = Viewpoint::TARGETED.choose(rng).expect("non-empty");
            out = BTreeSet::from([other.as_str().to_string()]);
        } else if roll < 0.15 {
            out.insert(random_aux(rng));
        }
    }
    out
}

pub fn generate(config: &SynthConfig) -> Result<Vec<TermGold>> {
    if config.terms == 0 || config.paragraphs == 0 {
        return Err(Error::Usage(
            "terms and paragraphs must be at least 1".into(),
        ));
    }
    (0..config.terms)
        .map(|i| generate_term(i, config.paragraphs, config.seed))
        .collect()
}
