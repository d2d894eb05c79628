//! Viewpoints and the pattern inventory that recognizes them.

mod defaults;
mod dsl;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::Term;
use crate::error::{Error, Result};
use crate::segmenter::{SimpleSentence, Token};

pub use defaults::DEFAULT_ENGLISH_PATTERNS;
pub use dsl::{SyntaxError, TermForms};

/// The aspects a term description can take. Declaration order is the
/// canonical order used for tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Viewpoint {
    Definition,
    Abbreviation,
    Exemplification,
    Purpose,
    Synonym,
    Reference,
    Product,
    Advantage,
    Drawback,
    History,
    Component,
    Function,
    Miscellaneous,
}

impl Viewpoint {
    /// The twelve pattern-targeted viewpoints, in canonical order.
    pub const TARGETED: [Viewpoint; 12] = [
        Viewpoint::Definition,
        Viewpoint::Abbreviation,
        Viewpoint::Exemplification,
        Viewpoint::Purpose,
        Viewpoint::Synonym,
        Viewpoint::Reference,
        Viewpoint::Product,
        Viewpoint::Advantage,
        Viewpoint::Drawback,
        Viewpoint::History,
        Viewpoint::Component,
        Viewpoint::Function,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Viewpoint::Definition => "definition",
            Viewpoint::Abbreviation => "abbreviation",
            Viewpoint::Exemplification => "exemplification",
            Viewpoint::Purpose => "purpose",
            Viewpoint::Synonym => "synonym",
            Viewpoint::Reference => "reference",
            Viewpoint::Product => "product",
            Viewpoint::Advantage => "advantage",
            Viewpoint::Drawback => "drawback",
            Viewpoint::History => "history",
            Viewpoint::Component => "component",
            Viewpoint::Function => "function",
            Viewpoint::Miscellaneous => "miscellaneous",
        }
    }

    pub fn is_targeted(self) -> bool {
        self != Viewpoint::Miscellaneous
    }
}

impl fmt::Display for Viewpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Viewpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Viewpoint::TARGETED
            .iter()
            .chain(core::iter::once(&Viewpoint::Miscellaneous))
            .copied()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::UnknownViewpoint(s.into()))
    }
}

/// One pattern as written in a pattern file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub id: String,
    pub viewpoint: Viewpoint,
    pub expr: String,
}

#[derive(Debug, Clone)]
pub struct CompiledPattern {
    spec: PatternSpec,
    nodes: Vec<dsl::Node>,
}

impl CompiledPattern {
    pub fn spec(&self) -> &PatternSpec {
        &self.spec
    }

    pub fn viewpoint(&self) -> Viewpoint {
        self.spec.viewpoint
    }

    /// Whether the pattern occurs anywhere in the token sequence.
    pub fn is_match(&self, tokens: &[Token], term: &TermForms) -> bool {
        dsl::search(&self.nodes, &dsl::Stream::new(tokens), term)
    }
}

pub fn compile_pattern(spec: PatternSpec) -> Result<CompiledPattern> {
    if !spec.viewpoint.is_targeted() {
        return Err(Error::MiscellaneousPattern(spec.id));
    }
    match dsl::parse(&spec.expr) {
        Ok(nodes) => Ok(CompiledPattern { spec, nodes }),
        Err(e) => Err(Error::PatternSyntax {
            id: spec.id,
            offset: e.offset,
            reason: e.reason,
        }),
    }
}

/// A compiled, id-unique pattern inventory.
#[derive(Debug, Clone)]
pub struct PatternSet {
    version: String,
    patterns: Vec<CompiledPattern>,
}

impl PatternSet {
    pub fn new(version: impl Into<String>, specs: Vec<PatternSpec>) -> Result<Self> {
        let mut ids = BTreeSet::new();
        let mut patterns = Vec::with_capacity(specs.len());
        for spec in specs {
            if !ids.insert(spec.id.clone()) {
                return Err(Error::DuplicatePatternId(spec.id));
            }
            patterns.push(compile_pattern(spec)?);
        }
        Ok(Self {
            version: version.into(),
            patterns,
        })
    }

    /// The shipped English inventory.
    pub fn default_english() -> Self {
        Self::new("english-default-1", defaults::default_specs()).expect("default patterns compile")
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn patterns(&self) -> &[CompiledPattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Pattern count per viewpoint; viewpoints without patterns map to 0.
    pub fn counts_by_viewpoint(&self) -> BTreeMap<Viewpoint, usize> {
        let mut counts: BTreeMap<Viewpoint, usize> =
            Viewpoint::TARGETED.iter().map(|v| (*v, 0)).collect();
        for p in &self.patterns {
            *counts.entry(p.viewpoint()).or_default() += 1;
        }
        counts
    }

    /// Every viewpoint with at least one matching pattern.
    pub fn match_tokens(&self, tokens: &[Token], term: &TermForms) -> BTreeSet<Viewpoint> {
        let stream = dsl::Stream::new(tokens);
        let mut out = BTreeSet::new();
        for p in &self.patterns {
            if !out.contains(&p.viewpoint()) && dsl::search(&p.nodes, &stream, term) {
                out.insert(p.viewpoint());
            }
        }
        out
    }

    /// Ids of every pattern that matches, in set order.
    pub fn matching_ids(&self, tokens: &[Token], term: &TermForms) -> Vec<&str> {
        let stream = dsl::Stream::new(tokens);
        self.patterns
            .iter()
            .filter(|p| dsl::search(&p.nodes, &stream, term))
            .map(|p| p.spec.id.as_str())
            .collect()
    }
}

pub fn match_viewpoints(
    sentence: &SimpleSentence,
    set: &PatternSet,
    term: &Term,
) -> BTreeSet<Viewpoint> {
    set.match_tokens(&sentence.tokens, &TermForms::new(term))
}
