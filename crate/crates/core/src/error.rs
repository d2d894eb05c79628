use alloc::string::String;

/// Errors produced by the summarization core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("term surface is empty")]
    EmptyTerm,
    #[error("duplicate alias {0:?}")]
    DuplicateAlias(String),
    #[error("paragraph {id:?} has empty text")]
    EmptyParagraph { id: String },
    #[error("duplicate paragraph id {0:?}")]
    DuplicateParagraphId(String),
    #[error("duplicate rank {0}")]
    DuplicateRank(u32),
    #[error("ranks are not contiguous: expected rank {expected}, found {found}")]
    NonContiguousRank { expected: u32, found: u32 },
    #[error("corpus has no paragraphs")]
    EmptyCorpus,

    #[error("pattern {id:?}: syntax error at offset {offset}: {reason}")]
    PatternSyntax {
        id: String,
        offset: usize,
        reason: String,
    },
    #[error("unknown viewpoint {0:?}")]
    UnknownViewpoint(String),
    #[error("pattern {0:?} targets the miscellaneous group")]
    MiscellaneousPattern(String),
    #[error("duplicate pattern id {0:?}")]
    DuplicatePatternId(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("annotation for {0:?} has no labels")]
    EmptyAnnotation(String),
    #[error("annotation for {0:?} mixes viewpoint and non-viewpoint labels")]
    MixedAnnotation(String),
    #[error("sentence {0:?} has no gold annotation")]
    UnknownSentence(String),
    #[error("source has no in-scope viewpoints")]
    EmptyCoverageDenominator,
    #[error("source character count is zero")]
    ZeroSource,
    #[error("span bookkeeping mismatch: {0}")]
    SpanMismatch(String),
    #[error("no gold annotations for term {0:?}")]
    MissingGold(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
