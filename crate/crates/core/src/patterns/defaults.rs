use alloc::vec::Vec;

use super::{PatternSpec, Viewpoint};
use Viewpoint::*;

/// The shipped English inventory: `(id, viewpoint, expression)`.
///
/// Genus-noun definitions allow at most three modifiers between the
/// article and the head noun so that "X is an abbreviation for A B
/// Language" does not read as a definition.
pub const DEFAULT_ENGLISH_PATTERNS: &[(&str, Viewpoint, &str)] = &[
    (
        "def-genus",
        Definition,
        "^ {TERM} (is|are) (a|an|the) (|{ANY}|{ANY} {ANY}|{ANY} {ANY} {ANY}) (language|format|standard|protocol|specification|device|program|software|technique|method|system|unit|number|cable|virus|database|tool|process|memory|code|network|machine|computer|register|representation|notation|scheme|approach|repository|collection|value|component|circuit|interface|character|set)",
    ),
    ("def-kind-of", Definition, "^ {TERM} (is|are) (a|an|the) (kind|type|form|sort|variety|class) of"),
    ("def-refers", Definition, "^ {TERM} (refers|refer) to"),
    ("def-defined", Definition, "^ {TERM} (is|are) defined as"),
    ("def-means", Definition, "^ {TERM} (means|denotes)"),
    ("abbr-for", Abbreviation, "(an|the) abbreviation (for|of)"),
    ("abbr-stands", Abbreviation, "{TERM} stands for"),
    ("abbr-short", Abbreviation, "(short|shorthand) for"),
    ("abbr-acronym", Abbreviation, "(acronym|initialism) (for|of)"),
    ("abbr-abbreviated", Abbreviation, "(is|are) abbreviated (as|to)"),
    ("ex-for-example", Exemplification, "for (example|instance)"),
    ("ex-such-as", Exemplification, "such as"),
    ("ex-examples", Exemplification, "(example|examples) (of|include|includes)"),
    ("ex-typical", Exemplification, "(typical|representative|common) (example|examples|instance|instances)"),
    ("pur-used", Purpose, "(is|are) (used|employed|intended) (to|for)"),
    ("pur-in-order", Purpose, "in order to"),
    ("pur-purpose", Purpose, "(purpose|aim|goal|objective) of"),
    ("pur-designed", Purpose, "(designed|developed|created) (to|so that)"),
    ("syn-also-called", Synonym, "also (called|known as|referred to as|termed)"),
    ("syn-called", Synonym, "(is|are) (sometimes|often|) (called|termed)"),
    ("syn-synonym", Synonym, "(synonym|synonymous) (for|of|with)"),
    ("syn-another-name", Synonym, "(another|alternative|other) (name|term) for"),
    ("ref-this-work", Reference, "^ this (book|article|site|page|document|paper|text|magazine|course|manual) (is|explains|describes|introduces|covers|presents)"),
    ("ref-introduction", Reference, "(introduction|guide|tutorial|textbook|handbook|primer) (to|for|on)"),
    ("ref-see", Reference, "^ (see|read|consult) {ANY*} (book|article|page|site|document|manual|chapter)"),
    ("ref-described-in", Reference, "(described|explained|documented) in (the|this|a) {ANY*} (book|article|page|site|document|manual|chapter)"),
    ("prod-released", Product, "(released|sells|shipped|marketed|sold|ships) {ANY*} (product|products|version|edition|package)"),
    ("prod-supporting", Product, "(products|tools|packages|applications|software) (supporting|that support|based on) {TERM}"),
    ("prod-adopted", Product, "{TERM} (is|are) (supported|implemented|adopted|bundled) (by|in)"),
    ("prod-named", Product, "(product|products) (named|called)"),
    ("adv-advantage", Advantage, "(advantage|advantages|merit|merits|benefit|benefits|strength) of"),
    ("adv-advantageous", Advantage, "(is|are) (advantageous|beneficial) (to|for)"),
    ("adv-makes-easy", Advantage, "makes it (easy|easier|possible|simple) to"),
    ("adv-superior", Advantage, "(superior|better) (to|than)"),
    ("drw-disadvantage", Drawback, "(disadvantage|disadvantages|drawback|drawbacks|demerit|weakness|weaknesses) of"),
    ("drw-problem", Drawback, "(problem|problems|limitation|limitations) (of|with) {TERM}"),
    ("drw-slow", Drawback, "(is|are) (slow|expensive|costly|vulnerable|inefficient|fragile)"),
    ("drw-not-support", Drawback, "(does|do) not (support|scale|work)"),
    ("his-in-year", History, "in {NUM}"),
    ("his-developed-by", History, "(was|were) (developed|invented|introduced|proposed|standardized|created|released|established|published) (by|in)"),
    ("his-first", History, "(first|originally|initially) (appeared|introduced|developed|proposed|released|used)"),
    ("his-since", History, "(since|until) {NUM}"),
    ("cmp-consists", Component, "(consists of|consist of|composed of|comprised of|made up of)"),
    ("cmp-contains-parts", Component, "(contains|includes|comprises|has) {ANY*} (parts|components|elements|modules|fields|sections)"),
    ("cmp-part-of", Component, "(component|components|part|parts|element|elements) of {TERM}"),
    ("fn-enables", Function, "{TERM} (enables|allows|lets|permits) {ANY*} to"),
    ("fn-function-of", Function, "(function|functions|role) of {TERM}"),
    ("fn-verb", Function, "^ {TERM} (stores|performs|executes|converts|transmits|translates|detects|infects|retrieves|computes)"),
    ("fn-capable", Function, "(is|are) (capable of|able to)"),
];

pub(crate) fn default_specs() -> Vec<PatternSpec> {
    DEFAULT_ENGLISH_PATTERNS
        .iter()
        .map(|(id, viewpoint, expr)| PatternSpec {
            id: (*id).into(),
            viewpoint: *viewpoint,
            expr: (*expr).into(),
        })
        .collect()
}
