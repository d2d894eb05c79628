//! Summary rendering.

use std::fmt::Write;

use vbs_core::summarizer::Summary;

/// One line per entry: `[viewpoint] sentence  (source_title)`. The title
/// part is left out when the source has no title.
pub fn render_text(summary: &Summary) -> String {
    let mut out = String::new();
    for e in &summary.entries {
        write!(out, "[{}] {}", e.viewpoint, e.sentence.text).unwrap();
        if !e.source.source_title.is_empty() {
            write!(out, "  ({})", e.source.source_title).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Pretty JSON carrying every field, including scores, stages and the
/// configuration echo.
pub fn render_json(summary: &Summary) -> String {
    let mut s = serde_json::to_string_pretty(summary).expect("summary serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> serde_json::Result<Summary> {
    serde_json::from_str(text)
}
