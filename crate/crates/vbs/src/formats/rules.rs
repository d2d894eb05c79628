use std::path::Path;

use serde::{Deserialize, Serialize};
use vbs_core::segmenter::{SegmenterConfig, StopWords};

use super::read_text;
use crate::error::{Error, Result};

/// On-disk segmenter rule file. Stop words come either inline or from a
/// one-word-per-line file resolved relative to the rule file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmenterRules {
    pub name: String,
    pub sentence_delimiters: Vec<String>,
    #[serde(default)]
    pub clause_splitters: Vec<String>,
    #[serde(default)]
    pub verb_like: Vec<String>,
    #[serde(default)]
    pub remnants: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stopwords: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stopwords_path: Option<String>,
    #[serde(default = "enabled")]
    pub enabled: bool,
}

fn enabled() -> bool {
    true
}

/// Lines of a stop-word file; blank lines and `#` comments are skipped.
pub fn parse_stopwords(text: &str) -> StopWords {
    StopWords::new(
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#')),
    )
}

pub fn load_segmenter_rules(path: &Path) -> Result<SegmenterConfig> {
    let text = read_text(path)?;
    let rules: SegmenterRules =
        serde_json::from_str(&text).map_err(|e| Error::parse(path, e.line(), e))?;
    let stopwords = match (&rules.stopwords, &rules.stopwords_path) {
        (Some(_), Some(_)) => {
            return Err(Error::data(
                path,
                "give stopwords or stopwords_path, not both",
            ))
        }
        (Some(words), None) => StopWords::new(words),
        (None, Some(rel)) => {
            let base = path.parent().unwrap_or(Path::new("."));
            parse_stopwords(&read_text(&base.join(rel))?)
        }
        (None, None) => StopWords::default(),
    };
    let config = SegmenterConfig {
        name: rules.name,
        sentence_delimiters: rules.sentence_delimiters,
        clause_splitters: rules.clause_splitters,
        verb_like: rules.verb_like,
        remnants: rules.remnants,
        stopwords,
        enabled: rules.enabled,
    };
    config.validate().map_err(|source| Error::Invalid {
        path: path.into(),
        source,
    })?;
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stopword_file_syntax() {
        let s = parse_stopwords("# comment\nThe\n\n  of \n");
        assert_eq!(s.len(), 2);
        assert!(s.contains("the"));
        assert!(s.contains("of"));
    }

    #[test]
    fn inline_and_path_forms() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("stop.txt"), "the\na\n").unwrap();
        let rules = dir.path().join("rules.json");
        std::fs::write(
            &rules,
            r#"{"name": "t", "sentence_delimiters": ["."], "stopwords_path": "stop.txt"}"#,
        )
        .unwrap();
        let c = load_segmenter_rules(&rules).unwrap();
        assert_eq!(c.stopwords.len(), 2);
        assert!(c.enabled);
        assert!(c.clause_splitters.is_empty());

        std::fs::write(
            &rules,
            r#"{"name": "t", "sentence_delimiters": [], "stopwords": ["x"]}"#,
        )
        .unwrap();
        let err = load_segmenter_rules(&rules).unwrap_err();
        assert!(matches!(err, Error::Invalid { .. }), "{err}");
    }
}
