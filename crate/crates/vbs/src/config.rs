//! Run settings merged from flags, a TOML config file and defaults, in that
//! order of precedence.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use vbs_core::patterns::PatternSet;
use vbs_core::segmenter::SegmenterConfig;
use vbs_core::selector::{ScoreWeights, SelectionConfig};
use vbs_core::summarizer::{PipelineConfig, DEFAULT_TOP_K};

use crate::error::{Error, Result};
use crate::formats::{load_patterns, load_segmenter_rules};

pub const CONFIG_ENV: &str = "VBS_CONFIG";

/// Keys accepted in a config file. Relative paths are resolved against the
/// file's directory.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub top: Option<usize>,
    pub reps: Option<usize>,
    pub misc_count: Option<usize>,
    pub weights: Option<[f64; 3]>,
    pub allow_any_weights: Option<bool>,
    pub patterns: Option<PathBuf>,
    pub segmenter_rules: Option<PathBuf>,
    pub seed: Option<u64>,
    pub eval_reps: Option<Vec<usize>>,
    pub lead_threshold: Option<f64>,
    pub scheme: Option<PathBuf>,
}

impl FileConfig {
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let mut c: FileConfig =
            toml::from_str(text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut c.patterns, &mut c.segmenter_rules, &mut c.scheme]
            .into_iter()
            .flatten()
        {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(c)
    }

    /// The file named by `explicit`, else by `env`, else an empty config.
    pub fn locate(
        explicit: Option<&Path>,
        env: Option<OsString>,
    ) -> Result<(Option<PathBuf>, Self)> {
        let path = match (explicit, env) {
            (Some(p), _) => p.to_path_buf(),
            (None, Some(e)) if !e.is_empty() => PathBuf::from(e),
            _ => return Ok((None, Self::default())),
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
        let c = Self::parse(&path, &text)?;
        Ok((Some(path), c))
    }
}

/// Pipeline flags as given on the command line; `None` means not given.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PipelineFlags {
    pub top: Option<usize>,
    pub reps: Option<usize>,
    pub misc_count: Option<usize>,
    pub weights: Option<[f64; 3]>,
    pub allow_any_weights: bool,
    pub patterns: Option<PathBuf>,
    pub segmenter_rules: Option<PathBuf>,
    pub seed: Option<u64>,
}

/// Effective settings after merging.
#[derive(Debug, Clone)]
pub struct Effective {
    pub pipeline: PipelineConfig,
    pub patterns: PatternSet,
    pub patterns_source: String,
    pub segmenter_source: String,
}

pub fn resolve(flags: &PipelineFlags, file: &FileConfig) -> Result<Effective> {
    let weights = flags.weights.or(file.weights).unwrap_or([0.5, 0.3, 0.2]);
    let any = flags.allow_any_weights || file.allow_any_weights.unwrap_or(false);
    let [w, r, c] = weights;
    let weights = if any {
        ScoreWeights::any_order(w, r, c)?
    } else {
        ScoreWeights::new(w, r, c)?
    };
    let patterns_path = flags.patterns.as_ref().or(file.patterns.as_ref());
    let (patterns, patterns_source) = match patterns_path {
        Some(p) => (load_patterns(p)?, p.display().to_string()),
        None => (PatternSet::default_english(), "builtin".to_string()),
    };
    let rules_path = flags
        .segmenter_rules
        .as_ref()
        .or(file.segmenter_rules.as_ref());
    let (segmenter, segmenter_source) = match rules_path {
        Some(p) => (load_segmenter_rules(p)?, p.display().to_string()),
        None => (SegmenterConfig::english(), "builtin".to_string()),
    };
    let pipeline = PipelineConfig {
        top_k: flags.top.or(file.top).unwrap_or(DEFAULT_TOP_K),
        segmenter,
        selection: SelectionConfig {
            reps_per_group: flags.reps.or(file.reps).unwrap_or(1),
            misc_count: flags.misc_count.or(file.misc_count).unwrap_or(5),
            weights,
        },
        seed: flags.seed.or(file.seed),
    };
    pipeline.validate()?;
    Ok(Effective {
        pipeline,
        patterns,
        patterns_source,
        segmenter_source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_beats_file_beats_default() {
        let file = FileConfig {
            top: Some(10),
            reps: Some(2),
            ..Default::default()
        };
        let flags = PipelineFlags {
            reps: Some(3),
            ..Default::default()
        };
        let e = resolve(&flags, &file).unwrap();
        assert_eq!(e.pipeline.top_k, 10);
        assert_eq!(e.pipeline.selection.reps_per_group, 3);
        assert_eq!(e.pipeline.selection.misc_count, 5);
        assert_eq!(e.patterns_source, "builtin");
    }

    #[test]
    fn weight_order_is_enforced_unless_waived() {
        let flags = PipelineFlags {
            weights: Some([0.2, 0.3, 0.5]),
            ..Default::default()
        };
        let err = resolve(&flags, &FileConfig::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let flags = PipelineFlags {
            allow_any_weights: true,
            ..flags
        };
        assert!(resolve(&flags, &FileConfig::default()).is_ok());
    }

    #[test]
    fn file_paths_resolve_against_file_dir() {
        let c = FileConfig::parse(
            Path::new("/etc/vbs/run.toml"),
            "top = 20\npatterns = \"p.jsonl\"\nweights = [0.6, 0.3, 0.1]\n",
        )
        .unwrap();
        assert_eq!(c.patterns.as_deref(), Some(Path::new("/etc/vbs/p.jsonl")));
        assert_eq!(c.weights, Some([0.6, 0.3, 0.1]));
        let err = FileConfig::parse(Path::new("x.toml"), "colour = 1\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn locate_prefers_explicit_path() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.toml");
        let b = dir.path().join("b.toml");
        std::fs::write(&a, "top = 1\n").unwrap();
        std::fs::write(&b, "top = 2\n").unwrap();
        let (p, c) = FileConfig::locate(Some(&a), Some(b.clone().into())).unwrap();
        assert_eq!((p.unwrap(), c.top), (a, Some(1)));
        let (_, c) = FileConfig::locate(None, Some(b.into())).unwrap();
        assert_eq!(c.top, Some(2));
        let (p, _) = FileConfig::locate(None, None).unwrap();
        assert!(p.is_none());
    }
}
