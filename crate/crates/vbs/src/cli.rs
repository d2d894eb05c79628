//! The `vbs` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vbs_core::classifier::Stage;
use vbs_core::corpus::TermCorpus;
use vbs_core::evaluation::{run_experiment, ExperimentConfig};
use vbs_core::evaluation::{viewpoint_saturation, LabelScheme, Scope, DEFAULT_LEAD_THRESHOLD};
use vbs_core::patterns::{TermForms, Viewpoint};
use vbs_core::selector::ScoreFactors;
use vbs_core::summarizer::{
    lead_baseline, summarize_traced, ConfigEcho, PipelineConfig, PipelineTrace,
};

use crate::config::{resolve, Effective, FileConfig, PipelineFlags, CONFIG_ENV};
use crate::dataset::{load_benchmark, segment_top, segmentation_hash, write_benchmark};
use crate::error::{Error, Result};
use crate::formats::{load_annotations, load_corpus, load_scheme};
use crate::render::{render_json, render_text};
use crate::report;
use crate::synth::{generate, SynthConfig};

#[derive(Debug, Parser)]
#[command(
    name = "vbs",
    version,
    about = "Viewpoint-based summarization of term descriptions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarize one term corpus by viewpoint
    Summarize(SummarizeArgs),
    /// Take the first N characters of a corpus
    Lead(LeadArgs),
    /// Compare VBS with the lead baseline against gold annotations
    Eval(EvalArgs),
    /// Validate a pattern file, optionally showing matches on a corpus
    PatternsCheck(PatternsCheckArgs),
    /// Write the viewpoint groups of a corpus as JSON
    DumpGroups(DumpGroupsArgs),
    /// Print the simple sentences annotators label, with their hash
    Segment(SegmentArgs),
    /// Smallest rank prefix whose sentences show every gold viewpoint
    Saturation(SaturationArgs),
    /// Write the synthetic benchmark
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Args)]
struct PipelineArgs {
    /// TOML config file; defaults to $VBS_CONFIG
    #[arg(long)]
    config: Option<PathBuf>,
    /// Pattern file (JSONL); defaults to the built-in English set
    #[arg(long)]
    patterns: Option<PathBuf>,
    /// Segmenter rule file (JSON)
    #[arg(long)]
    segmenter_rules: Option<PathBuf>,
    /// Paragraphs considered, by rank
    #[arg(long)]
    top: Option<usize>,
    /// Sentences taken from the miscellaneous group
    #[arg(long)]
    misc_count: Option<usize>,
    /// Score weights W,R,C
    #[arg(long, value_parser = parse_weights)]
    weights: Option<[f64; 3]>,
    /// Accept weights not ordered W > R > C
    #[arg(long)]
    allow_any_weights: bool,
    /// Recorded in the config echo; the pipeline is deterministic
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SummaryFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Tsv,
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Twelve,
    TwentyEight,
}

#[derive(Debug, Args)]
struct SummarizeArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// Representatives per viewpoint group
    #[arg(long)]
    reps: Option<usize>,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = SummaryFormat::Text)]
    format: SummaryFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the viewpoint groups as JSON to this path
    #[arg(long)]
    dump_groups: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LeadArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    chars: u64,
    #[arg(long)]
    top: Option<usize>,
    #[arg(long, value_enum, default_value_t = SummaryFormat::Text)]
    format: SummaryFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    corpus_dir: PathBuf,
    #[arg(long)]
    gold_dir: PathBuf,
    /// Comma-separated reps values, one report row each
    #[arg(long = "reps", value_delimiter = ',')]
    eval_reps: Option<Vec<usize>>,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Label scheme file (JSON); defaults to 12 viewpoints plus aux_01..aux_16
    #[arg(long)]
    scheme: Option<PathBuf>,
    /// Share of a sentence the lead must contain to count it
    #[arg(long)]
    lead_threshold: Option<f64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Tsv)]
    format: ReportFormat,
    /// Append per-term results
    #[arg(long)]
    per_term: bool,
    /// Append per-label VBS coverage for the given reps value
    #[arg(long)]
    breakdown: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PatternsCheckArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Show which patterns match each sentence of this corpus
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DumpGroupsArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    reps: Option<usize>,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SegmentArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = SummaryFormat::Text)]
    format: SummaryFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SaturationArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// Annotation file for the corpus
    #[arg(long)]
    gold: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long)]
    scheme: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ScopeArg::TwentyEight)]
    scope: ScopeArg,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value_t = SynthConfig::default().terms)]
    terms: usize,
    #[arg(long, default_value_t = SynthConfig::default().paragraphs)]
    paragraphs: usize,
    #[arg(long, default_value_t = SynthConfig::default().seed)]
    seed: u64,
}

fn parse_weights(s: &str) -> std::result::Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("{p:?} is not a number"))?;
    }
    Ok(out)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Loaded {
    effective: Effective,
    file: FileConfig,
    settings: BTreeMap<String, String>,
}

fn load_pipeline(args: &PipelineArgs, reps: Option<usize>) -> Result<Loaded> {
    let (config_path, file) =
        FileConfig::locate(args.config.as_deref(), std::env::var_os(CONFIG_ENV))?;
    let flags = PipelineFlags {
        top: args.top,
        reps,
        misc_count: args.misc_count,
        weights: args.weights,
        allow_any_weights: args.allow_any_weights,
        patterns: args.patterns.clone(),
        segmenter_rules: args.segmenter_rules.clone(),
        seed: args.seed,
    };
    let effective = resolve(&flags, &file)?;
    let mut settings = BTreeMap::new();
    settings.insert("patterns".into(), effective.patterns_source.clone());
    settings.insert("segmenter_rules".into(), effective.segmenter_source.clone());
    if let Some(p) = config_path {
        settings.insert("config_file".into(), p.display().to_string());
    }
    Ok(Loaded {
        effective,
        file,
        settings,
    })
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => crate::write_atomic(path, text.as_bytes()),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

fn load_nonempty(path: &Path) -> Result<TermCorpus> {
    let corpus = load_corpus(path)?;
    if corpus.is_empty() {
        return Err(Error::data(path, "corpus has no paragraphs"));
    }
    Ok(corpus)
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::Summarize(a) => summarize_cmd(a, stdout),
        Command::Lead(a) => lead_cmd(a, stdout),
        Command::Eval(a) => eval_cmd(a, stdout),
        Command::PatternsCheck(a) => patterns_check_cmd(a, stdout),
        Command::DumpGroups(a) => {
            let loaded = load_pipeline(&a.pipeline, a.reps)?;
            let corpus = load_nonempty(&a.corpus)?;
            let trace = summarize_traced(
                &corpus,
                &loaded.effective.patterns,
                &loaded.effective.pipeline,
            )?;
            emit(a.out.as_deref(), &groups_json(&trace, &loaded), stdout)
        }
        Command::Segment(a) => segment_cmd(a, stdout),
        Command::Saturation(a) => saturation_cmd(a, stdout),
        Command::Synth(a) => {
            let config = SynthConfig {
                terms: a.terms,
                paragraphs: a.paragraphs,
                seed: a.seed,
            };
            let terms = generate(&config)?;
            write_benchmark(&a.out_dir, &terms)?;
            emit(
                None,
                &format!("wrote {} terms to {}\n", terms.len(), a.out_dir.display()),
                stdout,
            )
        }
    }
}

fn summarize_cmd(a: SummarizeArgs, stdout: &mut dyn Write) -> Result<()> {
    let mut loaded = load_pipeline(&a.pipeline, a.reps)?;
    let corpus = load_nonempty(&a.corpus)?;
    let trace = summarize_traced(
        &corpus,
        &loaded.effective.patterns,
        &loaded.effective.pipeline,
    )?;
    if let Some(path) = &a.dump_groups {
        crate::write_atomic(path, groups_json(&trace, &loaded).as_bytes())?;
    }
    loaded
        .settings
        .insert("corpus".into(), a.corpus.display().to_string());
    let mut summary = trace.summary;
    if let Some(echo) = summary.config_echo.as_mut() {
        echo.settings = loaded.settings;
    }
    let text = match a.format {
        SummaryFormat::Text => render_text(&summary),
        SummaryFormat::Json => render_json(&summary),
    };
    emit(a.out.as_deref(), &text, stdout)
}

fn lead_cmd(a: LeadArgs, stdout: &mut dyn Write) -> Result<()> {
    let corpus = load_nonempty(&a.corpus)?;
    let pipeline = PipelineConfig {
        top_k: a.top.unwrap_or(vbs_core::summarizer::DEFAULT_TOP_K),
        ..PipelineConfig::default()
    };
    pipeline.validate()?;
    let top = corpus.take_top(pipeline.top_k);
    let mut summary = lead_baseline(&top, a.chars as usize)?;
    summary.config_echo = Some(ConfigEcho {
        pipeline,
        pattern_set_version: String::new(),
        pattern_count: 0,
        settings: BTreeMap::from([
            ("corpus".to_string(), a.corpus.display().to_string()),
            ("chars".to_string(), a.chars.to_string()),
        ]),
    });
    let text = match a.format {
        SummaryFormat::Text => render_text(&summary),
        SummaryFormat::Json => render_json(&summary),
    };
    emit(a.out.as_deref(), &text, stdout)
}

fn eval_cmd(a: EvalArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = load_pipeline(&a.pipeline, None)?;
    let scheme_path = a.scheme.clone().or(loaded.file.scheme.clone());
    let scheme = match &scheme_path {
        Some(p) => load_scheme(p)?,
        None => LabelScheme::default(),
    };
    let reps = a
        .eval_reps
        .clone()
        .or(loaded.file.eval_reps.clone())
        .unwrap_or_else(|| vec![1, 2, 3]);
    if reps.is_empty() || reps.contains(&0) {
        return Err(Error::Usage("--reps values must be at least 1".into()));
    }
    let lead_threshold = a
        .lead_threshold
        .or(loaded.file.lead_threshold)
        .unwrap_or(DEFAULT_LEAD_THRESHOLD);
    if !(0.0..=1.0).contains(&lead_threshold) {
        return Err(Error::Usage("--lead-threshold must lie in [0, 1]".into()));
    }
    let pipeline = loaded.effective.pipeline.clone();
    let terms = load_benchmark(
        &a.corpus_dir,
        &a.gold_dir,
        &scheme,
        &pipeline.segmenter,
        pipeline.top_k,
    )?;
    let config = ExperimentConfig {
        pipeline,
        reps,
        lead_threshold,
        scheme,
    };
    let report = run_experiment(&terms, &loaded.effective.patterns, &config)?;
    let mut text = match a.format {
        ReportFormat::Tsv => report::to_tsv(&report),
        ReportFormat::Table => report::to_table(&report),
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                config: &'a ExperimentConfig,
                pattern_set_version: &'a str,
                settings: &'a BTreeMap<String, String>,
                report: &'a vbs_core::evaluation::EvalReport,
            }
            let mut s = serde_json::to_string_pretty(&Out {
                config: &config,
                pattern_set_version: loaded.effective.patterns.version(),
                settings: &loaded.settings,
                report: &report,
            })
            .expect("report serializes");
            s.push('\n');
            s
        }
    };
    if a.per_term {
        text.push('\n');
        text.push_str(&report::per_term_tsv(&report));
    }
    if let Some(r) = a.breakdown {
        text.push('\n');
        text.push_str(&report::breakdown_tsv(&report, r));
    }
    emit(a.out.as_deref(), &text, stdout)
}

fn patterns_check_cmd(a: PatternsCheckArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = load_pipeline(&a.pipeline, None)?;
    let set = &loaded.effective.patterns;
    let mut text = format!("version\t{}\npatterns\t{}\n", set.version(), set.len());
    let counts = set.counts_by_viewpoint();
    for v in Viewpoint::TARGETED {
        text.push_str(&format!(
            "{}\t{}\n",
            v,
            counts.get(&v).copied().unwrap_or(0)
        ));
    }
    if let Some(path) = &a.corpus {
        let corpus = load_nonempty(path)?;
        let forms = TermForms::new(corpus.term());
        text.push('\n');
        let pipeline = &loaded.effective.pipeline;
        for s in segment_top(&corpus, &pipeline.segmenter, pipeline.top_k) {
            let ids = set.matching_ids(&s.tokens, &forms);
            text.push_str(&format!("{}\t{}\t{}\n", s.id, ids.join(","), s.text));
        }
    }
    emit(None, &text, stdout)
}

fn segment_cmd(a: SegmentArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = load_pipeline(&a.pipeline, None)?;
    let corpus = load_nonempty(&a.corpus)?;
    let pipeline = &loaded.effective.pipeline;
    let sentences = segment_top(&corpus, &pipeline.segmenter, pipeline.top_k);
    let hash = segmentation_hash(&sentences);
    let text = match a.format {
        SummaryFormat::Text => {
            let mut t = format!("# segmentation_hash {hash}\n");
            for s in &sentences {
                t.push_str(&format!("{}\t{}\n", s.id, s.text));
            }
            t
        }
        SummaryFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                term: &'a str,
                segmentation_hash: &'a str,
                sentences: &'a [vbs_core::segmenter::SimpleSentence],
            }
            let mut s = serde_json::to_string_pretty(&Out {
                term: corpus.term().surface(),
                segmentation_hash: &hash,
                sentences: &sentences,
            })
            .expect("sentences serialize");
            s.push('\n');
            s
        }
    };
    emit(a.out.as_deref(), &text, stdout)
}

fn saturation_cmd(a: SaturationArgs, stdout: &mut dyn Write) -> Result<()> {
    let loaded = load_pipeline(&a.pipeline, None)?;
    let scheme = match a.scheme.clone().or(loaded.file.scheme.clone()) {
        Some(p) => load_scheme(&p)?,
        None => LabelScheme::default(),
    };
    let corpus = load_nonempty(&a.corpus)?;
    let gold = load_annotations(&a.gold, &scheme)?;
    let pipeline = &loaded.effective.pipeline;
    let sentences = segment_top(&corpus, &pipeline.segmenter, pipeline.top_k);
    let scope = match a.scope {
        ScopeArg::Twelve => Scope::Twelve,
        ScopeArg::TwentyEight => Scope::TwentyEight,
    };
    let line = match viewpoint_saturation(&sentences, &gold, &scheme, scope) {
        Some(k) => format!("{k}\n"),
        None => "none\n".to_string(),
    };
    emit(None, &line, stdout)
}

#[derive(Serialize)]
struct MemberOut<'a> {
    id: &'a str,
    text: &'a str,
    stage: Option<Stage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    peer: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dice: Option<f64>,
    score: Option<f64>,
    factors: Option<ScoreFactors>,
}

#[derive(Serialize)]
struct GroupsOut<'a> {
    term: &'a str,
    config_echo: ConfigEcho,
    sentences: usize,
    groups: BTreeMap<Viewpoint, Vec<MemberOut<'a>>>,
}

fn groups_json(trace: &PipelineTrace, loaded: &Loaded) -> String {
    let mut groups = BTreeMap::new();
    for (v, members) in &trace.groups.groups {
        let scored = trace.scored.get(v);
        let out: Vec<MemberOut> = members
            .iter()
            .map(|s| {
                let sc = scored.and_then(|g| g.iter().find(|x| x.sentence.id == s.id));
                let link = trace.groups.similar_to.get(&s.id);
                MemberOut {
                    id: &s.id,
                    text: &s.text,
                    stage: trace.groups.stage_of.get(&s.id).copied(),
                    peer: link.and_then(|l| l.peer.as_deref()),
                    dice: link.map(|l| l.dice),
                    score: sc.map(|x| x.score),
                    factors: sc.map(|x| x.factors),
                }
            })
            .collect();
        groups.insert(*v, out);
    }
    let out = GroupsOut {
        term: trace.corpus.term().surface(),
        config_echo: ConfigEcho {
            pipeline: loaded.effective.pipeline.clone(),
            pattern_set_version: loaded.effective.patterns.version().into(),
            pattern_count: loaded.effective.patterns.len(),
            settings: loaded.settings.clone(),
        },
        sentences: trace.sentences.len(),
        groups,
    };
    let mut s = serde_json::to_string_pretty(&out).expect("groups serialize");
    s.push('\n');
    s
}
