//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod support;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use support::{invariants, oracles};
use vbs::formats::load_corpus;
use vbs::synth::{generate, SynthConfig};
use vbs::vbs_core::classifier::{classify, Stage};
use vbs::vbs_core::corpus::char_count;
use vbs::vbs_core::evaluation::{compression_ratio, run_experiment, ExperimentConfig, TermResult};
use vbs::vbs_core::patterns::{PatternSet, Viewpoint};
use vbs::vbs_core::segmenter::{segment, SegmenterConfig};
use vbs::vbs_core::selector::SelectionConfig;
use vbs::vbs_core::summarizer::{lead_baseline, summarize, PipelineConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn pipeline(reps: usize, misc: usize) -> PipelineConfig {
    PipelineConfig {
        selection: SelectionConfig {
            reps_per_group: reps,
            misc_count: misc,
            ..Default::default()
        },
        ..Default::default()
    }
}

fn metric_arithmetic() -> Outcome {
    let pct = compression_ratio(397, 11224).map_err(|e| e.to_string())? * 100.0;
    if (pct - 3.537).abs() > 0.01 {
        return Err(format!("compression {pct:.4}% outside 3.537 +/- 0.01"));
    }
    let corpus = load_corpus(&data("xml.jsonl")).map_err(|e| e.to_string())?;
    let summary = summarize(&corpus, &PatternSet::default_english(), &pipeline(1, 1))
        .map_err(|e| e.to_string())?;
    let budget = summary.total_chars;
    let lead = lead_baseline(&corpus, budget).map_err(|e| e.to_string())?;
    let cut = lead
        .entries
        .iter()
        .map(|e| e.sentence.text.chars().filter(|&c| c != '\n').count())
        .sum::<usize>();
    if lead.total_chars != budget || cut != budget {
        return Err(format!(
            "VBS {budget} chars, lead cut {} ({cut} in text)",
            lead.total_chars
        ));
    }
    Ok(format!(
        "compression {pct:.4}%, lead cut {budget} = VBS {budget} chars"
    ))
}

fn worked_example() -> Outcome {
    let corpus = load_corpus(&data("worked_example.jsonl")).map_err(|e| e.to_string())?;
    let config = SegmenterConfig::english();
    let sentences: Vec<_> = corpus
        .paragraphs()
        .iter()
        .flat_map(|p| segment(p, &config, corpus.term()))
        .collect();
    let groups = classify(&sentences, &PatternSet::default_english(), corpus.term());
    let expected = [
        ("a#0", Viewpoint::Definition, Stage::Pattern),
        ("b#0", Viewpoint::Abbreviation, Stage::Pattern),
        ("c#0", Viewpoint::History, Stage::Pattern),
        ("d#0", Viewpoint::Abbreviation, Stage::Pattern),
        ("e#0", Viewpoint::History, Stage::Similarity),
    ];
    if sentences.len() != expected.len() {
        return Err(format!(
            "{} sentences, expected {}",
            sentences.len(),
            expected.len()
        ));
    }
    for (id, viewpoint, stage) in expected {
        let got = groups.viewpoints_of(id);
        if got != [viewpoint] || groups.stage_of.get(id) != Some(&stage) {
            return Err(format!("{id}: {got:?} via {:?}", groups.stage_of.get(id)));
        }
    }
    let peer = groups.similar_to.get("e#0").and_then(|a| a.peer.as_deref());
    check(
        peer == Some("c#0"),
        format!("5/5 sentences exact, e#0 nearest peer {peer:?}"),
    )
}

fn structural_summary() -> Outcome {
    let corpus = load_corpus(&data("xml.jsonl")).map_err(|e| e.to_string())?;
    let summary = summarize(&corpus, &PatternSet::default_english(), &pipeline(1, 1))
        .map_err(|e| e.to_string())?;
    let got: BTreeSet<Viewpoint> = summary.entries.iter().map(|e| e.viewpoint).collect();
    let want = BTreeSet::from([
        Viewpoint::Definition,
        Viewpoint::Abbreviation,
        Viewpoint::Purpose,
        Viewpoint::Advantage,
        Viewpoint::History,
        Viewpoint::Reference,
        Viewpoint::Miscellaneous,
    ]);
    check(
        summary.entries.len() == 7 && got == want,
        format!("{} entries over {got:?}", summary.entries.len()),
    )
}

/// Terms on which VBS strictly beats Lead, for one annotator, scope and reps.
fn wins(results: &[TermResult], reps: usize, annotator: &str, wide: bool) -> usize {
    results
        .iter()
        .filter(|r| r.reps == reps)
        .filter(|r| {
            let c = &r.coverage[annotator];
            if wide {
                c.vbs_28 > c.lead_28
            } else {
                c.vbs_12 > c.lead_12
            }
        })
        .count()
}

fn synthetic_benchmark() -> Outcome {
    let start = Instant::now();
    let terms = generate(&SynthConfig::default()).map_err(|e| e.to_string())?;
    let config = ExperimentConfig::default();
    let report = run_experiment(&terms, &PatternSet::default_english(), &config)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut cells = Vec::new();
    let mut ok = terms.len() == 15 && elapsed < Duration::from_secs(10);
    for reps in [2, 3] {
        for annotator in &report.annotators {
            for (wide, scope) in [(false, "12"), (true, "28")] {
                let n = wins(&report.per_term, reps, annotator, wide);
                ok &= n >= 13;
                cells.push(format!("r{reps}/{annotator}/{scope}:{n}"));
            }
        }
    }
    let equal_budget = report.per_term.iter().all(|r| r.vbs_chars == r.lead_chars);
    ok &= equal_budget && !report.annotators.is_empty();
    check(
        ok,
        format!(
            "{} terms, wins of 15 [{}], equal budgets {equal_budget}, {:.2?}",
            terms.len(),
            cells.join(" "),
            elapsed
        ),
    )
}

fn suite(result: Result<(), String>, what: &str) -> Outcome {
    result.map(|()| what.to_string())
}

fn performance() -> Outcome {
    let terms = generate(&SynthConfig::default()).map_err(|e| e.to_string())?;
    let corpus = &terms[0].corpus;
    let chars = char_count_of(corpus);
    let start = Instant::now();
    summarize(corpus, &PatternSet::default_english(), &pipeline(3, 5))
        .map_err(|e| e.to_string())?;
    let one = start.elapsed();
    let start = Instant::now();
    run_experiment(
        &terms,
        &PatternSet::default_english(),
        &ExperimentConfig::default(),
    )
    .map_err(|e| e.to_string())?;
    let all = start.elapsed();
    check(
        corpus.len() == 50 && one < Duration::from_secs(1) && all < Duration::from_secs(10),
        format!(
            "summarize {} paragraphs / {chars} chars in {one:.2?}, 15-term eval in {all:.2?}",
            corpus.len()
        ),
    )
}

fn char_count_of(corpus: &vbs::vbs_core::corpus::TermCorpus) -> usize {
    corpus
        .paragraphs()
        .iter()
        .map(|p| char_count(&p.text))
        .sum()
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("metric arithmetic", metric_arithmetic),
        ("worked example classification", worked_example),
        ("XML summary structure", structural_summary),
        ("synthetic benchmark VBS over Lead", synthetic_benchmark),
        ("oracle: dice", || {
            suite(oracles::dice_suite(1000), "1000 pairs exact")
        }),
        ("oracle: two-stage classification", || {
            suite(oracles::classification_suite(200), "200 instances exact")
        }),
        ("oracle: miscellaneous selection", || {
            suite(oracles::misc_selection_suite(200), "200 instances exact")
        }),
        ("oracle: coverage", || {
            suite(oracles::coverage_suite(200), "200 instances exact")
        }),
        ("invariant: score bounds", || {
            suite(invariants::score_bounds(256), "256 cases")
        }),
        ("invariant: frequency scaling", || {
            suite(invariants::frequency_scaling(256), "256 cases")
        }),
        ("invariant: permutation determinism", || {
            suite(invariants::permutation_determinism(64), "64 cases")
        }),
        ("invariant: entry count bound", || {
            suite(invariants::entry_bound(128), "128 cases")
        }),
        ("invariant: lead prefix length", || {
            suite(invariants::lead_length(256), "256 cases")
        }),
        ("invariant: byte-identical reruns", || {
            suite(invariants::rerun_identity(64), "64 cases")
        }),
        ("performance envelope", performance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
