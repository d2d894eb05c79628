//! Property checks over generated corpora, driven by a seeded proptest runner.

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};
use vbs::render::render_json;
use vbs::vbs_core::corpus::{char_count, Paragraph, Term, TermCorpus};
use vbs::vbs_core::patterns::PatternSet;
use vbs::vbs_core::segmenter::{segment, SegmenterConfig, SimpleSentence};
use vbs::vbs_core::selector::{
    normalize_and_score, score_group, select_representatives, RawFactors, ScoreWeights,
    SelectionConfig,
};
use vbs::vbs_core::summarizer::{lead_baseline, summarize, PipelineConfig};

use super::{paragraph, FRAGMENTS, VOCAB};

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn report<T: std::fmt::Debug>(result: Result<(), TestError<T>>) -> Result<(), String> {
    result.map_err(|e| e.to_string())
}

fn sentence() -> impl Strategy<Value = String> {
    (0..FRAGMENTS.len(), vec(0..VOCAB.len(), 1..6), 0usize..6).prop_map(|(f, words, at)| {
        let mut parts: Vec<&str> = words.iter().map(|&i| VOCAB[i]).collect();
        let frag = FRAGMENTS[f];
        if frag.starts_with("XML is") {
            parts.insert(0, frag);
        } else if !frag.is_empty() {
            parts.insert(at.min(parts.len()), frag);
        }
        let mut s = parts.join(" ");
        s.push('.');
        s
    })
}

fn paragraph_text() -> impl Strategy<Value = String> {
    vec(sentence(), 1..5).prop_map(|s| s.join(" "))
}

fn texts() -> impl Strategy<Value = Vec<String>> {
    vec(paragraph_text(), 1..8)
}

fn build(texts: &[String], order: &[usize]) -> TermCorpus {
    let paragraphs: Vec<Paragraph> = order
        .iter()
        .map(|&i| paragraph(&format!("p{i}"), i as u32 + 1, &texts[i]))
        .collect();
    TermCorpus::new(Term::new("XML", vec![]).unwrap(), paragraphs).unwrap()
}

fn in_order(texts: &[String]) -> TermCorpus {
    build(texts, &(0..texts.len()).collect::<Vec<_>>())
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

fn sentences_of(c: &TermCorpus) -> Vec<SimpleSentence> {
    let config = SegmenterConfig::english();
    c.paragraphs()
        .iter()
        .flat_map(|p| segment(p, &config, c.term()))
        .collect()
}

fn weights() -> impl Strategy<Value = ScoreWeights> {
    (0u32..=100, 0u32..=100).prop_map(|(a, b)| {
        let (lo, hi) = (a.min(b), a.max(b));
        let w = f64::from(lo) / 100.0;
        let r = f64::from(hi - lo) / 100.0;
        ScoreWeights::any_order(w, r, (1.0 - w - r).max(0.0)).unwrap()
    })
}

/// Every score lies in `[0, 1]` for any factors and admissible weights.
pub fn score_bounds(cases: u32) -> Result<(), String> {
    let raw = vec((0.0f64..1e6, 1u32..200, 0u32..2000), 1..12);
    report(runner(cases).run(&(raw, weights()), |(raw, weights)| {
        let s = in_order(&["XML.".to_string()]);
        let sentence = &sentences_of(&s)[0];
        let group: Vec<(&SimpleSentence, RawFactors)> = raw
            .iter()
            .map(|&(w, r, c)| {
                (
                    sentence,
                    RawFactors {
                        w,
                        r: f64::from(r),
                        c: f64::from(c),
                    },
                )
            })
            .collect();
        for scored in normalize_and_score(&group, &weights) {
            prop_assert!(
                (0.0..=1.0).contains(&scored.score),
                "score {}",
                scored.score
            );
            for n in [
                scored.factors.w_norm,
                scored.factors.r_norm,
                scored.factors.c_norm,
            ] {
                prop_assert!((0.0..=1.0).contains(&n));
            }
        }
        Ok(())
    }))
}

/// Multiplying every W by a power of two leaves every score unchanged.
pub fn frequency_scaling(cases: u32) -> Result<(), String> {
    let raw = vec((0u32..500, 1u32..50, 1u32..400), 1..12);
    report(runner(cases).run(&(raw, 1i32..20), |(raw, exp)| {
        let s = in_order(&["XML.".to_string()]);
        let sentence = &sentences_of(&s)[0];
        let scale = 2f64.powi(exp);
        let group = |k: f64| -> Vec<(&SimpleSentence, RawFactors)> {
            raw.iter()
                .map(|&(w, r, c)| {
                    let f = RawFactors {
                        w: f64::from(w) * k,
                        r: f64::from(r),
                        c: f64::from(c),
                    };
                    (sentence, f)
                })
                .collect()
        };
        let weights = ScoreWeights::default();
        let base: Vec<f64> = normalize_and_score(&group(1.0), &weights)
            .iter()
            .map(|s| s.score)
            .collect();
        let scaled: Vec<f64> = normalize_and_score(&group(scale), &weights)
            .iter()
            .map(|s| s.score)
            .collect();
        prop_assert_eq!(base, scaled);
        Ok(())
    }))
}

/// Paragraph input order and group member order do not affect the output.
pub fn permutation_determinism(cases: u32) -> Result<(), String> {
    let input = texts().prop_flat_map(|t| {
        let order: Vec<usize> = (0..t.len()).collect();
        (Just(t), Just(order).prop_shuffle())
    });
    let patterns = PatternSet::default_english();
    report(runner(cases).run(
        &(input, 1usize..4, 0usize..4),
        |((texts, order), reps, misc)| {
            let config = pipeline(reps, misc);
            let a = summarize(&in_order(&texts), &patterns, &config).map_err(fail)?;
            let b = summarize(&build(&texts, &order), &patterns, &config).map_err(fail)?;
            prop_assert_eq!(render_json(&a), render_json(&b));

            let group = sentences_of(&in_order(&texts));
            let mut reversed = group.clone();
            reversed.reverse();
            let weights = ScoreWeights::default();
            let ids = |g: &[SimpleSentence]| -> Vec<String> {
                select_representatives(&score_group(g, &weights), reps)
                    .into_iter()
                    .map(|s| s.sentence.id)
                    .collect()
            };
            prop_assert_eq!(ids(&group), ids(&reversed));
            Ok(())
        },
    ))
}

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// At most `reps` entries per regular group plus `misc` miscellaneous ones,
/// and the recorded length matches the entries.
pub fn entry_bound(cases: u32) -> Result<(), String> {
    let patterns = PatternSet::default_english();
    report(
        runner(cases).run(&(texts(), 1usize..4, 0usize..4), |(texts, reps, misc)| {
            let c = in_order(&texts);
            let s = summarize(&c, &patterns, &pipeline(reps, misc)).map_err(fail)?;
            let sentences = sentences_of(&c);
            let groups = vbs::vbs_core::classifier::classify(&sentences, &patterns, c.term());
            let regular = groups.regular().count();
            prop_assert!(s.entries.len() <= regular * reps + misc);
            let total: usize = s.entries.iter().map(|e| char_count(&e.sentence.text)).sum();
            prop_assert_eq!(s.total_chars, total);
            Ok(())
        }),
    )
}

/// The lead text holds exactly `min(n, total)` counted characters.
pub fn lead_length(cases: u32) -> Result<(), String> {
    let messy = vec(
        (
            paragraph_text(),
            prop::sample::select(vec!["", " ", "\n", "  \n ", "\t"]),
        ),
        1..6,
    )
    .prop_map(|v| {
        v.into_iter()
            .map(|(t, pad)| format!("{pad}{}{pad}", t.replace(". ", &format!(".{pad}"))))
            .collect::<Vec<_>>()
    });
    report(runner(cases).run(&(messy, 0usize..400), |(texts, n)| {
        let c = in_order(&texts);
        let total: usize = c.paragraphs().iter().map(|p| char_count(&p.text)).sum();
        let lead = lead_baseline(&c, n).map_err(fail)?;
        let want = n.min(total);
        prop_assert_eq!(lead.total_chars, want);
        let text: String = lead
            .entries
            .iter()
            .map(|e| e.sentence.text.as_str())
            .collect();
        prop_assert_eq!(text.chars().filter(|&ch| ch != '\n').count(), want);
        Ok(())
    }))
}

/// Running the pipeline twice gives byte-identical JSON.
pub fn rerun_identity(cases: u32) -> Result<(), String> {
    let patterns = PatternSet::default_english();
    report(runner(cases).run(&texts(), |texts| {
        let c = in_order(&texts);
        let config = pipeline(2, 3);
        let a = render_json(&summarize(&c, &patterns, &config).map_err(fail)?);
        let b = render_json(&summarize(&c.clone(), &patterns, &config).map_err(fail)?);
        prop_assert_eq!(a, b);
        Ok(())
    }))
}
