//! Brute-force references for dice, two-stage classification, greedy
//! miscellaneous selection and coverage.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vbs::vbs_core::classifier::{classify, dice};
use vbs::vbs_core::evaluation::{
    coverage_counts, Annotation, AnnotationSet, LabelScheme, Scope, NON_VIEWPOINT_LABELS,
};
use vbs::vbs_core::patterns::{PatternSet, TermForms, Viewpoint};
use vbs::vbs_core::segmenter::{segment, SegmenterConfig, SimpleSentence, TokenKind};
use vbs::vbs_core::selector::select_miscellaneous;

use super::{corpus, FRAGMENTS, VOCAB};

fn words_of(rng: &mut ChaCha8Rng, max: usize) -> Vec<String> {
    let n = rng.random_range(0..=max);
    (0..n)
        .map(|_| VOCAB.choose(rng).unwrap().to_string())
        .collect()
}

/// Intersection by nested scan over de-duplicated vectors.
fn brute_dice(a: &[String], b: &[String]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    a.dedup();
    b.sort();
    b.dedup();
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let mut common = 0;
    for x in &a {
        for y in &b {
            if x == y {
                common += 1;
            }
        }
    }
    (2 * common) as f64 / (a.len() + b.len()) as f64
}

pub fn dice_suite(trials: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for t in 0..trials {
        let a = words_of(&mut rng, 8);
        let b = words_of(&mut rng, 8);
        let sa: BTreeSet<String> = a.iter().cloned().collect();
        let sb: BTreeSet<String> = b.iter().cloned().collect();
        let got = dice(&sa, &sb).value();
        let want = brute_dice(&a, &b);
        if got != want {
            return Err(format!(
                "trial {t}: dice({a:?}, {b:?}) = {got}, brute force {want}"
            ));
        }
    }
    Ok(())
}

fn sentence_text(rng: &mut ChaCha8Rng) -> String {
    let mut parts: Vec<String> = Vec::new();
    let frag = *FRAGMENTS.choose(rng).unwrap();
    if frag.starts_with("XML is") {
        parts.push(frag.into());
        parts.extend(words_of(rng, 3));
    } else {
        let mut words = words_of(rng, 5);
        if words.is_empty() {
            words.push(VOCAB.choose(rng).unwrap().to_string());
        }
        if !frag.is_empty() {
            let at = rng.random_range(0..=words.len());
            words.insert(at, frag.into());
        }
        parts.extend(words);
    }
    let mut text = parts.join(" ");
    text.push('.');
    text
}

/// One sentence per paragraph, ranks in input order.
fn random_sentences(rng: &mut ChaCha8Rng, n: usize) -> Vec<SimpleSentence> {
    let texts: Vec<String> = (0..n).map(|_| sentence_text(rng)).collect();
    let c = corpus(&texts);
    let config = SegmenterConfig::english();
    c.paragraphs()
        .iter()
        .flat_map(|p| segment(p, &config, c.term()))
        .collect()
}

fn content(s: &SimpleSentence) -> Vec<String> {
    s.tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Word && !t.is_stopword)
        .map(|t| t.surface.to_lowercase())
        .collect()
}

fn reference_classification(
    sentences: &[SimpleSentence],
    set: &PatternSet,
) -> BTreeMap<String, BTreeSet<Viewpoint>> {
    let term = vbs::vbs_core::corpus::Term::new("XML", vec![]).unwrap();
    let forms = TermForms::new(&term);
    let matched: Vec<BTreeSet<Viewpoint>> = sentences
        .iter()
        .map(|s| {
            set.patterns()
                .iter()
                .filter(|p| p.is_match(&s.tokens, &forms))
                .map(|p| p.viewpoint())
                .collect()
        })
        .collect();
    let mut out = BTreeMap::new();
    for (i, s) in sentences.iter().enumerate() {
        if !matched[i].is_empty() {
            out.insert(s.id.clone(), matched[i].clone());
            continue;
        }
        let words = content(s);
        let mut candidates: Vec<(f64, &SimpleSentence, Viewpoint)> = Vec::new();
        for (j, peer) in sentences.iter().enumerate() {
            for &v in &matched[j] {
                let d = brute_dice(&words, &content(peer));
                if d > 0.0 {
                    candidates.push((d, peer, v));
                }
            }
        }
        candidates.sort_by(|a, b| {
            b.0.total_cmp(&a.0)
                .then(a.1.paragraph_rank.cmp(&b.1.paragraph_rank))
                .then(a.1.position.cmp(&b.1.position))
                .then(a.1.id.cmp(&b.1.id))
                .then(a.2.cmp(&b.2))
        });
        let v = candidates
            .first()
            .map(|c| c.2)
            .unwrap_or(Viewpoint::Miscellaneous);
        out.insert(s.id.clone(), BTreeSet::from([v]));
    }
    out
}

pub fn classification_suite(trials: usize) -> Result<(), String> {
    let set = PatternSet::default_english();
    let term = vbs::vbs_core::corpus::Term::new("XML", vec![]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for t in 0..trials {
        let n = rng.random_range(1..=20);
        let sentences = random_sentences(&mut rng, n);
        let groups = classify(&sentences, &set, &term);
        let want = reference_classification(&sentences, &set);
        for s in &sentences {
            let got: BTreeSet<Viewpoint> = groups.viewpoints_of(&s.id).into_iter().collect();
            if got != want[&s.id] {
                return Err(format!(
                    "trial {t}: {:?} grouped {got:?}, reference {:?}",
                    s.text, want[&s.id]
                ));
            }
        }
    }
    Ok(())
}

type Key<'a> = (f64, u32, usize, &'a str);

fn key_cmp(a: &[Key], b: &[Key]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o =
            x.0.total_cmp(&y.0)
                .then(x.1.cmp(&y.1))
                .then(x.2.cmp(&y.2))
                .then(x.3.cmp(y.3));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// Every ordered selection of `k` candidates, keyed by each step's maximum
/// similarity to what came before; the lexicographically smallest sequence
/// is the greedy answer.
fn brute_greedy<'a>(
    cands: &'a [SimpleSentence],
    already: &[&SimpleSentence],
    k: usize,
) -> Vec<&'a str> {
    fn walk<'a>(
        cands: &'a [SimpleSentence],
        anchors: &mut Vec<Vec<String>>,
        used: &mut Vec<bool>,
        seq: &mut Vec<Key<'a>>,
        k: usize,
        best: &mut Option<Vec<Key<'a>>>,
    ) {
        if seq.len() == k {
            if best
                .as_ref()
                .is_none_or(|b| key_cmp(seq, b) == Ordering::Less)
            {
                *best = Some(seq.clone());
            }
            return;
        }
        for i in 0..cands.len() {
            if used[i] {
                continue;
            }
            let words = content(&cands[i]);
            let worst = anchors
                .iter()
                .map(|a| brute_dice(&words, a))
                .fold(0.0, f64::max);
            let s = &cands[i];
            seq.push((worst, s.paragraph_rank, s.position, s.id.as_str()));
            if let Some(b) = best.as_ref() {
                if key_cmp(seq, &b[..seq.len()]) == Ordering::Greater {
                    seq.pop();
                    continue;
                }
            }
            used[i] = true;
            anchors.push(words);
            walk(cands, anchors, used, seq, k, best);
            anchors.pop();
            used[i] = false;
            seq.pop();
        }
    }
    let k = k.min(cands.len());
    let mut anchors: Vec<Vec<String>> = already.iter().map(|s| content(s)).collect();
    let mut best = None;
    walk(
        cands,
        &mut anchors,
        &mut vec![false; cands.len()],
        &mut Vec::new(),
        k,
        &mut best,
    );
    best.unwrap_or_default().into_iter().map(|k| k.3).collect()
}

pub fn misc_selection_suite(trials: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 0..trials {
        let m = rng.random_range(0..=8);
        let a = rng.random_range(0..=3);
        let all = random_sentences(&mut rng, m + a);
        let (cands, already) = all.split_at(m);
        let already: Vec<&SimpleSentence> = already.iter().collect();
        let n = rng.random_range(0..=6);
        let got: Vec<&str> = select_miscellaneous(cands, &already, n)
            .into_iter()
            .map(|s| s.id.as_str())
            .collect();
        let want = brute_greedy(cands, &already, n);
        if got != want {
            return Err(format!("trial {t}: picked {got:?}, brute force {want:?}"));
        }
    }
    Ok(())
}

pub fn coverage_suite(trials: usize) -> Result<(), String> {
    let scheme = LabelScheme::default();
    let viewpoint_labels: Vec<String> = scheme
        .targeted
        .iter()
        .chain(&scheme.extra)
        .cloned()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for t in 0..trials {
        let m = rng.random_range(1..=15);
        let mut anns = Vec::new();
        for i in 0..m {
            let labels: BTreeSet<String> = if rng.random_bool(0.2) {
                BTreeSet::from([NON_VIEWPOINT_LABELS.choose(&mut rng).unwrap().to_string()])
            } else {
                (0..rng.random_range(1..=3))
                    .map(|_| viewpoint_labels.choose(&mut rng).unwrap().clone())
                    .collect()
            };
            anns.push(
                Annotation::new(format!("s{i}"), labels, &scheme).map_err(|e| e.to_string())?,
            );
        }
        let gold = AnnotationSet::new("A", "XML", None, anns).map_err(|e| e.to_string())?;
        let mut ids: Vec<String> = (0..m).map(|i| format!("s{i}")).collect();
        ids.shuffle(&mut rng);
        ids.truncate(rng.random_range(0..=m));

        for (scope, allowed) in [
            (Scope::Twelve, scheme.targeted.clone()),
            (Scope::TwentyEight, viewpoint_labels.clone()),
        ] {
            let mut num = 0;
            let mut den = 0;
            for label in allowed.iter() {
                let shows = |id: &String| gold.annotations[id].labels.contains(label);
                if gold.annotations.keys().any(shows) {
                    den += 1;
                    if ids.iter().any(shows) {
                        num += 1;
                    }
                }
            }
            match coverage_counts(ids.iter().map(String::as_str), &gold, &scheme, scope) {
                Ok(c) if c.numerator == num && c.denominator == den => {}
                Ok(c) => {
                    return Err(format!(
                        "trial {t} {scope:?}: {}/{}, enumeration {num}/{den}",
                        c.numerator, c.denominator
                    ))
                }
                Err(_) if den == 0 => {}
                Err(e) => return Err(format!("trial {t} {scope:?}: {e}")),
            }
        }
    }
    Ok(())
}
