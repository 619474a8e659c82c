//! Acceptance criteria. Runs every criterion, prints one line each, and
//! exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hitomezashi_core::classify::{classify, detect_signature, find_symmetries, Symbol};
use hitomezashi_core::isometry::{is_symmetry, Isometry};
use hitomezashi_core::render::{parse_ascii, render_ascii, RenderOptions};
use hitomezashi_core::theorems::{
    anchored_mirror, lemma_i_holds, mirror_condition_ii, patterns, Finding, MirrorReading, Theorem,
};
use hitomezashi_core::{catalogue, BinaryWord, FriezePattern, RealizationClass, SegmentId};
use hitomezashi_tools::census;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MAX_X: usize = 8;
const MAX_Y: usize = 7;
const CENSUS_SIZE: usize = 510 * 252;

const FIGURES: [(&str, &str, &str); 13] = [
    ("1000110", "100110", "p1a1"),
    ("1110", "0110", "p1m1"),
    ("01", "0100", "p11a"),
    ("10", "1010", "p11[2a]"),
    ("011001", "000", "p112"),
    ("001101", "0011", "p11~2"),
    ("10001100", "01010", "p111"),
    ("001", "1010", "pma2"),
    ("1001", "1001", "pmm2"),
    ("0011", "0111", "pm11"),
    ("011", "010", "p[2'm]11"),
    ("01", "1001", "p2'ma"),
    ("0101100", "0110110", "p2'11"),
];

const COMPATIBLE: [&str; 13] = [
    "p1a1", "p1m1", "p11a", "p11[2a]", "p112", "p11~2", "p111", "pma2", "pmm2", "pm11",
    "p[2'm]11", "p2'ma", "p2'11",
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    }
}

fn all_patterns() -> Vec<FriezePattern> {
    patterns(MAX_X, MAX_Y).expect("valid bounds").collect()
}

fn witness_classification() -> Outcome {
    let start = Instant::now();
    let mut wrong = Vec::new();
    for (x, y, expected) in FIGURES {
        let p = FriezePattern::parse(x, y).map_err(|e| e.to_string())?;
        match classify(&p) {
            Ok(r) if r.label.as_str() == expected => {}
            Ok(r) => wrong.push(format!("x={x} y={y}: {} != {expected}", r.label)),
            Err(e) => wrong.push(format!("x={x} y={y}: {e}")),
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "witness classification")?;
    check(
        wrong.is_empty(),
        format!("13/13 captions match in {:?}", start.elapsed()),
        format!("{}/13 match; {}", 13 - wrong.len(), wrong.join("; ")),
    )
}

fn census_reproduction() -> Outcome {
    let start = Instant::now();
    let rows = census::census(MAX_X, MAX_Y).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(300), "census")?;
    if rows.len() != CENSUS_SIZE {
        return Err(format!("{} patterns, expected {CENSUS_SIZE}", rows.len()));
    }
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for row in &rows {
        *counts.entry(row.label.as_str()).or_default() += 1;
    }
    let observed: BTreeSet<&str> = counts.keys().copied().collect();
    let expected: BTreeSet<&str> = COMPATIBLE.into_iter().collect();
    let incompatible: usize = counts
        .iter()
        .filter(|(l, _)| !expected.contains(*l))
        .map(|(_, n)| n)
        .sum();
    check(
        observed == expected && incompatible == 0,
        format!("{} patterns, 13 labels observed, 0 incompatible, {elapsed:?}", rows.len()),
        format!("observed {observed:?}; {incompatible} incompatible occurrences"),
    )
}

fn theorem_suite() -> Outcome {
    let report = census::verify(MAX_X, MAX_Y).map_err(|e| e.to_string())?;
    let mut per_theorem: BTreeMap<String, usize> = BTreeMap::new();
    for v in &report.violations {
        let key = match v.finding {
            Finding::Theorem(t) => t.to_string(),
            Finding::Unclassified => "unclassified".to_owned(),
        };
        *per_theorem.entry(key).or_default() += 1;
    }
    let counts: Vec<String> = Theorem::ALL
        .iter()
        .map(|t| format!("{t}: {}", per_theorem.get(&t.to_string()).unwrap_or(&0)))
        .collect();
    check(
        report.violations.is_empty() && report.patterns_checked as usize == CENSUS_SIZE,
        format!("{} patterns, violations {}", report.patterns_checked, counts.join(", ")),
        format!("violations {per_theorem:?}"),
    )
}

fn word_lemmas() -> Outcome {
    let mut exhaustive = 0;
    let mut failures = Vec::new();
    for len in 1..=12 {
        for v in 0..1u64 << len {
            let z = BinaryWord::from_index(v, len).map_err(|e| e.to_string())?;
            exhaustive += 1;
            if !lemma_i_holds(&z) {
                failures.push(z.to_string());
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0ff4_1e2e);
    for _ in 0..10_000 {
        let len = rng.gen_range(13..=64);
        let z = BinaryWord::new((0..len).map(|_| rng.gen()).collect()).map_err(|e| e.to_string())?;
        if !lemma_i_holds(&z) {
            failures.push(z.to_string());
        }
    }

    let mut anchored_mismatch = 0;
    let mut generalized_mismatch = 0;
    let all = all_patterns();
    for p in &all {
        if mirror_condition_ii(p.x(), MirrorReading::Anchored)
            != is_symmetry(p, &anchored_mirror(p.x()))
        {
            anchored_mismatch += 1;
        }
        let sig = detect_signature(p).map_err(|e| format!("{p}: {e}"))?;
        if mirror_condition_ii(p.x(), MirrorReading::Generalized)
            != sig.axis_a.contains(&Symbol::Mirror)
        {
            generalized_mismatch += 1;
        }
    }
    check(
        exhaustive == 8190 && failures.is_empty() && anchored_mismatch == 0 && generalized_mismatch == 0,
        format!(
            "lemma holds on {exhaustive} + 10000 random words; mirror condition agrees on {} patterns (both readings)",
            all.len()
        ),
        format!(
            "lemma failures {failures:?}, anchored mismatches {anchored_mismatch}, generalized mismatches {generalized_mismatch}"
        ),
    )
}

fn oracle_self_consistency() -> Outcome {
    let mut closure_failures = Vec::new();
    let mut odd_accepted = Vec::new();
    let mut dual_mismatch = Vec::new();
    let mut pairs = 0u64;
    for p in all_patterns() {
        let period = p.translation_period();
        let found: BTreeSet<Isometry> =
            find_symmetries(&p).iter().map(|g| g.reduced(period)).collect();
        for a in &found {
            if !found.contains(&a.inverse().reduced(period)) {
                closure_failures.push(format!("{p}: inverse of {a}"));
            }
            for b in &found {
                pairs += 1;
                let ab = a.compose(b);
                if !found.contains(&ab.reduced(period)) || !is_symmetry(&p, &ab) {
                    closure_failures.push(format!("{p}: {a} ∘ {b}"));
                }
            }
        }
        for t in (1..2 * period as i64).step_by(2) {
            if is_symmetry(&p, &Isometry::translation(t)) {
                odd_accepted.push(format!("{p}: t={t}"));
            }
        }
        let label = classify(&p).map_err(|e| format!("{p}: {e}"))?.label;
        let dual = classify(&p.dual()).map_err(|e| format!("{p} dual: {e}"))?.label;
        if label != dual {
            dual_mismatch.push(format!("{p}: {label} vs {dual}"));
        }
    }
    let total = closure_failures.len() + odd_accepted.len() + dual_mismatch.len();
    check(
        total == 0,
        format!("{pairs} compositions closed, odd translations rejected, duals agree"),
        format!(
            "closure {:?}, odd translations {:?}, dual {:?}",
            closure_failures.iter().take(5).collect::<Vec<_>>(),
            odd_accepted.iter().take(5).collect::<Vec<_>>(),
            dual_mismatch.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn catalogue_exactness() -> Outcome {
    let entries = catalogue();
    let mut classes: BTreeMap<RealizationClass, usize> = BTreeMap::new();
    for e in &entries {
        *classes.entry(e.realization_class).or_default() += 1;
    }
    let class = |c| classes.get(&c).copied().unwrap_or(0);
    let compatible: BTreeSet<&str> = entries
        .iter()
        .filter(|e| e.hitomezashi_realizable)
        .map(|e| e.label.as_str())
        .collect();
    let incompatible = entries.len() - compatible.len();
    let sizes = (
        class(RealizationClass::HitomezashiOnly),
        class(RealizationClass::CelticOnly),
        class(RealizationClass::Both),
        class(RealizationClass::Neither),
    );
    check(
        entries.len() == 31
            && sizes == (8, 5, 5, 13)
            && compatible == COMPATIBLE.into_iter().collect()
            && incompatible == 18,
        format!("31 entries, classes 8/5/5/13, 13 compatible, {incompatible} incompatible"),
        format!("{} entries, classes {sizes:?}, compatible {compatible:?}", entries.len()),
    )
}

fn render_round_trip() -> Outcome {
    let start = Instant::now();
    let opts = RenderOptions::default();
    let mut mismatches = Vec::new();
    let mut segments = 0u64;
    for p in patterns(4, 5).map_err(|e| e.to_string())? {
        let text = render_ascii(&p, &opts);
        let Some((front, back)) = parse_ascii(&text, p.height()) else {
            mismatches.push(format!("{p}: unparseable"));
            continue;
        };
        if !front.is_complement_of(&back) {
            mismatches.push(format!("{p}: blocks not complementary"));
        }
        let width = opts.periods * p.translation_period();
        let h = p.height();
        for i in 0..width {
            for j in 0..h {
                let mut cells = vec![(SegmentId::horizontal(i as i64, j), front.horizontal[j][i], back.horizontal[j][i])];
                if j + 1 < h {
                    cells.push((SegmentId::vertical(i as i64, j), front.vertical[j][i], back.vertical[j][i]));
                }
                for (s, f, b) in cells {
                    segments += 1;
                    if p.front_present(s) != Ok(f) || p.back_present(s) != Ok(b) {
                        mismatches.push(format!("{p}: {s:?}"));
                    }
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10), "render round trip")?;
    check(
        mismatches.is_empty(),
        format!("{segments} segments reproduced on both sides in {:?}", start.elapsed()),
        format!("{} mismatches, first {:?}", mismatches.len(), mismatches.first()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 witness classification", witness_classification),
        ("2 census reproduction", census_reproduction),
        ("3 theorem suite", theorem_suite),
        ("4 word lemmas", word_lemmas),
        ("5 oracle self-consistency", oracle_self_consistency),
        ("6 catalogue exactness", catalogue_exactness),
        ("7 render round-trip", render_round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
