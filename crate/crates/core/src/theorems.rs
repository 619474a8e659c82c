//! Word lemmas, the word maps used in the impossibility proofs, and the
//! exhaustive census that checks them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::{classify, Axis, ClassificationReport, GroupLabel, Symbol};
use crate::isometry::{Isometry, Sign};
use crate::pattern::FriezePattern;
use crate::word::BinaryWord;
use crate::Error;

/// The three impossibility results for hitomezashi friezes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// No `m` in the fourth position: the frieze plane is never a mirror.
    NoPlaneMirror,
    /// No pure half turn about a or b (`p2∗∗`, `p∗2∗`).
    NoPureHalfTurn,
    /// No `pm∗a`: a mirror perpendicular to a excludes a glide in the frieze plane.
    NoMirrorWithPlaneGlide,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [
        Theorem::NoPlaneMirror,
        Theorem::NoPureHalfTurn,
        Theorem::NoMirrorWithPlaneGlide,
    ];

    pub const fn number(self) -> u8 {
        match self {
            Theorem::NoPlaneMirror => 1,
            Theorem::NoPureHalfTurn => 2,
            Theorem::NoMirrorWithPlaneGlide => 3,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theorem {}", self.number())
    }
}

/// `z != z^C`, and for odd `|z|` also `z != z^RC`.
pub fn lemma_i_holds(z: &BinaryWord) -> bool {
    let differs_from_complement = *z != z.complement();
    let odd_reverse_ok = z.len().is_multiple_of(2) || *z != z.reverse().complement();
    differs_from_complement && odd_reverse_ok
}

/// How to read the mirror condition on `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MirrorReading {
    /// `x = x^R` with `|x|` even: a mirror through the centre of the written unit.
    Anchored,
    /// Some rotation of the even-length expansion of `x` is a palindrome:
    /// a mirror perpendicular to a exists anywhere.
    Generalized,
}

pub fn mirror_condition_ii(x: &BinaryWord, reading: MirrorReading) -> bool {
    match reading {
        MirrorReading::Anchored => x.len().is_multiple_of(2) && x.is_palindrome(),
        MirrorReading::Generalized => {
            let expanded = even_expansion(x);
            (0..expanded.len() as i64).any(|k| expanded.rotate(k).is_palindrome())
        }
    }
}

/// `x` if `|x|` is even, else `x·x`.
pub fn even_expansion(x: &BinaryWord) -> BinaryWord {
    if x.len().is_multiple_of(2) {
        x.clone()
    } else {
        x.concat(x)
    }
}

/// The mirror perpendicular to a through the centre of the written unit `x`,
/// i.e. at column `(|x| - 1) / 2`. The anchored reading of the mirror
/// condition holds exactly when this isometry is a symmetry.
pub fn anchored_mirror(x: &BinaryWord) -> Isometry {
    Isometry::with_anchor(Sign::Plus, Sign::Plus, x.len() as i64 - 1)
}

/// Words of the front after a half turn about a: `x` is complemented when
/// `|y|` is odd (each vertical line has `|y| - 1` slots), and `y` is reversed.
pub fn rotation_about_a_words(x: &BinaryWord, y: &BinaryWord) -> (BinaryWord, BinaryWord) {
    let x = if y.len().is_multiple_of(2) { x.clone() } else { x.complement() };
    (x, y.reverse())
}

/// Whether the rotated front coincides with the back, shifted by `shift`
/// columns. With `shift = 0` this is the half turn about a; with `shift = P/2`
/// the screw.
pub fn rotated_front_matches_back(p: &FriezePattern, shift: i64) -> bool {
    let (x, y) = rotation_about_a_words(p.x(), p.y());
    let rotated = FriezePattern::new(x, y).expect("rotation keeps the height");
    p.dual().equals_shifted(&rotated, shift)
}

/// One classified pattern of the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub x: BinaryWord,
    pub y: BinaryWord,
    pub label: GroupLabel,
    pub period: usize,
}

impl From<&ClassificationReport> for CensusRow {
    fn from(r: &ClassificationReport) -> Self {
        Self {
            x: r.pattern.x().clone(),
            y: r.pattern.y().clone(),
            label: r.label,
            period: r.period,
        }
    }
}

/// Accepts `1 <= max_x <= 63` and `2 <= max_y <= 63`.
pub fn check_bounds(max_x: usize, max_y: usize) -> Result<(), Error> {
    if max_x == 0 || max_y < 2 || max_x > 63 || max_y > 63 {
        return Err(Error::InvalidBounds { max_x, max_y });
    }
    Ok(())
}

/// All patterns with `|x| = len_x`, `|y| = len_y`, `x` then `y` in lexicographic order.
pub fn patterns_in_block(len_x: usize, len_y: usize) -> impl Iterator<Item = FriezePattern> {
    (0..1u64 << len_x).flat_map(move |xi| {
        let x = BinaryWord::from_index(xi, len_x).expect("len_x >= 1");
        (0..1u64 << len_y).map(move |yi| {
            let y = BinaryWord::from_index(yi, len_y).expect("len_y >= 1");
            FriezePattern::new(x.clone(), y).expect("len_y >= 2")
        })
    })
}

/// The `(|x|, |y|)` blocks of a census, in output order.
pub fn census_blocks(max_x: usize, max_y: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_x).flat_map(move |lx| (2..=max_y).map(move |ly| (lx, ly)))
}

/// Every pattern with `1 <= |x| <= max_x`, `2 <= |y| <= max_y`, ordered by
/// `(|x|, |y|, x, y)`.
pub fn patterns(max_x: usize, max_y: usize) -> Result<impl Iterator<Item = FriezePattern>, Error> {
    check_bounds(max_x, max_y)?;
    Ok(census_blocks(max_x, max_y).flat_map(|(lx, ly)| patterns_in_block(lx, ly)))
}

/// Classifies every pattern within the bounds, in the order of [`patterns`].
pub fn enumerate_patterns(
    max_x: usize,
    max_y: usize,
) -> Result<impl Iterator<Item = Result<CensusRow, Error>>, Error> {
    Ok(patterns(max_x, max_y)?.map(|p| classify(&p).map(|r| CensusRow::from(&r))))
}

/// What went wrong for one pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Finding {
    /// The label or the detected signature breaks an impossibility result.
    Theorem(Theorem),
    /// The detected symmetries did not match any catalogue group.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub x: BinaryWord,
    pub y: BinaryWord,
    pub label: Option<GroupLabel>,
    pub finding: Finding,
}

/// Outcome of checking the impossibility results over a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub max_x: usize,
    pub max_y: usize,
    pub patterns_checked: u64,
    pub violations: Vec<Violation>,
    pub observed_labels: BTreeSet<GroupLabel>,
}

impl TheoremReport {
    pub fn new(max_x: usize, max_y: usize) -> Self {
        Self {
            max_x,
            max_y,
            patterns_checked: 0,
            violations: Vec::new(),
            observed_labels: BTreeSet::new(),
        }
    }

    /// Adds one classified (or unclassifiable) pattern.
    pub fn record(&mut self, pattern: &FriezePattern, result: &Result<ClassificationReport, Error>) {
        self.patterns_checked += 1;
        let mut push = |label, finding| {
            self.violations.push(Violation {
                x: pattern.x().clone(),
                y: pattern.y().clone(),
                label,
                finding,
            })
        };
        let report = match result {
            Ok(report) => report,
            Err(_) => {
                push(None, Finding::Unclassified);
                return;
            }
        };
        let mut broken: BTreeSet<Theorem> = report.label.violated_theorems().into_iter().collect();
        broken.extend(signature_violations(report));
        for theorem in broken {
            push(Some(report.label), Finding::Theorem(theorem));
        }
        self.observed_labels.insert(report.label);
    }

    /// Appends another report over a later part of the same census.
    pub fn merge(&mut self, other: TheoremReport) {
        self.patterns_checked += other.patterns_checked;
        self.violations.extend(other.violations);
        self.observed_labels.extend(other.observed_labels);
    }

    /// No violations, and only stitchable labels observed.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
            && self.observed_labels.iter().all(|l| l.is_hitomezashi_compatible())
    }
}

/// The impossibility results read directly off the detected signature.
fn signature_violations(report: &ClassificationReport) -> Vec<Theorem> {
    let sig = &report.signature;
    let mut out = Vec::new();
    if sig.axis(Axis::C).contains(&Symbol::Mirror) {
        out.push(Theorem::NoPlaneMirror);
    }
    if sig.axis_a.contains(&Symbol::Rotation) || sig.axis_b.contains(&Symbol::Rotation) {
        out.push(Theorem::NoPureHalfTurn);
    }
    if sig.axis_a.contains(&Symbol::Mirror) && sig.axis_c.contains(&Symbol::Glide) {
        out.push(Theorem::NoMirrorWithPlaneGlide);
    }
    out
}

/// Classifies every pattern within the bounds and checks the impossibility results.
pub fn verify_theorems(max_x: usize, max_y: usize) -> Result<TheoremReport, Error> {
    let mut report = TheoremReport::new(max_x, max_y);
    for p in patterns(max_x, max_y)? {
        report.record(&p, &classify(&p));
    }
    Ok(report)
}

/// The first enumerated pattern with the given label, if any within the bounds.
pub fn find_witness(
    label: &str,
    max_x: usize,
    max_y: usize,
) -> Result<Option<FriezePattern>, Error> {
    let label: GroupLabel = label.parse()?;
    Ok(patterns(max_x, max_y)?.find(|p| classify(p).is_ok_and(|r| r.label == label)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::detect_signature;
    use crate::isometry::is_symmetry;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn p(x: &str, y: &str) -> FriezePattern {
        FriezePattern::parse(x, y).unwrap()
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_i_holds(&w("0110")));
        assert!(lemma_i_holds(&w("011")));
        assert_eq!(w("011").reverse().complement(), w("001"));
    }

    #[test]
    fn lemma_exhaustive_to_twelve() {
        let mut count = 0;
        for len in 1..=12 {
            for v in 0..1u64 << len {
                assert!(lemma_i_holds(&BinaryWord::from_index(v, len).unwrap()));
                count += 1;
            }
        }
        assert_eq!(count, 8190);
    }

    #[test]
    fn mirror_condition_examples() {
        assert!(mirror_condition_ii(&w("1001"), MirrorReading::Anchored));
        assert!(!mirror_condition_ii(&w("011"), MirrorReading::Anchored));
        assert!(mirror_condition_ii(&w("001"), MirrorReading::Generalized));
        assert!(!mirror_condition_ii(&w("001"), MirrorReading::Anchored));
        assert!(w("001001").rotate(1).is_palindrome());
    }

    #[test]
    fn anchored_mirror_matches_oracle() {
        for q in patterns(5, 4).unwrap() {
            assert_eq!(
                mirror_condition_ii(q.x(), MirrorReading::Anchored),
                is_symmetry(&q, &anchored_mirror(q.x())),
                "{q}"
            );
            let sig = detect_signature(&q).unwrap();
            assert_eq!(
                mirror_condition_ii(q.x(), MirrorReading::Generalized),
                sig.axis_a.contains(&Symbol::Mirror),
                "{q}"
            );
        }
    }

    #[test]
    fn rotation_word_examples() {
        assert_eq!(rotation_about_a_words(&w("10"), &w("1010")), (w("10"), w("0101")));
        assert_eq!(rotation_about_a_words(&w("10"), &w("101")), (w("01"), w("101")));
    }

    #[test]
    fn rotation_words_agree_with_oracle() {
        for q in patterns(5, 5).unwrap() {
            let half = q.translation_period() as i64 / 2;
            let turn = Isometry::with_translation(Sign::Minus, Sign::Minus, 0);
            let screw = Isometry::with_translation(Sign::Minus, Sign::Minus, half);
            assert_eq!(rotated_front_matches_back(&q, 0), is_symmetry(&q, &turn), "{q}");
            assert!(!rotated_front_matches_back(&q, 0), "{q}");
            assert_eq!(rotated_front_matches_back(&q, half), is_symmetry(&q, &screw), "{q}");
        }
        // the p2'11 witness has the screw
        let q = p("0101100", "0110110");
        assert!(rotated_front_matches_back(&q, 7));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(patterns(1, 2).unwrap().count(), 8);
        let first: Vec<_> = patterns(2, 3).unwrap().take(5).collect();
        assert_eq!(first[0], p("0", "00"));
        assert_eq!(first[1], p("0", "01"));
        assert_eq!(first[4], p("1", "00"));
        assert!(matches!(patterns(0, 2), Err(Error::InvalidBounds { .. })));
        assert!(matches!(patterns(1, 1), Err(Error::InvalidBounds { .. })));
    }

    #[test]
    fn small_census_is_clean() {
        let report = verify_theorems(4, 4).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.is_clean());
        let report = verify_theorems(2, 2).unwrap();
        assert!(!report.observed_labels.is_empty());
        assert!(report.observed_labels.iter().all(|l| l.is_hitomezashi_compatible()));
    }

    #[test]
    fn witnesses() {
        let q = find_witness("p11~2", 6, 4).unwrap().unwrap();
        assert_eq!(classify(&q).unwrap().label.as_str(), "p11~2");
        assert_eq!(find_witness("p2mm", 4, 4).unwrap(), None);
        assert_eq!(find_witness("p9", 4, 4), Err(Error::UnknownLabel));
    }
}
