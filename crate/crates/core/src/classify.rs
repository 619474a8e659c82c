//! Symmetry signatures and the 31 two-sided frieze groups.
//!
//! A label `p∗∗∗` lists symbols for the axes a (along the strip), b (across
//! the strip, in its plane) and c (normal to the plane). Symbols stacked on
//! one axis are written in brackets, e.g. `p[2'm]11`; the roto-reflection is
//! written `~2`.
//!
//! A label names generators, not every element: `p[2'm]11` also contains
//! roto-reflections. Labels are therefore matched through [`SymmetryKinds`],
//! the full set of symmetry kinds a group contains, which is what the
//! detector observes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::isometry::{is_symmetry, Isometry, PointPart, Sign};
use crate::pattern::FriezePattern;
use crate::theorems::Theorem;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    A,
    B,
    C,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::A, Axis::B, Axis::C];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::A => "a",
            Axis::B => "b",
            Axis::C => "c",
        })
    }
}

/// A symbol in one position of a label. The declaration order is the order
/// in which stacked symbols are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `2`: half turn about the axis.
    Rotation,
    /// `2'`: half turn about a combined with a half-period translation.
    Screw,
    /// `m`: reflection in the plane perpendicular to the axis.
    Mirror,
    /// `a`: reflection in the plane perpendicular to the axis, plus a glide along a.
    Glide,
    /// `~2`: half turn about c combined with reflection in the frieze plane.
    RotoReflection,
}

impl Symbol {
    pub const fn as_str(self) -> &'static str {
        match self {
            Symbol::Rotation => "2",
            Symbol::Screw => "2'",
            Symbol::Mirror => "m",
            Symbol::Glide => "a",
            Symbol::RotoReflection => "~2",
        }
    }

    /// The isometry kind this symbol denotes on `axis`, if it may appear there.
    pub fn kind_on(self, axis: Axis) -> Option<Kind> {
        use Sign::{Minus as M, Plus as P};
        let (pp, glide) = match (axis, self) {
            (Axis::A, Symbol::Mirror) => (PointPart::new(M, P, P), false),
            (Axis::A, Symbol::Rotation) => (PointPart::new(P, M, M), false),
            (Axis::A, Symbol::Screw) => (PointPart::new(P, M, M), true),
            (Axis::B, Symbol::Mirror) => (PointPart::new(P, M, P), false),
            (Axis::B, Symbol::Glide) => (PointPart::new(P, M, P), true),
            (Axis::B, Symbol::Rotation) => (PointPart::new(M, P, M), false),
            (Axis::C, Symbol::Rotation) => (PointPart::new(M, M, P), false),
            (Axis::C, Symbol::Mirror) => (PointPart::new(P, P, M), false),
            (Axis::C, Symbol::Glide) => (PointPart::new(P, P, M), true),
            (Axis::C, Symbol::RotoReflection) => (PointPart::new(M, M, M), false),
            _ => return None,
        };
        Some(Kind::new(pp, glide))
    }

    /// The axis and symbol that name an isometry kind; `None` for translations.
    pub fn of_kind(kind: Kind) -> Option<(Axis, Symbol)> {
        Axis::ALL.into_iter().find_map(|axis| {
            [
                Symbol::Rotation,
                Symbol::Screw,
                Symbol::Mirror,
                Symbol::Glide,
                Symbol::RotoReflection,
            ]
            .into_iter()
            .find(|s| s.kind_on(axis) == Some(kind))
            .map(|s| (axis, s))
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point part, plus for direction-preserving ones whether the translation
/// part is half a period (glide or screw) rather than a lattice vector.
///
/// For direction-reversing point parts the anchor can always be moved, so
/// they carry no glide flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kind {
    pub point_part: PointPart,
    pub half_period: bool,
}

impl Kind {
    pub fn new(point_part: PointPart, half_period: bool) -> Self {
        Self {
            point_part,
            half_period: half_period && point_part.keeps_direction(),
        }
    }

    const fn bit(self) -> u16 {
        1 << (2 * self.point_part.index() + self.half_period as usize)
    }

    fn times(self, other: Kind) -> Kind {
        Kind::new(
            self.point_part.times(other.point_part),
            self.half_period ^ other.half_period,
        )
    }
}

/// The set of isometry kinds present in a symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryKinds(u16);

impl SymmetryKinds {
    pub const TRANSLATIONS_ONLY: Self = Self(1);

    pub fn contains(self, kind: Kind) -> bool {
        self.0 & kind.bit() != 0
    }

    pub fn insert(&mut self, kind: Kind) {
        self.0 |= kind.bit();
    }

    pub fn iter(self) -> impl Iterator<Item = Kind> {
        PointPart::ALL.into_iter().flat_map(move |pp| {
            [false, true]
                .into_iter()
                .filter(move |&glide| !glide || pp.keeps_direction())
                .map(move |glide| Kind::new(pp, glide))
                .filter(move |&k| self.contains(k))
        })
    }

    /// The kinds of the group generated by `generators` together with the
    /// lattice translations.
    ///
    /// Direction-preserving kinds compose on kind data alone. Once one
    /// direction-reversing element `r` is present, the others are exactly
    /// `r` times the direction-preserving ones, whatever the anchors. Returns
    /// `None` if the generators are inconsistent: a direction-preserving
    /// point part both with and without a half-period shift (which would
    /// make half the period a translation), or a reversing generator not of
    /// the form above. Products of two reversing generators depend on their
    /// anchors, so they must be among the generators too.
    pub fn generated_by(generators: impl IntoIterator<Item = Kind>) -> Option<Self> {
        let mut keeping = Self::TRANSLATIONS_ONLY;
        let mut reversing = Vec::new();
        for kind in generators {
            if kind.point_part.keeps_direction() {
                keeping.insert(kind);
            } else {
                reversing.push(kind);
            }
        }
        loop {
            let mut next = keeping;
            for a in keeping.iter() {
                for b in keeping.iter() {
                    next.insert(a.times(b));
                }
            }
            if next == keeping {
                break;
            }
            keeping = next;
        }
        let identity = Kind::new(PointPart::IDENTITY, false);
        if keeping.contains(Kind::new(PointPart::IDENTITY, true)) {
            return None;
        }
        let mut all = keeping;
        if let Some(&r) = reversing.first() {
            for k in keeping.iter() {
                all.insert(r.times(k));
            }
            if reversing.iter().any(|g| !all.contains(*g)) {
                return None;
            }
        }
        debug_assert!(all.contains(identity));
        Some(all)
    }
}

/// Realisation of a group in the two crafts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealizationClass {
    HitomezashiOnly,
    CelticOnly,
    Both,
    Neither,
}

impl RealizationClass {
    pub fn from_flags(hitomezashi: bool, celtic: bool) -> Self {
        match (hitomezashi, celtic) {
            (true, true) => Self::Both,
            (true, false) => Self::HitomezashiOnly,
            (false, true) => Self::CelticOnly,
            (false, false) => Self::Neither,
        }
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            Self::HitomezashiOnly => "HitomezashiOnly",
            Self::CelticOnly => "CelticOnly",
            Self::Both => "Both",
            Self::Neither => "Neither",
        }
    }
}

impl fmt::Display for RealizationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

struct RawEntry {
    label: &'static str,
    hitomezashi: bool,
    celtic: bool,
    excluded_by: &'static [Theorem],
}

const fn entry(
    label: &'static str,
    hitomezashi: bool,
    celtic: bool,
    excluded_by: &'static [Theorem],
) -> RawEntry {
    RawEntry { label, hitomezashi, celtic, excluded_by }
}

use Theorem::{NoPlaneMirror as T1, NoPureHalfTurn as T2, NoMirrorWithPlaneGlide as T3};

const CATALOGUE: [RawEntry; 31] = [
    entry("p111", true, true, &[]),
    entry("p112", true, true, &[]),
    entry("p1a1", true, true, &[]),
    entry("p11~2", true, true, &[]),
    entry("p2'11", true, true, &[]),
    entry("p11a", true, false, &[]),
    entry("p11[2a]", true, false, &[]),
    entry("p1m1", true, false, &[]),
    entry("pm11", true, false, &[]),
    entry("p[2'm]11", true, false, &[]),
    entry("p2'ma", true, false, &[]),
    entry("pmm2", true, false, &[]),
    entry("pma2", true, false, &[]),
    entry("p121", false, true, &[T2]),
    entry("p1[2a]1", false, true, &[T2]),
    entry("p211", false, true, &[T2]),
    entry("p222", false, true, &[T2]),
    entry("p2'22", false, true, &[T2]),
    entry("p2aa", false, false, &[T2]),
    entry("p[2m]11", false, false, &[T2]),
    entry("p1[2m]1", false, false, &[T2]),
    entry("pm2a", false, false, &[T2, T3]),
    entry("pmma", false, false, &[T3]),
    entry("pmaa", false, false, &[T3]),
    entry("p11m", false, false, &[T1]),
    entry("p2mm", false, false, &[T1, T2]),
    entry("p11[2m]", false, false, &[T1]),
    entry("p2'am", false, false, &[T1]),
    entry("pm2m", false, false, &[T1, T2]),
    entry("pmmm", false, false, &[T1]),
    entry("pmam", false, false, &[T1]),
];

/// One of the 31 two-sided frieze group labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel(u8);

impl GroupLabel {
    pub fn all() -> impl Iterator<Item = GroupLabel> {
        (0..CATALOGUE.len() as u8).map(GroupLabel)
    }

    /// The canonical ASCII form, e.g. `p[2'm]11`.
    pub fn as_str(self) -> &'static str {
        CATALOGUE[self.0 as usize].label
    }

    /// Symbols per axis, in the order a, b, c.
    pub fn symbols(self) -> [BTreeSet<Symbol>; 3] {
        parse_positions(self.as_str()).expect("catalogue labels are well formed")
    }

    pub fn kinds(self) -> SymmetryKinds {
        let [a, b, c] = self.symbols();
        kinds_of(&a, &b, &c).expect("catalogue labels are consistent")
    }

    pub fn entry(self) -> CatalogueEntry {
        let raw = &CATALOGUE[self.0 as usize];
        CatalogueEntry {
            label: self,
            hitomezashi_realizable: raw.hitomezashi,
            celtic_realizable: raw.celtic,
            realization_class: RealizationClass::from_flags(raw.hitomezashi, raw.celtic),
            excluded_by: raw.excluded_by,
        }
    }

    pub fn is_hitomezashi_compatible(self) -> bool {
        CATALOGUE[self.0 as usize].hitomezashi
    }

    /// The impossibility results this label falls under, read off its symbols:
    /// m on axis c; a pure half turn on axis a or b; m on a together with a on c.
    pub fn violated_theorems(self) -> Vec<Theorem> {
        let [a, b, c] = self.symbols();
        let mut out = Vec::new();
        if c.contains(&Symbol::Mirror) {
            out.push(Theorem::NoPlaneMirror);
        }
        if a.contains(&Symbol::Rotation) || b.contains(&Symbol::Rotation) {
            out.push(Theorem::NoPureHalfTurn);
        }
        if a.contains(&Symbol::Mirror) && c.contains(&Symbol::Glide) {
            out.push(Theorem::NoMirrorWithPlaneGlide);
        }
        out
    }

    fn from_kinds(kinds: SymmetryKinds) -> Option<GroupLabel> {
        GroupLabel::all().find(|l| l.kinds() == kinds)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupLabel({})", self.as_str())
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    /// Accepts the canonical bracket form (`p11[2a]`) and the typeset forms:
    /// stacked pairs as `2/a` or `(2a)`, primes as `'`, `′` or `’`, and the
    /// roto-reflection as `~2` or `2̃` (combining tilde).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [a, b, c] = parse_positions(s.trim()).ok_or(Error::UnknownLabel)?;
        GroupLabel::all()
            .find(|l| l.symbols() == [a.clone(), b.clone(), c.clone()])
            .ok_or(Error::UnknownLabel)
    }
}

fn kinds_of(
    a: &BTreeSet<Symbol>,
    b: &BTreeSet<Symbol>,
    c: &BTreeSet<Symbol>,
) -> Option<SymmetryKinds> {
    let mut generators = Vec::new();
    for (axis, symbols) in Axis::ALL.into_iter().zip([a, b, c]) {
        for s in symbols {
            generators.push(s.kind_on(axis)?);
        }
    }
    SymmetryKinds::generated_by(generators)
}

/// Splits a label into its three positions. `None` if malformed or if a
/// symbol appears on an axis where it cannot.
fn parse_positions(label: &str) -> Option<[BTreeSet<Symbol>; 3]> {
    let mut chars = label.chars().peekable();
    if !matches!(chars.next(), Some('p' | 'P')) {
        return None;
    }

    fn symbol(chars: &mut core::iter::Peekable<core::str::Chars<'_>>) -> Option<Option<Symbol>> {
        let c = chars.next()?;
        let s = match c {
            '1' => return Some(None),
            'm' => Symbol::Mirror,
            'a' => Symbol::Glide,
            '~' | '˜' => {
                if chars.next()? != '2' {
                    return None;
                }
                Symbol::RotoReflection
            }
            '2' => match chars.peek() {
                Some('\'' | '′' | '’' | 'ʹ') => {
                    chars.next();
                    Symbol::Screw
                }
                Some('\u{303}') => {
                    chars.next();
                    Symbol::RotoReflection
                }
                _ => Symbol::Rotation,
            },
            _ => return None,
        };
        Some(Some(s))
    }

    let mut positions: [BTreeSet<Symbol>; 3] = Default::default();
    for (axis, slot) in Axis::ALL.into_iter().zip(positions.iter_mut()) {
        let mut found = Vec::new();
        match chars.peek()? {
            '[' | '(' => {
                let close = if chars.next()? == '[' { ']' } else { ')' };
                while chars.peek()? != &close {
                    found.push(symbol(&mut chars)??);
                }
                chars.next();
                if found.len() < 2 {
                    return None;
                }
            }
            _ => {
                match symbol(&mut chars)? {
                    None => {}
                    Some(s) => found.push(s),
                }
                if chars.peek() == Some(&'/') {
                    chars.next();
                    found.push(symbol(&mut chars)??);
                    if found.len() != 2 {
                        return None;
                    }
                }
            }
        }
        for s in found {
            s.kind_on(axis)?;
            if !slot.insert(s) {
                return None;
            }
        }
    }
    if chars.next().is_some() {
        return None;
    }
    Some(positions)
}

/// Renders three symbol sets as a label string, without catalogue lookup.
pub fn render_positions(positions: &[BTreeSet<Symbol>; 3]) -> String {
    let mut out = String::from("p");
    for symbols in positions {
        match symbols.len() {
            0 => out.push('1'),
            1 => out.push_str(symbols.iter().next().unwrap().as_str()),
            _ => {
                out.push('[');
                for s in symbols {
                    out.push_str(s.as_str());
                }
                out.push(']');
            }
        }
    }
    out
}

/// A catalogue row: the label with its realisation metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub label: GroupLabel,
    pub hitomezashi_realizable: bool,
    pub celtic_realizable: bool,
    pub realization_class: RealizationClass,
    /// For labels that cannot be stitched: the impossibility results that rule them out.
    pub excluded_by: &'static [Theorem],
}

/// All 31 two-sided frieze groups.
pub fn catalogue() -> Vec<CatalogueEntry> {
    GroupLabel::all().map(GroupLabel::entry).collect()
}

/// Symbols detected per axis, with a witnessing isometry for each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymmetrySignature {
    pub axis_a: BTreeSet<Symbol>,
    pub axis_b: BTreeSet<Symbol>,
    pub axis_c: BTreeSet<Symbol>,
    pub anchors: BTreeMap<(Axis, Symbol), Isometry>,
}

impl SymmetrySignature {
    /// A signature without anchors, e.g. for label lookup.
    pub fn from_symbols(
        axis_a: impl IntoIterator<Item = Symbol>,
        axis_b: impl IntoIterator<Item = Symbol>,
        axis_c: impl IntoIterator<Item = Symbol>,
    ) -> Self {
        Self {
            axis_a: axis_a.into_iter().collect(),
            axis_b: axis_b.into_iter().collect(),
            axis_c: axis_c.into_iter().collect(),
            anchors: BTreeMap::new(),
        }
    }

    pub fn axis(&self, axis: Axis) -> &BTreeSet<Symbol> {
        match axis {
            Axis::A => &self.axis_a,
            Axis::B => &self.axis_b,
            Axis::C => &self.axis_c,
        }
    }

    fn axis_mut(&mut self, axis: Axis) -> &mut BTreeSet<Symbol> {
        match axis {
            Axis::A => &mut self.axis_a,
            Axis::B => &mut self.axis_b,
            Axis::C => &mut self.axis_c,
        }
    }

    pub fn kinds(&self) -> Option<SymmetryKinds> {
        kinds_of(&self.axis_a, &self.axis_b, &self.axis_c)
    }

    /// The signature spelled out directly, e.g. `p[2'm]1~2`; may not be a catalogue label.
    pub fn literal(&self) -> String {
        render_positions(&[self.axis_a.clone(), self.axis_b.clone(), self.axis_c.clone()])
    }
}

/// Every symmetry of `p` among the candidates, with shifts reduced modulo
/// the translation period `P`.
///
/// Direction-preserving point parts are tried with translations `0` and
/// `P/2` only: the square of such an element is a translation, so any other
/// shift would contradict the minimality of `P`. Direction-reversing ones
/// are tried at every anchor `c ∈ {0, 1/2, …, P - 1/2}`.
pub fn find_symmetries(p: &FriezePattern) -> Vec<Isometry> {
    let period = p.translation_period() as i64;
    let mut found = Vec::new();
    for pp in PointPart::ALL {
        let offsets: Vec<i64> = if pp.keeps_direction() {
            alloc::vec![0, period / 2]
        } else {
            (0..2 * period).collect()
        };
        found.extend(
            offsets
                .into_iter()
                .map(|o| Isometry::from_point_part(pp, o))
                .filter(|g| is_symmetry(p, g)),
        );
    }
    found
}

/// The kind of a symmetry found by [`find_symmetries`] for a pattern of period `period`.
pub fn kind_of(g: &Isometry, period: usize) -> Kind {
    let reduced = g.reduced(period);
    Kind::new(g.point_part(), reduced.offset() != 0)
}

/// Detects all symbols realised by `p`.
///
/// The signature lists every detected kind, including ones a label leaves
/// implicit (a `p[2'm]11` pattern reports `~2` on axis c). When a mirror and
/// a glide of the same family both appear only `m` is reported.
pub fn detect_signature(p: &FriezePattern) -> Result<SymmetrySignature, Error> {
    let period = p.translation_period();
    let mut sig = SymmetrySignature::default();
    for g in find_symmetries(p) {
        let Some((axis, symbol)) = Symbol::of_kind(kind_of(&g, period)) else {
            continue;
        };
        sig.axis_mut(axis).insert(symbol);
        sig.anchors.entry((axis, symbol)).or_insert(g);
    }
    for axis in [Axis::B, Axis::C] {
        if sig.axis(axis).contains(&Symbol::Mirror) && sig.axis(axis).contains(&Symbol::Glide) {
            sig.axis_mut(axis).remove(&Symbol::Glide);
            sig.anchors.remove(&(axis, Symbol::Glide));
        }
    }
    debug_assert!(
        !(sig.axis_a.contains(&Symbol::Rotation) && sig.axis_a.contains(&Symbol::Screw)),
        "a half turn and a screw about a would make P/2 a translation"
    );
    signature_to_label(&sig)?;
    Ok(sig)
}

/// The catalogue label of the group generated by the signature's symbols.
pub fn signature_to_label(sig: &SymmetrySignature) -> Result<GroupLabel, Error> {
    sig.kinds()
        .and_then(GroupLabel::from_kinds)
        .ok_or(Error::SignatureNotInCatalogue)
}

/// Result of classifying one pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub pattern: FriezePattern,
    pub label: GroupLabel,
    pub period: usize,
    pub signature: SymmetrySignature,
}

pub fn classify(p: &FriezePattern) -> Result<ClassificationReport, Error> {
    let signature = detect_signature(p)?;
    Ok(ClassificationReport {
        pattern: p.clone(),
        label: signature_to_label(&signature)?,
        period: p.translation_period(),
        signature,
    })
}
