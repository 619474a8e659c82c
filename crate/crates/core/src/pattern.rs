//! The two-sided frieze: stitch presence on a grid, duality and translations.
//!
//! Coordinates: vertical line `i` sits at column `i`; horizontal line `j` sits
//! at row `j`, rows numbered bottom to top, `0..h` with `h = |y|`. The first
//! stitch of each line (index 0) is the reference stitch whose state the
//! corresponding bit of `x` or `y` records.

use alloc::vec::Vec;
use core::fmt;

use crate::word::BinaryWord;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// One unit stitch slot of the grid.
///
/// For a vertical segment `i` is the column of its line and `j` the lower row
/// (`0 <= j <= h - 2`). For a horizontal segment `i` is the column of its left
/// end and `j` its row (`0 <= j <= h - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentId {
    pub orientation: Orientation,
    pub i: i64,
    pub j: usize,
}

impl SegmentId {
    pub const fn vertical(i: i64, j: usize) -> Self {
        Self { orientation: Orientation::Vertical, i, j }
    }

    pub const fn horizontal(i: i64, j: usize) -> Self {
        Self { orientation: Orientation::Horizontal, i, j }
    }

    /// Whether `j` is a valid row for this orientation in a frieze of height `h`.
    pub fn fits_height(&self, h: usize) -> bool {
        match self.orientation {
            Orientation::Vertical => self.j + 1 < h,
            Orientation::Horizontal => self.j < h,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Front,
    Back,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Front, Side::Back];

    pub fn flipped(self) -> Self {
        match self {
            Side::Front => Side::Back,
            Side::Back => Side::Front,
        }
    }
}

/// A hitomezashi frieze: periodic vertical word `x`, horizontal word `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FriezePattern {
    x: BinaryWord,
    y: BinaryWord,
}

impl FriezePattern {
    /// Builds a frieze. `x` is kept exactly as given; `|y| >= 2` is required
    /// because a single row has no vertical stitches.
    pub fn new(x: BinaryWord, y: BinaryWord) -> Result<Self, Error> {
        if y.len() < 2 {
            return Err(Error::DegenerateHeight { height: y.len() });
        }
        Ok(Self { x, y })
    }

    /// Parses both words from 0/1 strings.
    pub fn parse(x: &str, y: &str) -> Result<Self, Error> {
        Self::new(x.parse()?, y.parse()?)
    }

    pub fn x(&self) -> &BinaryWord {
        &self.x
    }

    pub fn y(&self) -> &BinaryWord {
        &self.y
    }

    /// Number of horizontal lines, `|y|`.
    pub fn height(&self) -> usize {
        self.y.len()
    }

    pub fn front_present(&self, s: SegmentId) -> Result<bool, Error> {
        if !s.fits_height(self.height()) {
            return Err(Error::RowOutOfRange { row: s.j, height: self.height() });
        }
        Ok(self.front_unchecked(s))
    }

    pub fn back_present(&self, s: SegmentId) -> Result<bool, Error> {
        self.front_present(s).map(|present| !present)
    }

    pub fn present(&self, s: SegmentId, side: Side) -> Result<bool, Error> {
        match side {
            Side::Front => self.front_present(s),
            Side::Back => self.back_present(s),
        }
    }

    /// Presence on the front for a segment already known to fit the height.
    pub(crate) fn front_unchecked(&self, s: SegmentId) -> bool {
        match s.orientation {
            Orientation::Vertical => self.x.periodic(s.i) ^ (s.j % 2 == 1),
            Orientation::Horizontal => self.y.bits()[s.j] ^ (s.i.rem_euclid(2) == 1),
        }
    }

    pub(crate) fn present_unchecked(&self, s: SegmentId, side: Side) -> bool {
        self.front_unchecked(s) ^ (side == Side::Back)
    }

    /// The pattern seen on the back of the fabric.
    pub fn dual(&self) -> Self {
        Self {
            x: self.x.complement(),
            y: self.y.complement(),
        }
    }

    /// Least `P > 0` such that shifting by `P` columns is a symmetry.
    ///
    /// An odd shift complements every horizontal line's phase, which is never
    /// a symmetry since `y != y^C`, so `P` is the least even shift fixing the
    /// periodic extension of `x`. It always divides `2|x|`.
    pub fn translation_period(&self) -> usize {
        let primitive = self.x.primitive_period();
        if primitive.is_multiple_of(2) {
            primitive
        } else {
            2 * primitive
        }
    }

    /// Every segment slot with `0 <= i < P`: `P(h-1)` vertical then `Ph` horizontal.
    pub fn segments_in_period(&self) -> Vec<SegmentId> {
        self.segments_in_columns(self.translation_period())
    }

    /// Every segment slot with `0 <= i < width`, verticals first, each in row-major order.
    pub fn segments_in_columns(&self, width: usize) -> Vec<SegmentId> {
        let h = self.height();
        let mut out = Vec::with_capacity(width * (2 * h - 1));
        for j in 0..h - 1 {
            out.extend((0..width as i64).map(|i| SegmentId::vertical(i, j)));
        }
        for j in 0..h {
            out.extend((0..width as i64).map(|i| SegmentId::horizontal(i, j)));
        }
        out
    }

    /// Whether the two patterns draw the same frieze after shifting `other`
    /// right by `shift` columns: `self(i) == other(i - shift)` for every segment.
    pub fn equals_shifted(&self, other: &Self, shift: i64) -> bool {
        if self.height() != other.height() {
            return false;
        }
        let flip = shift.rem_euclid(2) == 1;
        let rows_match = self
            .y
            .bits()
            .iter()
            .zip(other.y.bits())
            .all(|(a, b)| *a == (*b ^ flip));
        rows_match && self.x.periodic_eq(&other.x.rotate(-shift))
    }
}

impl fmt::Display for FriezePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y={}", self.x, self.y)
    }
}

impl fmt::Debug for FriezePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FriezePattern({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str, y: &str) -> FriezePattern {
        FriezePattern::parse(x, y).unwrap()
    }

    #[test]
    fn construction() {
        assert!(FriezePattern::parse("01", "0100").is_ok());
        assert!(FriezePattern::parse("1000110", "100110").is_ok());
        assert_eq!(
            FriezePattern::parse("1", "1"),
            Err(Error::DegenerateHeight { height: 1 })
        );
        // x is stored as given, not reduced
        assert_eq!(p("0101", "00").x().len(), 4);
    }

    #[test]
    fn presence_examples() {
        let q = p("10", "1010");
        assert_eq!(q.front_present(SegmentId::vertical(0, 0)), Ok(true));
        assert_eq!(q.front_present(SegmentId::vertical(0, 1)), Ok(false));
        assert_eq!(q.front_present(SegmentId::horizontal(1, 0)), Ok(false));
        assert_eq!(q.back_present(SegmentId::vertical(0, 0)), Ok(false));
        assert_eq!(q.back_present(SegmentId::vertical(0, 1)), Ok(true));
    }

    #[test]
    fn presence_row_range() {
        let q = p("10", "1010");
        assert_eq!(
            q.front_present(SegmentId::vertical(0, 3)),
            Err(Error::RowOutOfRange { row: 3, height: 4 })
        );
        assert!(q.front_present(SegmentId::horizontal(0, 3)).is_ok());
        assert!(q.back_present(SegmentId::horizontal(-5, 4)).is_err());
    }

    #[test]
    fn negative_columns_follow_periodicity() {
        let q = p("1000110", "100110");
        for i in -30..30 {
            for j in 0..5 {
                assert_eq!(
                    q.front_present(SegmentId::vertical(i, j)),
                    q.front_present(SegmentId::vertical(i + 7, j))
                );
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("1000110", "100110").dual(), p("0111001", "011001"));
        assert_eq!(p("10", "1010").dual(), p("01", "0101"));
        let q = p("01", "0100");
        assert_eq!(q.dual().dual(), q);
    }

    #[test]
    fn dual_front_is_back() {
        let q = p("0011", "0111");
        let d = q.dual();
        for s in q.segments_in_period() {
            assert_eq!(d.front_present(s), q.back_present(s));
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(p("01", "00").translation_period(), 2);
        assert_eq!(p("1000110", "00").translation_period(), 14);
        assert_eq!(p("1001", "00").translation_period(), 4);
        assert_eq!(p("0101", "00").translation_period(), 2);
        assert_eq!(p("0", "00").translation_period(), 2);
    }

    #[test]
    fn segment_counts() {
        assert_eq!(p("01", "0100").segments_in_period().len(), 14);
        assert_eq!(p("10", "1010").segments_in_period().len(), 14);
        let long = p("1000110", "100110").segments_in_period();
        assert_eq!(long.len(), 154);
        let verticals = long
            .iter()
            .filter(|s| s.orientation == Orientation::Vertical)
            .count();
        assert_eq!(verticals, 70);
    }

    #[test]
    fn shifted_equality() {
        let q = p("0011", "0111");
        assert!(q.equals_shifted(&q, 0));
        assert!(q.equals_shifted(&q, 4));
        assert!(!q.equals_shifted(&q, 2));
        // an odd shift flips every row's phase
        assert!(p("1001", "10").equals_shifted(&p("0011", "01"), 1));
    }
}
