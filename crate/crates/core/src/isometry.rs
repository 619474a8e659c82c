//! Isometries of the two-sided strip and the symmetry oracle.
//!
//! Every isometry that maps the strip to itself acts on the column
//! coordinate `u` as `u ↦ su·u + offset`, flips the rows about the centre line
//! when `sv = -1`, and swaps the two faces when `sz = -1`. Working with the
//! integer `offset` keeps all arithmetic exact: for `su = +1` it is the
//! translation `t`, for `su = -1` it is `2c` where `c` is the mirror or
//! rotation anchor (a whole or half column).

use core::fmt;

use crate::pattern::{FriezePattern, Orientation, SegmentId, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub const fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Plus, s) | (s, Sign::Plus) => s,
            (Sign::Minus, Sign::Minus) => Sign::Plus,
        }
    }

    pub fn from_value(value: i64) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The linear part of an isometry: one sign per axis (a, b, c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPart {
    pub su: Sign,
    pub sv: Sign,
    pub sz: Sign,
}

impl PointPart {
    pub const fn new(su: Sign, sv: Sign, sz: Sign) -> Self {
        Self { su, sv, sz }
    }

    pub const IDENTITY: Self = Self::new(Sign::Plus, Sign::Plus, Sign::Plus);

    /// All eight point parts, identity first.
    pub const ALL: [PointPart; 8] = {
        use Sign::{Minus as M, Plus as P};
        [
            Self::new(P, P, P),
            Self::new(M, P, P),
            Self::new(P, M, P),
            Self::new(M, M, P),
            Self::new(P, P, M),
            Self::new(M, P, M),
            Self::new(P, M, M),
            Self::new(M, M, M),
        ]
    };

    pub const fn times(self, other: PointPart) -> PointPart {
        Self::new(
            self.su.times(other.su),
            self.sv.times(other.sv),
            self.sz.times(other.sz),
        )
    }

    /// Whether the point part preserves the direction along the strip.
    pub const fn keeps_direction(self) -> bool {
        matches!(self.su, Sign::Plus)
    }

    /// Position of the point part in `ALL`, a compact index in `0..8`.
    pub const fn index(self) -> usize {
        (matches!(self.su, Sign::Minus) as usize)
            | (matches!(self.sv, Sign::Minus) as usize) << 1
            | (matches!(self.sz, Sign::Minus) as usize) << 2
    }
}

/// A two-sided frieze isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry {
    pub su: Sign,
    pub sv: Sign,
    pub sz: Sign,
    offset: i64,
}

impl Isometry {
    pub const IDENTITY: Self = Self::translation(0);

    pub const fn translation(t: i64) -> Self {
        Self { su: Sign::Plus, sv: Sign::Plus, sz: Sign::Plus, offset: t }
    }

    /// An isometry with `su = +1`, translating by `t` columns.
    pub const fn with_translation(sv: Sign, sz: Sign, t: i64) -> Self {
        Self { su: Sign::Plus, sv, sz, offset: t }
    }

    /// An isometry with `su = -1` anchored at column `anchor_halves / 2`,
    /// acting on columns as `i ↦ 2c - i`.
    pub const fn with_anchor(sv: Sign, sz: Sign, anchor_halves: i64) -> Self {
        Self { su: Sign::Minus, sv, sz, offset: anchor_halves }
    }

    /// The point part `pp` combined with its column parameter: the translation
    /// when `pp` keeps direction, twice the anchor otherwise.
    pub const fn from_point_part(pp: PointPart, offset: i64) -> Self {
        Self { su: pp.su, sv: pp.sv, sz: pp.sz, offset }
    }

    /// Builds an isometry from its signs and its shift given in half columns.
    /// Returns `None` when `su = +1` and the shift is not a whole number of columns.
    pub fn from_shift_halves(su: Sign, sv: Sign, sz: Sign, shift_halves: i64) -> Option<Self> {
        match su {
            Sign::Plus if shift_halves % 2 != 0 => None,
            Sign::Plus => Some(Self::with_translation(sv, sz, shift_halves / 2)),
            Sign::Minus => Some(Self::with_anchor(sv, sz, shift_halves)),
        }
    }

    pub const fn point_part(&self) -> PointPart {
        PointPart::new(self.su, self.sv, self.sz)
    }

    /// `u ↦ su·u + offset` on column centres.
    pub const fn offset(&self) -> i64 {
        self.offset
    }

    /// Twice the shift: the translation for `su = +1`, the anchor for `su = -1`.
    pub const fn shift_halves(&self) -> i64 {
        match self.su {
            Sign::Plus => 2 * self.offset,
            Sign::Minus => self.offset,
        }
    }

    pub fn shift(&self) -> f64 {
        self.shift_halves() as f64 / 2.0
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Image of a segment on a given side, for a frieze of height `h`.
    pub fn apply(&self, s: SegmentId, side: Side, h: usize) -> (SegmentId, Side) {
        let i = match (self.su, s.orientation) {
            (Sign::Plus, _) => s.i + self.offset,
            (Sign::Minus, Orientation::Vertical) => self.offset - s.i,
            (Sign::Minus, Orientation::Horizontal) => self.offset - s.i - 1,
        };
        let j = match (self.sv, s.orientation) {
            (Sign::Plus, _) => s.j,
            (Sign::Minus, Orientation::Vertical) => h - 2 - s.j,
            (Sign::Minus, Orientation::Horizontal) => h - 1 - s.j,
        };
        let side = match self.sz {
            Sign::Plus => side,
            Sign::Minus => side.flipped(),
        };
        (SegmentId { orientation: s.orientation, i, j }, side)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            su: self.su.times(other.su),
            sv: self.sv.times(other.sv),
            sz: self.sz.times(other.sz),
            offset: self.su.value() * other.offset + self.offset,
        }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry { offset: -self.su.value() * self.offset, ..*self }
    }

    /// Canonical representative modulo translations by multiples of `period`:
    /// translation part in `0..period`, or anchor in `0..period` (half steps).
    pub fn reduced(&self, period: usize) -> Isometry {
        let modulus = match self.su {
            Sign::Plus => period as i64,
            Sign::Minus => 2 * period as i64,
        };
        Isometry { offset: self.offset.rem_euclid(modulus), ..*self }
    }

    /// A short human description, e.g. "mirror ⊥ a at column 1.5".
    pub fn describe(&self) -> Description {
        Description(*self)
    }
}

/// Displays an isometry in words; see [`Isometry::describe`].
pub struct Description(Isometry);

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Sign::{Minus as M, Plus as P};
        let g = self.0;
        let shift = HalfColumns(g.shift_halves());
        match (g.su, g.sv, g.sz) {
            (P, P, P) if g.offset == 0 => f.write_str("identity"),
            (P, P, P) => write!(f, "translation by {shift}"),
            (M, P, P) => write!(f, "mirror ⊥ a at column {shift}"),
            (P, M, P) if g.offset == 0 => f.write_str("mirror ⊥ b"),
            (P, M, P) => write!(f, "glide reflection ⊥ b with glide {shift}"),
            (M, M, P) => write!(f, "rotation about c at column {shift}"),
            (P, P, M) if g.offset == 0 => f.write_str("reflection in the frieze plane"),
            (P, P, M) => write!(f, "glide reflection in the frieze plane with glide {shift}"),
            (M, P, M) => write!(f, "rotation about b at column {shift}"),
            (P, M, M) if g.offset == 0 => f.write_str("rotation about a"),
            (P, M, M) => write!(f, "screw about a with translation {shift}"),
            (M, M, M) => write!(f, "roto-reflection centred at column {shift}"),
        }
    }
}

/// A length given in half columns, printed as a decimal (`3` → `1.5`).
struct HalfColumns(i64);

impl fmt::Display for HalfColumns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let halves = self.0;
        if halves % 2 == 0 {
            write!(f, "{}", halves / 2)
        } else {
            let sign = if halves < 0 { "-" } else { "" };
            write!(f, "{sign}{}.5", halves.abs() / 2)
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |s: Sign| if s == Sign::Plus { "+1" } else { "-1" };
        write!(
            f,
            "{{su:{}, sv:{}, sz:{}, shift:{}}}",
            sign(self.su),
            sign(self.sv),
            sign(self.sz),
            HalfColumns(self.shift_halves())
        )
    }
}

/// Whether `g` maps the two-sided frieze onto itself.
///
/// Checks every segment of one translation period on both sides; the
/// pattern's periodicity makes one period sufficient.
pub fn is_symmetry(p: &FriezePattern, g: &Isometry) -> bool {
    let h = p.height();
    let period = p.translation_period() as i64;
    let rows = |o: Orientation| match o {
        Orientation::Vertical => h - 1,
        Orientation::Horizontal => h,
    };
    [Orientation::Vertical, Orientation::Horizontal]
        .into_iter()
        .all(|o| {
            (0..rows(o)).all(|j| {
                (0..period).all(|i| {
                    let s = SegmentId { orientation: o, i, j };
                    Side::BOTH.into_iter().all(|side| {
                        let (image, image_side) = g.apply(s, side, h);
                        p.present_unchecked(s, side) == p.present_unchecked(image, image_side)
                    })
                })
            })
        })
}
