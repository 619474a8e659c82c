//! Drawings of both sides of a frieze.
//!
//! The front is drawn above the back. The back is drawn as seen in a mirror
//! held behind the fabric, so left, right, top and bottom agree between the
//! two blocks and each back cell is the complement of the front cell above it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::classify::classify;
use crate::pattern::{FriezePattern, SegmentId, Side};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SideOrder {
    #[default]
    FrontAboveBack,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Translation periods drawn side by side.
    pub periods: usize,
    /// Length of one stitch in SVG user units.
    pub cell_size: f64,
    /// Spacing between the front and back blocks, in rows.
    pub gap_rows: usize,
    pub side_order: SideOrder,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            periods: 2,
            cell_size: 20.0,
            gap_rows: 1,
            side_order: SideOrder::FrontAboveBack,
        }
    }
}

impl RenderOptions {
    pub fn new(periods: usize, cell_size: f64, gap_rows: usize) -> Result<Self, Error> {
        let opts = Self { periods, cell_size, gap_rows, side_order: SideOrder::FrontAboveBack };
        opts.validate()?;
        Ok(opts)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.periods == 0 || self.cell_size.is_nan() || self.cell_size <= 0.0 {
            return Err(Error::InvalidRenderOptions);
        }
        Ok(())
    }
}

/// Presence of every segment with `0 <= i < width` on one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitchGrid {
    pub width: usize,
    pub height: usize,
    /// `vertical[j][i]`, `j` in `0..height - 1`.
    pub vertical: Vec<Vec<bool>>,
    /// `horizontal[j][i]`, `j` in `0..height`.
    pub horizontal: Vec<Vec<bool>>,
}

impl StitchGrid {
    pub fn of(p: &FriezePattern, side: Side, width: usize) -> Self {
        let h = p.height();
        let row = |s: fn(i64, usize) -> SegmentId, j: usize| -> Vec<bool> {
            (0..width as i64)
                .map(|i| p.present_unchecked(s(i, j), side))
                .collect()
        };
        Self {
            width,
            height: h,
            vertical: (0..h - 1).map(|j| row(SegmentId::vertical, j)).collect(),
            horizontal: (0..h).map(|j| row(SegmentId::horizontal, j)).collect(),
        }
    }

    fn empty(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            vertical: vec![vec![false; width]; height - 1],
            horizontal: vec![vec![false; width]; height],
        }
    }

    pub fn stitch_count(&self) -> usize {
        self.vertical.iter().chain(&self.horizontal).flatten().filter(|b| **b).count()
    }

    /// Whether every slot is a stitch in exactly one of the two grids.
    pub fn is_complement_of(&self, other: &StitchGrid) -> bool {
        let flip = |a: &Vec<Vec<bool>>, b: &Vec<Vec<bool>>| {
            a.len() == b.len()
                && a.iter().zip(b).all(|(r, s)| {
                    r.len() == s.len() && r.iter().zip(s).all(|(u, v)| u != v)
                })
        };
        flip(&self.vertical, &other.vertical) && flip(&self.horizontal, &other.horizontal)
    }

    // Rows are printed top first: row h-1 at the top of the block.
    fn write_ascii(&self, out: &mut String) {
        for j in (0..self.height).rev() {
            for i in 0..self.width {
                out.push('+');
                out.push_str(if self.horizontal[j][i] { "--" } else { "  " });
            }
            out.push_str("+\n");
            if j > 0 {
                for i in 0..self.width {
                    out.push(if self.vertical[j - 1][i] { '|' } else { ' ' });
                    out.push_str("  ");
                }
                out.push_str(" \n");
            }
        }
    }

    fn read_ascii(lines: &[&str], width: usize, height: usize) -> Self {
        let mut grid = Self::empty(width, height);
        let char_at = |line: &str, k: usize| line.chars().nth(k).unwrap_or(' ');
        for (row, line) in lines.iter().enumerate() {
            // even lines are vertex rows h-1, h-2, ...; odd lines hold the
            // vertical stitches just below the preceding vertex row
            let j = height - 1 - row / 2;
            for i in 0..width {
                if row % 2 == 0 {
                    grid.horizontal[j][i] = char_at(line, 3 * i + 1) == '-';
                } else {
                    grid.vertical[j - 1][i] = char_at(line, 3 * i) == '|';
                }
            }
        }
        grid
    }
}

/// Number of columns drawn: `periods · P`.
pub fn drawn_width(p: &FriezePattern, opts: &RenderOptions) -> usize {
    opts.periods * p.translation_period()
}

/// Text drawing: `+` at vertices, `|` and `--` for stitches, blanks for gaps.
///
/// The front block comes first, then `gap_rows` blank lines, then the back
/// block. Each block has `2h - 1` lines.
pub fn render_ascii(p: &FriezePattern, opts: &RenderOptions) -> String {
    let width = drawn_width(p, opts);
    let mut out = String::new();
    StitchGrid::of(p, Side::Front, width).write_ascii(&mut out);
    for _ in 0..opts.gap_rows {
        out.push('\n');
    }
    StitchGrid::of(p, Side::Back, width).write_ascii(&mut out);
    out
}

/// Reads the front and back grids back from [`render_ascii`] output.
pub fn parse_ascii(text: &str, height: usize) -> Option<(StitchGrid, StitchGrid)> {
    let lines: Vec<&str> = text.lines().collect();
    let block = 2 * height - 1;
    let first = lines.get(..block)?;
    let width = first[0].trim_end().len().checked_sub(1)? / 3;
    let back_start = block + lines[block..].iter().position(|l| l.starts_with('+'))?;
    let second = lines.get(back_start..back_start + block)?;
    Some((
        StitchGrid::read_ascii(first, width, height),
        StitchGrid::read_ascii(second, width, height),
    ))
}

/// Standalone SVG: one `<line>` per stitch, front group above back group.
///
/// The root element carries `data-x`, `data-y` and `data-label`.
pub fn render_svg(p: &FriezePattern, opts: &RenderOptions) -> String {
    let width = drawn_width(p, opts);
    let h = p.height();
    let cell = opts.cell_size;
    let margin = cell;
    let block_height = (h - 1) as f64 * cell;
    let back_top = margin + block_height + opts.gap_rows as f64 * cell;
    let total_width = width as f64 * cell + 2.0 * margin;
    let total_height = back_top + block_height + margin;
    let label = classify(p)
        .map(|r| r.label.as_str())
        .unwrap_or("unclassified");

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_width}" height="{total_height}" viewBox="0 0 {total_width} {total_height}" data-x="{}" data-y="{}" data-label="{label}">"#,
        p.x(),
        p.y()
    );
    for (side, name, top, colour) in [
        (Side::Front, "front", margin, "#1f3a93"),
        (Side::Back, "back", back_top, "#b03a2e"),
    ] {
        let grid = StitchGrid::of(p, side, width);
        let _ = writeln!(
            out,
            r#"  <g id="{name}" class="{name}" stroke="{colour}" stroke-width="{}" stroke-linecap="round" fill="none">"#,
            cell / 5.0
        );
        // row j sits at top + (h - 1 - j) · cell
        let row_y = |j: usize| top + (h - 1 - j) as f64 * cell;
        let col_x = |i: usize| margin + i as f64 * cell;
        for (j, row) in grid.horizontal.iter().enumerate() {
            for (i, _) in row.iter().enumerate().filter(|(_, b)| **b) {
                let _ = writeln!(
                    out,
                    r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    col_x(i),
                    row_y(j),
                    col_x(i + 1),
                    row_y(j)
                );
            }
        }
        for (j, row) in grid.vertical.iter().enumerate() {
            for (i, _) in row.iter().enumerate().filter(|(_, b)| **b) {
                let _ = writeln!(
                    out,
                    r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    col_x(i),
                    row_y(j),
                    col_x(i),
                    row_y(j + 1)
                );
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}
