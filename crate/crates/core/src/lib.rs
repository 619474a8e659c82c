//! Two-sided hitomezashi friezes.
//!
//! A hitomezashi frieze is a strip of running stitch on a square grid. The
//! vertical lines are described by a periodic binary word `x`, the horizontal
//! lines by a finite word `y`. Because every stitch on the front sits over a
//! gap on the back, the strip is a two-sided frieze and its symmetry group is
//! one of the 31 two-sided frieze groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`word`]: binary words and their complement, reverse and rotation.
//! - [`pattern`]: the frieze itself, stitch presence on either side, duality.
//! - [`isometry`]: the finite isometries of the strip and the brute-force
//!   symmetry oracle.
//! - [`classify`]: symmetry signatures, group labels and the catalogue.
//! - [`theorems`]: word lemmas, the word maps behind the impossibility
//!   results, and exhaustive enumeration.
//! - [`render`]: ASCII and SVG drawings of both sides.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod classify;
pub mod isometry;
pub mod pattern;
pub mod render;
pub mod theorems;
pub mod word;

pub use classify::{
    catalogue, classify, detect_signature, signature_to_label, CatalogueEntry,
    ClassificationReport, GroupLabel, RealizationClass, Symbol, SymmetrySignature,
};
pub use error::Error;
pub use isometry::{Isometry, Sign};
pub use pattern::{FriezePattern, Orientation, SegmentId, Side};
pub use word::BinaryWord;

pub type Result<T, E = Error> = core::result::Result<T, E>;
