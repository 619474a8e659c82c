use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A binary word must contain at least one bit.
    EmptyWord,
    /// A word literal contained something other than `0` or `1`.
    InvalidDigit { found: char, position: usize },
    /// The horizontal word must have at least two rows.
    DegenerateHeight { height: usize },
    /// A segment row index is outside the strip.
    RowOutOfRange { row: usize, height: usize },
    /// The detected symmetries do not form one of the 31 two-sided frieze groups.
    SignatureNotInCatalogue,
    /// A label that is not one of the 31 catalogue labels.
    UnknownLabel,
    /// Enumeration bounds below the minimum (`max_x >= 1`, `max_y >= 2`).
    InvalidBounds { max_x: usize, max_y: usize },
    /// Rendering options out of range.
    InvalidRenderOptions,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => f.write_str("binary word must not be empty"),
            Error::InvalidDigit { found, position } => {
                write!(f, "invalid binary digit {found:?} at position {position}")
            }
            Error::DegenerateHeight { height } => {
                write!(f, "frieze height must be at least 2, got |y| = {height}")
            }
            Error::RowOutOfRange { row, height } => {
                write!(f, "row {row} is outside a frieze of height {height}")
            }
            Error::SignatureNotInCatalogue => {
                f.write_str("symmetry signature does not match any two-sided frieze group")
            }
            Error::UnknownLabel => f.write_str("unknown two-sided frieze group label"),
            Error::InvalidBounds { max_x, max_y } => write!(
                f,
                "enumeration bounds need max_x >= 1 and max_y >= 2, got ({max_x}, {max_y})"
            ),
            Error::InvalidRenderOptions => {
                f.write_str("render options need periods >= 1 and a positive cell size")
            }
        }
    }
}

impl core::error::Error for Error {}
