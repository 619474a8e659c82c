//! Finite binary words.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// A non-empty finite sequence of bits.
///
/// Words are values: every operation returns a new word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

#[allow(clippy::len_without_is_empty)]
impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Result<Self, Error> {
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { bits })
    }

    /// The word of length `len` whose bits spell `value` in binary, most
    /// significant bit first. Used for length-lexicographic enumeration.
    pub fn from_index(value: u64, len: usize) -> Result<Self, Error> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        assert!(len <= 64, "word index only covers lengths up to 64");
        let bits = (0..len).map(|k| (value >> (len - 1 - k)) & 1 == 1).collect();
        Ok(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        self.bits.get(index).copied()
    }

    /// Bit `index` of the infinite periodic extension of the word.
    pub fn periodic(&self, index: i64) -> bool {
        self.bits[index.rem_euclid(self.bits.len() as i64) as usize]
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    /// `result[i] = self[(i + k) mod |self|]`; any `k`, positive or negative.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.bits.len() as i64;
        let start = k.rem_euclid(n) as usize;
        let mut bits = Vec::with_capacity(self.bits.len());
        bits.extend_from_slice(&self.bits[start..]);
        bits.extend_from_slice(&self.bits[..start]);
        Self { bits }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Self { bits }
    }

    pub fn is_palindrome(&self) -> bool {
        self.bits.iter().eq(self.bits.iter().rev())
    }

    /// Whether the infinite periodic extensions of the two words coincide.
    pub fn periodic_eq(&self, other: &Self) -> bool {
        let span = lcm(self.len(), other.len()) as i64;
        (0..span).all(|i| self.periodic(i) == other.periodic(i))
    }

    /// Least `t > 0` with `self.periodic(i + t) == self.periodic(i)` for all `i`.
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&t| n.is_multiple_of(t) && (0..n).all(|i| self.bits[i] == self.bits[(i + t) % n]))
            .unwrap_or(n)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::InvalidDigit { found, position }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(bits)
    }
}
