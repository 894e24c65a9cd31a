//! Symbols, symbol sets and position parities.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A character of the alphabet `{0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::Two];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            '2' => Some(Symbol::Two),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Two => '2',
        }
    }

    /// Swaps `0` and `1`; `2` is left alone.
    #[inline]
    pub fn complement(self) -> Self {
        match self {
            Symbol::Zero => Symbol::One,
            Symbol::One => Symbol::Zero,
            Symbol::Two => Symbol::Two,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parses a string over `{0,1,2}` into symbols. Returns the offending
/// character on failure.
pub fn parse_symbols(s: &str) -> Result<Vec<Symbol>, char> {
    s.chars().map(|c| Symbol::from_char(c).ok_or(c)).collect()
}

pub fn symbols_to_string(s: &[Symbol]) -> String {
    s.iter().map(|c| c.as_char()).collect()
}

/// A subset of `{0, 1, 2}` as a 3-bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymbolSet(u8);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);
    pub const ALL: SymbolSet = SymbolSet(0b111);

    #[inline]
    pub const fn only(c: Symbol) -> Self {
        SymbolSet(1 << c as u8)
    }

    /// Every symbol except `c`.
    #[inline]
    pub const fn except(c: Symbol) -> Self {
        SymbolSet(0b111 & !(1 << c as u8))
    }

    #[inline]
    pub const fn contains(self, c: Symbol) -> bool {
        self.0 & (1 << c as u8) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: Symbol) {
        self.0 |= 1 << c as u8;
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Symbol> {
        Symbol::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

/// Which positions a query looks at. Positions are 1-based; `Even` means
/// index ≡ 0 (mod 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Both,
}

impl Parity {
    /// Parity of a concrete index.
    #[inline]
    pub const fn of(i: u64) -> Parity {
        if i.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub const fn flip(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
            Parity::Both => Parity::Both,
        }
    }

    #[inline]
    pub const fn matches(self, i: u64) -> bool {
        match self {
            Parity::Odd => i % 2 == 1,
            Parity::Even => i.is_multiple_of(2),
            Parity::Both => true,
        }
    }

    /// Distance between consecutive positions selected by this parity.
    #[inline]
    pub const fn step(self) -> u64 {
        match self {
            Parity::Both => 1,
            _ => 2,
        }
    }

    /// Smallest selected index `>= i`.
    #[inline]
    pub const fn at_or_after(self, i: u64) -> u64 {
        if self.matches(i) {
            i
        } else {
            i + 1
        }
    }

    /// Largest selected index `<= i`, if any index `>= 1` qualifies.
    #[inline]
    pub const fn at_or_before(self, i: u64) -> Option<u64> {
        let j = if self.matches(i) { i } else { i.wrapping_sub(1) };
        if j >= 1 && j <= i {
            Some(j)
        } else {
            None
        }
    }

    /// Same as [`Parity::at_or_after`] on signed values, for bound arithmetic.
    #[inline]
    pub(crate) const fn snap_up(self, x: i128) -> i128 {
        match self {
            Parity::Both => x,
            _ => {
                if x.rem_euclid(2) == self.residue() {
                    x
                } else {
                    x + 1
                }
            }
        }
    }

    #[inline]
    pub(crate) const fn snap_down(self, x: i128) -> i128 {
        match self {
            Parity::Both => x,
            _ => {
                if x.rem_euclid(2) == self.residue() {
                    x
                } else {
                    x - 1
                }
            }
        }
    }

    #[inline]
    const fn residue(self) -> i128 {
        match self {
            Parity::Even => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
            Parity::Both => "both",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_snapping() {
        assert_eq!(Parity::Even.at_or_after(3), 4);
        assert_eq!(Parity::Odd.at_or_after(3), 3);
        assert_eq!(Parity::Even.at_or_before(1), None);
        assert_eq!(Parity::Odd.at_or_before(0), None);
        assert_eq!(Parity::Even.at_or_before(5), Some(4));
        assert_eq!(Parity::Even.snap_down(-3), -4);
        assert_eq!(Parity::Odd.snap_up(-2), -1);
        assert_eq!(Parity::Both.snap_up(-2), -2);
    }

    #[test]
    fn symbol_sets() {
        let s = SymbolSet::except(Symbol::One);
        assert!(s.contains(Symbol::Zero) && s.contains(Symbol::Two) && !s.contains(Symbol::One));
        assert_eq!(s.iter().count(), 2);
        assert_eq!(parse_symbols("0x1"), Err('x'));
    }
}
